#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace rbx {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return numerator(r); }
inline Int rat_den(const Rational& r) { return denominator(r); }

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Rational rational_inverse(const Rational& r) {
    if (r.is_zero()) throw std::domain_error("inverse of zero");
    return Rational(1) / r;
}

// Accepts "n" or "n/d".
inline Rational rational_from_string(const std::string& s) {
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    }
}

inline std::string rational_str(const Rational& r) { return r.str(); }

// Exact integer power with negative exponents allowed for nonzero base.
inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base.is_zero()) {
        if (e < 0) throw std::domain_error("zero to a negative power");
        return Rational(0);
    }
    Rational b = e < 0 ? rational_inverse(base) : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

}  // namespace rbx
