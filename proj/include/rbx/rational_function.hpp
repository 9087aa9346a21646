#pragma once

#include <string>

#include "rbx/laurent.hpp"
#include "rbx/polynomial.hpp"

namespace rbx {

// Univariate rational function in v over Q, the fraction field the Laurent
// ring embeds into. Canonical form: denominator monic and nonzero,
// gcd(num, den) = 1, zero is 0/1. Equality is decided on the canonical form.
class RatFun {
public:
    RatFun();  // zero
    RatFun(Polynomial num, Polynomial den);
    static RatFun from_rational(const Rational& r);
    static RatFun from_laurent(const Laurent& p);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const;
    Rational rational_value() const;

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun inverse() const;

    std::string str() const;

private:
    Polynomial num_, den_;

    void canonicalize();
};

}  // namespace rbx
