#pragma once

#include <string>
#include <vector>

#include "rbx/polynomial.hpp"
#include "rbx/rational.hpp"

namespace rbx {

// An element of the cyclotomic field Q(zeta_d), stored in the power basis
// 1, zeta, ..., zeta^(phi(d)-1) reduced modulo the d-th cyclotomic
// polynomial. The representation is the unique reduced one, so equality is
// coefficient-wise. Arithmetic between different orders is rejected.
class Cyclotomic {
public:
    explicit Cyclotomic(int d);  // zero of Q(zeta_d)
    static Cyclotomic from_rational(int d, const Rational& r);
    static Cyclotomic zeta(int d) { return zeta_power(d, 1); }
    static Cyclotomic zeta_power(int d, long e);
    static Cyclotomic from_polynomial(int d, const Polynomial& p);

    int order() const { return d_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const;
    // The rational value when the element lies in Q, throws otherwise.
    bool is_rational() const;
    Rational rational_value() const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Field inverse via extended gcd with Phi_d; throws on zero.
    Cyclotomic inverse() const;

    // Text form in the generator symbol "z<d>", e.g. "1 + 2*z5 - z5^3".
    std::string str() const;

private:
    int d_ = 1;
    std::vector<Rational> c_;  // length phi(d)

    Polynomial to_polynomial() const;
    static void check_same_order(const Cyclotomic& a, const Cyclotomic& b);
};

}  // namespace rbx
