#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rbx/rational.hpp"

namespace rbx {

// Dense univariate polynomial over Rational. Coefficient i is the
// coefficient of v^i; the vector never stores trailing zeros, so the zero
// polynomial is the empty vector and degree() is -1 for it.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Rational& constant);
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial monomial(int degree, const Rational& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;

    // Coefficient of v^i; zero beyond the degree.
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    const Rational& leading() const;
    Polynomial monic() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const Rational& c) const;

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Euclidean division, denominator must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

    Rational eval(const Rational& t) const;

    // Text form like "v^2 + 1" or "-2*v + 1/3", highest degree first.
    std::string str(const std::string& var = "v") const;

private:
    std::vector<Rational> c_;

    void prune();
};

// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Extended Euclid: returns (g, s, t) with g monic (or zero) and s*a + t*b = g.
struct PolyXgcd {
    Polynomial g, s, t;
};
PolyXgcd poly_xgcd(const Polynomial& a, const Polynomial& b);

// The d-th cyclotomic polynomial, computed by dividing x^d - 1 by the
// cyclotomic polynomials of the proper divisors of d. Cached per d.
const Polynomial& cyclotomic_polynomial(int d);

// Euler's totient, the degree of the d-th cyclotomic polynomial.
int euler_phi(int d);

}  // namespace rbx
