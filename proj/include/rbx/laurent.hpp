#pragma once

#include <map>
#include <optional>
#include <string>

#include "rbx/polynomial.hpp"
#include "rbx/rational.hpp"

namespace rbx {

// Laurent polynomial in v (semantically v = q^(1/2)) with rational
// coefficients. Terms map exponent -> nonzero coefficient; the zero
// polynomial is the empty map, so representations are canonical.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Rational& constant);
    static Laurent monomial(int exponent, const Rational& c);
    static Laurent variable() { return monomial(1, Rational(1)); }

    const std::map<int, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_rational() const;
    Rational rational_value() const;

    Laurent operator-() const;
    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    bool operator==(const Laurent& o) const { return t_ == o.t_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // Units of the Laurent ring are the single-term elements; anything else
    // throws (callers needing 1/(v+v^-1) must lift to rational functions).
    Laurent inverse() const;

    // Exact quotient this / b when it exists in the Laurent ring.
    std::optional<Laurent> divide_exact(const Laurent& b) const;

    // Evaluation v -> t for nonzero rational t.
    Rational specialize(const Rational& t) const;

    // v^(-min_exponent) * this as an ordinary polynomial, plus the shift.
    std::pair<Polynomial, int> to_polynomial() const;
    static Laurent from_polynomial(const Polynomial& p, int shift = 0);

    std::string str() const;

private:
    std::map<int, Rational> t_;

    void insert_term(int e, const Rational& c);
};

}  // namespace rbx
