#include "rbx/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace rbx {

Cyclotomic::Cyclotomic(int d) : d_(d) {
    if (d < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    c_.assign(static_cast<size_t>(euler_phi(d)), Rational(0));
}

Cyclotomic Cyclotomic::from_rational(int d, const Rational& r) {
    Cyclotomic x(d);
    x.c_[0] = r;
    return x;
}

Cyclotomic Cyclotomic::from_polynomial(int d, const Polynomial& p) {
    Cyclotomic x(d);
    Polynomial rem = Polynomial::divmod(p, cyclotomic_polynomial(d)).second;
    for (int i = 0; i <= rem.degree(); ++i) x.c_[static_cast<size_t>(i)] = rem.coeff(i);
    return x;
}

Cyclotomic Cyclotomic::zeta_power(int d, long e) {
    long r = e % d;
    if (r < 0) r += d;
    return from_polynomial(d, Polynomial::monomial(static_cast<int>(r), Rational(1)));
}

Polynomial Cyclotomic::to_polynomial() const { return Polynomial(c_); }

bool Cyclotomic::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
    return c_[0];
}

void Cyclotomic::check_same_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.d_ != b.d_)
        throw std::domain_error("cyclotomic order mismatch: " + std::to_string(a.d_) + " vs " +
                                std::to_string(b.d_));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic::check_same_order(a, b);
    Cyclotomic r(a);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic::check_same_order(a, b);
    Cyclotomic r(a);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic::check_same_order(a, b);
    return Cyclotomic::from_polynomial(a.d_, a.to_polynomial() * b.to_polynomial());
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    check_same_order(*this, o);
    return c_ == o.c_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta_" + std::to_string(d_) + ")");
    // Phi_d is irreducible over Q, so gcd(a, Phi_d) = 1 and the Bezout
    // coefficient of a is the inverse.
    PolyXgcd x = poly_xgcd(to_polynomial(), cyclotomic_polynomial(d_));
    if (x.g.degree() != 0)
        throw std::domain_error("cyclotomic inverse: unexpected non-constant gcd");
    return from_polynomial(d_, x.s);
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        Rational a = c_[i];
        if (a.is_zero()) continue;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit_coeff = (a == Rational(1)) && i != 0;
        if (!unit_coeff) os << rational_str(a);
        if (i != 0) {
            if (!unit_coeff) os << "*";
            os << "z" << d_;
            if (i != 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace rbx
