#include "rbx/rational_function.hpp"

#include <stdexcept>

namespace rbx {

RatFun::RatFun() : num_(), den_{Rational(1)} {}

RatFun::RatFun(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    canonicalize();
}

void RatFun::canonicalize() {
    if (num_.is_zero()) {
        den_ = Polynomial{Rational(1)};
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Polynomial::divmod(num_, g).first;
        den_ = Polynomial::divmod(den_, g).first;
    }
    Rational lead_inv = rational_inverse(den_.leading());
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
}

RatFun RatFun::from_rational(const Rational& r) {
    return RatFun(Polynomial(r), Polynomial{Rational(1)});
}

RatFun RatFun::from_laurent(const Laurent& p) {
    auto [poly, shift] = p.to_polynomial();
    if (shift >= 0) return RatFun(poly * Polynomial::monomial(shift, Rational(1)), Polynomial{Rational(1)});
    return RatFun(poly, Polynomial::monomial(-shift, Rational(1)));
}

bool RatFun::is_rational() const { return num_.degree() <= 0 && den_.is_one(); }

Rational RatFun::rational_value() const {
    if (!is_rational()) throw std::domain_error("rational function is not constant: " + str());
    return num_.coeff(0);
}

RatFun RatFun::operator-() const {
    RatFun r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num_ * b.num_, a.den_ * b.den_); }

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFun(den_, num_);
}

std::string RatFun::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace rbx
