#include "rbx/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace rbx {

Laurent::Laurent(const Rational& constant) {
    if (!constant.is_zero()) t_.emplace(0, constant);
}

Laurent Laurent::monomial(int exponent, const Rational& c) {
    Laurent p;
    if (!c.is_zero()) p.t_.emplace(exponent, c);
    return p;
}

void Laurent::insert_term(int e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

bool Laurent::is_rational() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0);
}

Rational Laurent::rational_value() const {
    if (t_.empty()) return Rational(0);
    if (!is_rational()) throw std::domain_error("Laurent value is not rational: " + str());
    return t_.begin()->second;
}

Laurent Laurent::operator-() const {
    Laurent r(*this);
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r(a);
    for (const auto& [e, c] : b.t_) r.insert_term(e, c);
    return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent r(a);
    for (const auto& [e, c] : b.t_) r.insert_term(e, -c);
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) r.insert_term(ea + eb, ca * cb);
    return r;
}

Laurent Laurent::inverse() const {
    if (t_.empty()) throw std::domain_error("inverse of zero Laurent polynomial");
    if (t_.size() != 1)
        throw std::domain_error("non-unit Laurent polynomial has no inverse: " + str() +
                                " (lift to rational functions)");
    const auto& [e, c] = *t_.begin();
    return monomial(-e, rational_inverse(c));
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& b) const {
    if (b.is_zero()) return std::nullopt;
    if (is_zero()) return Laurent();
    auto [pa, sa] = to_polynomial();
    auto [pb, sb] = b.to_polynomial();
    auto [q, r] = Polynomial::divmod(pa, pb);
    if (!r.is_zero()) return std::nullopt;
    return from_polynomial(q, sa - sb);
}

Rational Laurent::specialize(const Rational& t) const {
    if (t.is_zero()) throw std::domain_error("cannot specialize v -> 0");
    Rational acc(0);
    for (const auto& [e, c] : t_) acc += c * rational_pow(t, e);
    return acc;
}

std::pair<Polynomial, int> Laurent::to_polynomial() const {
    if (t_.empty()) return {Polynomial(), 0};
    int min_e = t_.begin()->first;
    int max_e = t_.rbegin()->first;
    std::vector<Rational> coeffs(static_cast<size_t>(max_e - min_e) + 1, Rational(0));
    for (const auto& [e, c] : t_) coeffs[static_cast<size_t>(e - min_e)] = c;
    return {Polynomial(std::move(coeffs)), min_e};
}

Laurent Laurent::from_polynomial(const Polynomial& p, int shift) {
    Laurent r;
    for (int i = 0; i <= p.degree(); ++i) r.insert_term(i + shift, p.coeff(i));
    return r;
}

std::string Laurent::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest exponent first, like the polynomial renderer.
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        Rational a = it->second;
        int e = it->first;
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
        bool unit_coeff = (a == Rational(1)) && e != 0;
        if (!unit_coeff) os << rational_str(a);
        if (e != 0) {
            if (!unit_coeff) os << "*";
            os << "v";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace rbx
