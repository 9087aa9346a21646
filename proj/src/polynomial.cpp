#include "rbx/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace rbx {

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { prune(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { prune(); }

Polynomial Polynomial::monomial(int degree, const Rational& c) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be non-negative");
    Polynomial p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(degree) + 1, Rational(0));
    p.c_.back() = c;
    return p;
}

void Polynomial::prune() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Polynomial::is_one() const { return c_.size() == 1 && c_[0] == Rational(1); }

const Rational& Polynomial::coeff(int i) const {
    static const Rational kZero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(rational_inverse(leading()));
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    prune();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    prune();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial();
    Polynomial r(*this);
    for (auto& x : r.c_) x *= c;
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial r = a;
    if (r.degree() < b.degree()) return {Polynomial(), r};
    std::vector<Rational> q(static_cast<size_t>(r.degree() - b.degree()) + 1, Rational(0));
    const Rational lead_inv = rational_inverse(b.leading());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational f = r.leading() * lead_inv;
        q[static_cast<size_t>(shift)] = f;
        // r -= f * v^shift * b
        for (int i = 0; i <= b.degree(); ++i) {
            r.c_[static_cast<size_t>(i + shift)] -= f * b.c_[static_cast<size_t>(i)];
        }
        r.prune();
    }
    return {Polynomial(std::move(q)), r};
}

Rational Polynomial::eval(const Rational& t) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * t + c_[i];
    }
    return acc;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c.is_zero()) continue;
        Rational a = c;
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
            os << var;
            if (i != 1) os << "^" << i;
        }
    }
    return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = Polynomial::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyXgcd poly_xgcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0{Rational(1)}, s1;
    Polynomial t0, t1{Rational(1)};
    while (!r1.is_zero()) {
        auto [q, r] = Polynomial::divmod(r0, r1);
        Polynomial s2 = s0 - q * s1;
        Polynomial t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = rational_inverse(r0.leading());
    return {r0.monic(), s0.scaled(inv), t0.scaled(inv)};
}

int euler_phi(int d) { return cyclotomic_polynomial(d).degree(); }

namespace {

// x^d - 1 divided by Phi_e for every proper divisor e of d. Caller holds the
// cache lock; divisors are strictly smaller, so the recursion terminates.
const Polynomial& phi_locked(int d, std::map<int, Polynomial>& cache) {
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<Rational> xs(static_cast<size_t>(d) + 1, Rational(0));
    xs[0] = Rational(-1);
    xs.back() = Rational(1);
    Polynomial p{std::move(xs)};
    for (int e = 1; e < d; ++e) {
        if (d % e == 0) p = Polynomial::divmod(p, phi_locked(e, cache)).first;
    }
    return cache.emplace(d, std::move(p)).first->second;
}

}  // namespace

const Polynomial& cyclotomic_polynomial(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    static std::map<int, Polynomial> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return phi_locked(d, cache);
}

}  // namespace rbx
