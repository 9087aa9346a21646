#include "rbx/scalar.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rbx {

using nlohmann::json;
using nlohmann::ordered_json;

std::string ScalarRing::name() const {
    switch (tag) {
        case RingTag::Rational: return "Q";
        case RingTag::Cyclotomic: return "Q(zeta_" + std::to_string(cyclotomic_order) + ")";
        case RingTag::Laurent: return "Q[v,v^-1]";
        case RingTag::RatFun: return "Q(v)";
    }
    return "?";
}

ordered_json ScalarRing::to_json() const {
    ordered_json j;
    switch (tag) {
        case RingTag::Rational: j["tag"] = "rational"; break;
        case RingTag::Cyclotomic:
            j["tag"] = "cyclotomic";
            j["d"] = cyclotomic_order;
            break;
        case RingTag::Laurent: j["tag"] = "laurent"; break;
        case RingTag::RatFun: j["tag"] = "ratfun"; break;
    }
    return j;
}

ScalarRing ScalarRing::from_json(const json& j) {
    if (!j.is_object() || !j.contains("tag") || !j["tag"].is_string())
        throw std::invalid_argument("ring block must be an object with a \"tag\" string");
    const std::string tag = j["tag"].get<std::string>();
    if (tag == "rational") return rational();
    if (tag == "cyclotomic") {
        if (!j.contains("d") || !j["d"].is_number_integer())
            throw std::invalid_argument("cyclotomic ring needs an integer \"d\"");
        int d = j["d"].get<int>();
        if (d < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
        return cyclotomic(d);
    }
    if (tag == "laurent") return laurent();
    if (tag == "ratfun") return ratfun();
    throw std::invalid_argument("unknown ring tag: '" + tag + "'");
}

Scalar Scalar::integer(const ScalarRing& ring, long n) { return of_rational(ring, Rational(n)); }

Scalar Scalar::of_rational(const ScalarRing& ring, const Rational& r) {
    switch (ring.tag) {
        case RingTag::Rational: return Scalar(r);
        case RingTag::Cyclotomic: return Scalar(Cyclotomic::from_rational(ring.cyclotomic_order, r));
        case RingTag::Laurent: return Scalar(Laurent(r));
        case RingTag::RatFun: return Scalar(RatFun::from_rational(r));
    }
    throw std::logic_error("unreachable ring tag");
}

ScalarRing Scalar::ring() const {
    if (std::holds_alternative<Rational>(v_)) return ScalarRing::rational();
    if (std::holds_alternative<Cyclotomic>(v_))
        return ScalarRing::cyclotomic(std::get<Cyclotomic>(v_).order());
    if (std::holds_alternative<Laurent>(v_)) return ScalarRing::laurent();
    return ScalarRing::ratfun();
}

bool Scalar::is_zero() const {
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool Scalar::is_rational_valued() const {
    return std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>)
                return true;
            else
                return x.is_rational();
        },
        v_);
}

Rational Scalar::rational_value() const {
    return std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>)
                return x;
            else
                return x.rational_value();
        },
        v_);
}

bool embeddable(const ScalarRing& from, const ScalarRing& into) {
    if (from == into) return true;
    if (from.tag == RingTag::Rational) return true;
    if (from.tag == RingTag::Laurent && into.tag == RingTag::RatFun) return true;
    return false;
}

Scalar embed(const Scalar& s, const ScalarRing& target) {
    ScalarRing from = s.ring();
    if (from == target) return s;
    if (from.tag == RingTag::Rational) return Scalar::of_rational(target, s.as_rational());
    if (from.tag == RingTag::Laurent && target.tag == RingTag::RatFun)
        return Scalar(RatFun::from_laurent(s.as_laurent()));
    throw std::domain_error("no embedding " + from.name() + " -> " + target.name());
}

namespace {

std::domain_error ring_mismatch(const ScalarRing& a, const ScalarRing& b) {
    return std::domain_error("ring mismatch: " + a.name() + " vs " + b.name());
}

// Brings both operands into a common ring or throws.
std::pair<Scalar, Scalar> aligned(const Scalar& a, const Scalar& b) {
    ScalarRing ra = a.ring(), rb = b.ring();
    if (ra == rb) return {a, b};
    if (embeddable(ra, rb)) return {embed(a, rb), b};
    if (embeddable(rb, ra)) return {a, embed(b, ra)};
    throw ring_mismatch(ra, rb);
}

template <typename Op>
Scalar binary(const Scalar& a, const Scalar& b, Op op) {
    auto [x, y] = aligned(a, b);
    switch (x.ring().tag) {
        case RingTag::Rational: return Scalar(op(x.as_rational(), y.as_rational()));
        case RingTag::Cyclotomic: return Scalar(op(x.as_cyclotomic(), y.as_cyclotomic()));
        case RingTag::Laurent: return Scalar(op(x.as_laurent(), y.as_laurent()));
        case RingTag::RatFun: return Scalar(op(x.as_ratfun(), y.as_ratfun()));
    }
    throw std::logic_error("unreachable ring tag");
}

}  // namespace

Scalar Scalar::operator-() const {
    return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
    auto [x, y] = aligned(a, b);
    switch (x.ring().tag) {
        case RingTag::Rational: return x.as_rational() == y.as_rational();
        case RingTag::Cyclotomic: return x.as_cyclotomic() == y.as_cyclotomic();
        case RingTag::Laurent: return x.as_laurent() == y.as_laurent();
        case RingTag::RatFun: return x.as_ratfun() == y.as_ratfun();
    }
    throw std::logic_error("unreachable ring tag");
}

Scalar Scalar::inverse() const {
    switch (ring().tag) {
        case RingTag::Rational: return Scalar(rational_inverse(as_rational()));
        case RingTag::Cyclotomic: return Scalar(as_cyclotomic().inverse());
        case RingTag::Laurent: return Scalar(as_laurent().inverse());
        case RingTag::RatFun: return Scalar(as_ratfun().inverse());
    }
    throw std::logic_error("unreachable ring tag");
}

std::optional<Scalar> Scalar::divide_exact(const Scalar& b) const {
    auto [x, y] = aligned(*this, b);
    if (y.is_zero()) return std::nullopt;
    if (x.ring().tag == RingTag::Laurent) {
        auto q = x.as_laurent().divide_exact(y.as_laurent());
        if (!q) return std::nullopt;
        return Scalar(*q);
    }
    return x * y.inverse();
}

std::string Scalar::str() const {
    return std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>)
                return rational_str(x);
            else
                return x.str();
        },
        v_);
}

Scalar specialize(const Scalar& s, const Rational& t) {
    switch (s.ring().tag) {
        case RingTag::Rational: return s;
        case RingTag::Laurent: return Scalar(s.as_laurent().specialize(t));
        default:
            throw std::domain_error("specialization v -> t is defined on the Laurent ring, got " +
                                    s.ring().name());
    }
}

// ---------------------------------------------------------------------------
// JSON encoding of scalar literals.

namespace {

ordered_json int_to_json(const Int& n) {
    static const Int kMax = Int(std::numeric_limits<std::int64_t>::max());
    static const Int kMin = Int(std::numeric_limits<std::int64_t>::min());
    if (n <= kMax && n >= kMin) return static_cast<std::int64_t>(n);
    return n.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
        return Int(j.get<std::int64_t>());
    }
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer (number or string): " + j.dump());
}

ordered_json rat_to_json(const Rational& r) {
    return ordered_json::array({int_to_json(rat_num(r)), int_to_json(rat_den(r))});
}

Rational rat_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("rational literal must be a [num, den] pair: " + j.dump());
    Int n = int_from_json(j[0]);
    Int d = int_from_json(j[1]);
    if (d == 0) throw std::invalid_argument("rational literal with zero denominator");
    return Rational(n) / Rational(d);
}

ordered_json poly_to_json(const Polynomial& p) {
    ordered_json a = ordered_json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(rat_to_json(p.coeff(i)));
    return a;
}

Polynomial poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a coefficient list");
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(rat_from_json(e));
    return Polynomial(std::move(c));
}

}  // namespace

ordered_json Scalar::to_json() const {
    ordered_json j;
    switch (ring().tag) {
        case RingTag::Rational: j["rat"] = rat_to_json(as_rational()); break;
        case RingTag::Cyclotomic: {
            const Cyclotomic& c = as_cyclotomic();
            ordered_json coeffs = ordered_json::array();
            for (const auto& x : c.coefficients()) coeffs.push_back(rat_to_json(x));
            j["cyc"] = ordered_json{{"d", c.order()}, {"coeffs", std::move(coeffs)}};
            break;
        }
        case RingTag::Laurent: {
            ordered_json terms = ordered_json::object();
            for (const auto& [e, c] : as_laurent().terms()) terms[std::to_string(e)] = rat_to_json(c);
            j["lau"] = std::move(terms);
            break;
        }
        case RingTag::RatFun: {
            const RatFun& f = as_ratfun();
            j["rf"] = ordered_json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
            break;
        }
    }
    return j;
}

Scalar Scalar::from_json(const json& j) {
    if (!j.is_object() || j.size() != 1)
        throw std::invalid_argument("scalar literal must be a single-key object: " + j.dump());
    if (j.contains("rat")) return Scalar(rat_from_json(j["rat"]));
    if (j.contains("cyc")) {
        const auto& c = j["cyc"];
        if (!c.is_object() || !c.contains("d") || !c.contains("coeffs"))
            throw std::invalid_argument("cyclotomic literal needs \"d\" and \"coeffs\"");
        int d = c["d"].get<int>();
        if (d < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
        const auto& coeffs = c["coeffs"];
        if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != euler_phi(d))
            throw std::invalid_argument("cyclotomic literal of order " + std::to_string(d) +
                                        " needs exactly phi(d) = " + std::to_string(euler_phi(d)) +
                                        " coefficients");
        std::vector<Rational> cs;
        cs.reserve(coeffs.size());
        for (const auto& e : coeffs) cs.push_back(rat_from_json(e));
        return Scalar(Cyclotomic::from_polynomial(d, Polynomial(std::move(cs))));
    }
    if (j.contains("lau")) {
        const auto& terms = j["lau"];
        if (!terms.is_object()) throw std::invalid_argument("laurent literal must map exponents to rationals");
        Laurent p;
        for (auto it = terms.begin(); it != terms.end(); ++it) {
            int e;
            try {
                size_t pos = 0;
                e = std::stoi(it.key(), &pos);
                if (pos != it.key().size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("laurent exponent key must be an integer: '" + it.key() + "'");
            }
            p += Laurent::monomial(e, rat_from_json(it.value()));
        }
        return Scalar(p);
    }
    if (j.contains("rf")) {
        const auto& f = j["rf"];
        if (!f.is_object() || !f.contains("num") || !f.contains("den"))
            throw std::invalid_argument("rational-function literal needs \"num\" and \"den\"");
        return Scalar(RatFun(poly_from_json(f["num"]), poly_from_json(f["den"])));
    }
    throw std::invalid_argument("unknown scalar literal key in: " + j.dump());
}

// ---------------------------------------------------------------------------
// Scalar literal text parser.
//
//   expr   := term (('+'|'-') term)*
//   term   := ['-'] factor (('*'|'/') factor)*
//   factor := atom ['^' ['-'] integer]
//   atom   := '(' expr ')' | integer | 'v' | 'z' integer
//
// evaluated directly in the target ring.

namespace {

class ScalarParser {
public:
    ScalarParser(const std::string& text, const ScalarRing& ring) : s_(text), ring_(ring) {}

    Scalar parse_all() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    const std::string& s_;
    ScalarRing ring_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("scalar literal error at position " + std::to_string(pos_) +
                                    ": " + msg + " in '" + s_ + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected an integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    Scalar expr() {
        Scalar acc = term();
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Scalar term() {
        bool neg = false;
        while (eat('-')) neg = !neg;
        Scalar acc = factor();
        while (true) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                Scalar d = factor();
                if (d.is_zero()) fail("division by zero");
                auto q = acc.divide_exact(d);
                if (q) {
                    acc = *q;
                } else if (ring_.tag == RingTag::Laurent) {
                    fail("quotient is not a Laurent polynomial (use the ratfun ring)");
                } else {
                    acc = acc * d.inverse();
                }
            } else {
                break;
            }
        }
        return neg ? -acc : acc;
    }

    Scalar factor() {
        Scalar base = atom();
        skip_ws();
        if (eat('^')) {
            long e = integer();
            Scalar acc = Scalar::one(base.ring());
            Scalar b = e < 0 ? base.inverse() : base;
            for (long i = 0, n = e < 0 ? -e : e; i < n; ++i) acc *= b;
            return acc;
        }
        return base;
    }

    Scalar atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long n = integer();
            return Scalar::integer(ring_, n);
        }
        if (c == 'v') {
            ++pos_;
            if (ring_.tag == RingTag::Laurent) return Scalar(Laurent::variable());
            if (ring_.tag == RingTag::RatFun)
                return Scalar(RatFun(Polynomial::monomial(1, Rational(1)), Polynomial{Rational(1)}));
            fail("'v' is only defined in the laurent and ratfun rings, not " + ring_.name());
        }
        if (c == 'z') {
            ++pos_;
            long d = integer();
            if (ring_.tag != RingTag::Cyclotomic) fail("'z" + std::to_string(d) + "' needs a cyclotomic ring");
            if (d != ring_.cyclotomic_order)
                fail("'z" + std::to_string(d) + "' does not match ring " + ring_.name());
            return Scalar(Cyclotomic::zeta(static_cast<int>(d)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Scalar parse_scalar(const std::string& text, const ScalarRing& ring) {
    return ScalarParser(text, ring).parse_all();
}

}  // namespace rbx
