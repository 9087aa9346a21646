#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "rbx/cyclotomic.hpp"
#include "rbx/laurent.hpp"
#include "rbx/rational.hpp"
#include "rbx/rational_function.hpp"

namespace rbx {

enum class RingTag { Rational, Cyclotomic, Laurent, RatFun };

// Identifies one of the four coefficient rings. Every Scalar value is
// interpreted under exactly one ring; cross-ring arithmetic is an error
// except for the canonical embeddings rational -> any and laurent -> ratfun.
struct ScalarRing {
    RingTag tag = RingTag::Rational;
    int cyclotomic_order = 0;  // d, meaningful only for the cyclotomic tag

    static ScalarRing rational() { return {RingTag::Rational, 0}; }
    static ScalarRing cyclotomic(int d) { return {RingTag::Cyclotomic, d}; }
    static ScalarRing laurent() { return {RingTag::Laurent, 0}; }
    static ScalarRing ratfun() { return {RingTag::RatFun, 0}; }

    bool operator==(const ScalarRing& o) const {
        return tag == o.tag && cyclotomic_order == o.cyclotomic_order;
    }
    bool operator!=(const ScalarRing& o) const { return !(*this == o); }

    // Rings where every nonzero element is invertible (nullspace etc. need this).
    bool is_field() const { return tag != RingTag::Laurent; }

    std::string name() const;
    nlohmann::ordered_json to_json() const;
    static ScalarRing from_json(const nlohmann::json& j);
};

// Exact scalar: a value of one of the four rings behind a single interface.
// Values are immutable in spirit; all operations return new values.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(Rational r) : v_(std::move(r)) {}
    Scalar(Cyclotomic c) : v_(std::move(c)) {}
    Scalar(Laurent l) : v_(std::move(l)) {}
    Scalar(RatFun f) : v_(std::move(f)) {}
    explicit Scalar(long n) : v_(Rational(n)) {}

    static Scalar zero(const ScalarRing& ring) { return integer(ring, 0); }
    static Scalar one(const ScalarRing& ring) { return integer(ring, 1); }
    static Scalar integer(const ScalarRing& ring, long n);
    static Scalar of_rational(const ScalarRing& ring, const Rational& r);

    ScalarRing ring() const;
    bool is_zero() const;
    bool is_one() const { return *this == Scalar::one(ring()); }

    // True when the value lies in the rational subfield of its ring.
    bool is_rational_valued() const;
    Rational rational_value() const;  // throws when not rational-valued

    const Rational& as_rational() const { return std::get<Rational>(v_); }
    const Cyclotomic& as_cyclotomic() const { return std::get<Cyclotomic>(v_); }
    const Laurent& as_laurent() const { return std::get<Laurent>(v_); }
    const RatFun& as_ratfun() const { return std::get<RatFun>(v_); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Multiplicative inverse. Throws on zero and on non-unit Laurent input.
    Scalar inverse() const;

    // Exact quotient this / b within the common ring, when it exists.
    std::optional<Scalar> divide_exact(const Scalar& b) const;

    std::string str() const;
    nlohmann::ordered_json to_json() const;
    static Scalar from_json(const nlohmann::json& j);

private:
    std::variant<Rational, Cyclotomic, Laurent, RatFun> v_;
};

// Canonical embedding into `target`: identity, rational -> any, or
// laurent -> ratfun. Anything else throws std::domain_error.
Scalar embed(const Scalar& s, const ScalarRing& target);
bool embeddable(const ScalarRing& from, const ScalarRing& into);

// Evaluation v -> t on Laurent (and rational) scalars; exact.
Scalar specialize(const Scalar& s, const Rational& t);

// Parses a scalar literal in ring context: a rational like "2" or "-1/3",
// or a ring expression in v / z<d> like "v + v^-1", "z3^2 - 1", "(1-v)/(1+v)".
// This is the grammar used inside parenthesized literals of element
// expressions and by the CLI.
Scalar parse_scalar(const std::string& text, const ScalarRing& ring);

}  // namespace rbx
