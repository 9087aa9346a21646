#include "rbx/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

namespace rbx {

Basis::Basis(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("basis must be non-empty");
    for (size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw std::invalid_argument("basis labels must be non-empty");
        auto [it, inserted] = index_.emplace(names_[i], static_cast<int>(i));
        if (!inserted) throw std::invalid_argument("duplicate basis label '" + names_[i] + "'");
    }
}

std::optional<int> Basis::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

StructureConstants::StructureConstants(ScalarRing ring, int dim) : ring_(ring), dim_(dim) {
    if (dim < 1) throw std::invalid_argument("algebra dimension must be >= 1");
    table_.resize(static_cast<size_t>(dim) * static_cast<size_t>(dim));
}

size_t StructureConstants::slot(int i, int j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
        throw std::out_of_range("structure constant index (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    return static_cast<size_t>(i) * static_cast<size_t>(dim_) + static_cast<size_t>(j);
}

const std::vector<ScTerm>& StructureConstants::product(int i, int j) const {
    return table_[slot(i, j)];
}

void StructureConstants::set_product(int i, int j, std::vector<ScTerm> terms) {
    std::vector<ScTerm>& dst = table_[slot(i, j)];
    dst.clear();
    for (ScTerm& t : terms) {
        if (t.k < 0 || t.k >= dim_) throw std::out_of_range("structure constant target index");
        add_term(i, j, t.k, t.c);
    }
}

void StructureConstants::add_term(int i, int j, int k, const Scalar& c) {
    if (k < 0 || k >= dim_) throw std::out_of_range("structure constant target index");
    Scalar v = embed(c, ring_);
    if (v.is_zero()) return;
    std::vector<ScTerm>& terms = table_[slot(i, j)];
    auto it = std::lower_bound(terms.begin(), terms.end(), k,
                               [](const ScTerm& t, int key) { return t.k < key; });
    if (it != terms.end() && it->k == k) {
        it->c += v;
        if (it->c.is_zero()) terms.erase(it);
    } else {
        terms.insert(it, ScTerm{k, std::move(v)});
    }
}

bool StructureConstants::operator==(const StructureConstants& o) const {
    if (dim_ != o.dim_ || ring_ != o.ring_) return false;
    for (size_t s = 0; s < table_.size(); ++s) {
        const auto& a = table_[s];
        const auto& b = o.table_[s];
        if (a.size() != b.size()) return false;
        for (size_t t = 0; t < a.size(); ++t)
            if (a[t].k != b[t].k || a[t].c != b[t].c) return false;
    }
    return true;
}

StructureConstants operator+(const StructureConstants& a, const StructureConstants& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("tensor dimension mismatch");
    if (a.ring_ != b.ring_) throw std::domain_error("tensor ring mismatch");
    StructureConstants out = a;
    for (int i = 0; i < b.dim_; ++i)
        for (int j = 0; j < b.dim_; ++j)
            for (const ScTerm& t : b.product(i, j)) out.add_term(i, j, t.k, t.c);
    return out;
}

AlgebraElement::AlgebraElement(ScalarRing ring, int dim) : ring_(ring) {
    if (dim < 1) throw std::invalid_argument("algebra dimension must be >= 1");
    c_.assign(static_cast<size_t>(dim), Scalar::zero(ring_));
}

AlgebraElement AlgebraElement::basis_vector(const ScalarRing& ring, int dim, int i) {
    AlgebraElement x(ring, dim);
    x.set_coeff(i, Scalar::one(ring));
    return x;
}

AlgebraElement AlgebraElement::from_coords(const ScalarRing& ring, std::vector<Scalar> coords) {
    AlgebraElement x(ring, static_cast<int>(coords.size()));
    for (size_t i = 0; i < coords.size(); ++i) x.set_coeff(static_cast<int>(i), coords[i]);
    return x;
}

void AlgebraElement::set_coeff(int i, const Scalar& v) {
    c_.at(static_cast<size_t>(i)) = embed(v, ring_);
}

bool AlgebraElement::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

void AlgebraElement::check_compatible(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("element dimension mismatch: " + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()));
    if (a.ring_ != b.ring_)
        throw std::domain_error("element ring mismatch: " + a.ring_.name() + " vs " + b.ring_.name());
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    check_compatible(*this, o);
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement::check_compatible(a, b);
    AlgebraElement r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement::check_compatible(a, b);
    AlgebraElement r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement r = *this;
    Scalar cc = embed(c, ring_);
    for (auto& x : r.c_) x = cc * x;
    return r;
}

// ---------------------------------------------------------------------------

FiniteDimAlgebra::FiniteDimAlgebra(Basis basis, StructureConstants constants, AlgebraElement unit)
    : basis_(std::move(basis)), sc_(std::move(constants)), unit_(std::move(unit)) {
    if (basis_.dim() != sc_.dim() || basis_.dim() != unit_.dim())
        throw std::invalid_argument("algebra pieces disagree on dimension");
    if (unit_.ring() != sc_.ring()) throw std::domain_error("unit ring mismatch");
}

AlgebraElement FiniteDimAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    if (a.dim() != dim() || b.dim() != dim())
        throw std::invalid_argument("element does not belong to this algebra");
    std::vector<Scalar> acc(static_cast<size_t>(dim()), Scalar::zero(ring()));
    for (int i = 0; i < dim(); ++i) {
        const Scalar& ai = a.coeff(i);
        if (ai.is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            const Scalar& bj = b.coeff(j);
            if (bj.is_zero()) continue;
            const auto& terms = sc_.product(i, j);
            if (terms.empty()) continue;
            Scalar cij = ai * bj;
            for (const ScTerm& t : terms) acc[static_cast<size_t>(t.k)] += cij * t.c;
        }
    }
    return AlgebraElement::from_coords(ring(), std::move(acc));
}

AlgebraElement FiniteDimAlgebra::power(const AlgebraElement& a, long n) const {
    if (n < 0) throw std::invalid_argument("power exponent must be non-negative");
    AlgebraElement acc = unit_;
    for (long i = 0; i < n; ++i) acc = multiply(a, acc);
    return acc;
}

Matrix FiniteDimAlgebra::left_mult_matrix(const AlgebraElement& a) const {
    Matrix m(ring(), dim(), dim());
    for (int j = 0; j < dim(); ++j) {
        AlgebraElement col = multiply(a, basis_element(j));
        for (int i = 0; i < dim(); ++i) m.set(i, j, col.coeff(i));
    }
    return m;
}

Matrix FiniteDimAlgebra::right_mult_matrix(const AlgebraElement& a) const {
    Matrix m(ring(), dim(), dim());
    for (int j = 0; j < dim(); ++j) {
        AlgebraElement col = multiply(basis_element(j), a);
        for (int i = 0; i < dim(); ++i) m.set(i, j, col.coeff(i));
    }
    return m;
}

bool check_unit(const FiniteDimAlgebra& a) {
    for (int i = 0; i < a.dim(); ++i) {
        AlgebraElement e = a.basis_element(i);
        if (a.multiply(a.unit(), e) != e) return false;
        if (a.multiply(e, a.unit()) != e) return false;
    }
    return true;
}

namespace {

// Accumulates (e_i e_j) e_k and e_i (e_j e_k) directly from term lists.
bool associative_at(const StructureConstants& sc, int i, int j, int k) {
    std::map<int, Scalar> lhs, rhs;
    for (const ScTerm& t : sc.product(i, j))
        for (const ScTerm& u : sc.product(t.k, k)) {
            auto [it, fresh] = lhs.try_emplace(u.k, t.c * u.c);
            if (!fresh) it->second += t.c * u.c;
        }
    for (const ScTerm& t : sc.product(j, k))
        for (const ScTerm& u : sc.product(i, t.k)) {
            auto [it, fresh] = rhs.try_emplace(u.k, t.c * u.c);
            if (!fresh) it->second += t.c * u.c;
        }
    auto is_zero_map = [](std::map<int, Scalar>& m) {
        for (auto it = m.begin(); it != m.end();) {
            if (it->second.is_zero())
                it = m.erase(it);
            else
                ++it;
        }
    };
    is_zero_map(lhs);
    is_zero_map(rhs);
    if (lhs.size() != rhs.size()) return false;
    for (auto la = lhs.begin(), ra = rhs.begin(); la != lhs.end(); ++la, ++ra)
        if (la->first != ra->first || la->second != ra->second) return false;
    return true;
}

}  // namespace

std::optional<TripleViolation> check_associativity(const StructureConstants& sc,
                                                   const CheckOptions& opts) {
    const int n = sc.dim();
    const std::uint64_t total = static_cast<std::uint64_t>(n) * n * n;
    if (!opts.sampled(n, total)) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (!associative_at(sc, i, j, k)) return TripleViolation{i, j, k};
        return std::nullopt;
    }
    std::mt19937_64 gen(opts.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (std::uint64_t s = 0; s < *opts.budget; ++s) {
        int i = pick(gen), j = pick(gen), k = pick(gen);
        if (!associative_at(sc, i, j, k)) return TripleViolation{i, j, k};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Element expressions.
//
//   expr := term (('+'|'-') term)*
//   term := [scalar-literal '*'] label | scalar-literal
//
// where scalar-literal is a rational like "2" or "-1/3", or a parenthesized
// ring literal like "(v + v^-1)". Bare scalars denote multiples of the unit;
// in label position a bare "1" also resolves to the unit when it is not a
// basis label.

namespace {

class ElementParser {
public:
    ElementParser(const FiniteDimAlgebra& a, const std::string& text, const NamedElements& named)
        : a_(a), s_(text), named_(named) {}

    AlgebraElement parse() {
        AlgebraElement acc = a_.zero_element();
        bool expect_term = true;
        int sign = 1;
        skip_ws();
        if (pos_ == s_.size()) fail("empty element expression");
        while (pos_ < s_.size()) {
            if (expect_term) {
                if (eat('-')) {
                    sign = -sign;
                    continue;
                }
                if (eat('+')) continue;
                AlgebraElement t = term();
                acc = sign < 0 ? acc - t : acc + t;
                sign = 1;
                expect_term = false;
            } else {
                if (eat('+')) {
                    expect_term = true;
                } else if (eat('-')) {
                    expect_term = true;
                    sign = -1;
                } else {
                    fail("expected '+' or '-'");
                }
            }
            skip_ws();
        }
        if (expect_term) fail("dangling operator");
        return acc;
    }

private:
    const FiniteDimAlgebra& a_;
    const std::string& s_;
    const NamedElements& named_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("element expression error at position " +
                                    std::to_string(pos_) + ": " + msg + " in '" + s_ + "'");
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

    static bool word_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    // Maximal alnum/underscore run with an optional [..] suffix.
    std::string word() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && word_char(s_[pos_])) ++pos_;
        if (pos_ == start) fail("expected a label or number");
        if (pos_ < s_.size() && s_[pos_] == '[') {
            ++pos_;
            while (pos_ < s_.size() && s_[pos_] != ']') {
                if (!word_char(s_[pos_])) fail("bad character inside label brackets");
                ++pos_;
            }
            if (pos_ == s_.size()) fail("unterminated label bracket");
            ++pos_;
        }
        return s_.substr(start, pos_ - start);
    }

    static bool all_digits(const std::string& w) {
        if (w.empty()) return false;
        for (char c : w)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    }

    // Parenthesized scalar literal: hands the balanced substring to
    // parse_scalar in the algebra's ring.
    Scalar paren_scalar() {
        skip_ws();
        size_t start = pos_;  // at '('
        int depth = 0;
        size_t i = pos_;
        for (; i < s_.size(); ++i) {
            if (s_[i] == '(') ++depth;
            if (s_[i] == ')') {
                --depth;
                if (depth == 0) break;
            }
        }
        if (depth != 0) fail("unbalanced parenthesis");
        std::string inner = s_.substr(start + 1, i - start - 1);
        pos_ = i + 1;
        return parse_scalar(inner, a_.ring());
    }

    AlgebraElement resolve_label(const std::string& label) {
        if (auto idx = a_.basis().find(label)) return a_.basis_element(*idx);
        auto it = named_.find(label);
        if (it != named_.end()) return it->second;
        if (label == "1") return a_.unit();
        fail("unknown basis label '" + label + "'");
    }

    AlgebraElement term() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            Scalar c = paren_scalar();
            if (eat('*')) return resolve_label(word()).scaled(c);
            return a_.unit().scaled(c);
        }
        std::string w = word();
        // "n/m" rational scalar.
        if (all_digits(w)) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                size_t save = pos_;
                ++pos_;
                std::string den = word();
                if (!all_digits(den)) {
                    pos_ = save;
                } else {
                    Scalar c = Scalar::of_rational(a_.ring(), rational_from_string(w + "/" + den));
                    if (eat('*')) return resolve_label(word()).scaled(c);
                    return a_.unit().scaled(c);
                }
            }
        }
        if (eat('*')) {
            if (!all_digits(w)) fail("coefficient '" + w + "' is not a number");
            Scalar c = Scalar::of_rational(a_.ring(), rational_from_string(w));
            return resolve_label(word()).scaled(c);
        }
        // Bare word: basis/named label first, then a numeric multiple of the unit.
        if (auto idx = a_.basis().find(w)) return a_.basis_element(*idx);
        auto it = named_.find(w);
        if (it != named_.end()) return it->second;
        if (all_digits(w)) return a_.unit().scaled(Scalar::of_rational(a_.ring(), rational_from_string(w)));
        fail("unknown basis label '" + w + "'");
    }
};

}  // namespace

AlgebraElement parse_element(const FiniteDimAlgebra& a, const std::string& text,
                             const NamedElements& named) {
    return ElementParser(a, text, named).parse();
}

std::string render_element(const FiniteDimAlgebra& a, const AlgebraElement& x) {
    if (x.dim() != a.dim()) throw std::invalid_argument("element does not belong to this algebra");
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < a.dim(); ++i) {
        const Scalar& c = x.coeff(i);
        if (c.is_zero()) continue;
        const std::string& label = a.basis().name(i);
        if (c.is_rational_valued()) {
            Rational r = c.rational_value();
            if (first) {
                if (r < 0) {
                    os << "-";
                    r = -r;
                }
            } else {
                os << (r < 0 ? " - " : " + ");
                if (r < 0) r = -r;
            }
            if (r == Rational(1))
                os << label;
            else
                os << rational_str(r) << "*" << label;
        } else {
            if (!first) os << " + ";
            os << "(" << c.str() << ")*" << label;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

}  // namespace rbx
