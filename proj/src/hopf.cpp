#include "rbx/hopf.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rbx/errors.hpp"

namespace rbx {

Coproduct::Coproduct(ScalarRing ring, int dim) : ring_(ring), dim_(dim) {
    if (dim < 1) throw std::invalid_argument("coproduct dimension must be >= 1");
    delta_.resize(static_cast<size_t>(dim));
}

const std::vector<CoproductTerm>& Coproduct::terms(int k) const {
    return delta_.at(static_cast<size_t>(k));
}

void Coproduct::add_term(int k, int a, int b, const Scalar& c) {
    if (k < 0 || k >= dim_ || a < 0 || a >= dim_ || b < 0 || b >= dim_)
        throw std::out_of_range("coproduct term index");
    Scalar v = embed(c, ring_);
    if (v.is_zero()) return;
    auto& terms = delta_.at(static_cast<size_t>(k));
    auto key = [](const CoproductTerm& t) { return std::pair<int, int>(t.a, t.b); };
    auto it = std::lower_bound(terms.begin(), terms.end(), std::pair<int, int>(a, b),
                               [&](const CoproductTerm& t, const std::pair<int, int>& p) {
                                   return key(t) < p;
                               });
    if (it != terms.end() && it->a == a && it->b == b) {
        it->c += v;
        if (it->c.is_zero()) terms.erase(it);
    } else {
        terms.insert(it, CoproductTerm{a, b, std::move(v)});
    }
}

bool Coproduct::operator==(const Coproduct& o) const {
    if (dim_ != o.dim_ || ring_ != o.ring_) return false;
    for (size_t k = 0; k < delta_.size(); ++k) {
        const auto& x = delta_[k];
        const auto& y = o.delta_[k];
        if (x.size() != y.size()) return false;
        for (size_t t = 0; t < x.size(); ++t)
            if (x[t].a != y[t].a || x[t].b != y[t].b || x[t].c != y[t].c) return false;
    }
    return true;
}

namespace {

void tensor_add(SparseTensor& t, std::int64_t idx, const Scalar& c) {
    auto [it, fresh] = t.try_emplace(idx, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

bool tensor_equal(const SparseTensor& a, const SparseTensor& b) {
    if (a.size() != b.size()) return false;
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

std::int64_t pair_index(int dim, int a, int b) {
    return static_cast<std::int64_t>(a) * dim + b;
}

std::int64_t triple_index(int dim, int a, int b, int c) {
    return (static_cast<std::int64_t>(a) * dim + b) * dim + c;
}

}  // namespace

SparseTensor coproduct_of(const HopfAlgebra& h, const AlgebraElement& x) {
    SparseTensor out;
    const int n = h.dim();
    for (int k = 0; k < n; ++k) {
        const Scalar& xk = x.coeff(k);
        if (xk.is_zero()) continue;
        for (const CoproductTerm& t : h.coproduct.terms(k))
            tensor_add(out, pair_index(n, t.a, t.b), xk * t.c);
    }
    return out;
}

Scalar counit_of(const HopfAlgebra& h, const AlgebraElement& x) {
    Scalar acc = Scalar::zero(h.ring());
    for (int k = 0; k < h.dim(); ++k) {
        const Scalar& xk = x.coeff(k);
        if (xk.is_zero()) continue;
        acc += xk * h.counit[static_cast<size_t>(k)];
    }
    return acc;
}

AlgebraElement antipode_of_basis(const HopfAlgebra& h, int k) {
    AlgebraElement out(h.ring(), h.dim());
    for (int i = 0; i < h.dim(); ++i) out.set_coeff(i, h.antipode.at(i, k));
    return out;
}

std::optional<int> check_coassociativity(const HopfAlgebra& h) {
    const int n = h.dim();
    for (int k = 0; k < n; ++k) {
        SparseTensor lhs, rhs;
        for (const CoproductTerm& t : h.coproduct.terms(k)) {
            for (const CoproductTerm& u : h.coproduct.terms(t.a))
                tensor_add(lhs, triple_index(n, u.a, u.b, t.b), t.c * u.c);
            for (const CoproductTerm& u : h.coproduct.terms(t.b))
                tensor_add(rhs, triple_index(n, t.a, u.a, u.b), t.c * u.c);
        }
        if (!tensor_equal(lhs, rhs)) return k;
    }
    return std::nullopt;
}

std::optional<int> check_counit(const HopfAlgebra& h) {
    const int n = h.dim();
    for (int k = 0; k < n; ++k) {
        std::vector<Scalar> acc1(static_cast<size_t>(n), Scalar::zero(h.ring()));
        std::vector<Scalar> acc2 = acc1;
        for (const CoproductTerm& t : h.coproduct.terms(k)) {
            acc1[static_cast<size_t>(t.b)] += t.c * h.counit[static_cast<size_t>(t.a)];
            acc2[static_cast<size_t>(t.a)] += t.c * h.counit[static_cast<size_t>(t.b)];
        }
        AlgebraElement ek = AlgebraElement::basis_vector(h.ring(), n, k);
        if (AlgebraElement::from_coords(h.ring(), acc1) != ek) return k;
        if (AlgebraElement::from_coords(h.ring(), acc2) != ek) return k;
    }
    return std::nullopt;
}

namespace {

// Product in H (x) H: (a (x) b)(c (x) d) = ac (x) bd, extended bilinearly.
SparseTensor tensor_multiply(const FiniteDimAlgebra& alg, const SparseTensor& x,
                             const SparseTensor& y) {
    const int n = alg.dim();
    SparseTensor out;
    for (const auto& [ix, cx] : x) {
        int a = static_cast<int>(ix / n), b = static_cast<int>(ix % n);
        for (const auto& [iy, cy] : y) {
            int c = static_cast<int>(iy / n), d = static_cast<int>(iy % n);
            Scalar f = cx * cy;
            for (const ScTerm& t : alg.constants().product(a, c))
                for (const ScTerm& u : alg.constants().product(b, d))
                    tensor_add(out, pair_index(n, t.k, u.k), f * t.c * u.c);
        }
    }
    return out;
}

bool bialgebra_pair_ok(const HopfAlgebra& h, int i, int j) {
    const int n = h.dim();
    // Delta(e_i e_j) vs Delta(e_i) Delta(e_j)
    SparseTensor lhs;
    Scalar eps_prod = Scalar::zero(h.ring());
    for (const ScTerm& t : h.algebra.constants().product(i, j)) {
        for (const CoproductTerm& u : h.coproduct.terms(t.k))
            tensor_add(lhs, pair_index(n, u.a, u.b), t.c * u.c);
        eps_prod += t.c * h.counit[static_cast<size_t>(t.k)];
    }
    SparseTensor di, dj;
    for (const CoproductTerm& t : h.coproduct.terms(i)) tensor_add(di, pair_index(n, t.a, t.b), t.c);
    for (const CoproductTerm& t : h.coproduct.terms(j)) tensor_add(dj, pair_index(n, t.a, t.b), t.c);
    if (!tensor_equal(lhs, tensor_multiply(h.algebra, di, dj))) return false;
    // eps(e_i e_j) = eps(e_i) eps(e_j)
    return eps_prod == h.counit[static_cast<size_t>(i)] * h.counit[static_cast<size_t>(j)];
}

}  // namespace

std::optional<BialgebraViolation> check_bialgebra(const HopfAlgebra& h, const CheckOptions& opts) {
    const int n = h.dim();
    // Unit conditions: Delta(1) = 1 (x) 1 and eps(1) = 1.
    SparseTensor unit_coprod = coproduct_of(h, h.algebra.unit());
    SparseTensor unit_tensor;
    for (int a = 0; a < n; ++a) {
        const Scalar& ua = h.algebra.unit().coeff(a);
        if (ua.is_zero()) continue;
        for (int b = 0; b < n; ++b) {
            const Scalar& ub = h.algebra.unit().coeff(b);
            if (ub.is_zero()) continue;
            tensor_add(unit_tensor, pair_index(n, a, b), ua * ub);
        }
    }
    if (!tensor_equal(unit_coprod, unit_tensor))
        return BialgebraViolation{BialgebraViolation::Kind::CoproductOfUnit};
    if (counit_of(h, h.algebra.unit()) != Scalar::one(h.ring()))
        return BialgebraViolation{BialgebraViolation::Kind::CounitOfUnit};

    const std::uint64_t total = static_cast<std::uint64_t>(n) * n;
    if (!opts.sampled(n, total)) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!bialgebra_pair_ok(h, i, j))
                    return BialgebraViolation{BialgebraViolation::Kind::CoproductMorphism, i, j};
        return std::nullopt;
    }
    std::mt19937_64 gen(opts.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (std::uint64_t s = 0; s < *opts.budget; ++s) {
        int i = pick(gen), j = pick(gen);
        if (!bialgebra_pair_ok(h, i, j))
            return BialgebraViolation{BialgebraViolation::Kind::CoproductMorphism, i, j};
    }
    return std::nullopt;
}

std::optional<AntipodeViolation> check_antipode(const HopfAlgebra& h) {
    const int n = h.dim();
    for (int k = 0; k < n; ++k) {
        AlgebraElement left(h.ring(), n), right(h.ring(), n);
        for (const CoproductTerm& t : h.coproduct.terms(k)) {
            left = left + h.algebra.multiply(antipode_of_basis(h, t.a),
                                             h.algebra.basis_element(t.b)).scaled(t.c);
            right = right + h.algebra.multiply(h.algebra.basis_element(t.a),
                                               antipode_of_basis(h, t.b)).scaled(t.c);
        }
        AlgebraElement target = h.algebra.unit().scaled(h.counit[static_cast<size_t>(k)]);
        if (left != target) return AntipodeViolation{k, true};
        if (right != target) return AntipodeViolation{k, false};
    }
    return std::nullopt;
}

FiniteDimAlgebra dual_algebra(const HopfAlgebra& h) {
    const int n = h.dim();
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back("f" + std::to_string(i + 1));
    StructureConstants sc(h.ring(), n);
    for (int k = 0; k < n; ++k)
        for (const CoproductTerm& t : h.coproduct.terms(k)) sc.add_term(t.a, t.b, k, t.c);
    AlgebraElement unit = AlgebraElement::from_coords(h.ring(), h.counit);
    return FiniteDimAlgebra(Basis(std::move(labels)), std::move(sc), std::move(unit));
}

AlgebraElement trace_element(const HopfAlgebra& h) {
    const int n = h.dim();
    // Closed coordinate formula: (x_H)_i = sum_j Delta_j^{ij}.
    std::vector<Scalar> coords(static_cast<size_t>(n), Scalar::zero(h.ring()));
    for (int j = 0; j < n; ++j)
        for (const CoproductTerm& t : h.coproduct.terms(j))
            if (t.b == j) coords[static_cast<size_t>(t.a)] += t.c;
    AlgebraElement x = AlgebraElement::from_coords(h.ring(), coords);

    // Independent route: literal l_{f_i} traces in the dual algebra.
    FiniteDimAlgebra dual = dual_algebra(h);
    for (int i = 0; i < n; ++i) {
        Scalar tr = dual.left_mult_matrix(dual.basis_element(i)).trace();
        if (tr != x.coeff(i))
            throw VerificationError(
                "trace element: closed formula disagrees with l_{f_i} traces at dual index " +
                std::to_string(i + 1));
    }

    // Prop 2.5 postconditions.
    Scalar eps = counit_of(h, x);
    if (eps != Scalar::integer(h.ring(), n))
        throw VerificationError("trace element: eps(x_H) != dim H (inconsistent Hopf structure)");
    if (h.algebra.multiply(x, x) != x.scaled(eps))
        throw VerificationError("trace element: x_H^2 != eps(x_H) x_H (inconsistent Hopf structure)");
    return x;
}

std::vector<AlgebraElement> integrals(const HopfAlgebra& h, IntegralSide side) {
    const int n = h.dim();
    ScalarRing ring = h.ring();
    bool lift = !ring.is_field();
    ScalarRing solve_ring = lift ? ScalarRing::ratfun() : ring;

    Matrix stacked(solve_ring, n * n, n);
    for (int i = 0; i < n; ++i) {
        AlgebraElement ei = h.algebra.basis_element(i);
        Matrix op = side == IntegralSide::Left ? h.algebra.left_mult_matrix(ei)
                                               : h.algebra.right_mult_matrix(ei);
        const Scalar& eps_i = h.counit[static_cast<size_t>(i)];
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                Scalar v = op.at(r, c);
                if (r == c) v -= eps_i;
                if (!v.is_zero()) stacked.set(i * n + r, c, lift ? embed(v, solve_ring) : v);
            }
    }
    std::vector<AlgebraElement> out;
    for (auto& vec : nullspace(stacked))
        out.push_back(AlgebraElement::from_coords(solve_ring, std::move(vec)));
    return out;
}

bool is_cocommutative_element(const HopfAlgebra& h, const AlgebraElement& c) {
    const int n = h.dim();
    SparseTensor delta = coproduct_of(h, c);
    SparseTensor flipped;
    for (const auto& [idx, v] : delta)
        tensor_add(flipped, pair_index(n, static_cast<int>(idx % n), static_cast<int>(idx / n)), v);
    return tensor_equal(delta, flipped);
}

}  // namespace rbx
