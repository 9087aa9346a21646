#include "rbx/rota_baxter.hpp"

#include <array>
#include <functional>
#include <random>
#include <stdexcept>

#include "rbx/errors.hpp"

namespace rbx {

namespace {

AlgebraElement column_element(const Matrix& m, int j) {
    AlgebraElement x(m.ring(), m.rows());
    for (int i = 0; i < m.rows(); ++i) x.set_coeff(i, m.at(i, j));
    return x;
}

AlgebraElement apply_operator(const Matrix& p, const AlgebraElement& x) {
    return AlgebraElement::from_coords(p.ring(), p.apply(x.coords()));
}

}  // namespace

Scalar quasi_idempotent_weight(const FiniteDimAlgebra& a, const AlgebraElement& xi) {
    if (xi.dim() != a.dim()) throw std::invalid_argument("element does not belong to this algebra");
    if (xi.is_zero()) throw std::invalid_argument("quasi-idempotent weight of the zero element");
    AlgebraElement sq = a.multiply(xi, xi);
    if (sq.is_zero()) return Scalar::zero(a.ring());
    int first = -1;
    for (int i = 0; i < xi.dim(); ++i) {
        if (!xi.coeff(i).is_zero()) {
            first = i;
            break;
        }
    }
    auto ratio = sq.coeff(first).divide_exact(xi.coeff(first));
    if (ratio && xi.scaled(*ratio) == sq) return -*ratio;
    throw VerificationError("element is not quasi-idempotent: xi^2 = " + render_element(a, sq) +
                            " is not proportional to xi = " + render_element(a, xi));
}

RotaBaxterOperator rb_from_element(const FiniteDimAlgebra& a, const AlgebraElement& xi,
                                   const CheckOptions& opts) {
    Scalar weight = quasi_idempotent_weight(a, xi);
    Matrix p = a.left_mult_matrix(xi);
    if (auto v = check_rb_identity(a, p, weight, opts))
        throw VerificationError("P_xi failed the Rota-Baxter identity at basis pair (" +
                                a.basis().name(v->i) + ", " + a.basis().name(v->j) +
                                "); is the carrier associative?");
    return {std::move(p), std::move(weight)};
}

RotaBaxterOperator identity_rb(const FiniteDimAlgebra& a) {
    RotaBaxterOperator op{Matrix::identity(a.ring(), a.dim()), Scalar::integer(a.ring(), -1)};
    if (auto v = check_rb_identity(a, op.matrix, op.weight))
        throw VerificationError("identity operator failed the Rota-Baxter identity at (" +
                                a.basis().name(v->i) + ", " + a.basis().name(v->j) + ")");
    return op;
}

namespace {

bool rb_pair_ok(const FiniteDimAlgebra& a, const Matrix& p, const Scalar& weight,
                const std::vector<AlgebraElement>& p_cols, int i, int j) {
    const AlgebraElement& pa = p_cols[static_cast<size_t>(i)];
    const AlgebraElement& pb = p_cols[static_cast<size_t>(j)];
    AlgebraElement lhs = a.multiply(pa, pb);
    AlgebraElement rhs = apply_operator(p, a.multiply(a.basis_element(i), pb));
    rhs = rhs + apply_operator(p, a.multiply(pa, a.basis_element(j)));
    rhs = rhs + apply_operator(p, a.multiply(a.basis_element(i), a.basis_element(j))).scaled(weight);
    return lhs == rhs;
}

}  // namespace

std::optional<PairViolation> check_rb_identity(const FiniteDimAlgebra& a, const LinearOperator& p,
                                               const Scalar& weight, const CheckOptions& opts) {
    if (p.rows() != a.dim() || p.cols() != a.dim())
        throw std::invalid_argument("operator dimension does not match the carrier");
    const int n = a.dim();
    std::vector<AlgebraElement> p_cols;
    p_cols.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) p_cols.push_back(column_element(p, j));

    const std::uint64_t total = static_cast<std::uint64_t>(n) * n;
    if (!opts.sampled(n, total)) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!rb_pair_ok(a, p, weight, p_cols, i, j)) return PairViolation{i, j};
        return std::nullopt;
    }
    std::mt19937_64 gen(opts.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (std::uint64_t s = 0; s < *opts.budget; ++s) {
        int i = pick(gen), j = pick(gen);
        if (!rb_pair_ok(a, p, weight, p_cols, i, j)) return PairViolation{i, j};
    }
    return std::nullopt;
}

bool check_quasi_idempotent_operator(const LinearOperator& p, const Scalar& weight) {
    if (p.rows() != p.cols()) throw std::invalid_argument("operator matrix must be square");
    return p * p == p.scaled(-weight);
}

// ---------------------------------------------------------------------------
// Derived tridendriform / dendriform structures.

namespace {

void fill_tensor_from_products(StructureConstants& sc, const FiniteDimAlgebra& a,
                               const std::function<AlgebraElement(int, int)>& prod) {
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            AlgebraElement x = prod(i, j);
            for (int k = 0; k < a.dim(); ++k)
                if (!x.coeff(k).is_zero()) sc.add_term(i, j, k, x.coeff(k));
        }
}

// (x T1 y) T2 z == x T3 (y T4 z) at a basis triple.
bool axiom_holds_at(const StructureConstants& t1, const StructureConstants& t2,
                    const StructureConstants& t3, const StructureConstants& t4, int i, int j,
                    int k) {
    std::map<int, Scalar> lhs, rhs;
    auto add = [](std::map<int, Scalar>& m, int key, const Scalar& v) {
        auto [it, fresh] = m.try_emplace(key, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) m.erase(it);
        }
    };
    for (const ScTerm& t : t1.product(i, j))
        for (const ScTerm& u : t2.product(t.k, k)) add(lhs, u.k, t.c * u.c);
    for (const ScTerm& t : t4.product(j, k))
        for (const ScTerm& u : t3.product(i, t.k)) add(rhs, u.k, t.c * u.c);
    if (lhs.size() != rhs.size()) return false;
    auto ia = lhs.begin();
    auto ib = rhs.begin();
    for (; ia != lhs.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

struct Axiom {
    const StructureConstants* t1;
    const StructureConstants* t2;
    const StructureConstants* t3;
    const StructureConstants* t4;
};

std::optional<AxiomViolation> check_axioms(const std::vector<Axiom>& axioms, int dim,
                                           const CheckOptions& opts) {
    const std::uint64_t total = static_cast<std::uint64_t>(dim) * dim * dim;
    for (size_t a = 0; a < axioms.size(); ++a) {
        const Axiom& ax = axioms[a];
        if (!opts.sampled(dim, total)) {
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    for (int k = 0; k < dim; ++k)
                        if (!axiom_holds_at(*ax.t1, *ax.t2, *ax.t3, *ax.t4, i, j, k))
                            return AxiomViolation{static_cast<int>(a) + 1, i, j, k};
        } else {
            std::mt19937_64 gen(opts.seed + a);
            std::uniform_int_distribution<int> pick(0, dim - 1);
            for (std::uint64_t s = 0; s < *opts.budget; ++s) {
                int i = pick(gen), j = pick(gen), k = pick(gen);
                if (!axiom_holds_at(*ax.t1, *ax.t2, *ax.t3, *ax.t4, i, j, k))
                    return AxiomViolation{static_cast<int>(a) + 1, i, j, k};
            }
        }
    }
    return std::nullopt;
}

FiniteDimAlgebra lift_to_ratfun(const FiniteDimAlgebra& a) {
    ScalarRing target = ScalarRing::ratfun();
    StructureConstants sc = a.constants().mapped(target, [&](const Scalar& c) { return embed(c, target); });
    AlgebraElement unit(target, a.dim());
    for (int i = 0; i < a.dim(); ++i) unit.set_coeff(i, embed(a.unit().coeff(i), target));
    return FiniteDimAlgebra(a.basis(), std::move(sc), std::move(unit));
}

AlgebraElement lift_element(const AlgebraElement& x, const ScalarRing& target) {
    AlgebraElement out(target, x.dim());
    for (int i = 0; i < x.dim(); ++i) out.set_coeff(i, embed(x.coeff(i), target));
    return out;
}

}  // namespace

TridendriformStructure derive_tridendriform(const FiniteDimAlgebra& a, const AlgebraElement& xi,
                                            const Scalar& weight, const CheckOptions& opts) {
    if (weight.is_zero())
        throw std::domain_error("tridendriform derivation needs a nonzero weight (use derive_dendriform)");
    bool lift = !a.ring().is_field();
    const FiniteDimAlgebra* carrier = &a;
    std::optional<FiniteDimAlgebra> lifted_carrier;
    AlgebraElement xi_used = xi;
    Scalar weight_used = weight;
    if (lift) {
        lifted_carrier.emplace(lift_to_ratfun(a));
        carrier = &*lifted_carrier;
        xi_used = lift_element(xi, carrier->ring());
        weight_used = embed(weight, carrier->ring());
    }
    Scalar inv = weight_used.inverse();
    const FiniteDimAlgebra& c = *carrier;

    std::vector<AlgebraElement> xi_e;  // xi * e_j
    xi_e.reserve(static_cast<size_t>(c.dim()));
    for (int j = 0; j < c.dim(); ++j) xi_e.push_back(c.multiply(xi_used, c.basis_element(j)));

    TridendriformStructure t{StructureConstants(c.ring(), c.dim()),
                             StructureConstants(c.ring(), c.dim()),
                             StructureConstants(c.ring(), c.dim()), lift};
    fill_tensor_from_products(t.left, c, [&](int i, int j) {
        return c.multiply(c.basis_element(i), xi_e[static_cast<size_t>(j)]).scaled(inv);
    });
    fill_tensor_from_products(t.right, c, [&](int i, int j) {
        return c.multiply(xi_e[static_cast<size_t>(i)], c.basis_element(j)).scaled(inv);
    });
    t.dot = c.constants();

    if (auto v = check_tridendriform(t, opts))
        throw VerificationError("derived tridendriform structure failed axiom " +
                                std::to_string(v->axiom) + " at triple (" + c.basis().name(v->i) +
                                ", " + c.basis().name(v->j) + ", " + c.basis().name(v->k) + ")");
    return t;
}

DendriformStructure derive_dendriform(const FiniteDimAlgebra& a, const RotaBaxterOperator& p,
                                      const CheckOptions& opts) {
    if (!p.weight.is_zero())
        throw std::domain_error("dendriform derivation needs weight 0, got " + p.weight.str());
    if (p.matrix.rows() != a.dim())
        throw std::invalid_argument("operator dimension does not match the carrier");
    std::vector<AlgebraElement> p_cols;
    p_cols.reserve(static_cast<size_t>(a.dim()));
    for (int j = 0; j < a.dim(); ++j) p_cols.push_back(column_element(p.matrix, j));

    DendriformStructure d{StructureConstants(a.ring(), a.dim()), StructureConstants(a.ring(), a.dim())};
    fill_tensor_from_products(d.left, a, [&](int i, int j) {
        return a.multiply(a.basis_element(i), p_cols[static_cast<size_t>(j)]);
    });
    fill_tensor_from_products(d.right, a, [&](int i, int j) {
        return a.multiply(p_cols[static_cast<size_t>(i)], a.basis_element(j));
    });
    if (auto v = check_dendriform(d, opts))
        throw VerificationError("derived dendriform structure failed axiom " +
                                std::to_string(v->axiom) + " at triple (" + a.basis().name(v->i) +
                                ", " + a.basis().name(v->j) + ", " + a.basis().name(v->k) + ")");
    return d;
}

std::optional<AxiomViolation> check_tridendriform(const TridendriformStructure& t,
                                                  const CheckOptions& opts) {
    StructureConstants star = star_product(t);
    const StructureConstants &L = t.left, &R = t.right, &D = t.dot, &S = star;
    std::vector<Axiom> axioms = {
        {&L, &L, &L, &S},  // 1: (x<y)<z = x<(y*z)
        {&R, &L, &R, &L},  // 2: (x>y)<z = x>(y<z)
        {&S, &R, &R, &R},  // 3: (x*y)>z = x>(y>z)
        {&R, &D, &R, &D},  // 4: (x>y).z = x>(y.z)
        {&L, &D, &D, &R},  // 5: (x<y).z = x.(y>z)
        {&D, &L, &D, &L},  // 6: (x.y)<z = x.(y<z)
        {&D, &D, &D, &D},  // 7: (x.y).z = x.(y.z)
    };
    return check_axioms(axioms, t.left.dim(), opts);
}

std::optional<AxiomViolation> check_dendriform(const DendriformStructure& d,
                                               const CheckOptions& opts) {
    StructureConstants star = star_product(d);
    const StructureConstants &L = d.left, &R = d.right, &S = star;
    std::vector<Axiom> axioms = {
        {&L, &L, &L, &S},  // 1: (x<y)<z = x<(y*z)
        {&R, &L, &R, &L},  // 2: (x>y)<z = x>(y<z)
        {&S, &R, &R, &R},  // 3: (x*y)>z = x>(y>z)
    };
    return check_axioms(axioms, d.left.dim(), opts);
}

StructureConstants star_product(const TridendriformStructure& t) {
    return t.left + t.right + t.dot;
}

StructureConstants star_product(const DendriformStructure& d) { return d.left + d.right; }

}  // namespace rbx
