#include "rbx/families.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rbx/errors.hpp"

namespace rbx {

// ---------------------------------------------------------------------------
// Finite groups.

int FiniteGroup::inverse(int g) const {
    for (int h = 0; h < order; ++h)
        if (mul(g, h) == identity && mul(h, g) == identity) return h;
    throw std::invalid_argument("group element without inverse: " + names.at(static_cast<size_t>(g)));
}

void FiniteGroup::validate() const {
    if (order < 1 || static_cast<int>(table.size()) != order * order)
        throw std::invalid_argument("group table has the wrong size");
    for (int g = 0; g < order; ++g) {
        if (mul(identity, g) != g || mul(g, identity) != g)
            throw std::invalid_argument("group identity fails at element " + std::to_string(g));
        std::vector<bool> seen_row(static_cast<size_t>(order), false);
        std::vector<bool> seen_col(static_cast<size_t>(order), false);
        for (int h = 0; h < order; ++h) {
            int r = mul(g, h), c = mul(h, g);
            if (r < 0 || r >= order || c < 0 || c >= order)
                throw std::invalid_argument("group table entry out of range");
            seen_row[static_cast<size_t>(r)] = true;
            seen_col[static_cast<size_t>(c)] = true;
        }
        for (int h = 0; h < order; ++h)
            if (!seen_row[static_cast<size_t>(h)] || !seen_col[static_cast<size_t>(h)])
                throw std::invalid_argument("group table row/column is not a permutation");
    }
    for (int g = 0; g < order; ++g)
        for (int h = 0; h < order; ++h)
            for (int k = 0; k < order; ++k)
                if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                    throw std::invalid_argument("group table is not associative at (" +
                                                std::to_string(g) + "," + std::to_string(h) + "," +
                                                std::to_string(k) + ")");
    inverse(0);  // existence for all elements is implied by the latin-square
    for (int g = 0; g < order; ++g) inverse(g);
}

namespace {

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    FiniteGroup g;
    g.order = n;
    g.identity = 0;
    g.table.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    g.names.push_back("e");
    for (int a = 1; a < n; ++a) g.names.push_back(a == 1 ? "g" : "g" + std::to_string(a));
    g.validate();
    return g;
}

// Elements r^k f^t with f r = r^-1 f; (k1,t1)(k2,t2) = (k1 + (-1)^t1 k2, t1+t2).
FiniteGroup dihedral_group(int m) {
    if (m < 1) throw std::invalid_argument("dihedral parameter must be >= 1");
    FiniteGroup g;
    int n = 2 * m;
    g.order = n;
    g.identity = 0;
    auto idx = [m](int k, int t) { return t * m + k; };
    g.table.resize(static_cast<size_t>(n) * n);
    for (int t1 = 0; t1 < 2; ++t1)
        for (int k1 = 0; k1 < m; ++k1)
            for (int t2 = 0; t2 < 2; ++t2)
                for (int k2 = 0; k2 < m; ++k2) {
                    int k = t1 == 0 ? (k1 + k2) % m : ((k1 - k2) % m + m) % m;
                    g.table[static_cast<size_t>(idx(k1, t1)) * n + idx(k2, t2)] =
                        idx(k, (t1 + t2) % 2);
                }
    for (int t = 0; t < 2; ++t)
        for (int k = 0; k < m; ++k) {
            std::string name;
            if (k == 0)
                name = t == 0 ? "e" : "s";
            else
                name = (k == 1 ? std::string("r") : "r" + std::to_string(k)) + (t == 1 ? "s" : "");
            g.names.push_back(name);
        }
    g.validate();
    return g;
}

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 5)
        throw std::invalid_argument("symmetric group supported for n <= 5 (order <= 120)");
    std::vector<int> base(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = i;
    std::vector<std::vector<int>> perms;
    std::vector<int> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<int>(i));

    FiniteGroup g;
    g.order = static_cast<int>(perms.size());
    g.identity = 0;  // lexicographically first permutation is the identity
    g.table.resize(static_cast<size_t>(g.order) * g.order);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            std::vector<int> c(static_cast<size_t>(n));
            // (a b)(i) = a(b(i)), so the product acts by b first.
            for (int i = 0; i < n; ++i)
                c[static_cast<size_t>(i)] =
                    perms[static_cast<size_t>(a)][static_cast<size_t>(
                        perms[static_cast<size_t>(b)][static_cast<size_t>(i)])];
            g.table[static_cast<size_t>(a) * g.order + b] = index.at(c);
        }
    for (const auto& perm : perms) {
        std::string name;
        for (int i : perm) name += std::to_string(i + 1);
        g.names.push_back(name);
    }
    g.validate();
    return g;
}

}  // namespace

FiniteGroup builtin_group(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("group descriptor must look like cyclic:4, got '" + name + "'");
    std::string kind = name.substr(0, colon);
    int param;
    try {
        size_t pos = 0;
        param = std::stoi(name.substr(colon + 1), &pos);
        if (pos != name.size() - colon - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad group parameter in '" + name + "'");
    }
    if (kind == "cyclic") {
        if (param < 1 || param > 120) throw std::invalid_argument("cyclic:n supports 1 <= n <= 120");
        return cyclic_group(param);
    }
    if (kind == "dihedral") {
        if (param < 1 || param > 60) throw std::invalid_argument("dihedral:m supports 1 <= m <= 60");
        return dihedral_group(param);
    }
    if (kind == "symmetric") return symmetric_group(param);
    throw std::invalid_argument("unknown group kind '" + kind + "'");
}

namespace {

void verify_hopf(const HopfAlgebra& h, const std::string& what, const CheckOptions& opts) {
    if (auto v = check_associativity(h.algebra.constants(), opts))
        throw VerificationError(what + ": associativity fails at (" + h.algebra.basis().name(v->i) +
                                ", " + h.algebra.basis().name(v->j) + ", " +
                                h.algebra.basis().name(v->k) + ")");
    if (!check_unit(h.algebra)) throw VerificationError(what + ": unit axiom fails");
    if (auto v = check_coassociativity(h))
        throw VerificationError(what + ": coassociativity fails at " + h.algebra.basis().name(*v));
    if (auto v = check_counit(h))
        throw VerificationError(what + ": counit axiom fails at " + h.algebra.basis().name(*v));
    if (auto v = check_bialgebra(h, opts)) {
        std::string where = v->i >= 0 ? " at (" + h.algebra.basis().name(v->i) + ", " +
                                            h.algebra.basis().name(v->j) + ")"
                                      : " on the unit";
        throw VerificationError(what + ": bialgebra axiom fails" + where);
    }
    if (auto v = check_antipode(h))
        throw VerificationError(what + ": antipode axiom fails at " + h.algebra.basis().name(v->k) +
                                (v->left ? " (left)" : " (right)"));
}

}  // namespace

HopfAlgebra group_algebra(const FiniteGroup& g) {
    g.validate();
    ScalarRing ring = ScalarRing::rational();
    const int n = g.order;
    StructureConstants sc(ring, n);
    Scalar one = Scalar::one(ring);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) sc.add_term(a, b, g.mul(a, b), one);
    FiniteDimAlgebra alg(Basis(g.names), std::move(sc),
                         AlgebraElement::basis_vector(ring, n, g.identity));

    Coproduct cop(ring, n);
    std::vector<Scalar> counit(static_cast<size_t>(n), one);
    Matrix antipode(ring, n, n);
    for (int a = 0; a < n; ++a) {
        cop.add_term(a, a, a, one);
        antipode.set(g.inverse(a), a, one);
    }
    HopfAlgebra h{std::move(alg), std::move(cop), std::move(counit), std::move(antipode)};
    verify_hopf(h, "group algebra", {});
    return h;
}

// ---------------------------------------------------------------------------
// Sweedler's four-dimensional Hopf algebra. Basis order (1, x, y, xy).

HopfAlgebra sweedler() {
    ScalarRing ring = ScalarRing::rational();
    Scalar one = Scalar::one(ring);
    Scalar minus_one = Scalar::integer(ring, -1);
    StructureConstants sc(ring, 4);
    // Products with 1.
    for (int i = 0; i < 4; ++i) {
        sc.add_term(0, i, i, one);
        if (i != 0) sc.add_term(i, 0, i, one);
    }
    sc.add_term(1, 1, 0, one);        // x*x = 1
    sc.add_term(1, 2, 3, one);        // x*y = xy
    sc.add_term(1, 3, 2, one);        // x*xy = y
    sc.add_term(2, 1, 3, minus_one);  // y*x = -xy
    sc.add_term(3, 1, 2, minus_one);  // xy*x = -y
    // y*y = y*xy = xy*y = xy*xy = 0.
    FiniteDimAlgebra alg(Basis({"1", "x", "y", "xy"}), std::move(sc),
                         AlgebraElement::basis_vector(ring, 4, 0));

    Coproduct cop(ring, 4);
    cop.add_term(0, 0, 0, one);  // Delta(1) = 1 (x) 1
    cop.add_term(1, 1, 1, one);  // Delta(x) = x (x) x
    cop.add_term(2, 0, 2, one);  // Delta(y) = 1 (x) y + y (x) x
    cop.add_term(2, 2, 1, one);
    cop.add_term(3, 1, 3, one);  // Delta(xy) = x (x) xy + xy (x) 1
    cop.add_term(3, 3, 0, one);

    std::vector<Scalar> counit = {one, one, Scalar::zero(ring), Scalar::zero(ring)};

    Matrix antipode(ring, 4, 4);
    antipode.set(0, 0, one);        // S(1) = 1
    antipode.set(1, 1, one);        // S(x) = x
    antipode.set(3, 2, one);        // S(y) = xy
    antipode.set(2, 3, minus_one);  // S(xy) = -y

    HopfAlgebra h{std::move(alg), std::move(cop), std::move(counit), std::move(antipode)};
    verify_hopf(h, "Sweedler algebra", {});
    return h;
}

AlgebraElement sweedler_family_element(const FiniteDimAlgebra& sweedler_algebra,
                                       const Rational& mu1, const Rational& mu2,
                                       const Rational& mu3) {
    if (sweedler_algebra.dim() != 4)
        throw std::invalid_argument("family element needs the Sweedler carrier");
    if (mu1.is_zero() && mu2.is_zero() && mu3.is_zero())
        throw std::invalid_argument("family element (0,0,0) is the zero element");
    const ScalarRing& ring = sweedler_algebra.ring();
    AlgebraElement x(ring, 4);
    x.set_coeff(0, Scalar::of_rational(ring, mu1));
    x.set_coeff(1, Scalar::of_rational(ring, mu1));
    x.set_coeff(2, Scalar::of_rational(ring, mu2));
    x.set_coeff(3, Scalar::of_rational(ring, mu3));
    return x;
}

// ---------------------------------------------------------------------------
// The small quantum group for sl(2).

namespace {

struct UqEngine {
    int d, e;
    ScalarRing ring;
    int dim;

    // Sparse element over monomial indices.
    using Elem = std::map<int, Scalar>;

    std::vector<Elem> fe;  // fe[j] = F^j E in normal form

    UqEngine(int d_, int e_) : d(d_), e(e_), ring(ScalarRing::cyclotomic(d_)), dim(e_ * e_ * e_) {
        Scalar q = Scalar(Cyclotomic::zeta(d));
        Scalar comm = (q - qpow(-1)).inverse();  // 1/(q - q^-1)
        fe.resize(static_cast<size_t>(e));
        fe[0] = {{index(1, 0, 0), Scalar::one(ring)}};
        for (int j = 1; j < e; ++j) {
            Elem t = mul_f(fe[static_cast<size_t>(j - 1)]);
            add_term(t, index(0, j - 1, 1 % e), -comm);
            add_term(t, index(0, j - 1, (e - 1) % e), comm);
            fe[static_cast<size_t>(j)] = std::move(t);
        }
    }

    int index(int i, int j, int l) const { return (i * e + j) * e + l; }
    int i_of(int m) const { return m / (e * e); }
    int j_of(int m) const { return (m / e) % e; }
    int l_of(int m) const { return m % e; }

    Scalar qpow(long k) const { return Scalar(Cyclotomic::zeta_power(d, k)); }

    static void add_term(Elem& x, int m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = x.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) x.erase(it);
        }
    }

    Elem mul_k(const Elem& x) const {
        Elem out;
        for (const auto& [m, c] : x) add_term(out, index(i_of(m), j_of(m), (l_of(m) + 1) % e), c);
        return out;
    }

    // K^l F = q^(-2l) F K^l; drops terms with F^e.
    Elem mul_f(const Elem& x) const {
        Elem out;
        for (const auto& [m, c] : x) {
            if (j_of(m) + 1 >= e) continue;
            add_term(out, index(i_of(m), j_of(m) + 1, l_of(m)), c * qpow(-2L * l_of(m)));
        }
        return out;
    }

    // E^i F^j K^l E = q^(2l) E^i (F^j E) K^l; drops terms with E^e.
    Elem mul_e(const Elem& x) const {
        Elem out;
        for (const auto& [m, c] : x) {
            Scalar f = c * qpow(2L * l_of(m));
            for (const auto& [t, tc] : fe[static_cast<size_t>(j_of(m))]) {
                int ti = i_of(t);
                if (i_of(m) + ti >= e) continue;
                add_term(out, index(i_of(m) + ti, j_of(t), (l_of(t) + l_of(m)) % e), f * tc);
            }
        }
        return out;
    }

    Elem mono_product(int m1, int m2) const {
        Elem cur = {{m1, Scalar::one(ring)}};
        for (int a = 0; a < i_of(m2); ++a) cur = mul_e(cur);
        for (int b = 0; b < j_of(m2); ++b) cur = mul_f(cur);
        for (int c = 0; c < l_of(m2); ++c) cur = mul_k(cur);
        return cur;
    }
};

}  // namespace

HopfAlgebra uq_sl2_bar(int d, bool verify, const CheckOptions& opts) {
    if (d <= 2) throw std::invalid_argument("uqsl2 needs d > 2");
    int e = (d % 2 == 1) ? d : d / 2;
    if (e < 2 || e > 6)
        throw std::invalid_argument("uqsl2 supported for e in 2..6 (dim e^3 <= 216), got e = " +
                                    std::to_string(e));
    UqEngine eng(d, e);
    const int n = eng.dim;
    const ScalarRing& ring = eng.ring;

    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j)
            for (int l = 0; l < e; ++l)
                labels.push_back("E" + std::to_string(i) + "F" + std::to_string(j) + "K" +
                                 std::to_string(l));

    StructureConstants sc(ring, n);
    for (int m1 = 0; m1 < n; ++m1)
        for (int m2 = 0; m2 < n; ++m2)
            for (const auto& [m, c] : eng.mono_product(m1, m2)) sc.add_term(m1, m2, m, c);

    FiniteDimAlgebra alg(Basis(std::move(labels)), std::move(sc),
                         AlgebraElement::basis_vector(ring, n, eng.index(0, 0, 0)));

    // Coproduct via powers in H (x) H: Delta(E^i F^j K^l) = dE^i dF^j dK^l.
    using Tensor = std::map<std::int64_t, Scalar>;
    auto tensor_add = [](Tensor& t, std::int64_t idx, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t.try_emplace(idx, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    };
    auto pair_idx = [n](int a, int b) { return static_cast<std::int64_t>(a) * n + b; };
    auto tensor_mul = [&](const Tensor& x, const Tensor& y) {
        Tensor out;
        for (const auto& [ix, cx] : x) {
            int a = static_cast<int>(ix / n), b = static_cast<int>(ix % n);
            for (const auto& [iy, cy] : y) {
                int c = static_cast<int>(iy / n), dd = static_cast<int>(iy % n);
                Scalar f = cx * cy;
                for (const ScTerm& t : alg.constants().product(a, c))
                    for (const ScTerm& u : alg.constants().product(b, dd))
                        tensor_add(out, pair_idx(t.k, u.k), f * t.c * u.c);
            }
        }
        return out;
    };

    const int unit_m = eng.index(0, 0, 0);
    const int e_m = eng.index(1, 0, 0);
    const int f_m = eng.index(0, 1, 0);
    const int k_m = eng.index(0, 0, 1);
    const int kinv_m = eng.index(0, 0, (e - 1) % e);
    Scalar one = Scalar::one(ring);

    Tensor dE, dF, dK, dUnit;
    tensor_add(dUnit, pair_idx(unit_m, unit_m), one);
    tensor_add(dE, pair_idx(unit_m, e_m), one);   // 1 (x) E
    tensor_add(dE, pair_idx(e_m, k_m), one);      // E (x) K
    tensor_add(dF, pair_idx(kinv_m, f_m), one);   // K^-1 (x) F
    tensor_add(dF, pair_idx(f_m, unit_m), one);   // F (x) 1
    tensor_add(dK, pair_idx(k_m, k_m), one);      // K (x) K

    std::vector<Tensor> dEp(static_cast<size_t>(e)), dFp(static_cast<size_t>(e)),
        dKp(static_cast<size_t>(e));
    dEp[0] = dUnit;
    dFp[0] = dUnit;
    dKp[0] = dUnit;
    for (int i = 1; i < e; ++i) {
        dEp[static_cast<size_t>(i)] = tensor_mul(dEp[static_cast<size_t>(i - 1)], dE);
        dFp[static_cast<size_t>(i)] = tensor_mul(dFp[static_cast<size_t>(i - 1)], dF);
        dKp[static_cast<size_t>(i)] = tensor_mul(dKp[static_cast<size_t>(i - 1)], dK);
    }

    Coproduct cop(ring, n);
    for (int m = 0; m < n; ++m) {
        Tensor t = tensor_mul(tensor_mul(dEp[static_cast<size_t>(eng.i_of(m))],
                                         dFp[static_cast<size_t>(eng.j_of(m))]),
                              dKp[static_cast<size_t>(eng.l_of(m))]);
        for (const auto& [idx, c] : t)
            cop.add_term(m, static_cast<int>(idx / n), static_cast<int>(idx % n), c);
    }

    std::vector<Scalar> counit(static_cast<size_t>(n), Scalar::zero(ring));
    for (int l = 0; l < e; ++l) counit[static_cast<size_t>(eng.index(0, 0, l))] = one;

    // S is an anti-homomorphism: S(E^i F^j K^l) = S(K)^l S(F)^j S(E)^i.
    AlgebraElement se(ring, n), sf(ring, n), sk(ring, n);
    se.set_coeff(eng.index(1, 0, (e - 1) % e), -one);          // S(E) = -E K^-1
    sf.set_coeff(eng.index(0, 1, 1 % e), -eng.qpow(-2));        // S(F) = -KF = -q^-2 F K
    sk.set_coeff(kinv_m, one);                                  // S(K) = K^-1
    std::vector<AlgebraElement> sep, sfp, skp;
    AlgebraElement u = alg.unit();
    sep.push_back(u);
    sfp.push_back(u);
    skp.push_back(u);
    for (int i = 1; i < e; ++i) {
        sep.push_back(alg.multiply(sep.back(), se));
        sfp.push_back(alg.multiply(sfp.back(), sf));
        skp.push_back(alg.multiply(skp.back(), sk));
    }
    Matrix antipode(ring, n, n);
    for (int m = 0; m < n; ++m) {
        AlgebraElement img = alg.multiply(
            alg.multiply(skp[static_cast<size_t>(eng.l_of(m))], sfp[static_cast<size_t>(eng.j_of(m))]),
            sep[static_cast<size_t>(eng.i_of(m))]);
        for (int r = 0; r < n; ++r) antipode.set(r, m, img.coeff(r));
    }

    HopfAlgebra h{std::move(alg), std::move(cop), std::move(counit), std::move(antipode)};
    if (verify) verify_hopf(h, "uqsl2:" + std::to_string(d), opts);
    return h;
}

AlgebraElement uq_left_integral(const HopfAlgebra& h) {
    const int n = h.dim();
    int e = 1;
    while (e * e * e < n) ++e;
    if (e * e * e != n || h.ring().tag != RingTag::Cyclotomic)
        throw std::invalid_argument("uq_left_integral needs a uqsl2 carrier");
    AlgebraElement xi(h.ring(), n);
    Scalar one = Scalar::one(h.ring());
    for (int l = 0; l < e; ++l) xi.set_coeff(((e - 1) * e + (e - 1)) * e + l, one);

    for (int a = 0; a < n; ++a) {
        AlgebraElement lhs = h.algebra.multiply(h.algebra.basis_element(a), xi);
        if (lhs != xi.scaled(h.counit[static_cast<size_t>(a)]))
            throw VerificationError("uq integral: a xi != eps(a) xi at basis element " +
                                    h.algebra.basis().name(a));
    }
    if (!counit_of(h, xi).is_zero())
        throw VerificationError("uq integral: eps(xi) != 0");
    return xi;
}

// ---------------------------------------------------------------------------
// Coxeter systems and Iwahori-Hecke algebras.

namespace {

// Faithful realization element; permutations for type A, (rotation, flip)
// pairs for I2(m).
using RealElem = std::vector<int>;

struct Realization {
    std::vector<RealElem> gens;
    RealElem id;
    // multiplication u * v in the realization
    std::function<RealElem(const RealElem&, const RealElem&)> mul;
};

Realization type_a_realization(int n) {
    // W = S_{n+1} acting on 0..n; generator s_i swaps i-1, i (1-based i).
    int pts = n + 1;
    Realization r;
    r.id.resize(static_cast<size_t>(pts));
    for (int i = 0; i < pts; ++i) r.id[static_cast<size_t>(i)] = i;
    for (int s = 0; s < n; ++s) {
        RealElem g = r.id;
        std::swap(g[static_cast<size_t>(s)], g[static_cast<size_t>(s + 1)]);
        r.gens.push_back(g);
    }
    r.mul = [](const RealElem& u, const RealElem& v) {
        RealElem w(u.size());
        for (size_t i = 0; i < u.size(); ++i) w[i] = u[static_cast<size_t>(v[i])];
        return w;
    };
    return r;
}

Realization i2_realization(int m) {
    // Elements r^k f^t encoded as {k, t}; generators f and rf.
    Realization r;
    r.id = {0, 0};
    r.gens = {{0, 1}, {1, 1}};
    r.mul = [m](const RealElem& u, const RealElem& v) {
        int k1 = u[0], t1 = u[1], k2 = v[0], t2 = v[1];
        int k = t1 == 0 ? (k1 + k2) % m : ((k1 - k2) % m + m) % m;
        return RealElem{k, (t1 + t2) % 2};
    };
    return r;
}

}  // namespace

std::string CoxeterSystem::word_label(int w) const {
    if (w == identity) return "e";
    std::string s;
    for (int g : word.at(static_cast<size_t>(w))) s += std::to_string(g + 1);
    return s;
}

CoxeterSystem coxeter_system(const std::string& descriptor) {
    Realization real;
    int expected_order;
    if (descriptor.rfind("A:", 0) == 0) {
        int n;
        try {
            size_t pos = 0;
            n = std::stoi(descriptor.substr(2), &pos);
            if (pos != descriptor.size() - 2) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad Coxeter descriptor '" + descriptor + "'");
        }
        if (n < 1 || n > 4) throw std::invalid_argument("A:n supported for 1 <= n <= 4");
        real = type_a_realization(n);
        expected_order = 1;
        for (int i = 2; i <= n + 1; ++i) expected_order *= i;
    } else if (descriptor.rfind("I2:", 0) == 0) {
        int m;
        try {
            size_t pos = 0;
            m = std::stoi(descriptor.substr(3), &pos);
            if (pos != descriptor.size() - 3) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad Coxeter descriptor '" + descriptor + "'");
        }
        if (m < 2 || m > 12) throw std::invalid_argument("I2:m supported for 2 <= m <= 12");
        real = i2_realization(m);
        expected_order = 2 * m;
    } else {
        throw std::invalid_argument("Coxeter descriptor must be A:n or I2:m, got '" + descriptor +
                                    "'");
    }

    CoxeterSystem w;
    w.descriptor = descriptor;
    w.rank = static_cast<int>(real.gens.size());

    std::map<RealElem, int> index;
    std::vector<RealElem> elems;
    auto intern = [&](const RealElem& x) {
        auto it = index.find(x);
        if (it != index.end()) return std::pair<int, bool>(it->second, false);
        int id = static_cast<int>(elems.size());
        elems.push_back(x);
        index.emplace(x, id);
        return std::pair<int, bool>(id, true);
    };

    intern(real.id);
    w.length.push_back(0);
    w.word.push_back({});
    std::deque<int> queue = {0};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int s = 0; s < w.rank; ++s) {
            RealElem next = real.mul(elems[static_cast<size_t>(u)], real.gens[static_cast<size_t>(s)]);
            auto [v, fresh] = intern(next);
            if (fresh) {
                w.length.push_back(w.length[static_cast<size_t>(u)] + 1);
                std::vector<int> wd = w.word[static_cast<size_t>(u)];
                wd.push_back(s);
                w.word.push_back(std::move(wd));
                queue.push_back(v);
            }
        }
    }
    w.order = static_cast<int>(elems.size());
    if (w.order != expected_order)
        throw VerificationError("Coxeter closure found " + std::to_string(w.order) +
                                " elements, expected " + std::to_string(expected_order));

    w.right.resize(static_cast<size_t>(w.order) * w.rank);
    w.left.resize(static_cast<size_t>(w.order) * w.rank);
    for (int u = 0; u < w.order; ++u)
        for (int s = 0; s < w.rank; ++s) {
            w.right[static_cast<size_t>(u) * w.rank + s] =
                index.at(real.mul(elems[static_cast<size_t>(u)], real.gens[static_cast<size_t>(s)]));
            w.left[static_cast<size_t>(u) * w.rank + s] =
                index.at(real.mul(real.gens[static_cast<size_t>(s)], elems[static_cast<size_t>(u)]));
        }

    // Sanity on the tables: lengths step by exactly one in both directions,
    // and every stored reduced word multiplies out to its element.
    for (int u = 0; u < w.order; ++u) {
        for (int s = 0; s < w.rank; ++s) {
            int lr = w.length[static_cast<size_t>(w.right_mult(u, s))] - w.length[static_cast<size_t>(u)];
            int ll = w.length[static_cast<size_t>(w.left_mult(s, u))] - w.length[static_cast<size_t>(u)];
            if (lr != 1 && lr != -1) throw VerificationError("length function broken on the right");
            if (ll != 1 && ll != -1) throw VerificationError("length function broken on the left");
        }
        RealElem acc = real.id;
        for (int s : w.word[static_cast<size_t>(u)])
            acc = real.mul(acc, real.gens[static_cast<size_t>(s)]);
        if (index.at(acc) != u) throw VerificationError("stored reduced word does not evaluate to its element");
        if (static_cast<int>(w.word[static_cast<size_t>(u)].size()) != w.length[static_cast<size_t>(u)])
            throw VerificationError("stored reduced word has the wrong length");
    }
    return w;
}

FiniteDimAlgebra hecke_algebra(const CoxeterSystem& w, const CheckOptions& opts) {
    ScalarRing ring = ScalarRing::laurent();
    const int n = w.order;
    Scalar q = Scalar(Laurent::monomial(2, Rational(1)));  // q = v^2
    Scalar q_minus_1 = q - Scalar::one(ring);

    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u) labels.push_back("T[" + w.word_label(u) + "]");

    // T_u * T_w by expanding along a reduced word of w:
    //   T_x T_s = T_{xs}                     if l(xs) > l(x)
    //   T_x T_s = (q-1) T_x + q T_{xs}       otherwise.
    StructureConstants sc(ring, n);
    using Elem = std::map<int, Scalar>;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            Elem cur = {{u, Scalar::one(ring)}};
            for (int s : w.word[static_cast<size_t>(v)]) {
                Elem next;
                auto add = [&](int m, const Scalar& c) {
                    if (c.is_zero()) return;
                    auto [it, fresh] = next.try_emplace(m, c);
                    if (!fresh) {
                        it->second += c;
                        if (it->second.is_zero()) next.erase(it);
                    }
                };
                for (const auto& [x, c] : cur) {
                    int xs = w.right_mult(x, s);
                    if (w.length[static_cast<size_t>(xs)] > w.length[static_cast<size_t>(x)]) {
                        add(xs, c);
                    } else {
                        add(x, c * q_minus_1);
                        add(xs, c * q);
                    }
                }
                cur = std::move(next);
            }
            for (const auto& [m, c] : cur) sc.add_term(u, v, m, c);
        }
    }

    FiniteDimAlgebra alg(Basis(std::move(labels)), std::move(sc),
                         AlgebraElement::basis_vector(ring, n, w.identity));
    if (auto viol = check_associativity(alg.constants(), opts))
        throw VerificationError("Hecke algebra associativity fails at (" +
                                alg.basis().name(viol->i) + ", " + alg.basis().name(viol->j) +
                                ", " + alg.basis().name(viol->k) + ")");
    if (!check_unit(alg)) throw VerificationError("Hecke algebra unit axiom fails");
    return alg;
}

AlgebraElement kl_generator(const FiniteDimAlgebra& hecke, const CoxeterSystem& w, int s) {
    if (s < 1 || s > w.rank)
        throw std::invalid_argument("generator index out of range: s" + std::to_string(s));
    int ts = w.right_mult(w.identity, s - 1);
    AlgebraElement c(hecke.ring(), hecke.dim());
    c.set_coeff(w.identity, Scalar(Laurent::monomial(1, Rational(-1))));  // -v
    c.set_coeff(ts, Scalar(Laurent::monomial(-1, Rational(1))));          // v^-1
    return c;
}

FiniteDimAlgebra hecke_specialize(const FiniteDimAlgebra& hecke, const Rational& t,
                                  const CheckOptions& opts) {
    if (t.is_zero()) throw std::invalid_argument("cannot specialize v -> 0");
    ScalarRing ring = ScalarRing::rational();
    StructureConstants sc =
        hecke.constants().mapped(ring, [&](const Scalar& c) { return specialize(c, t); });
    AlgebraElement unit(ring, hecke.dim());
    for (int i = 0; i < hecke.dim(); ++i) unit.set_coeff(i, specialize(hecke.unit().coeff(i), t));
    FiniteDimAlgebra out(hecke.basis(), std::move(sc), std::move(unit));
    if (auto viol = check_associativity(out.constants(), opts))
        throw VerificationError("specialized Hecke algebra is not associative at (" +
                                out.basis().name(viol->i) + ", " + out.basis().name(viol->j) +
                                ", " + out.basis().name(viol->k) + ")");
    if (!check_unit(out)) throw VerificationError("specialized Hecke algebra unit axiom fails");
    return out;
}

// ---------------------------------------------------------------------------
// Family dispatch.

bool is_family_descriptor(const std::string& text) {
    return text == "sweedler" || text.rfind("group:", 0) == 0 || text.rfind("uqsl2:", 0) == 0 ||
           text.rfind("hecke:", 0) == 0;
}

FamilyBundle build_family(const std::string& descriptor, bool verify, const CheckOptions& opts) {
    if (descriptor == "sweedler") {
        HopfAlgebra h = sweedler();
        FiniteDimAlgebra alg = h.algebra;
        return FamilyBundle{descriptor, std::move(alg), std::move(h), std::nullopt};
    }
    if (descriptor.rfind("group:", 0) == 0) {
        HopfAlgebra h = group_algebra(builtin_group(descriptor.substr(6)));
        FiniteDimAlgebra alg = h.algebra;
        return FamilyBundle{descriptor, std::move(alg), std::move(h), std::nullopt};
    }
    if (descriptor.rfind("uqsl2:", 0) == 0) {
        int d;
        try {
            size_t pos = 0;
            d = std::stoi(descriptor.substr(6), &pos);
            if (pos != descriptor.size() - 6) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad uqsl2 descriptor '" + descriptor + "'");
        }
        HopfAlgebra h = uq_sl2_bar(d, verify, opts);
        FiniteDimAlgebra alg = h.algebra;
        return FamilyBundle{descriptor, std::move(alg), std::move(h), std::nullopt};
    }
    if (descriptor.rfind("hecke:", 0) == 0) {
        CoxeterSystem w = coxeter_system(descriptor.substr(6));
        FiniteDimAlgebra alg = hecke_algebra(w, opts);
        return FamilyBundle{descriptor, std::move(alg), std::nullopt, std::move(w)};
    }
    throw std::invalid_argument("unknown family descriptor '" + descriptor + "'");
}

}  // namespace rbx
