#include <doctest.h>

#include <algorithm>
#include <random>

#include "rbx/errors.hpp"
#include "rbx/families.hpp"
#include "rbx/rota_baxter.hpp"

using namespace rbx;

namespace {

AlgebraElement elem(const FiniteDimAlgebra& a, const std::string& text) {
    return parse_element(a, text);
}

Scalar q_of(const FiniteDimAlgebra& hecke) {
    (void)hecke;
    return Scalar(Laurent::monomial(2, Rational(1)));
}

}  // namespace

TEST_CASE("builtin groups") {
    FiniteGroup c4 = builtin_group("cyclic:4");
    CHECK(c4.order == 4);
    CHECK(c4.mul(1, 2) == 3);
    CHECK(c4.mul(2, 2) == 0);

    FiniteGroup s3 = builtin_group("symmetric:3");
    CHECK(s3.order == 6);
    bool abelian = true;
    for (int a = 0; a < 6 && abelian; ++a)
        for (int b = 0; b < 6; ++b)
            if (s3.mul(a, b) != s3.mul(b, a)) {
                abelian = false;
                break;
            }
    CHECK(!abelian);

    CHECK(builtin_group("dihedral:4").order == 8);
    CHECK_THROWS_AS(builtin_group("symmetric:6"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_group("sporadic:1"), std::invalid_argument);
}

TEST_CASE("group algebra of Z/2: xi = 1 + g has weight -2") {
    HopfAlgebra h = group_algebra(builtin_group("cyclic:2"));
    AlgebraElement xi = elem(h.algebra, "e + g");
    AlgebraElement sq = h.algebra.multiply(xi, xi);
    CHECK(sq == xi.scaled(Scalar(Rational(2))));
    CHECK(quasi_idempotent_weight(h.algebra, xi) == Scalar(Rational(-2)));
}

TEST_CASE("group algebra P_xi acts by eps(h) xi") {
    HopfAlgebra h = group_algebra(builtin_group("symmetric:3"));
    AlgebraElement xi = integrals(h, IntegralSide::Left).at(0);
    RotaBaxterOperator p = rb_from_element(h.algebra, xi);
    CHECK(p.weight == Scalar(Rational(-6)));
    for (int i = 0; i < 6; ++i) {
        AlgebraElement img(h.ring(), 6);
        for (int r = 0; r < 6; ++r) img.set_coeff(r, p.matrix.at(r, i));
        CHECK(img == xi.scaled(h.counit[static_cast<size_t>(i)]));
        // xi is two-sided here: xi h = h xi = xi
        CHECK(h.algebra.multiply(xi, h.algebra.basis_element(i)) == xi);
        CHECK(h.algebra.multiply(h.algebra.basis_element(i), xi) == xi);
    }
}

TEST_CASE("uqsl2 at d = 3") {
    HopfAlgebra h = uq_sl2_bar(3);  // verify runs the full battery
    REQUIRE(h.dim() == 27);
    const FiniteDimAlgebra& a = h.algebra;
    AlgebraElement E = elem(a, "E1F0K0"), F = elem(a, "E0F1K0"), K = elem(a, "E0F0K1");
    Scalar q = Scalar(Cyclotomic::zeta(3));

    // KE = q^2 EK and KF = q^-2 FK
    CHECK(a.multiply(K, E) == a.multiply(E, K).scaled(q * q));
    CHECK(a.multiply(K, F) == a.multiply(F, K).scaled((q * q).inverse()));

    // EF - FE = (K - K^2) / (q - q^-1), with K^-1 = K^(e-1)
    AlgebraElement lhs = a.multiply(E, F) - a.multiply(F, E);
    AlgebraElement kk = elem(a, "E0F0K1") - elem(a, "E0F0K2");
    CHECK(lhs == kk.scaled((q - q.inverse()).inverse()));

    // E^e = F^e = 0, K^e = 1
    CHECK(a.power(E, 3).is_zero());
    CHECK(a.power(F, 3).is_zero());
    CHECK(a.power(K, 3) == a.unit());

    // the left integral
    AlgebraElement xi = uq_left_integral(h);
    CHECK(xi == elem(a, "E2F2K0 + E2F2K1 + E2F2K2"));
    CHECK(counit_of(h, xi).is_zero());
    auto space = integrals(h, IntegralSide::Left);
    REQUIRE(space.size() == 1);
    // the solver's normalized basis vector spans the same line
    CHECK(space[0] == xi.scaled(space[0].coeff(a.basis().find("E2F2K0").value())));

    // weight 0 and the operator annihilates F, fixes K to xi
    CHECK(quasi_idempotent_weight(a, xi).is_zero());
    RotaBaxterOperator p = rb_from_element(a, xi);
    CHECK(p.weight.is_zero());
    CHECK(check_quasi_idempotent_operator(p.matrix, p.weight));  // P^2 = 0
    AlgebraElement pF = AlgebraElement::from_coords(a.ring(), p.matrix.apply(F.coords()));
    AlgebraElement pK = AlgebraElement::from_coords(a.ring(), p.matrix.apply(K.coords()));
    CHECK(pF.is_zero());
    CHECK(pK == xi);
}

TEST_CASE("uqsl2 even d: checks run and report") {
    // d = 4 gives e = 2 (dim 8); build without self-verification, then run
    // the battery and require the builder to agree with it.
    HopfAlgebra h = uq_sl2_bar(4, /*verify=*/false);
    CHECK(h.dim() == 8);
    bool ok = !check_associativity(h.algebra.constants()).has_value() && check_unit(h.algebra) &&
              !check_coassociativity(h).has_value() && !check_counit(h).has_value() &&
              !check_bialgebra(h).has_value() && !check_antipode(h).has_value();
    if (ok) {
        CHECK_NOTHROW(uq_sl2_bar(4));
    } else {
        CHECK_THROWS_AS(uq_sl2_bar(4), VerificationError);
    }
}

TEST_CASE("uqsl2 at d = 5 with a sampling budget") {
    CheckOptions opts;
    opts.budget = 2000;
    opts.seed = 7;
    HopfAlgebra h = uq_sl2_bar(5, /*verify=*/true, opts);
    CHECK(h.dim() == 125);
    AlgebraElement xi = uq_left_integral(h);  // exhaustive verification inside
    CHECK(quasi_idempotent_weight(h.algebra, xi).is_zero());
}

TEST_CASE("uqsl2 parameter validation") {
    CHECK_THROWS_AS(uq_sl2_bar(2), std::invalid_argument);
    CHECK_THROWS_AS(uq_sl2_bar(13), std::invalid_argument);  // e = 13 beyond the desk cap
}

TEST_CASE("coxeter systems") {
    CoxeterSystem a2 = coxeter_system("A:2");
    CHECK(a2.order == 6);
    CHECK(*std::max_element(a2.length.begin(), a2.length.end()) == 3);

    CoxeterSystem i25 = coxeter_system("I2:5");
    CHECK(i25.order == 10);
    CHECK(*std::max_element(i25.length.begin(), i25.length.end()) == 5);

    CoxeterSystem a3 = coxeter_system("A:3");
    CHECK(a3.order == 24);
    CHECK(*std::max_element(a3.length.begin(), a3.length.end()) == 6);

    // exactly one of l(sw) = l(w) +- 1 holds (validated in the builder, spot
    // check the table here)
    for (int w = 0; w < a2.order; ++w)
        for (int s = 0; s < a2.rank; ++s) {
            int diff = a2.length[static_cast<size_t>(a2.left_mult(s, w))] -
                       a2.length[static_cast<size_t>(w)];
            CHECK((diff == 1 || diff == -1));
        }

    CHECK_THROWS_AS(coxeter_system("A:5"), std::invalid_argument);
    CHECK_THROWS_AS(coxeter_system("I2:13"), std::invalid_argument);
    CHECK_THROWS_AS(coxeter_system("B:2"), std::invalid_argument);
}

TEST_CASE("hecke algebra relations") {
    CoxeterSystem w = coxeter_system("A:2");
    FiniteDimAlgebra h = hecke_algebra(w);
    REQUIRE(h.dim() == 6);
    Scalar q = q_of(h);

    for (int s = 1; s <= 2; ++s) {
        AlgebraElement ts = h.basis_element(w.right_mult(w.identity, s - 1));
        AlgebraElement sq = h.multiply(ts, ts);
        CHECK(sq == ts.scaled(q - Scalar::one(h.ring())) + h.unit().scaled(q));
    }

    // length-additive products multiply as T_u T_w = T_{uw}
    for (int u = 0; u < w.order; ++u)
        for (int v = 0; v < w.order; ++v) {
            // compute uw through the word table
            int uw = u;
            for (int s : w.word[static_cast<size_t>(v)]) uw = w.right_mult(uw, s);
            if (w.length[static_cast<size_t>(uw)] !=
                w.length[static_cast<size_t>(u)] + w.length[static_cast<size_t>(v)])
                continue;
            const auto& terms = h.constants().product(u, v);
            REQUIRE(terms.size() == 1);
            CHECK(terms[0].k == uw);
            CHECK(terms[0].c == Scalar::one(h.ring()));
        }

    CHECK(h.basis().name(w.identity) == "T[e]");
}

TEST_CASE("kazhdan-lusztig generators") {
    CoxeterSystem w1 = coxeter_system("A:1");
    FiniteDimAlgebra h1 = hecke_algebra(w1);
    AlgebraElement cs = kl_generator(h1, w1, 1);
    Scalar vpv = Scalar(Laurent::monomial(1, Rational(1)) + Laurent::monomial(-1, Rational(1)));
    CHECK(h1.multiply(cs, cs) == cs.scaled(-vpv));
    CHECK_THROWS_AS(kl_generator(h1, w1, 2), std::invalid_argument);

    // full check on A:2 for both generators, all 36 pairs
    CoxeterSystem w2 = coxeter_system("A:2");
    FiniteDimAlgebra h2 = hecke_algebra(w2);
    for (int s = 1; s <= 2; ++s) {
        AlgebraElement c = kl_generator(h2, w2, s);
        CHECK(quasi_idempotent_weight(h2, c) == vpv);
        RotaBaxterOperator p = rb_from_element(h2, c);
        CHECK(!check_rb_identity(h2, p.matrix, p.weight).has_value());
    }
}

TEST_CASE("hecke specialization") {
    CoxeterSystem w = coxeter_system("A:2");
    FiniteDimAlgebra h = hecke_algebra(w);

    // t = 1 recovers the group algebra: T_s^2 = T_e
    FiniteDimAlgebra g = hecke_specialize(h, Rational(1));
    for (int s = 0; s < w.rank; ++s) {
        int ts = w.right_mult(w.identity, s);
        const auto& sq = g.constants().product(ts, ts);
        REQUIRE(sq.size() == 1);
        CHECK(sq[0].k == w.identity);
        CHECK(sq[0].c == Scalar(Rational(1)));
    }

    // t = 2 on A:1: the C_s weight specializes to 2 + 1/2
    CoxeterSystem w1 = coxeter_system("A:1");
    FiniteDimAlgebra h1 = hecke_algebra(w1);
    FiniteDimAlgebra g1 = hecke_specialize(h1, Rational(2));
    AlgebraElement cs = kl_generator(h1, w1, 1);
    AlgebraElement cs2(g1.ring(), 2);
    for (int i = 0; i < 2; ++i) cs2.set_coeff(i, specialize(cs.coeff(i), Rational(2)));
    CHECK(quasi_idempotent_weight(g1, cs2) == Scalar(Rational(5, 2)));

    // specialization commutes with multiplication on random pairs
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> exp(-2, 2);
    std::uniform_int_distribution<long> coeff(-3, 3);
    Rational t(3);
    for (int trial = 0; trial < 25; ++trial) {
        AlgebraElement x(h.ring(), h.dim()), y(h.ring(), h.dim());
        for (int i = 0; i < h.dim(); ++i) {
            x.set_coeff(i, Scalar(Laurent::monomial(exp(rng), Rational(coeff(rng)))));
            y.set_coeff(i, Scalar(Laurent::monomial(exp(rng), Rational(coeff(rng)))));
        }
        FiniteDimAlgebra spec = hecke_specialize(h, t);
        AlgebraElement xs(spec.ring(), h.dim()), ys(spec.ring(), h.dim());
        for (int i = 0; i < h.dim(); ++i) {
            xs.set_coeff(i, specialize(x.coeff(i), t));
            ys.set_coeff(i, specialize(y.coeff(i), t));
        }
        AlgebraElement prod = h.multiply(x, y);
        AlgebraElement prod_spec(spec.ring(), h.dim());
        for (int i = 0; i < h.dim(); ++i) prod_spec.set_coeff(i, specialize(prod.coeff(i), t));
        CHECK(spec.multiply(xs, ys) == prod_spec);
    }
    CHECK_THROWS_AS(hecke_specialize(h, Rational(0)), std::invalid_argument);
}

TEST_CASE("dimension-1 carrier: the group algebra of the trivial group") {
    FamilyBundle b = build_family("group:cyclic:1");
    CHECK(b.algebra.dim() == 1);
    CHECK(check_unit(b.algebra));
    CHECK(!check_associativity(b.algebra.constants()).has_value());
    CHECK(integrals(*b.hopf, IntegralSide::Left).size() == 1);
    // the unit is idempotent, weight -1
    CHECK(quasi_idempotent_weight(b.algebra, b.algebra.unit()) == Scalar(Rational(-1)));
}

TEST_CASE("basis monomial labels resolve directly") {
    HopfAlgebra h = uq_sl2_bar(3);
    AlgebraElement m = elem(h.algebra, "E1F2K0");
    CHECK(m == h.algebra.basis_element(h.algebra.basis().find("E1F2K0").value()));
}

TEST_CASE("family descriptors") {
    CHECK(is_family_descriptor("sweedler"));
    CHECK(is_family_descriptor("group:cyclic:3"));
    CHECK(is_family_descriptor("uqsl2:3"));
    CHECK(is_family_descriptor("hecke:A:2"));
    CHECK(!is_family_descriptor("algebra.json"));
    CHECK_THROWS_AS(build_family("uqsl2:x"), std::invalid_argument);
    CHECK_THROWS_AS(build_family("hecke:Z:9"), std::invalid_argument);

    FamilyBundle b = build_family("hecke:I2:5");
    CHECK(b.algebra.dim() == 10);
    CHECK(!b.hopf.has_value());
    CHECK(b.coxeter.has_value());
}
