#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbx/hopf.hpp"

namespace rbx {

// Finite group presented by its Cayley table; validated at construction.
struct FiniteGroup {
    int order = 0;
    std::vector<int> table;  // table[g*order + h] = g*h
    int identity = 0;
    std::vector<std::string> names;

    int mul(int g, int h) const { return table.at(static_cast<size_t>(g) * order + h); }
    int inverse(int g) const;
    void validate() const;  // throws std::invalid_argument on a broken table
};

// "cyclic:n", "dihedral:m" or "symmetric:n" (n <= 5, order <= 120).
FiniteGroup builtin_group(const std::string& name);

// The group algebra Q[G] with Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1.
// All algebra and Hopf checks run before returning.
HopfAlgebra group_algebra(const FiniteGroup& g);

// Sweedler's four-dimensional Hopf algebra on basis (1, x, y, xy) over Q:
// x^2 = 1, y^2 = 0, yx = -xy. All checks run before returning.
HopfAlgebra sweedler();

// mu1*(1+x) + mu2*y + mu3*xy, the family of quasi-idempotent candidates.
AlgebraElement sweedler_family_element(const FiniteDimAlgebra& sweedler_algebra,
                                       const Rational& mu1, const Rational& mu2,
                                       const Rational& mu3);

// The small quantum group for sl(2) at a primitive d-th root of unity:
// dimension e^3 on basis E^i F^j K^l over Q(zeta_d), with e = d (d odd) or
// d/2 (d even). Multiplication comes from a rewriting engine on the defining
// relations. With verify set, every algebra and Hopf check runs and a
// violation throws VerificationError naming the basis element.
HopfAlgebra uq_sl2_bar(int d, bool verify = true, const CheckOptions& opts = {});

// xi = E^(e-1) F^(e-1) (1 + K + ... + K^(e-1)), verified to be a left
// integral with eps(xi) = 0.
AlgebraElement uq_left_integral(const HopfAlgebra& h);

// A Coxeter system in a faithful realization: permutations for type A,
// dihedral pairs for I2(m). Element tables come from breadth-first closure
// from the identity under right multiplication by generators.
struct CoxeterSystem {
    std::string descriptor;
    int rank = 0;
    int order = 0;
    int identity = 0;
    std::vector<int> length;                 // l(w), indexed by element
    std::vector<std::vector<int>> word;      // one stored reduced word, 0-based generators
    std::vector<int> right;                  // right[w*rank + s] = w*s
    std::vector<int> left;                   // left[w*rank + s] = s*w

    int right_mult(int w, int s) const { return right.at(static_cast<size_t>(w) * rank + s); }
    int left_mult(int s, int w) const { return left.at(static_cast<size_t>(w) * rank + s); }
    std::string word_label(int w) const;  // "e" or 1-based digits like "121"
};

// "A:n" for n <= 4 (W = S_{n+1}) or "I2:m" for 2 <= m <= 12.
CoxeterSystem coxeter_system(const std::string& descriptor);

// The Iwahori-Hecke algebra of W over the Laurent ring in v (q = v^2),
// basis {T_w} labeled "T[e]", "T[1]", "T[121]", ... Structure constants are
// generated by expanding along stored reduced words; associativity and the
// unit are certified before returning.
FiniteDimAlgebra hecke_algebra(const CoxeterSystem& w, const CheckOptions& opts = {});

// C_s = v^-1 T_s - v T_e for a 1-based generator index.
AlgebraElement kl_generator(const FiniteDimAlgebra& hecke, const CoxeterSystem& w, int s);

// v -> t on every scalar; associativity is re-checked on the result.
FiniteDimAlgebra hecke_specialize(const FiniteDimAlgebra& hecke, const Rational& t,
                                  const CheckOptions& opts = {});

// One built family as the CLI consumes it.
struct FamilyBundle {
    std::string descriptor;
    FiniteDimAlgebra algebra;
    std::optional<HopfAlgebra> hopf;
    std::optional<CoxeterSystem> coxeter;
};

// True when the text looks like a family descriptor rather than a file path.
bool is_family_descriptor(const std::string& text);

// Builds "sweedler", "group:cyclic:n", "group:symmetric:n", "group:dihedral:m",
// "uqsl2:d", "hecke:A:n" or "hecke:I2:m". With verify unset the structure is
// returned without running its self-checks (the check command runs them
// itself to produce a full report).
FamilyBundle build_family(const std::string& descriptor, bool verify = true,
                          const CheckOptions& opts = {});

}  // namespace rbx
