#pragma once

#include <optional>

#include "rbx/algebra.hpp"

namespace rbx {

// A linear endomorphism of the carrier, column j = P(e_j).
using LinearOperator = Matrix;

// An operator P with its claimed weight lambda, satisfying
// P(a)P(b) = P(aP(b)) + P(P(a)b) + lambda P(ab).
struct RotaBaxterOperator {
    LinearOperator matrix;
    Scalar weight;
};

// The unique lambda with xi^2 = -lambda xi, decided exactly: the candidate
// ratio comes from the first nonzero coordinate of xi and is then verified
// on every coordinate. Throws std::invalid_argument on xi = 0 and
// VerificationError when xi^2 is not proportional to xi.
Scalar quasi_idempotent_weight(const FiniteDimAlgebra& a, const AlgebraElement& xi);

// P_xi = left multiplication by a quasi-idempotent xi; the RB identity is
// verified on basis pairs before returning (VerificationError on failure).
RotaBaxterOperator rb_from_element(const FiniteDimAlgebra& a, const AlgebraElement& xi,
                                   const CheckOptions& opts = {});

// The identity operator, a Rota-Baxter operator of weight -1 on any algebra.
RotaBaxterOperator identity_rb(const FiniteDimAlgebra& a);

struct PairViolation {
    int i, j;
};

// The RB identity on all basis pairs (bilinearity makes pairs sufficient);
// lexicographically first violation when exhaustive.
std::optional<PairViolation> check_rb_identity(const FiniteDimAlgebra& a, const LinearOperator& p,
                                               const Scalar& weight, const CheckOptions& opts = {});

// The matrix identity P^2 = -lambda P.
bool check_quasi_idempotent_operator(const LinearOperator& p, const Scalar& weight);

// Three products <, >, . on one coefficient space; the seven tridendriform
// axioms hold for structures produced by derive_tridendriform.
struct TridendriformStructure {
    StructureConstants left;   // a < b = lambda^-1 a xi b
    StructureConstants right;  // a > b = lambda^-1 xi a b
    StructureConstants dot;    // a . b = ab
    bool lifted = false;       // Laurent carrier was lifted to Q(v)
};

// The two-product, three-axiom structure from a weight-0 operator.
struct DendriformStructure {
    StructureConstants left;   // a < b = a P(b)
    StructureConstants right;  // a > b = P(a) b
};

struct AxiomViolation {
    int axiom;  // 1-based, in the display order of the defining relations
    int i, j, k;
};

// Cor 2.4 structure for nonzero invertible weight; Laurent carriers are
// lifted to rational functions first. The axioms are checked before
// returning. Weight 0 is rejected (use derive_dendriform).
TridendriformStructure derive_tridendriform(const FiniteDimAlgebra& a, const AlgebraElement& xi,
                                            const Scalar& weight, const CheckOptions& opts = {});

// Weight-0 construction a < b = aP(b), a > b = P(a)b, axioms checked.
DendriformStructure derive_dendriform(const FiniteDimAlgebra& a, const RotaBaxterOperator& p,
                                      const CheckOptions& opts = {});

std::optional<AxiomViolation> check_tridendriform(const TridendriformStructure& t,
                                                  const CheckOptions& opts = {});
std::optional<AxiomViolation> check_dendriform(const DendriformStructure& d,
                                               const CheckOptions& opts = {});

// x * y = x<y + x>y (+ x.y); associative whenever the axioms pass.
StructureConstants star_product(const TridendriformStructure& t);
StructureConstants star_product(const DendriformStructure& d);

}  // namespace rbx
