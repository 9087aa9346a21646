#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rbx/algebra.hpp"

namespace rbx {

struct CoproductTerm {
    int a, b;
    Scalar c;
};

// Sparse coproduct: Delta(e_k) = sum c * e_a (x) e_b, term lists sorted by
// (a, b) with no zeros.
class Coproduct {
public:
    Coproduct(ScalarRing ring, int dim);

    int dim() const { return dim_; }
    const ScalarRing& ring() const { return ring_; }
    const std::vector<CoproductTerm>& terms(int k) const;
    void add_term(int k, int a, int b, const Scalar& c);

    bool operator==(const Coproduct& o) const;

private:
    ScalarRing ring_;
    int dim_;
    std::vector<std::vector<CoproductTerm>> delta_;
};

// A Hopf algebra: the carrier algebra plus coproduct, counit values
// eps(e_k), and the antipode matrix whose column k is S(e_k).
struct HopfAlgebra {
    FiniteDimAlgebra algebra;
    Coproduct coproduct;
    std::vector<Scalar> counit;
    Matrix antipode;

    int dim() const { return algebra.dim(); }
    const ScalarRing& ring() const { return algebra.ring(); }
};

// Elements of H (x) H and H (x) H (x) H as sparse coefficient maps with index
// pairing (a, b) -> a*dim + b (and the analogous base-dim layout for cubes).
using SparseTensor = std::map<std::int64_t, Scalar>;

// Delta extended linearly to an arbitrary element.
SparseTensor coproduct_of(const HopfAlgebra& h, const AlgebraElement& x);

// eps extended linearly.
Scalar counit_of(const HopfAlgebra& h, const AlgebraElement& x);

// S(e_k) as an element.
AlgebraElement antipode_of_basis(const HopfAlgebra& h, int k);

// (Delta (x) id)Delta = (id (x) Delta)Delta on every basis element;
// returns the first violating basis index.
std::optional<int> check_coassociativity(const HopfAlgebra& h);

// (eps (x) id)Delta = id = (id (x) eps)Delta on every basis element.
std::optional<int> check_counit(const HopfAlgebra& h);

struct BialgebraViolation {
    enum class Kind { CoproductOfUnit, CounitOfUnit, CoproductMorphism, CounitMorphism };
    Kind kind;
    int i = -1, j = -1;  // basis pair for the morphism kinds
};

// Delta and eps are algebra morphisms and preserve the unit.
std::optional<BialgebraViolation> check_bialgebra(const HopfAlgebra& h, const CheckOptions& opts = {});

struct AntipodeViolation {
    int k;
    bool left;  // true: sum S(h1)h2 failed, false: sum h1 S(h2) failed
};

// Both convolution identities sum S(h1)h2 = eps(h)1 = sum h1 S(h2).
std::optional<AntipodeViolation> check_antipode(const HopfAlgebra& h);

// The dual algebra on the dual basis {f_i}: f_i f_j = sum_k Delta_k^{ij} f_k,
// unit eps. Basis labels f1..fn.
FiniteDimAlgebra dual_algebra(const HopfAlgebra& h);

// The unique x_H with <a*, x_H> = Tr(l_{a*}), computed by the closed
// coordinate formula (x_H)_i = sum_j Delta_j^{ij} and cross-checked against
// literal l_{f_i} traces in the dual algebra. Verifies eps(x_H) = dim H and
// x_H^2 = eps(x_H) x_H before returning; throws VerificationError otherwise.
AlgebraElement trace_element(const HopfAlgebra& h);

enum class IntegralSide { Left, Right };

// Basis of the space of left (right) integrals: solutions of
// a Lambda = eps(a) Lambda (resp. Lambda a = eps(a) Lambda) for all a,
// stacked over all basis elements. Laurent carriers are lifted to Q(v)
// before elimination, so returned elements may live in the lifted ring.
std::vector<AlgebraElement> integrals(const HopfAlgebra& h, IntegralSide side);

// Delta(c) equals its tensor flip.
bool is_cocommutative_element(const HopfAlgebra& h, const AlgebraElement& c);

}  // namespace rbx
