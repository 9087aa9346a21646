#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rbx/linalg.hpp"
#include "rbx/scalar.hpp"

namespace rbx {

// Ordered list of distinct basis labels; indices are the internal contract,
// labels are the serialization contract.
class Basis {
public:
    explicit Basis(std::vector<std::string> names);

    int dim() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> find(const std::string& label) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

struct ScTerm {
    int k;
    Scalar c;
};

// Sparse structure constants: e_i * e_j = sum_k c_ij^k e_k, stored as a
// term list per (i, j). Term lists are kept sorted by k with no zeros.
class StructureConstants {
public:
    StructureConstants(ScalarRing ring, int dim);

    int dim() const { return dim_; }
    const ScalarRing& ring() const { return ring_; }

    const std::vector<ScTerm>& product(int i, int j) const;
    void set_product(int i, int j, std::vector<ScTerm> terms);
    void add_term(int i, int j, int k, const Scalar& c);

    bool operator==(const StructureConstants& o) const;
    bool operator!=(const StructureConstants& o) const { return !(*this == o); }

    // Pointwise sum of tensors (used by the star product).
    friend StructureConstants operator+(const StructureConstants& a, const StructureConstants& b);

    // Applies a scalar map to every coefficient (ring embeddings, evaluation).
    template <typename F>
    StructureConstants mapped(const ScalarRing& new_ring, F&& f) const {
        StructureConstants out(new_ring, dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (const ScTerm& t : product(i, j)) out.add_term(i, j, t.k, f(t.c));
        return out;
    }

private:
    ScalarRing ring_;
    int dim_;
    std::vector<std::vector<ScTerm>> table_;  // index i*dim + j

    size_t slot(int i, int j) const;
};

// Element of a finite-dimensional algebra as a dense coefficient vector.
class AlgebraElement {
public:
    AlgebraElement(ScalarRing ring, int dim);
    static AlgebraElement basis_vector(const ScalarRing& ring, int dim, int i);
    static AlgebraElement from_coords(const ScalarRing& ring, std::vector<Scalar> coords);

    int dim() const { return static_cast<int>(c_.size()); }
    const ScalarRing& ring() const { return ring_; }
    const Scalar& coeff(int i) const { return c_.at(static_cast<size_t>(i)); }
    void set_coeff(int i, const Scalar& v);
    const std::vector<Scalar>& coords() const { return c_; }

    bool is_zero() const;
    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    AlgebraElement operator-() const;
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement scaled(const Scalar& c) const;

private:
    ScalarRing ring_;
    std::vector<Scalar> c_;

    static void check_compatible(const AlgebraElement& a, const AlgebraElement& b);
};

// Options for the exhaustive basis-tuple checkers. With a budget set, a
// check on a carrier larger than the cutoff dimension whose tuple count
// exceeds the budget samples that many tuples deterministically from the
// seed instead of enumerating. Library default is always exhaustive.
struct CheckOptions {
    std::optional<std::uint64_t> budget;
    std::uint64_t seed = 0;
    int exhaustive_dim_cap = 64;

    bool sampled(int dim, std::uint64_t tuple_count) const {
        return budget && dim > exhaustive_dim_cap && tuple_count > *budget;
    }
};

struct TripleViolation {
    int i, j, k;
};

// Associativity over basis triples; bilinearity makes basis checking
// sufficient. Reports the lexicographically first violation when exhaustive.
std::optional<TripleViolation> check_associativity(const StructureConstants& sc,
                                                   const CheckOptions& opts = {});

// Associative algebra with a distinguished unit, presented by structure
// constants over one scalar ring.
class FiniteDimAlgebra {
public:
    FiniteDimAlgebra(Basis basis, StructureConstants constants, AlgebraElement unit);

    int dim() const { return basis_.dim(); }
    const ScalarRing& ring() const { return sc_.ring(); }
    const Basis& basis() const { return basis_; }
    const StructureConstants& constants() const { return sc_; }
    const AlgebraElement& unit() const { return unit_; }

    AlgebraElement zero_element() const { return AlgebraElement(ring(), dim()); }
    AlgebraElement basis_element(int i) const { return AlgebraElement::basis_vector(ring(), dim(), i); }

    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement power(const AlgebraElement& a, long n) const;

    // Matrix of b -> a*b; column j is a*e_j. right_mult_matrix is b -> b*a.
    Matrix left_mult_matrix(const AlgebraElement& a) const;
    Matrix right_mult_matrix(const AlgebraElement& a) const;

private:
    Basis basis_;
    StructureConstants sc_;
    AlgebraElement unit_;
};

bool check_unit(const FiniteDimAlgebra& a);

// Extra element names the expression parser may resolve (for example the
// Kazhdan-Lusztig generators C[s1] on a Hecke carrier).
using NamedElements = std::map<std::string, AlgebraElement>;

// Parses "2*x + y", "(1/2)*xy - 1", "(v + v^-1)*T[e]", ... against the
// algebra's basis labels. Bare scalars denote multiples of the unit.
AlgebraElement parse_element(const FiniteDimAlgebra& a, const std::string& text,
                             const NamedElements& named = {});

// Canonical rendering; parse_element(render_element(x)) == x.
std::string render_element(const FiniteDimAlgebra& a, const AlgebraElement& x);

}  // namespace rbx
