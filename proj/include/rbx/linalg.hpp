#pragma once

#include <optional>
#include <vector>

#include "rbx/scalar.hpp"

namespace rbx {

// Dense matrix over one ScalarRing, row-major. Entries are embedded into the
// matrix ring on construction, so homogeneity is an invariant.
class Matrix {
public:
    Matrix(ScalarRing ring, int rows, int cols);
    static Matrix identity(const ScalarRing& ring, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const ScalarRing& ring() const { return ring_; }

    const Scalar& at(int i, int j) const { return e_[index(i, j)]; }
    void set(int i, int j, const Scalar& v);

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix scaled(const Scalar& c) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;

    // Matrix * column vector, skipping zero input coordinates.
    std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

    Scalar trace() const;

private:
    ScalarRing ring_;
    int rows_, cols_;
    std::vector<Scalar> e_;

    size_t index(int i, int j) const;
    static void check_same_shape(const Matrix& a, const Matrix& b);
};

// Reduced row echelon form by exact Gauss-Jordan elimination with
// first-nonzero pivoting. Field-tagged rings only.
struct Rref {
    Matrix mat;
    std::vector<int> pivot_cols;
};
Rref rref(Matrix m);

// Basis of the right kernel {x : Ax = 0}; each vector is normalized so its
// first nonzero coordinate is 1. Empty when the kernel is trivial.
std::vector<std::vector<Scalar>> nullspace(const Matrix& a);

// Some solution of Ax = b, or nothing when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);

}  // namespace rbx
