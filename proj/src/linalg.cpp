#include "rbx/linalg.hpp"

#include <stdexcept>

namespace rbx {

Matrix::Matrix(ScalarRing ring, int rows, int cols) : ring_(ring), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Scalar::zero(ring_));
}

Matrix Matrix::identity(const ScalarRing& ring, int n) {
    Matrix m(ring, n, n);
    Scalar one = Scalar::one(ring);
    for (int i = 0; i < n; ++i) m.set(i, i, one);
    return m;
}

size_t Matrix::index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
}

void Matrix::set(int i, int j, const Scalar& v) { e_[index(i, j)] = embed(v, ring_); }

void Matrix::check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix shape mismatch: " + std::to_string(a.rows_) + "x" +
                                    std::to_string(a.cols_) + " vs " + std::to_string(b.rows_) + "x" +
                                    std::to_string(b.cols_));
    if (a.ring_ != b.ring_) throw std::domain_error("matrix ring mismatch: " + a.ring_.name() + " vs " + b.ring_.name());
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix::check_same_shape(a, b);
    Matrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix::check_same_shape(a, b);
    Matrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.cols_) +
                                    " vs " + std::to_string(b.rows_));
    if (a.ring_ != b.ring_) throw std::domain_error("matrix ring mismatch: " + a.ring_.name() + " vs " + b.ring_.name());
    Matrix r(a.ring_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.e_[r.index(i, j)] += aik * bkj;
            }
        }
    }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    Scalar cc = embed(c, ring_);
    for (auto& x : r.e_) x = cc * x;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || ring_ != o.ring_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("matrix apply: vector length " + std::to_string(x.size()) +
                                    " vs " + std::to_string(cols_) + " columns");
    std::vector<Scalar> y(static_cast<size_t>(rows_), Scalar::zero(ring_));
    for (int j = 0; j < cols_; ++j) {
        if (x[static_cast<size_t>(j)].is_zero()) continue;
        Scalar xj = embed(x[static_cast<size_t>(j)], ring_);
        for (int i = 0; i < rows_; ++i) {
            const Scalar& aij = at(i, j);
            if (aij.is_zero()) continue;
            y[static_cast<size_t>(i)] += aij * xj;
        }
    }
    return y;
}

Scalar Matrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
    Scalar t = Scalar::zero(ring_);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Rref rref(Matrix m) {
    if (!m.ring().is_field())
        throw std::domain_error("elimination needs a field-tagged ring, got " + m.ring().name() +
                                " (embed into ratfun first)");
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r) {
            for (int j = 0; j < m.cols(); ++j) {
                Scalar tmp = m.at(r, j);
                m.set(r, j, m.at(p, j));
                m.set(p, j, tmp);
            }
        }
        Scalar inv = m.at(r, col).inverse();
        for (int j = col; j < m.cols(); ++j) m.set(r, j, inv * m.at(r, j));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const Scalar f = m.at(i, col);
            if (f.is_zero()) continue;
            for (int j = col; j < m.cols(); ++j) m.set(i, j, m.at(i, j) - f * m.at(r, j));
        }
        pivots.push_back(col);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& a) {
    Rref red = rref(a);
    const Matrix& m = red.mat;
    const ScalarRing& ring = m.ring();
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : red.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Scalar> x(static_cast<size_t>(m.cols()), Scalar::zero(ring));
        x[static_cast<size_t>(f)] = Scalar::one(ring);
        for (size_t r = 0; r < red.pivot_cols.size(); ++r) {
            const Scalar& v = m.at(static_cast<int>(r), f);
            if (!v.is_zero()) x[static_cast<size_t>(red.pivot_cols[r])] = -v;
        }
        // First nonzero coordinate scaled to 1 so golden tests are canonical.
        for (auto& c : x) {
            if (!c.is_zero()) {
                Scalar inv = c.inverse();
                for (auto& y : x) y = inv * y;
                break;
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve: rhs length " + std::to_string(b.size()) + " vs " +
                                    std::to_string(a.rows()) + " rows");
    Matrix aug(a.ring(), a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
        aug.set(i, a.cols(), b[static_cast<size_t>(i)]);
    }
    Rref red = rref(std::move(aug));
    for (size_t r = 0; r < red.pivot_cols.size(); ++r) {
        if (red.pivot_cols[r] == a.cols()) return std::nullopt;  // pivot in the rhs column
    }
    std::vector<Scalar> x(static_cast<size_t>(a.cols()), Scalar::zero(a.ring()));
    for (size_t r = 0; r < red.pivot_cols.size(); ++r)
        x[static_cast<size_t>(red.pivot_cols[r])] = red.mat.at(static_cast<int>(r), a.cols());
    return x;
}

}  // namespace rbx
