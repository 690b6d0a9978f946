#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "trop/errors.hpp"
#include "trop/semifield.hpp"

namespace trop {

/// Row/column structure summary computed by structure_flags().
struct StructureFlags {
    bool row_regular = false;            ///< no all-zero row
    bool strictly_row_monomial = false;  ///< exactly one nonzero entry per row
    bool regular_vector = false;         ///< no zero entry anywhere
};

/// Dense matrix over a tropical scalar, row-major. Vectors are n x 1 (or
/// 1 x n) matrices. Sparsity is logical: zero entries are stored.
///
/// Matrices are values; every operation below is a pure function, so shared
/// instances are safe to read concurrently. Empty shapes (0 rows or columns)
/// are permitted and behave as the usual degenerate cases.
template <class S>
class Matrix {
public:
    Matrix() = default;

    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
        entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                        S::zero());
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const S& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    S& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<S> entries_;
};

/// Entrywise addition.
template <class S>
Matrix<S> operator+(const Matrix<S>& p, const Matrix<S>& q) {
    if (!p.same_shape(q)) throw ShapeError("matrix addition: shape mismatch");
    Matrix<S> r(p.rows(), p.cols());
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j) r(i, j) = add(p(i, j), q(i, j));
    return r;
}

/// Tropical matrix product: (p*q)(i,j) = max_k p(i,k) + q(k,j).
template <class S>
Matrix<S> operator*(const Matrix<S>& p, const Matrix<S>& q) {
    if (p.cols() != q.rows()) throw ShapeError("matrix product: inner dimension mismatch");
    Matrix<S> r(p.rows(), q.cols());
    for (int i = 0; i < p.rows(); ++i)
        for (int k = 0; k < p.cols(); ++k) {
            const S& pik = p(i, k);
            if (pik.is_zero()) continue;
            for (int j = 0; j < q.cols(); ++j) r(i, j) = add(r(i, j), mul(pik, q(k, j)));
        }
    return r;
}

/// Scalar multiple: every entry multiplied by c.
template <class S>
Matrix<S> operator*(const S& c, const Matrix<S>& p) {
    Matrix<S> r(p.rows(), p.cols());
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j) r(i, j) = mul(c, p(i, j));
    return r;
}

template <class S>
bool operator==(const Matrix<S>& p, const Matrix<S>& q) {
    if (!p.same_shape(q)) return false;
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j)
            if (!eq(p(i, j), q(i, j))) return false;
    return true;
}

template <class S>
bool operator!=(const Matrix<S>& p, const Matrix<S>& q) {
    return !(p == q);
}

/// Componentwise partial order.
template <class S>
bool leq(const Matrix<S>& p, const Matrix<S>& q) {
    if (!p.same_shape(q)) throw ShapeError("matrix comparison: shape mismatch");
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j)
            if (!leq(p(i, j), q(i, j))) return false;
    return true;
}

/// Multiplicative-inverse transpose: entry (i,j) is the inverse of p(j,i),
/// zero entries staying zero.
template <class S>
Matrix<S> conjugate(const Matrix<S>& p) {
    Matrix<S> r(p.cols(), p.rows());
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j)
            if (!p(i, j).is_zero()) r(j, i) = inv(p(i, j));
    return r;
}

template <class S>
S trace(const Matrix<S>& p) {
    if (p.rows() != p.cols()) throw ShapeError("trace of a non-square matrix");
    S t = S::zero();
    for (int i = 0; i < p.rows(); ++i) t = add(t, p(i, i));
    return t;
}

/// k-fold product, pow(p, 0) = identity.
template <class S>
Matrix<S> pow(const Matrix<S>& p, int k) {
    if (p.rows() != p.cols()) throw ShapeError("power of a non-square matrix");
    if (k < 0) throw DomainError("negative matrix power");
    Matrix<S> r = Matrix<S>::identity(p.rows());
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

/// Addition of the traces of the first n powers. Bounded by one() exactly
/// when the weighted digraph of p has no cycle of positive weight.
template <class S>
S trace_closure(const Matrix<S>& p) {
    if (p.rows() != p.cols()) throw ShapeError("trace closure of a non-square matrix");
    if (p.rows() == 0) throw ShapeError("trace closure of an empty matrix");
    S t = S::zero();
    Matrix<S> pk = p;
    for (int k = 1; k <= p.rows(); ++k) {
        t = add(t, trace(pk));
        if (k < p.rows()) pk = pk * p;
    }
    return t;
}

/// Star closure I + p + p^2 + ... computed by the Floyd-Warshall elimination
/// scheme in O(n^3). The series converges only when no cycle has positive
/// weight; divergent input raises DomainError.
template <class S>
Matrix<S> kleene_star(const Matrix<S>& p) {
    if (p.rows() != p.cols()) throw ShapeError("star of a non-square matrix");
    const int n = p.rows();
    Matrix<S> c = p;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            const S& cik = c(i, k);
            if (cik.is_zero()) continue;
            for (int j = 0; j < n; ++j) c(i, j) = add(c(i, j), mul(cik, c(k, j)));
        }
    for (int i = 0; i < n; ++i)
        if (!leq(c(i, i), S::one()))
            throw DomainError("divergent star: a cycle of positive weight exists");
    return Matrix<S>::identity(n) + c;
}

template <class S>
StructureFlags structure_flags(const Matrix<S>& p) {
    StructureFlags f;
    f.row_regular = p.rows() > 0;
    f.strictly_row_monomial = p.rows() > 0;
    f.regular_vector = p.rows() > 0 && p.cols() > 0;
    for (int i = 0; i < p.rows(); ++i) {
        int nonzero = 0;
        for (int j = 0; j < p.cols(); ++j)
            if (!p(i, j).is_zero())
                ++nonzero;
            else
                f.regular_vector = false;
        if (nonzero == 0) f.row_regular = false;
        if (nonzero != 1) f.strictly_row_monomial = false;
    }
    if (!f.row_regular) f.strictly_row_monomial = false;
    return f;
}

template <class S>
bool is_row_regular(const Matrix<S>& p) {
    return structure_flags(p).row_regular;
}

template <class S>
bool is_regular_vector(const Matrix<S>& p) {
    return structure_flags(p).regular_vector;
}

template <class S>
bool is_zero_matrix(const Matrix<S>& p) {
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j)
            if (!p(i, j).is_zero()) return false;
    return true;
}

template <class S>
Matrix<S> column(const Matrix<S>& p, int j) {
    Matrix<S> c(p.rows(), 1);
    for (int i = 0; i < p.rows(); ++i) c(i, 0) = p(i, j);
    return c;
}

/// Widen p by one column. An empty p adopts the column's row count.
template <class S>
void append_column(Matrix<S>& p, const Matrix<S>& col) {
    if (col.cols() != 1) throw ShapeError("append_column: not a column vector");
    if (p.cols() == 0) {
        p = Matrix<S>(col.rows(), 0);
    }
    if (p.rows() != col.rows()) throw ShapeError("append_column: row count mismatch");
    Matrix<S> r(p.rows(), p.cols() + 1);
    for (int i = 0; i < p.rows(); ++i) {
        for (int j = 0; j < p.cols(); ++j) r(i, j) = p(i, j);
        r(i, p.cols()) = col(i, 0);
    }
    p = std::move(r);
}

}  // namespace trop
