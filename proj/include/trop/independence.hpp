#pragma once

#include <optional>
#include <vector>

#include "trop/errors.hpp"
#include "trop/matrix.hpp"

namespace trop {

/// Outcome of a linear-dependence test of a vector against a column system.
template <class S>
struct DependenceVerdict {
    bool dependent = false;
    /// Coefficients (one per column of the tested system) whose combination
    /// reproduces the vector exactly; present iff dependent.
    std::optional<Matrix<S>> witness;
    /// Closed-form dependence criterion value; equals one() exactly when the
    /// classical O(mn) test accepts. Diagnostic only: for vectors with zero
    /// entries it can accept an unreachable vector, so the authoritative test
    /// is residuation plus exact recombination.
    S scalar_criterion = S::zero();
};

/// Greatest solution x of m*x <= b, computed columnwise as the row-minimum of
/// b(i) - m(i,j) over the rows where column j is nonzero. A zero b(i) against
/// a nonzero m(i,j) clamps x(j) to zero.
///
/// Requires every column of m to contain a nonzero entry (all-zero columns
/// are unconstrained and must be excluded by the caller).
template <class S>
Matrix<S> residual_solve(const Matrix<S>& m, const Matrix<S>& b) {
    if (b.cols() != 1 || b.rows() != m.rows())
        throw ShapeError("residual_solve: vector shape mismatch");
    Matrix<S> x(m.cols(), 1);
    for (int j = 0; j < m.cols(); ++j) {
        bool constrained = false;
        S best = S::zero();
        for (int i = 0; i < m.rows(); ++i) {
            if (m(i, j).is_zero()) continue;
            const S bound = mul(b(i, 0), inv(m(i, j)));
            best = constrained ? min(best, bound) : bound;
            constrained = true;
        }
        if (!constrained) throw DomainError("residual_solve: all-zero column");
        x(j, 0) = best;
    }
    return x;
}

/// Tests whether b lies in the span of the columns of m: solve the residual
/// system for the greatest candidate coefficients and accept iff recombining
/// them reproduces b exactly. Total: zero columns in m and a zero b are
/// handled (the zero vector is the empty combination).
template <class S>
DependenceVerdict<S> is_dependent(const Matrix<S>& m, const Matrix<S>& b) {
    if (b.cols() != 1 || b.rows() != m.rows())
        throw ShapeError("is_dependent: vector shape mismatch");

    DependenceVerdict<S> v;
    {
        // Closed-form criterion, computed verbatim for diagnostics.
        const Matrix<S> bc = conjugate(b);                   // 1 x m
        const Matrix<S> reach = m * conjugate(bc * m);       // m x 1
        const Matrix<S> crit = conjugate(reach) * b;         // 1 x 1
        v.scalar_criterion = crit(0, 0);
    }

    if (is_zero_matrix(b)) {
        v.dependent = true;
        v.witness = Matrix<S>(m.cols(), 1);
        return v;
    }

    std::vector<int> live;
    for (int j = 0; j < m.cols(); ++j)
        if (!is_zero_matrix(column(m, j))) live.push_back(j);
    if (live.empty()) return v;

    Matrix<S> mf(m.rows(), static_cast<int>(live.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < live.size(); ++j) mf(i, static_cast<int>(j)) = m(i, live[j]);

    const Matrix<S> xf = residual_solve(mf, b);
    if (mf * xf != b) return v;

    v.dependent = true;
    Matrix<S> w(m.cols(), 1);
    for (std::size_t j = 0; j < live.size(); ++j) w(live[j], 0) = xf(static_cast<int>(j), 0);
    v.witness = std::move(w);
    return v;
}

/// Reduction to an equivalent independent column system: one removal pass
/// that drops a column whenever it is dependent on all the others still
/// present. Dependence only grows with the generating set, so a column kept
/// here stays independent of the final system, and removing a dependent
/// column never changes the span.
///
/// Columns are examined right to left; among collinear columns the leftmost
/// survives. Output preserves the order of the kept columns.
template <class S>
Matrix<S> reduce_columns(const Matrix<S>& m) {
    std::vector<bool> kept(static_cast<std::size_t>(m.cols()), true);
    for (int j = m.cols() - 1; j >= 0; --j) {
        Matrix<S> others(m.rows(), 0);
        for (int k = 0; k < m.cols(); ++k)
            if (k != j && kept[static_cast<std::size_t>(k)])
                append_column(others, column(m, k));
        if (is_dependent(others, column(m, j)).dependent)
            kept[static_cast<std::size_t>(j)] = false;
    }
    Matrix<S> out(m.rows(), 0);
    for (int j = 0; j < m.cols(); ++j)
        if (kept[static_cast<std::size_t>(j)]) append_column(out, column(m, j));
    return out;
}

/// True iff the two column systems generate the same span: every column of
/// each is dependent on the other.
template <class S>
bool span_equivalent(const Matrix<S>& p, const Matrix<S>& q) {
    if (p.rows() != q.rows()) throw ShapeError("span_equivalent: row count mismatch");
    for (int j = 0; j < p.cols(); ++j)
        if (!is_dependent(q, column(p, j)).dependent) return false;
    for (int j = 0; j < q.cols(); ++j)
        if (!is_dependent(p, column(q, j)).dependent) return false;
    return true;
}

}  // namespace trop
