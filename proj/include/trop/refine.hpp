#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trop/errors.hpp"
#include "trop/matrix.hpp"

namespace trop {

/// The two-sided inequality lhs*x <= rhs*x whose regular solutions are sought.
template <class S>
struct ProblemInstance {
    Matrix<S> lhs;
    Matrix<S> rhs;

    ProblemInstance(Matrix<S> a, Matrix<S> b) : lhs(std::move(a)), rhs(std::move(b)) {
        if (!lhs.same_shape(rhs)) throw ShapeError("instance sides differ in shape");
        if (lhs.rows() < 1 || lhs.cols() < 1) throw ShapeError("instance must be non-empty");
    }
};

enum class RefineVerdict {
    Proceed,     ///< both refined sides row-regular; run the solver
    AllRegular,  ///< refined left side vanished; every regular vector solves
    NoRegular,   ///< a row forces some unknown to zero; no regular solution
};

inline const char* to_string(RefineVerdict v) {
    switch (v) {
        case RefineVerdict::Proceed: return "proceed";
        case RefineVerdict::AllRegular: return "all-regular";
        case RefineVerdict::NoRegular: return "no-regular";
    }
    return "?";
}

/// Sparsified instance: per entry exactly one side survives (or both vanish),
/// rows with a vanished left side are dropped. kept_rows maps the surviving
/// rows back to original indices (0-based, ascending).
template <class S>
struct RefinedSystem {
    Matrix<S> lhs;
    Matrix<S> rhs;
    std::vector<int> kept_rows;
    RefineVerdict verdict = RefineVerdict::Proceed;
};

/// Entrywise sparsification that preserves the regular solution set: a left
/// entry survives only where it strictly dominates the right one, a right
/// entry only where it is at least the left one. Rows whose refined left side
/// is all zero constrain nothing and are dropped; a surviving row whose
/// refined right side is all zero admits no regular solution.
template <class S>
RefinedSystem<S> refine(const ProblemInstance<S>& inst) {
    const int m = inst.lhs.rows();
    const int n = inst.lhs.cols();
    Matrix<S> a_hat(m, n);
    Matrix<S> b_hat(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const S& a = inst.lhs(i, j);
            const S& b = inst.rhs(i, j);
            if (leq(a, b))
                b_hat(i, j) = b;
            else
                a_hat(i, j) = a;
        }

    RefinedSystem<S> out;
    for (int i = 0; i < m; ++i) {
        bool lhs_live = false;
        for (int j = 0; j < n; ++j)
            if (!a_hat(i, j).is_zero()) {
                lhs_live = true;
                break;
            }
        if (lhs_live) out.kept_rows.push_back(i);
    }

    const int kept = static_cast<int>(out.kept_rows.size());
    out.lhs = Matrix<S>(kept, n);
    out.rhs = Matrix<S>(kept, n);
    for (int i = 0; i < kept; ++i)
        for (int j = 0; j < n; ++j) {
            out.lhs(i, j) = a_hat(out.kept_rows[i], j);
            out.rhs(i, j) = b_hat(out.kept_rows[i], j);
        }

    if (kept == 0) {
        out.verdict = RefineVerdict::AllRegular;
        return out;
    }
    out.verdict = is_row_regular(out.rhs) ? RefineVerdict::Proceed : RefineVerdict::NoRegular;
    return out;
}

}  // namespace trop
