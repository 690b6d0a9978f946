#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trop/errors.hpp"
#include "trop/matrix.hpp"

namespace trop {

inline constexpr std::size_t kDefaultCandidateCap = 1'000'000;

/// Strictly row-monomial submatrix of the refined right side: one surviving
/// entry per row, taken verbatim from the source matrix.
template <class S>
struct MonomialCandidate {
    Matrix<S> g;
    std::vector<int> selection;  ///< selection[row] = surviving column (0-based)
};

namespace detail {

template <class S>
void check_candidate_inputs(const Matrix<S>& lhs, const Matrix<S>& rhs) {
    if (!lhs.same_shape(rhs)) throw ShapeError("candidate generation: shape mismatch");
    if (rhs.rows() < 1) throw ShapeError("candidate generation: empty system");
    if (!is_row_regular(rhs))
        throw DomainError("candidate generation: right side has an all-zero row");
}

template <class S>
MonomialCandidate<S> build_candidate(const Matrix<S>& rhs, const std::vector<int>& selection) {
    Matrix<S> g(rhs.rows(), rhs.cols());
    for (int i = 0; i < rhs.rows(); ++i) g(i, selection[i]) = rhs(i, selection[i]);
    return {std::move(g), selection};
}

/// Depth-first search over per-row entry choices. Fixing entry (p,q) bounds
/// every term of row p's inequality by the chosen one, which lets entries of
/// later rows be zeroed: a whole row collapses onto column q when its q-entry
/// alone already dominates the row's left side, and individual right-side
/// entries vanish wherever the q-entry dominates them. Each branch works on
/// its own copy; rows that lose their last nonzero kill the branch.
template <class S>
class CandidateSearch {
public:
    CandidateSearch(const Matrix<S>& lhs, const Matrix<S>& rhs)
        : lhs_(lhs), rhs_(rhs), m_(rhs.rows()), n_(rhs.cols()) {}

    std::vector<MonomialCandidate<S>> run() {
        std::vector<int> selection(m_, -1);
        descend(rhs_, 0, selection);
        return std::move(out_);
    }

private:
    void descend(const Matrix<S>& cur, int p, std::vector<int>& selection) {
        if (p == m_) {
            if (seen_.insert(selection).second)
                out_.push_back(build_candidate(rhs_, selection));
            return;
        }
        for (int q = 0; q < n_; ++q) {
            if (cur(p, q).is_zero()) continue;
            Matrix<S> next = cur;
            for (int j = 0; j < n_; ++j)
                if (j != q) next(p, j) = S::zero();

            const S pivot_inv = inv(cur(p, q));
            bool dead = false;
            for (int i = p + 1; i < m_ && !dead; ++i) {
                const S weight = mul(cur(i, q), pivot_inv);
                bool row_covered = true;
                for (int j = 0; j < n_ && row_covered; ++j) {
                    const S bound = mul(weight, add(lhs_(p, j), cur(p, j)));
                    if (!leq(lhs_(i, j), bound)) row_covered = false;
                }
                if (row_covered) {
                    for (int j = 0; j < n_; ++j)
                        if (j != q) next(i, j) = S::zero();
                } else {
                    for (int j = 0; j < n_; ++j) {
                        if (j == q || cur(i, j).is_zero()) continue;
                        const S bound = mul(weight, add(lhs_(p, j), cur(p, j)));
                        if (leq(cur(i, j), bound)) next(i, j) = S::zero();
                    }
                }
                bool live = false;
                for (int j = 0; j < n_ && !live; ++j) live = !next(i, j).is_zero();
                dead = !live;
            }
            if (dead) continue;
            selection[p] = q;
            descend(next, p + 1, selection);
            selection[p] = -1;
        }
    }

    const Matrix<S>& lhs_;
    const Matrix<S>& rhs_;
    const int m_;
    const int n_;
    std::vector<MonomialCandidate<S>> out_;
    std::set<std::vector<int>> seen_;
};

}  // namespace detail

/// Backtracking generation of the strictly row-monomial candidates derived
/// from the refined right side, pruned so that selections that cannot yield a
/// solution set are never produced. Deterministic: first-emission order,
/// duplicates removed by selection map.
template <class S>
std::vector<MonomialCandidate<S>> generate_candidates(const Matrix<S>& lhs,
                                                      const Matrix<S>& rhs) {
    detail::check_candidate_inputs(lhs, rhs);
    return detail::CandidateSearch<S>(lhs, rhs).run();
}

/// Exhaustive baseline: the full Cartesian product of per-row nonzero
/// positions, in lexicographic selection order. Guarded by a candidate cap.
template <class S>
std::vector<MonomialCandidate<S>> enumerate_all(const Matrix<S>& rhs,
                                                std::size_t cap = kDefaultCandidateCap) {
    if (rhs.rows() < 1) throw ShapeError("enumerate_all: empty system");
    if (!is_row_regular(rhs)) throw DomainError("enumerate_all: right side has an all-zero row");

    const int m = rhs.rows();
    std::vector<std::vector<int>> nz(static_cast<std::size_t>(m));
    std::size_t total = 1;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < rhs.cols(); ++j)
            if (!rhs(i, j).is_zero()) nz[i].push_back(j);
        if (total > cap / nz[i].size()) throw CapacityError("candidate cap exceeded");
        total *= nz[i].size();
    }

    std::vector<MonomialCandidate<S>> out;
    out.reserve(total);
    std::vector<std::size_t> odo(static_cast<std::size_t>(m), 0);
    std::vector<int> selection(static_cast<std::size_t>(m));
    for (;;) {
        for (int i = 0; i < m; ++i) selection[i] = nz[i][odo[i]];
        out.push_back(detail::build_candidate(rhs, selection));
        int i = m - 1;
        while (i >= 0 && ++odo[i] == nz[i].size()) odo[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

}  // namespace trop
