#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trop/errors.hpp"
#include "trop/independence.hpp"
#include "trop/matrix.hpp"
#include "trop/monomial.hpp"
#include "trop/refine.hpp"

namespace trop {

/// Trace-condition verdict for one candidate, with everything needed to audit
/// the decision afterwards.
template <class S>
struct CandidateEvaluation {
    MonomialCandidate<S> candidate;
    /// Row-space transfer matrix (sum of refined sides times the conjugate of
    /// the candidate). Square of order m, typically smaller than the n x n
    /// companion it shares all power traces with.
    Matrix<S> f;
    bool accepted = false;
    int rejected_at = 0;           ///< first power whose trace exceeds one(); 0 if accepted
    S rejected_trace = S::zero();  ///< trace value at rejected_at
    std::optional<Matrix<S>> generator;  ///< I + H^(n-1); present iff accepted
};

enum class SolutionKind { Generators, AllRegular, NoRegular };

inline const char* to_string(SolutionKind k) {
    switch (k) {
        case SolutionKind::Generators: return "generators";
        case SolutionKind::AllRegular: return "all-regular";
        case SolutionKind::NoRegular: return "no-regular";
    }
    return "?";
}

/// Plain-data trail of one candidate decision, for reports.
struct CandidateRecord {
    std::vector<int> selection;  ///< 0-based row -> column map
    bool accepted = false;
    int rejected_at = 0;
    std::string rejected_trace;  ///< rendered trace value when rejected
};

/// Counters and per-candidate trail of a solver run. Timings are wall-clock
/// microseconds and informational only.
struct SolveReport {
    RefineVerdict refine_verdict = RefineVerdict::Proceed;
    std::size_t rows_kept = 0;
    std::size_t rows_dropped = 0;
    std::size_t candidates_generated = 0;
    std::size_t candidates_accepted = 0;
    std::size_t candidates_rejected = 0;
    std::vector<CandidateRecord> candidates;
    std::size_t columns_examined = 0;
    std::size_t columns_kept = 0;
    std::int64_t refine_us = 0;
    std::int64_t generate_us = 0;
    std::int64_t evaluate_us = 0;
    std::int64_t assemble_us = 0;
    std::int64_t total_us = 0;
};

/// Complete answer: the generating matrix S (absent for NoRegular; the
/// identity for AllRegular) plus the run report. Every column of S solves the
/// original instance, and any tropical combination of the columns with
/// regular coefficients enumerates exactly the regular solutions.
template <class S>
struct Solution {
    SolutionKind kind = SolutionKind::NoRegular;
    std::optional<Matrix<S>> generators;
    SolveReport report;
};

/// Trace test for one candidate. Works on the smaller transfer matrix F:
/// its power traces coincide with those of the n x n companion H, and the
/// power sequence is entrywise monotone, so the scan stops at the first power
/// whose trace exceeds one(). On acceptance the generator I + H^(n-1) is
/// assembled from a power of F, which keeps the cost at the smaller order.
template <class S>
CandidateEvaluation<S> evaluate_candidate(const MonomialCandidate<S>& cand,
                                          const Matrix<S>& lhs, const Matrix<S>& rhs) {
    if (!lhs.same_shape(rhs) || !cand.g.same_shape(rhs))
        throw ShapeError("evaluate_candidate: shape mismatch");
    const int n = rhs.cols();
    const Matrix<S> sum = lhs + rhs;
    const Matrix<S> gc = conjugate(cand.g);

    CandidateEvaluation<S> ev;
    ev.candidate = cand;
    ev.f = sum * gc;
    Matrix<S> fk = ev.f;
    for (int k = 1; k <= n; ++k) {
        const S t = trace(fk);
        if (!leq(t, S::one())) {
            ev.rejected_at = k;
            ev.rejected_trace = t;
            return ev;
        }
        if (k < n) fk = fk * ev.f;
    }
    ev.accepted = true;
    ev.generator = n == 1 ? Matrix<S>::identity(1)
                          : Matrix<S>::identity(n) + gc * pow(ev.f, n - 2) * sum;
    return ev;
}

/// Merges the accepted generator matrices into one generating matrix:
/// generators in candidate order, columns left to right, keeping a column iff
/// it is independent of everything kept before it.
template <class S>
Matrix<S> assemble(const std::vector<CandidateEvaluation<S>>& evals,
                   SolveReport* report = nullptr) {
    Matrix<S> s;
    for (const auto& ev : evals) {
        if (!ev.accepted) continue;
        const Matrix<S>& gen = *ev.generator;
        if (s.cols() == 0 && s.rows() == 0) s = Matrix<S>(gen.rows(), 0);
        for (int j = 0; j < gen.cols(); ++j) {
            const Matrix<S> c = column(gen, j);
            if (report) ++report->columns_examined;
            if (!is_dependent(s, c).dependent) {
                append_column(s, c);
                if (report) ++report->columns_kept;
            }
        }
    }
    if (s.cols() == 0) throw DomainError("assemble: no accepted candidate");
    return s;
}

namespace detail {

inline std::int64_t elapsed_us(std::chrono::steady_clock::time_point& mark) {
    const auto now = std::chrono::steady_clock::now();
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(now - mark).count();
    mark = now;
    return us;
}

/// Shared pipeline body: refine, generate candidates with `generate`, keep
/// the ones passing the trace test, assemble. Used with the backtracking
/// generator by solve() and with the exhaustive one by the oracle.
template <class S, class Generate>
Solution<S> run_pipeline(const ProblemInstance<S>& inst, Generate&& generate) {
    Solution<S> out;
    auto mark = std::chrono::steady_clock::now();

    const RefinedSystem<S> rs = refine(inst);
    out.report.refine_us = elapsed_us(mark);
    out.report.refine_verdict = rs.verdict;
    out.report.rows_kept = rs.kept_rows.size();
    out.report.rows_dropped = static_cast<std::size_t>(inst.lhs.rows()) - rs.kept_rows.size();

    if (rs.verdict == RefineVerdict::AllRegular) {
        out.kind = SolutionKind::AllRegular;
        out.generators = Matrix<S>::identity(inst.lhs.cols());
        out.report.total_us = out.report.refine_us;
        return out;
    }
    if (rs.verdict == RefineVerdict::NoRegular) {
        out.kind = SolutionKind::NoRegular;
        out.report.total_us = out.report.refine_us;
        return out;
    }

    const std::vector<MonomialCandidate<S>> cands = generate(rs.lhs, rs.rhs);
    out.report.generate_us = elapsed_us(mark);
    out.report.candidates_generated = cands.size();

    std::vector<CandidateEvaluation<S>> evals;
    evals.reserve(cands.size());
    for (const auto& cand : cands) {
        CandidateEvaluation<S> ev = evaluate_candidate(cand, rs.lhs, rs.rhs);
        CandidateRecord rec;
        rec.selection = ev.candidate.selection;
        rec.accepted = ev.accepted;
        if (!ev.accepted) {
            rec.rejected_at = ev.rejected_at;
            rec.rejected_trace = ev.rejected_trace.str();
            ++out.report.candidates_rejected;
        } else {
            ++out.report.candidates_accepted;
        }
        out.report.candidates.push_back(std::move(rec));
        evals.push_back(std::move(ev));
    }
    out.report.evaluate_us = elapsed_us(mark);

    if (out.report.candidates_accepted == 0) {
        out.kind = SolutionKind::NoRegular;
    } else {
        out.generators = assemble(evals, &out.report);
        out.kind = SolutionKind::Generators;
    }
    out.report.assemble_us = elapsed_us(mark);
    out.report.total_us = out.report.refine_us + out.report.generate_us +
                          out.report.evaluate_us + out.report.assemble_us;
    return out;
}

}  // namespace detail

/// End-to-end solver: refinement, backtracked candidate generation, trace
/// filtering, and assembly of the generating matrix.
template <class S>
Solution<S> solve(const ProblemInstance<S>& inst) {
    return detail::run_pipeline(inst, [](const Matrix<S>& lhs, const Matrix<S>& rhs) {
        return generate_candidates(lhs, rhs);
    });
}

/// True iff x is regular and satisfies the instance componentwise.
template <class S>
bool check_solution(const ProblemInstance<S>& inst, const Matrix<S>& x) {
    if (x.cols() != 1 || x.rows() != inst.lhs.cols())
        throw ShapeError("check_solution: vector shape mismatch");
    if (!is_regular_vector(x)) return false;
    return leq(inst.lhs * x, inst.rhs * x);
}

/// Sufficient-condition shortcut: when the product of the conjugated right
/// side with the left side has a convergent star, that star generates (not
/// necessarily all) regular solutions. Returns nothing when it diverges.
/// Requires both sides row-regular.
template <class S>
std::optional<Matrix<S>> star_shortcut(const ProblemInstance<S>& inst) {
    if (!is_row_regular(inst.lhs) || !is_row_regular(inst.rhs))
        throw DomainError("star_shortcut: sides must be row-regular");
    const Matrix<S> w = conjugate(inst.rhs) * inst.lhs;
    if (!leq(trace_closure(w), S::one())) return std::nullopt;
    return kleene_star(w);
}

}  // namespace trop
