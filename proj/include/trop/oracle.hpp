#pragma once

#include <cstdint>
#include <random>

#include "trop/independence.hpp"
#include "trop/monomial.hpp"
#include "trop/solver.hpp"

namespace trop {

/// Side-by-side comparison of the backtracked and exhaustive pipelines, plus
/// a randomized soundness sample. soundness_failures must be 0 on any
/// passing run; the seed is recorded for reproducibility.
struct OracleReport {
    std::size_t exhaustive_candidates = 0;
    std::size_t backtracked_candidates = 0;
    std::size_t accepted_exhaustive = 0;
    bool verdicts_match = false;
    bool spans_equal = false;
    std::size_t soundness_failures = 0;
    std::size_t sample_size = 0;
    std::uint64_t seed = 0;
};

/// Brute-force reference: the solver pipeline fed by exhaustive candidate
/// enumeration instead of the backtracking search.
template <class S>
Solution<S> oracle_solve(const ProblemInstance<S>& inst,
                         std::size_t cap = kDefaultCandidateCap) {
    return detail::run_pipeline(inst, [cap](const Matrix<S>& /*lhs*/, const Matrix<S>& rhs) {
        return enumerate_all(rhs, cap);
    });
}

/// Draws `trials` regular parameter vectors with integer entries in [-10, 10]
/// from a seeded generator and counts how many combinations gens*v fail the
/// original inequality. Always 0 for a correct generating matrix.
template <class S>
std::size_t sample_soundness(const ProblemInstance<S>& inst, const Matrix<S>& gens,
                             std::size_t trials, std::uint64_t seed) {
    if (gens.cols() < 1) throw ShapeError("sample_soundness: empty generating matrix");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> entry(-10, 10);
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Matrix<S> v(gens.cols(), 1);
        for (int i = 0; i < v.rows(); ++i) v(i, 0) = S::of(entry(rng));
        if (!check_solution(inst, gens * v)) ++failures;
    }
    return failures;
}

/// Runs both pipelines and verifies they agree: identical verdict kinds and,
/// when generators exist, span-equivalent generating matrices. Completeness
/// of the pruned search is checked operationally this way, since the
/// exhaustive candidate set realizes the full family of solution sets.
template <class S>
OracleReport compare_pipelines(const ProblemInstance<S>& inst,
                               std::size_t cap = kDefaultCandidateCap,
                               std::size_t trials = 100, std::uint64_t seed = 0) {
    const Solution<S> fast = solve(inst);
    const Solution<S> full = oracle_solve(inst, cap);

    OracleReport rep;
    rep.backtracked_candidates = fast.report.candidates_generated;
    rep.exhaustive_candidates = full.report.candidates_generated;
    rep.accepted_exhaustive = full.report.candidates_accepted;
    rep.seed = seed;
    rep.verdicts_match = fast.kind == full.kind;
    rep.spans_equal = rep.verdicts_match &&
                      (fast.kind != SolutionKind::Generators ||
                       span_equivalent(*fast.generators, *full.generators));
    if (fast.kind != SolutionKind::NoRegular && trials > 0) {
        rep.sample_size = trials;
        rep.soundness_failures = sample_soundness(inst, *fast.generators, trials, seed);
    }
    return rep;
}

}  // namespace trop
