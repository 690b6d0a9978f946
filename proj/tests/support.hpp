#pragma once

// Shared fixtures and seeded generators for the test suites. The two worked
// instances (a square 3x3 one and a wide 2x7 one) come with every
// intermediate matrix frozen, so each pipeline stage can be checked exactly.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "trop/matrix.hpp"
#include "trop/matrix_io.hpp"
#include "trop/refine.hpp"
#include "trop/semifield.hpp"

namespace testsup {

using R = trop::RatScalar;
using MatR = trop::Matrix<R>;

inline MatR m(const char* text) { return trop::parse_matrix_text<R>(text); }

inline R rat(long num, long den = 1) {
    mpq_class q(num, den);
    q.canonicalize();
    return R(q);
}

// --- 3x3 instance ---------------------------------------------------------

inline MatR ex1_lhs() { return m("0 2 3\n-inf -1 3\n3 2 -1"); }
inline MatR ex1_rhs() { return m("2 -1 2\n1 0 2\n-1 3 1"); }
inline MatR ex1_lhs_refined() { return m(". 2 3\n. . 3\n3 . ."); }
inline MatR ex1_rhs_refined() { return m("2 . .\n1 0 .\n. 3 1"); }
inline MatR ex1_sum() { return m("2 2 3\n1 0 3\n3 3 1"); }
inline MatR ex1_g1() { return m("2 . .\n1 . .\n. 3 ."); }
inline MatR ex1_g2() { return m("2 . .\n1 . .\n. . 1"); }
inline MatR ex1_g1_conj() { return m("-2 -1 .\n. . -3\n. . ."); }
inline MatR ex1_h1() { return m("0 0 2\n0 0 -2\n. . ."); }
inline MatR ex1_h1_sq() { return m("0 0 2\n0 0 2\n. . ."); }
inline MatR ex1_h2() { return m("0 0 2\n. . .\n2 2 0"); }
inline MatR ex1_h2_sq() { return m("4 4 2\n. . .\n2 2 4"); }
inline MatR ex1_h2_cube() { return m("4 4 6\n. . .\n6 6 4"); }
inline MatR ex1_star_h1() { return m("0 0 2\n0 0 2\n. . 0"); }
inline MatR ex1_s() { return m("0 2\n0 2\n-inf 0"); }

// --- 2x7 instance (already refined) ----------------------------------------

inline MatR ex2_lhs() { return m(". . . 0 4 2 6\n. 5 6 . . . 2"); }
inline MatR ex2_rhs() { return m("0 1 5 . . . .\n3 . . 0 2 4 ."); }

inline std::vector<MatR> ex2_candidates() {
    return {
        m("0 . . . . . .\n3 . . . . . ."),  // fix (1,1),(2,1)
        m(". 1 . . . . .\n3 . . . . . ."),  // fix (1,2),(2,1)
        m(". 1 . . . . .\n. . . 0 . . ."),  // fix (1,2),(2,4)
        m(". 1 . . . . .\n. . . . 2 . ."),  // fix (1,2),(2,5)
        m(". 1 . . . . .\n. . . . . 4 ."),  // fix (1,2),(2,6)
        m(". . 5 . . . .\n3 . . . . . ."),  // fix (1,3),(2,1)
        m(". . 5 . . . .\n. . . 0 . . ."),  // fix (1,3),(2,4)
        m(". . 5 . . . .\n. . . . 2 . ."),  // fix (1,3),(2,5)
        m(". . 5 . . . .\n. . . . . 4 ."),  // fix (1,3),(2,6)
    };
}

inline std::vector<std::vector<int>> ex2_selections() {
    return {{0, 0}, {1, 0}, {1, 3}, {1, 4}, {1, 5}, {2, 0}, {2, 3}, {2, 4}, {2, 5}};
}

inline MatR ex2_f1() { return m("0 -3\n3 0"); }
inline MatR ex2_f2() { return m("0 -3\n4 0"); }

inline MatR ex2_s1() {
    return m(
        "0 2 5 0 4 2 6\n"
        ". 0 . . . . .\n"
        ". . 0 . . . .\n"
        ". . . 0 . . .\n"
        ". . . . 0 . .\n"
        ". . . . . 0 .\n"
        ". . . . . . 0");
}

inline MatR ex2_s6() {
    return m(
        "0 2 3 -2 2 1 4\n"
        ". 0 . . . . .\n"
        "-5 -3 0 -5 -1 -3 1\n"
        ". . . 0 . . .\n"
        ". . . . 0 . .\n"
        ". . . . . 0 .\n"
        ". . . . . . 0");
}

inline MatR ex2_s9() {
    return m(
        "0 . . . . . .\n"
        ". 0 . . . . .\n"
        "-4 -2 0 -5 -1 -3 1\n"
        ". . . 0 . . .\n"
        ". . . . 0 . .\n"
        "-1 1 2 -3 1 0 3\n"
        ". . . . . . 0");
}

// Seven columns of the first accepted generator followed by columns 3..7 of
// the second one: the merged matrix as published with the instance.
inline MatR ex2_s_published() {
    return m(
        "0 2 5 0 4 2 6 3 -2 2 1 4\n"
        ". 0 . . . . . . . . . .\n"
        ". . 0 . . . . 0 -5 -1 -3 1\n"
        ". . . 0 . . . . 0 . . .\n"
        ". . . . 0 . . . . 0 . .\n"
        ". . . . . 0 . . . . 0 .\n"
        ". . . . . . 0 . . . . 0");
}

// The complete generating matrix under the exact dependence test: the twelve
// published columns plus columns 2..7 of the third accepted generator. Those
// six columns are unreachable from the published ones: each has a zero first
// entry while every published column is finite in row 1, so any combination
// reaching their finite entries would also set row 1. The published matrix
// consequently misses regular solutions (e.g. (0,0,1,0,0,3,0), which solves
// the instance but forces x1 >= x2 + 2 in the published span).
inline MatR ex2_s_complete() {
    return m(
        "0 2 5 0 4 2 6 3 -2 2 1 4 . . . . . .\n"
        ". 0 . . . . . . . . . . 0 . . . . .\n"
        ". . 0 . . . . 0 -5 -1 -3 1 -2 0 -5 -1 -3 1\n"
        ". . . 0 . . . . 0 . . . . . 0 . . .\n"
        ". . . . 0 . . . . 0 . . . . . 0 . .\n"
        ". . . . . 0 . . . . 0 . 1 2 -3 1 0 3\n"
        ". . . . . . 0 . . . . 0 . . . . . 0");
}

// --- seeded random data -----------------------------------------------------

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

template <class S>
S random_scalar(std::mt19937_64& rng, long lo, long hi, double zero_density = 0.0) {
    if (zero_density > 0.0) {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        if (u(rng) < zero_density) return S::zero();
    }
    std::uniform_int_distribution<long> d(lo, hi);
    return S::of(d(rng));
}

template <class S>
trop::Matrix<S> random_matrix(std::mt19937_64& rng, int rows, int cols, long lo, long hi,
                              double zero_density = 0.0) {
    trop::Matrix<S> p(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) p(i, j) = random_scalar<S>(rng, lo, hi, zero_density);
    return p;
}

template <class S>
trop::Matrix<S> random_regular_vector(std::mt19937_64& rng, int n, long lo = -10, long hi = 10) {
    return random_matrix<S>(rng, n, 1, lo, hi, 0.0);
}

template <class S>
trop::Matrix<S> random_row_monomial(std::mt19937_64& rng, int rows, int cols, long lo = -5,
                                    long hi = 5) {
    trop::Matrix<S> p(rows, cols);
    std::uniform_int_distribution<int> pick(0, cols - 1);
    std::uniform_int_distribution<long> d(lo, hi);
    for (int i = 0; i < rows; ++i) p(i, pick(rng)) = S::of(d(rng));
    return p;
}

/// Square matrix whose star converges: rejection-sampled, with a guaranteed
/// nonpositive fallback.
template <class S>
trop::Matrix<S> random_convergent(std::mt19937_64& rng, int n) {
    for (int tries = 0; tries < 200; ++tries) {
        auto p = random_matrix<S>(rng, n, n, -4, 2, 0.3);
        if (leq(trace_closure(p), S::one())) return p;
    }
    return random_matrix<S>(rng, n, n, -4, 0, 0.3);
}

/// The randomized instance sweep shared by the oracle tests and the
/// acceptance suite: shapes up to 4x4, entries in [-3, 3], zero densities
/// 0, 0.2 and 0.4, fixed seeds. 210 instances in total.
inline std::vector<trop::ProblemInstance<R>> random_instance_sweep(int per_density = 70) {
    std::vector<trop::ProblemInstance<R>> out;
    const double densities[] = {0.0, 0.2, 0.4};
    std::uint64_t seed = 9001;
    for (double density : densities) {
        auto rng = make_rng(seed++);
        std::uniform_int_distribution<int> dim(1, 4);
        for (int t = 0; t < per_density; ++t) {
            const int rows = dim(rng);
            const int cols = dim(rng);
            out.emplace_back(random_matrix<R>(rng, rows, cols, -3, 3, density),
                             random_matrix<R>(rng, rows, cols, -3, 3, density));
        }
    }
    return out;
}

}  // namespace testsup
