#pragma once

#include <json.hpp>

#include <string>

#include "trop/matrix.hpp"
#include "trop/oracle.hpp"
#include "trop/solver.hpp"

namespace trop {

/// JSON rendering of results. Entries are rendered as strings so exact
/// rationals survive the trip; shapes are explicit. The schema is documented
/// in the project README.

template <class S>
nlohmann::json matrix_json(const Matrix<S>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline nlohmann::json report_json(const SolveReport& rep) {
    nlohmann::json cands = nlohmann::json::array();
    for (const auto& rec : rep.candidates) {
        nlohmann::json c;
        nlohmann::json sel = nlohmann::json::array();
        for (int col : rec.selection) sel.push_back(col + 1);  // 1-based for humans
        c["selection"] = std::move(sel);
        c["accepted"] = rec.accepted;
        if (!rec.accepted) {
            c["rejected_at"] = rec.rejected_at;
            c["rejected_trace"] = rec.rejected_trace;
        }
        cands.push_back(std::move(c));
    }
    return {
        {"refine_verdict", to_string(rep.refine_verdict)},
        {"rows_kept", rep.rows_kept},
        {"rows_dropped", rep.rows_dropped},
        {"candidates_generated", rep.candidates_generated},
        {"candidates_accepted", rep.candidates_accepted},
        {"candidates_rejected", rep.candidates_rejected},
        {"candidates", std::move(cands)},
        {"columns_examined", rep.columns_examined},
        {"columns_kept", rep.columns_kept},
        {"timing_us",
         {{"refine", rep.refine_us},
          {"generate", rep.generate_us},
          {"evaluate", rep.evaluate_us},
          {"assemble", rep.assemble_us},
          {"total", rep.total_us}}},
    };
}

template <class S>
nlohmann::json solution_json(const Solution<S>& sol) {
    nlohmann::json j;
    j["status"] = to_string(sol.kind);
    if (sol.generators) j["generators"] = matrix_json(*sol.generators);
    j["report"] = report_json(sol.report);
    return j;
}

inline nlohmann::json oracle_json(const OracleReport& rep) {
    return {
        {"exhaustive_candidates", rep.exhaustive_candidates},
        {"backtracked_candidates", rep.backtracked_candidates},
        {"accepted_exhaustive", rep.accepted_exhaustive},
        {"verdicts_match", rep.verdicts_match},
        {"spans_equal", rep.spans_equal},
        {"soundness_failures", rep.soundness_failures},
        {"sample_size", rep.sample_size},
        {"seed", rep.seed},
    };
}

}  // namespace trop
