#include "trop/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "trop/matrix_io.hpp"
#include "trop/oracle.hpp"
#include "trop/report.hpp"
#include "trop/solver.hpp"

namespace trop::cli {
namespace {

constexpr std::size_t kOracleSampleSize = 100;

struct Options {
    std::string mode = "exact";
    double eps = 1e-9;
    std::size_t cap = kDefaultCandidateCap;
    bool json = false;
    bool lemma3 = false;
    bool oracle = false;
    std::uint64_t seed = 0;
    std::string out;
    std::string cmd;
    std::string path_lhs;
    std::string path_rhs;
    std::string path_x;
};

std::string selection_str(const std::vector<int>& sel) {
    std::string s = "{";
    for (std::size_t i = 0; i < sel.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(i + 1) + "->" + std::to_string(sel[i] + 1);
    }
    return s + "}";
}

template <class S>
void print_matrix_block(std::ostream& os, const std::string& label, const Matrix<S>& m) {
    os << label << " (" << m.rows() << "x" << m.cols() << "):\n";
    write_matrix(os, m);
}

// One inequality row of x = S*v in conventional notation, e.g.
// "x1 = max(v1, v2 + 2)".
template <class S>
std::string parametric_line(const Matrix<S>& s, int i) {
    std::vector<std::string> terms;
    for (int j = 0; j < s.cols(); ++j) {
        const S& c = s(i, j);
        if (c.is_zero()) continue;
        std::string term = "v" + std::to_string(j + 1);
        if (!eq(c, S::one()))
            term += leq(S::one(), c) ? " + " + c.str() : " - " + inv(c).str();
        terms.push_back(std::move(term));
    }
    if (terms.empty()) return "-inf";
    if (terms.size() == 1) return terms.front();
    std::string line = "max(";
    for (std::size_t t = 0; t < terms.size(); ++t) {
        if (t) line += ", ";
        line += terms[t];
    }
    return line + ")";
}

template <class S>
void print_solution_text(std::ostream& os, const Solution<S>& sol) {
    os << "status: " << to_string(sol.kind) << "\n";
    if (sol.kind == SolutionKind::AllRegular)
        os << "every regular vector solves the system\n";
    if (sol.kind == SolutionKind::NoRegular)
        os << "only the trivial (non-regular) solution exists\n";
    if (sol.generators) {
        print_matrix_block(os, "S", *sol.generators);
        os << "parametric form:\n";
        for (int i = 0; i < sol.generators->rows(); ++i)
            os << "  x" << i + 1 << " = " << parametric_line(*sol.generators, i) << "\n";
    }
    const SolveReport& rep = sol.report;
    if (rep.refine_verdict == RefineVerdict::Proceed) {
        os << "candidates (" << rep.candidates_generated << " generated, "
           << rep.candidates_accepted << " accepted, " << rep.candidates_rejected
           << " rejected):\n";
        int idx = 1;
        for (const auto& rec : rep.candidates) {
            os << "  [" << idx++ << "] fix " << selection_str(rec.selection) << ": ";
            if (rec.accepted)
                os << "accepted\n";
            else
                os << "rejected at power " << rec.rejected_at << ", trace " << rec.rejected_trace
                   << "\n";
        }
        if (sol.kind == SolutionKind::Generators)
            os << "columns: " << rep.columns_examined << " examined, " << rep.columns_kept
               << " kept\n";
    }
}

void print_oracle_text(std::ostream& os, const OracleReport& rep) {
    os << "oracle: exhaustive " << rep.exhaustive_candidates << ", backtracked "
       << rep.backtracked_candidates << ", accepted " << rep.accepted_exhaustive
       << "; verdicts match: " << (rep.verdicts_match ? "yes" : "no")
       << "; spans equal: " << (rep.spans_equal ? "yes" : "no");
    if (rep.sample_size)
        os << "; soundness " << rep.soundness_failures << "/" << rep.sample_size
           << " failures (seed " << rep.seed << ")";
    os << "\n";
}

// Accepts either a column file or a single-row file.
template <class S>
Matrix<S> load_vector(const std::string& path) {
    Matrix<S> x = load_matrix<S>(path);
    if (x.cols() == 1) return x;
    if (x.rows() != 1) throw ShapeError(path + ": expected a vector");
    Matrix<S> col(x.cols(), 1);
    for (int j = 0; j < x.cols(); ++j) col(j, 0) = x(0, j);
    return col;
}

template <class S>
int run_solve(const Options& o) {
    const ProblemInstance<S> inst(load_matrix<S>(o.path_lhs), load_matrix<S>(o.path_rhs));
    const Solution<S> sol = solve(inst);

    std::optional<Matrix<S>> shortcut;
    bool shortcut_applicable = false;
    if (o.lemma3) {
        const RefinedSystem<S> rs = refine(inst);
        if (rs.verdict == RefineVerdict::Proceed) {
            shortcut = star_shortcut(ProblemInstance<S>(rs.lhs, rs.rhs));
            shortcut_applicable = shortcut.has_value();
        }
    }

    std::optional<OracleReport> orep;
    if (o.oracle) orep = compare_pipelines(inst, o.cap, kOracleSampleSize, o.seed);

    if (o.json) {
        nlohmann::json j = solution_json(sol);
        j["mode"] = o.mode;
        if (o.lemma3) {
            j["lemma3"]["applicable"] = shortcut_applicable;
            if (shortcut) j["lemma3"]["generators"] = matrix_json(*shortcut);
        }
        if (orep) j["oracle"] = oracle_json(*orep);
        std::cout << j.dump(2) << "\n";
    } else {
        print_solution_text(std::cout, sol);
        if (o.lemma3) {
            if (shortcut)
                print_matrix_block(std::cout, "lemma3 generators", *shortcut);
            else
                std::cout << "lemma3: not applicable (divergent closure)\n";
        }
        if (orep) print_oracle_text(std::cout, *orep);
    }

    if (!o.out.empty() && sol.generators) {
        std::ofstream f(o.out);
        if (!f) throw std::runtime_error("cannot write file: " + o.out);
        write_matrix(f, *sol.generators);
    }
    return sol.kind == SolutionKind::NoRegular ? 2 : 0;
}

template <class S>
int run_refine(const Options& o) {
    const ProblemInstance<S> inst(load_matrix<S>(o.path_lhs), load_matrix<S>(o.path_rhs));
    const RefinedSystem<S> rs = refine(inst);
    if (o.json) {
        nlohmann::json j;
        j["verdict"] = to_string(rs.verdict);
        nlohmann::json kept = nlohmann::json::array();
        for (int i : rs.kept_rows) kept.push_back(i + 1);
        j["kept_rows"] = std::move(kept);
        j["lhs"] = matrix_json(rs.lhs);
        j["rhs"] = matrix_json(rs.rhs);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "verdict: " << to_string(rs.verdict) << "\n";
    std::cout << "kept rows:";
    if (rs.kept_rows.empty()) std::cout << " none";
    for (int i : rs.kept_rows) std::cout << " " << i + 1;
    std::cout << "\n";
    if (!rs.kept_rows.empty()) {
        print_matrix_block(std::cout, "refined lhs", rs.lhs);
        print_matrix_block(std::cout, "refined rhs", rs.rhs);
    }
    return 0;
}

template <class S>
int run_gens(const Options& o) {
    const ProblemInstance<S> inst(load_matrix<S>(o.path_lhs), load_matrix<S>(o.path_rhs));
    const RefinedSystem<S> rs = refine(inst);
    if (rs.verdict != RefineVerdict::Proceed) {
        if (o.json) {
            nlohmann::json j;
            j["verdict"] = to_string(rs.verdict);
            j["candidates"] = nlohmann::json::array();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "verdict: " << to_string(rs.verdict) << "\ncandidates: none\n";
        }
        return 0;
    }
    const auto cands = generate_candidates(rs.lhs, rs.rhs);
    if (o.json) {
        nlohmann::json j;
        j["verdict"] = to_string(rs.verdict);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : cands) {
            nlohmann::json e;
            nlohmann::json sel = nlohmann::json::array();
            for (int col : c.selection) sel.push_back(col + 1);
            e["selection"] = std::move(sel);
            e["matrix"] = matrix_json(c.g);
            arr.push_back(std::move(e));
        }
        j["candidates"] = std::move(arr);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "candidates: " << cands.size() << "\n";
    int idx = 1;
    for (const auto& c : cands) {
        std::cout << "[" << idx++ << "] fix " << selection_str(c.selection) << "\n";
        write_matrix(std::cout, c.g);
    }
    return 0;
}

template <class S>
int run_check(const Options& o) {
    const ProblemInstance<S> inst(load_matrix<S>(o.path_lhs), load_matrix<S>(o.path_rhs));
    const Matrix<S> x = load_vector<S>(o.path_x);
    const bool ok = check_solution(inst, x);
    if (o.json)
        std::cout << nlohmann::json{{"solution", ok}}.dump(2) << "\n";
    else
        std::cout << "solution: " << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : 2;
}

template <class S>
int run_oracle(const Options& o) {
    const ProblemInstance<S> inst(load_matrix<S>(o.path_lhs), load_matrix<S>(o.path_rhs));
    const OracleReport rep = compare_pipelines(inst, o.cap, kOracleSampleSize, o.seed);
    if (o.json)
        std::cout << oracle_json(rep).dump(2) << "\n";
    else
        print_oracle_text(std::cout, rep);
    const bool ok = rep.verdicts_match && rep.spans_equal && rep.soundness_failures == 0;
    return ok ? 0 : 2;
}

template <class S>
int dispatch(const Options& o) {
    if (o.cmd == "solve") return run_solve<S>(o);
    if (o.cmd == "refine") return run_refine<S>(o);
    if (o.cmd == "gens") return run_gens<S>(o);
    if (o.cmd == "check") return run_check<S>(o);
    if (o.cmd == "oracle") return run_oracle<S>(o);
    std::cerr << "error: unknown command\n";
    return 1;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"tropsolve: all regular solutions of two-sided (max,+) vector inequalities"};
    app.require_subcommand(1);

    Options o;
    app.add_option("--mode", o.mode, "arithmetic mode")
        ->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();
    app.add_option("--eps", o.eps, "comparison tolerance in float mode")->capture_default_str();
    app.add_option("--cap", o.cap, "exhaustive candidate cap")->capture_default_str();
    app.add_flag("--json", o.json, "emit JSON instead of text");
    app.add_option("--seed", o.seed, "seed for oracle sampling")->capture_default_str();

    auto add_instance_args = [&](CLI::App* sub) {
        sub->add_option("lhs", o.path_lhs, "left-hand matrix file")->required();
        sub->add_option("rhs", o.path_rhs, "right-hand matrix file")->required();
        sub->fallthrough();
    };

    CLI::App* solve_cmd =
        app.add_subcommand("solve", "compute the generating matrix of all regular solutions");
    add_instance_args(solve_cmd);
    solve_cmd->add_flag("--lemma3", o.lemma3, "also report the star-closure shortcut");
    solve_cmd->add_flag("--oracle", o.oracle, "append a brute-force cross-check");
    solve_cmd->add_option("--out", o.out, "write the generating matrix to this file");

    CLI::App* refine_cmd = app.add_subcommand("refine", "print the refined instance");
    add_instance_args(refine_cmd);

    CLI::App* gens_cmd = app.add_subcommand("gens", "print the candidate matrices");
    add_instance_args(gens_cmd);

    CLI::App* check_cmd = app.add_subcommand("check", "test a vector against the instance");
    add_instance_args(check_cmd);
    check_cmd->add_option("x", o.path_x, "vector file")->required();

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "compare the solver against brute force");
    add_instance_args(oracle_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    o.cmd = app.get_subcommands().front()->get_name();
    try {
        if (o.mode == "float") {
            FloatNum::epsilon = o.eps;
            return dispatch<FloatScalar>(o);
        }
        return dispatch<RatScalar>(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace trop::cli
