#include "hitpaths/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>

#include "hitpaths/error.hpp"
#include "hitpaths/exec.hpp"
#include "hitpaths/fpt.hpp"
#include "hitpaths/instance_io.hpp"
#include "hitpaths/oracle.hpp"
#include "hitpaths/reductions.hpp"
#include "hitpaths/suites.hpp"
#include "hitpaths/tree_cycle.hpp"

namespace hitpaths {

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::optional<int> env_cap() {
    const char* raw = std::getenv("HITPATHS_CAP");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 0 || v > 1'000'000'000) throw ValidationError("HITPATHS_CAP must be a nonnegative integer");
    return static_cast<int>(v);
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty()) {
        out << text;
    } else {
        write_file(path, text);
    }
}

const char* path_name(SolvePath p) {
    switch (p) {
        case SolvePath::Empty: return "empty";
        case SolvePath::Cycle: return "cycle";
        case SolvePath::Branching: return "branching";
    }
    return "?";
}

void print_stats(std::ostream& out, const SolveStats& s) {
    out << "c path " << path_name(s.path) << "\n";
    out << "c k " << s.k << "\n";
    out << "c high_degree " << s.s_size << "\n";
    out << "c components " << s.c_size << "\n";
    out << "c branches_enumerated " << s.branches_enumerated << "\n";
    out << "c branches_within_budget " << s.branches_within_budget << "\n";
    out << "c flower_calls " << s.flower_calls << "\n";
    out << "c direct_verdicts " << s.direct_verdicts << "\n";
    out << "c infeasible_branches " << s.infeasible_branches << "\n";
    if (s.winning_branch) out << "c winning_branch " << *s.winning_branch << "\n";
    if (s.best_cost) out << "c best_cost " << *s.best_cost << "\n";
}

Solution solve_subgraphs(const HitPathsInstance& inst, std::ostream& out, bool stats, Exec exec) {
    if (is_tree(inst.graph)) {
        if (stats) out << "c path tree\n";
        auto chosen = hit_subtrees_in_tree(inst.graph, inst.paths);
        if (static_cast<int>(chosen.size()) > inst.t) return Solution::no();
        return Solution::yes(std::move(chosen), inst.paths);
    }
    if (stats) out << "c path oracle\n";
    return oracle_solve(inst, exec);
}

void print_table_row(std::ostream& out, const std::string& name, const std::string& value) {
    out << std::left << std::setw(28) << name << value << "\n";
}

int bench_agreement(std::ostream& out, int count, std::uint64_t seed, Exec exec) {
    const auto s = run_agreement_suite(count, seed, exec);
    print_table_row(out, "instances", std::to_string(s.instances));
    print_table_row(out, "yes", std::to_string(s.yes));
    print_table_row(out, "agreements", std::to_string(s.agreements));
    print_table_row(out, "verified", std::to_string(s.verified));
    for (const auto& f : s.failures) out << "c failure " << f << "\n";
    return s.failures.empty() ? kExitYes : kExitNo;
}

int bench_bounds(std::ostream& out, int count, std::uint64_t seed) {
    const auto s = run_bound_suite(count, seed);
    print_table_row(out, "instances", std::to_string(s.instances));
    print_table_row(out, "branching", std::to_string(s.branching));
    print_table_row(out, "max_branches", std::to_string(s.max_branches));
    print_table_row(out, "max_fraction_of_2^5k", std::to_string(s.max_branch_fraction));
    print_table_row(out, "violations", std::to_string(s.violations));
    for (const auto& f : s.failures) out << "c failure " << f << "\n";
    return s.violations == 0 ? kExitYes : kExitNo;
}

int bench_scaling(std::ostream& out, int count) {
    const int n = 40, paths = 12;
    out << std::left << std::setw(4) << "k" << std::setw(6) << "n" << std::setw(12) << "branches" << std::setw(16)
        << "median_s" << "s_per_branch\n";
    std::vector<ScalingRow> rows;
    for (int k = 2; k <= 4; ++k) {
        rows.push_back(measure_scaling(k, n, paths, count));
        const auto& r = rows.back();
        out << std::setw(4) << r.k << std::setw(6) << r.n << std::setw(12) << r.branches << std::setw(16)
            << r.median_seconds << r.median_seconds / static_cast<double>(r.branches) << "\n";
    }
    const double branch_ratio = static_cast<double>(rows.back().branches) / static_cast<double>(rows.front().branches);
    const double time_ratio = rows.back().median_seconds / rows.front().median_seconds;
    out << "c branch_ratio_k4_k2 " << branch_ratio << "\n";
    out << "c time_ratio_k4_k2 " << time_ratio << "\n";
    out << "c normalized " << time_ratio / branch_ratio << "\n";
    return kExitYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solver for hitting paths in graphs of small cyclomatic number", "hitpaths"};
    app.require_subcommand(1);

    std::string file, file2, out_path, kind;
    bool stats = false;
    int threads = 1;

    auto* solve_cmd = app.add_subcommand("solve", "Decide an instance with the branching solver");
    solve_cmd->add_option("instance", file, "Instance file")->required();
    solve_cmd->add_flag("--stats", stats, "Print branch statistics as comment lines");
    solve_cmd->add_option("--threads", threads, "Worker threads for branch evaluation")->check(CLI::Range(1, 1024));
    solve_cmd->add_option("--out", out_path, "Write the solution line to this file");

    auto* oracle_cmd = app.add_subcommand("oracle", "Decide an instance by exhaustive search");
    oracle_cmd->add_option("instance", file, "Instance file")->required();
    oracle_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 1024));

    GeneratorConfig cfg;
    std::optional<int> fixed_t;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->add_option("--seed", cfg.seed, "Random seed")->required();
    gen_cmd->add_option("--k", cfg.k, "Cyclomatic number")->required()->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--n", cfg.n, "Number of vertices")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--paths", cfg.paths, "Number of paths")->required()->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--max-len", cfg.max_path_len, "Maximum path length in vertices")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--t", fixed_t, "Fixed budget (default: near the optimum)");
    gen_cmd->add_option("--out", out_path, "Output file (default: standard output)");

    int clique_k = 3;
    auto* reduce_cmd = app.add_subcommand("reduce", "Apply a hardness reduction");
    reduce_cmd->add_option("kind", kind, "clique3sat | sat3tree | sat3fvs2")
        ->required()
        ->check(CLI::IsMember({"clique3sat", "sat3tree", "sat3fvs2"}));
    reduce_cmd->add_option("input", file, "Input file")->required();
    reduce_cmd->add_option("output", out_path, "Output file")->required();
    reduce_cmd->add_option("--k", clique_k, "Clique size for clique3sat")->check(CLI::Range(2, 64));

    auto* verify_cmd = app.add_subcommand("verify", "Check a solution against an instance");
    verify_cmd->add_option("instance", file, "Instance file")->required();
    verify_cmd->add_option("solution", file2, "Solution file")->required();

    std::string suite;
    int count = 0;
    std::uint64_t seed = 1;
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark or agreement suite");
    bench_cmd->add_option("--suite", suite, "agreement | bounds | scaling")
        ->required()
        ->check(CLI::IsMember({"agreement", "bounds", "scaling"}));
    bench_cmd->add_option("--count", count, "Number of instances (default per suite)")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", seed, "Base seed");
    bench_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 1024));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        const Exec exec = threads > 1 ? Exec::Parallel : Exec::Serial;
        if (threads > 1) set_threads(threads);

        if (*solve_cmd) {
            const auto inst = parse_instance(read_file(file));
            Solution sol;
            std::string stats_text;
            if (inst.kind == TargetKind::Subgraphs) {
                std::ostringstream os;
                sol = solve_subgraphs(inst, os, stats, exec);
                stats_text = os.str();
            } else {
                auto res = solve(inst, {exec, false});
                sol = std::move(res.solution);
                if (stats) {
                    std::ostringstream os;
                    print_stats(os, res.stats);
                    stats_text = os.str();
                }
            }
            emit(out, out_path, write_solution(sol) + "\n");
            out << stats_text;
            return sol.verdict == Verdict::Yes ? kExitYes : kExitNo;
        }

        if (*oracle_cmd) {
            const auto inst = parse_instance(read_file(file));
            const int cap = std::min(inst.t, env_cap().value_or(inst.t));
            auto res = exact_min_hitting_set(to_set_system(inst), cap, exec);
            if (!res.size && cap < inst.t) throw CapExceeded("no solution within HITPATHS_CAP=" + std::to_string(cap));
            const Solution sol = res.size ? Solution::yes(res.witness, inst.paths) : Solution::no();
            out << write_solution(sol) << "\n";
            return sol.verdict == Verdict::Yes ? kExitYes : kExitNo;
        }

        if (*gen_cmd) {
            if (fixed_t) {
                cfg.budget = BudgetPolicy::Fixed;
                cfg.t = *fixed_t;
            }
            emit(out, out_path, write_instance(gen_random_instance(cfg)));
            return kExitYes;
        }

        if (*reduce_cmd) {
            const std::string text = read_file(file);
            if (kind == "clique3sat") {
                try {
                    write_file(out_path, write_signed_formula(clique_to_signed3sat(parse_graph(text), clique_k)));
                } catch (const TooFewEdges& e) {
                    err << "no " << clique_k << "-clique: " << e.what() << "\n";
                    return kExitNo;
                }
            } else if (kind == "sat3tree") {
                write_file(out_path, write_instance(signed3sat_to_subtree_instance(parse_signed_formula(text))));
            } else {
                write_file(out_path, write_instance(signed3sat_to_fvs2_instance(parse_signed_formula(text))));
            }
            return kExitYes;
        }

        if (*verify_cmd) {
            const auto inst = parse_instance(read_file(file));
            const auto sol = parse_solution(read_file(file2));
            if (sol.verdict == Verdict::No) {
                err << "solution claims NO; nothing to verify\n";
                return kExitNo;
            }
            const auto report = verify_solution(inst, sol);
            if (!report.ok) {
                err << "invalid: " << report.message << "\n";
                return kExitError;
            }
            out << "c valid\n";
            return kExitYes;
        }

        if (*bench_cmd) {
            if (suite == "agreement") return bench_agreement(out, count > 0 ? count : 500, seed, exec);
            if (suite == "bounds") return bench_bounds(out, count > 0 ? count : 500, seed);
            return bench_scaling(out, count > 0 ? count : 5);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace hitpaths
