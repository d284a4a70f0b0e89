#include "hitpaths/suites.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "hitpaths/error.hpp"
#include "hitpaths/fpt.hpp"
#include "hitpaths/oracle.hpp"

namespace hitpaths {

GeneratorConfig agreement_config(std::uint64_t base_seed, int i) {
    std::mt19937_64 rng(base_seed * 1'000'003ULL + static_cast<std::uint64_t>(i));
    GeneratorConfig cfg;
    cfg.seed = rng();
    cfg.k = i % 5;
    cfg.n = uniform_int(rng, 5, 18);
    cfg.paths = uniform_int(rng, 0, 12);
    cfg.max_path_len = uniform_int(rng, 1, 6);
    cfg.budget = BudgetPolicy::NearOptimum;
    return cfg;
}

AgreementSummary run_agreement_suite(int count, std::uint64_t base_seed, Exec exec) {
    AgreementSummary out;
    for (int i = 0; i < count; ++i) {
        const auto cfg = agreement_config(base_seed, i);
        const auto inst = gen_random_instance(cfg);
        ++out.instances;
        const std::string tag = "seed " + std::to_string(cfg.seed);
        Solution fast;
        try {
            fast = solve(inst, {exec, false}).solution;
        } catch (const Error& e) {
            out.failures.push_back(tag + ": " + e.what());
            continue;
        }
        const auto ref = exact_min_hitting_set(to_set_system(inst), inst.t);
        const bool ref_yes = ref.size.has_value();
        const bool fast_yes = fast.verdict == Verdict::Yes;
        if (fast_yes) {
            ++out.yes;
            if (verify_solution(inst, fast).ok) {
                ++out.verified;
            } else {
                out.failures.push_back(tag + ": solution does not verify");
            }
        }
        if (fast_yes == ref_yes) {
            ++out.agreements;
        } else {
            out.failures.push_back(tag + ": solver says " + (fast_yes ? "YES" : "NO"));
        }
    }
    return out;
}

BoundSummary run_bound_suite(int count, std::uint64_t base_seed) {
    BoundSummary out;
    for (int i = 0; i < count; ++i) {
        auto cfg = agreement_config(base_seed, i);
        cfg.budget = BudgetPolicy::Fixed;
        cfg.t = cfg.n;
        const auto inst = gen_random_instance(cfg);
        ++out.instances;
        const std::string tag = "seed " + std::to_string(cfg.seed);

        const auto pre = preprocess(inst);
        if (pre.reduced.graph.num_vertices() > 0) {
            const Graph g = connect_components(pre.reduced.graph);
            const auto s = high_degree_set(g);
            const int k = cyclomatic_number(g);
            if (!s.empty()) {
                const int c = static_cast<int>(path_components(g, s).size());
                if (static_cast<int>(s.size()) > 2 * k - 2 || c > k + static_cast<int>(s.size()) - 1) {
                    ++out.violations;
                    out.failures.push_back(tag + ": structural bound exceeded");
                }
            }
        }
        const auto res = solve(inst, {Exec::Serial, true});
        if (res.stats.path != SolvePath::Branching) continue;
        ++out.branching;
        const std::uint64_t cap = std::uint64_t{1} << (5 * res.stats.k);
        out.max_branches = std::max(out.max_branches, res.stats.branches_enumerated);
        out.max_branch_fraction =
            std::max(out.max_branch_fraction, static_cast<double>(res.stats.branches_enumerated) / static_cast<double>(cap));
        if (res.stats.branches_enumerated > cap) {
            ++out.violations;
            out.failures.push_back(tag + ": branch count above 2^(5k)");
        }
    }
    return out;
}

ScalingRow measure_scaling(int k, int n, int paths, int seeds, double min_seconds) {
    using clock = std::chrono::steady_clock;
    ScalingRow row{k, n, 0, 0};
    std::vector<double> times;
    for (int s = 0; s < seeds; ++s) {
        const auto inst = gen_scaling_instance(k, n, paths, 4, static_cast<std::uint64_t>(s) + 1);
        int reps = 0;
        const auto start = clock::now();
        double elapsed = 0;
        do {
            const auto res = solve(inst, {Exec::Serial, true});
            row.branches = res.stats.branches_enumerated;
            ++reps;
            elapsed = std::chrono::duration<double>(clock::now() - start).count();
        } while (elapsed < min_seconds);
        times.push_back(elapsed / reps);
    }
    std::sort(times.begin(), times.end());
    row.median_seconds = times[times.size() / 2];
    return row;
}

}  // namespace hitpaths
