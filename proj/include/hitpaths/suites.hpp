#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hitpaths/exec.hpp"
#include "hitpaths/reductions.hpp"

namespace hitpaths {

// Random instance #i of the agreement corpus: k = i mod 5, n in [5, 18],
// up to 12 paths of at most 6 vertices, t near the optimum.
GeneratorConfig agreement_config(std::uint64_t base_seed, int i);

struct AgreementSummary {
    int instances = 0;
    int yes = 0;
    int agreements = 0;
    int verified = 0;  // YES answers that passed verify_solution
    std::vector<std::string> failures;
};

// Solver verdict against exact_min_hitting_set at cap t.
AgreementSummary run_agreement_suite(int count, std::uint64_t base_seed, Exec exec = Exec::Serial);

struct BoundSummary {
    int instances = 0;
    int branching = 0;  // instances that reached the branching stage
    int violations = 0;
    std::uint64_t max_branches = 0;
    double max_branch_fraction = 0;  // branches / 2^(5k)
    std::vector<std::string> failures;
};

// Structural bounds on the preprocessed, connected graphs of the agreement
// corpus, and the branch count reported by solve.
BoundSummary run_bound_suite(int count, std::uint64_t base_seed);

struct ScalingRow {
    int k = 0;
    int n = 0;
    std::uint64_t branches = 0;   // per solve
    double median_seconds = 0;    // per solve
};

// Median exhaustive serial solve time over `seeds` subdivided-cubic
// instances with k >= 2. Each measurement repeats the solve until at least
// `min_seconds` elapsed.
ScalingRow measure_scaling(int k, int n, int paths, int seeds, double min_seconds = 0.05);

}  // namespace hitpaths
