#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hitpaths/exec.hpp"
#include "hitpaths/flower.hpp"
#include "hitpaths/graph.hpp"
#include "hitpaths/instance_io.hpp"

namespace hitpaths {

// Instance after repeatedly deleting vertices of degree <= 1. A deleted
// vertex that is a singleton target is forced into the solution.
struct PreprocessResult {
    HitPathsInstance reduced;            // reduced.t == max(t_remaining, 0)
    std::vector<VertexId> forced;        // original ids, ascending
    int t_remaining = 0;                 // may be negative
    std::vector<VertexId> new_to_old;    // index 0 unused
    std::vector<VertexId> old_to_new;    // 0 for deleted vertices
};

PreprocessResult preprocess(const HitPathsInstance& inst);

// Per-component cost of hitting the targets that lie wholly inside it.
struct ComponentBudget {
    int opt = 0;
    std::vector<Interval> internal;  // positions along the component
    PositionSet optimum;             // a minimum stabbing set
};

std::vector<ComponentBudget> component_budgets(std::span<const PathComponent> comps,
                                               const std::vector<VertexSeq>& paths, int num_vertices);

// One guess: which high-degree vertices are in the solution (bit i of
// s_mask selects S[i]) and which components get opt(C) rather than opt(C)+1
// vertices (bit j of c_mask selects component j).
struct BranchSpec {
    std::uint64_t s_mask = 0;
    std::uint64_t c_mask = 0;
    std::vector<int> budgets;  // per component
    int cost = 0;              // |S'| + sum of budgets
};

BranchSpec make_branch(std::uint64_t s_mask, std::uint64_t c_mask, std::span<const ComponentBudget> budgets);

// Flower built for one branch; `origin` maps flower ids back to the graph the
// branch was built from (0 for the core).
struct FlowerBranch {
    FlowerInstance flower;
    std::vector<VertexId> origin;
};

struct BranchInfeasible {
    std::string reason;
};

// The branch chose every high-degree vertex, so no core remains.
struct DirectVerdict {
    bool feasible = false;
};

using BranchOutcome = std::variant<FlowerBranch, BranchInfeasible, DirectVerdict>;

// Applies the four reduction steps (drop targets hit by S', drop targets
// covering a funded component, delete unfunded components, identify S \ S'
// into the core) and checks the result is a flower carrying only simple
// paths. Throws FlowerShapeViolation otherwise.
BranchOutcome build_flower_branch(const Graph& g, std::span<const VertexId> s, std::span<const PathComponent> comps,
                                  const std::vector<VertexSeq>& paths, const BranchSpec& spec);

// Exactly `budget` positions of a component that stab all of its internal
// intervals: the optimum padded with the highest unused positions.
std::vector<int> padded_component_fill(int length, const PositionSet& optimum, int budget);

struct SolveOptions {
    Exec exec = Exec::Serial;
    // Evaluate every branch to report the smallest feasible cost.
    bool exhaustive = false;
};

enum class SolvePath { Empty, Cycle, Branching };

struct SolveStats {
    SolvePath path = SolvePath::Empty;
    int k = 0;                    // cyclomatic number after preprocessing
    int s_size = 0;               // |S|
    int c_size = 0;               // number of components of G - S
    std::uint64_t branches_enumerated = 0;
    std::uint64_t branches_within_budget = 0;
    std::uint64_t branches_evaluated = 0;
    std::uint64_t flower_calls = 0;
    std::uint64_t direct_verdicts = 0;
    std::uint64_t infeasible_branches = 0;
    std::optional<int> best_cost;  // exhaustive mode, or the cost that was found
    std::optional<std::uint64_t> winning_branch;
};

struct SolveResult {
    Solution solution;
    SolveStats stats;
};

// Decides whether at most t vertices hit every path. A YES answer has been
// verified against the input instance.
SolveResult solve(const HitPathsInstance& inst, const SolveOptions& opts = {});

// Position of each vertex along a 2-regular connected graph, walking from
// vertex 1 towards its smaller neighbour. order[i] is the vertex at position
// i + 1.
std::vector<VertexId> cycle_order(const Graph& g);
CycleArc path_to_arc(std::span<const VertexId> path, const std::vector<int>& position, int cycle_length);

}  // namespace hitpaths
