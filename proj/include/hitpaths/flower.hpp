#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "hitpaths/graph.hpp"
#include "hitpaths/instance_io.hpp"
#include "hitpaths/mv_sat.hpp"
#include "hitpaths/tree_cycle.hpp"

namespace hitpaths {

// A graph whose core z leaves only paths (petals) behind when removed, with
// no interior petal vertex adjacent to z. Every petal must receive exactly
// budgets[i] solution vertices and z may never be chosen.
struct FlowerInstance {
    Graph graph;
    VertexId core = 0;
    std::vector<std::vector<VertexId>> petals;  // left-to-right orientation
    std::vector<VertexSeq> paths;
    std::vector<int> budgets;  // >= 1, one per petal
};

// Throws ValidationError unless the instance satisfies the flower invariants.
void validate_flower(const FlowerInstance& inst);

// Canonical solution of a petal started at position `start`: the start
// itself, then the right end of each unmet interval in order of right end,
// then the highest free positions >= start until `budget` is reached.
// nullopt when an interval ends before `start` or the size is not `budget`.
std::optional<std::vector<int>> canonical_solution(int petal_length, std::span<const Interval> internal,
                                                   int budget, int start);

// Start positions with a canonical solution, as [first, second]; nullopt when
// there are none. Throws ContiguityViolation if the set has a gap.
std::optional<std::pair<int, int>> canonical_range(int petal_length, std::span<const Interval> internal,
                                                   int budget);

// All canonical solutions of one petal, indexed by start position.
struct PetalCanon {
    int length = 0;
    std::vector<std::optional<std::vector<int>>> by_start;  // index 0 unused
    std::optional<std::pair<int, int>> range;

    static PetalCanon compute(int petal_length, std::span<const Interval> internal, int budget);
};

// A maximal piece of a z-crossing path inside one petal. It touches z at the
// left end of the petal (prefix [1, cut]) or at the right end (suffix
// [cut, length]).
struct Fragment {
    enum class Kind { Prefix, Suffix };
    int petal = 1;  // 1-based
    Kind kind = Kind::Prefix;
    int cut = 1;
};

// Literal over x_petal that holds exactly for the start positions whose
// canonical solution meets the fragment, or nullopt when none does.
std::optional<SignedLiteral> fragment_literal(const Fragment& fragment, const PetalCanon& canon);

// The signed 2-CNF of a flower instance. `no_reason` is set when the
// construction already proves the instance infeasible.
struct FlowerFormula {
    SignedFormula formula;
    std::vector<PetalCanon> canon;
    const char* no_reason = nullptr;
};

FlowerFormula build_flower_formula(const FlowerInstance& inst);

// Polynomial-time exact solver. A YES solution's chosen set is in the
// instance's vertex ids and has been checked against every path and budget.
Solution solve_flower(const FlowerInstance& inst);

}  // namespace hitpaths
