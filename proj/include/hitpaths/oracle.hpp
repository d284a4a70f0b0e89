#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hitpaths/exec.hpp"
#include "hitpaths/flower.hpp"
#include "hitpaths/graph.hpp"
#include "hitpaths/instance_io.hpp"

namespace hitpaths {

// Reference solvers. They share no code with the structured solvers they are
// used to check.

struct SetSystem {
    int universe = 0;  // elements are 1..universe
    std::vector<std::vector<int>> sets;
};

SetSystem to_set_system(const HitPathsInstance& inst);

struct MinHittingSet {
    std::optional<int> size;  // nullopt: every hitting set is larger than the cap
    std::vector<int> witness; // ascending
};

// Exact minimum hitting set of size at most `cap` by iterative deepening over
// a bounded search tree: branch on the elements of the first unhit set in
// ascending order. The witness is the first one found at the optimal depth.
MinHittingSet exact_min_hitting_set(const SetSystem& sys, int cap, Exec exec = Exec::Serial);

// Decides the instance with exact_min_hitting_set at cap = t.
Solution oracle_solve(const HitPathsInstance& inst, Exec exec = Exec::Serial);

inline constexpr std::uint64_t kDefaultFlowerCap = 50'000'000;

// Tries every combination of exactly budgets[i] vertices per petal in
// lexicographic order. Throws CapExceeded when the product of binomials is
// above `cap`.
Solution flower_bruteforce(const FlowerInstance& inst, std::uint64_t cap = kDefaultFlowerCap);

// First k-clique in lexicographic order of vertex subsets.
std::optional<std::vector<VertexId>> has_k_clique(const Graph& g, int k);

}  // namespace hitpaths
