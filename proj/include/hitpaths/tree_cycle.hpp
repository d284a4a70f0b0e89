#pragma once

#include <span>
#include <vector>

#include "hitpaths/graph.hpp"

namespace hitpaths {

// Closed range of 1-based positions on a path, lo <= hi.
struct Interval {
    int lo = 1;
    int hi = 1;

    bool contains(int p) const { return lo <= p && p <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

// Closed range of positions on a cycle of some length L, walked forward from
// `first` to `last` (wrapping past L back to 1). first == last is a single
// vertex; last == first - 1 (mod L) covers the whole cycle.
struct CycleArc {
    int first = 1;
    int last = 1;

    bool contains(int p, int cycle_length) const;
    friend bool operator==(const CycleArc&, const CycleArc&) = default;
};

struct PositionSet {
    int size = 0;
    std::vector<int> positions;  // ascending

    friend bool operator==(const PositionSet&, const PositionSet&) = default;
};

// Minimum set of positions in 1..length meeting every interval: scan by right
// endpoint and stab the right end of each interval not yet met.
PositionSet stab_intervals(int length, std::span<const Interval> intervals);

// Minimum vertex set meeting every subtree of `tree`. The tree is rooted at
// its lowest-id leaf; the deepest subtree top is taken first (ties by smaller
// id). Throws NotATree or NotASubtree.
std::vector<VertexId> hit_subtrees_in_tree(const Graph& tree, const std::vector<VertexSeq>& subtrees);

// Minimum position set meeting every arc of a cycle of length >= 3. Each
// vertex v is tried as a member; the rest breaks open into a path solved by
// stab_intervals. Among optima, the smallest tried v wins.
PositionSet hit_paths_in_cycle(int cycle_length, std::span<const CycleArc> arcs);

}  // namespace hitpaths
