#include "hitpaths/tree_cycle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hitpaths/error.hpp"

namespace hitpaths {

bool CycleArc::contains(int p, int cycle_length) const {
    // Offset of p from `first` walking forward, compared to the arc's span.
    int span = (last - first + cycle_length) % cycle_length;
    int offset = (p - first + cycle_length) % cycle_length;
    return offset <= span;
}

PositionSet stab_intervals(int length, std::span<const Interval> intervals) {
    std::vector<Interval> sorted(intervals.begin(), intervals.end());
    for (const auto& iv : sorted)
        if (iv.lo < 1 || iv.hi > length || iv.lo > iv.hi)
            throw ValidationError("interval [" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) +
                                  "] invalid for length " + std::to_string(length));
    std::stable_sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) { return a.hi < b.hi; });
    PositionSet out;
    int last = 0;
    for (const auto& iv : sorted) {
        if (last >= iv.lo) continue;  // last <= iv.hi holds by the sort order
        last = iv.hi;
        out.positions.push_back(last);
    }
    out.size = static_cast<int>(out.positions.size());
    return out;
}

std::vector<VertexId> hit_subtrees_in_tree(const Graph& tree, const std::vector<VertexSeq>& subtrees) {
    if (!is_tree(tree)) throw NotATree("input graph is not a tree");
    const int n = tree.num_vertices();
    for (std::size_t i = 0; i < subtrees.size(); ++i)
        if (!induces_connected(tree, subtrees[i]))
            throw NotASubtree("target " + std::to_string(i) + " is not a subtree");

    VertexId root = 1;
    for (VertexId v = 1; v <= n; ++v) {
        if (tree.degree(v) <= 1) {
            root = v;
            break;
        }
    }
    std::vector<int> depth(static_cast<std::size_t>(n) + 1, -1);
    std::vector<VertexId> order{root};
    depth[root] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (VertexId w : tree.neighbors(order[i]))
            if (depth[w] < 0) {
                depth[w] = depth[order[i]] + 1;
                order.push_back(w);
            }

    // The top of a subtree is its unique shallowest vertex. A target lies in
    // the subtree rooted at v iff its top does.
    std::vector<VertexId> top(subtrees.size());
    for (std::size_t i = 0; i < subtrees.size(); ++i)
        top[i] = *std::min_element(subtrees[i].begin(), subtrees[i].end(), [&](VertexId a, VertexId b) {
            return depth[a] != depth[b] ? depth[a] < depth[b] : a < b;
        });
    std::vector<std::size_t> idx(subtrees.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        VertexId ta = top[a], tb = top[b];
        return depth[ta] != depth[tb] ? depth[ta] > depth[tb] : ta < tb;
    });

    std::vector<char> hit(subtrees.size(), 0);
    std::vector<VertexId> chosen;
    for (std::size_t i : idx) {
        if (hit[i]) continue;
        VertexId v = top[i];
        chosen.push_back(v);
        for (std::size_t j = 0; j < subtrees.size(); ++j)
            if (!hit[j] && std::find(subtrees[j].begin(), subtrees[j].end(), v) != subtrees[j].end()) hit[j] = 1;
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

PositionSet hit_paths_in_cycle(int cycle_length, std::span<const CycleArc> arcs) {
    const int len = cycle_length;
    if (len < 3) throw ValidationError("cycle length must be at least 3");
    for (const auto& a : arcs)
        if (a.first < 1 || a.first > len || a.last < 1 || a.last > len)
            throw ValidationError("arc endpoint outside the cycle");
    if (arcs.empty()) return {};

    PositionSet best;
    best.size = len + 1;
    for (int v = 1; v <= len; ++v) {
        // Open the cycle at v: position p maps to (p - v) mod len on a path
        // of length len - 1 running v+1, v+2, ..., v-1.
        std::vector<Interval> rest;
        for (const auto& a : arcs) {
            if (a.contains(v, len)) continue;
            int lo = (a.first - v + len) % len;
            int hi = (a.last - v + len) % len;
            rest.push_back({lo, hi});
        }
        auto sub = stab_intervals(len - 1, rest);
        if (sub.size + 1 < best.size) {
            best.size = sub.size + 1;
            best.positions = {v};
            for (int p : sub.positions) best.positions.push_back((p + v - 1) % len + 1);
        }
    }
    std::sort(best.positions.begin(), best.positions.end());
    return best;
}

}  // namespace hitpaths
