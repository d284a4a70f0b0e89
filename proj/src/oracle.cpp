#include "hitpaths/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hitpaths/error.hpp"

namespace hitpaths {

SetSystem to_set_system(const HitPathsInstance& inst) {
    SetSystem sys;
    sys.universe = inst.graph.num_vertices();
    for (const auto& p : inst.paths) sys.sets.emplace_back(p.begin(), p.end());
    return sys;
}

namespace {

class BoundedSearch {
public:
    explicit BoundedSearch(const SetSystem& sys) : sets_(sys.sets), chosen_(static_cast<std::size_t>(sys.universe) + 1, 0) {
        for (auto& s : sets_) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
        }
    }

    // Depth-first search for a hitting set that adds at most `budget` elements
    // to the current selection.
    bool search(int budget) {
        const std::vector<int>* unhit = first_unhit();
        if (unhit == nullptr) return true;
        if (budget == 0) return false;
        for (int e : *unhit) {
            if (try_with(e, budget)) return true;
        }
        return false;
    }

    bool try_with(int e, int budget) {
        chosen_[e] = 1;
        path_.push_back(e);
        if (search(budget - 1)) return true;
        path_.pop_back();
        chosen_[e] = 0;
        return false;
    }

    const std::vector<int>* first_unhit() const {
        for (const auto& s : sets_) {
            bool hit = false;
            for (int e : s)
                if (chosen_[e]) {
                    hit = true;
                    break;
                }
            if (!hit) return &s;
        }
        return nullptr;
    }

    std::vector<int> witness() const {
        auto w = path_;
        std::sort(w.begin(), w.end());
        return w;
    }

private:
    std::vector<std::vector<int>> sets_;
    std::vector<char> chosen_;
    std::vector<int> path_;
};

}  // namespace

MinHittingSet exact_min_hitting_set(const SetSystem& sys, int cap, Exec exec) {
    if (cap < 0) throw ValidationError("cap must be nonnegative");
    for (const auto& s : sys.sets) {
        if (s.empty()) return {};
        for (int e : s)
            if (e < 1 || e > sys.universe) throw ValidationError("set element outside the universe");
    }
    if (sys.sets.empty()) return {0, {}};

    for (int depth = 1; depth <= cap; ++depth) {
        if (exec == Exec::Serial) {
            BoundedSearch bs(sys);
            if (bs.search(depth)) return {depth, bs.witness()};
            continue;
        }
        // Parallel over the elements of the first set; the smallest
        // successful branch gives the same witness as the serial search.
        std::vector<int> first = sys.sets.front();
        std::sort(first.begin(), first.end());
        first.erase(std::unique(first.begin(), first.end()), first.end());
        const int branches = static_cast<int>(first.size());
        std::vector<std::vector<int>> witnesses(first.size());
        std::atomic<int> best{std::numeric_limits<int>::max()};
#pragma omp parallel for schedule(dynamic, 1)
        for (int b = 0; b < branches; ++b) {
            if (b > best.load(std::memory_order_relaxed)) continue;
            BoundedSearch bs(sys);
            if (bs.try_with(first[b], depth)) {
                witnesses[b] = bs.witness();
                atomic_min(best, b);
            }
        }
        if (best.load() != std::numeric_limits<int>::max()) return {depth, witnesses[best.load()]};
    }
    return {};
}

Solution oracle_solve(const HitPathsInstance& inst, Exec exec) {
    auto res = exact_min_hitting_set(to_set_system(inst), std::max(inst.t, 0), exec);
    if (!res.size) return Solution::no();
    return Solution::yes(res.witness, inst.paths);
}

namespace {

bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i + 1) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    return true;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace

Solution flower_bruteforce(const FlowerInstance& inst, std::uint64_t cap) {
    const std::size_t petals = inst.petals.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < petals; ++i) {
        std::uint64_t c = binomial(static_cast<int>(inst.petals[i].size()), inst.budgets[i]);
        if (c == 0) return Solution::no();
        if (total > cap / c) throw CapExceeded("flower enumeration exceeds cap " + std::to_string(cap));
        total *= c;
    }

    std::vector<std::vector<int>> comb(petals);
    for (std::size_t i = 0; i < petals; ++i)
        for (int j = 1; j <= inst.budgets[i]; ++j) comb[i].push_back(j);

    std::vector<char> mask(static_cast<std::size_t>(inst.graph.num_vertices()) + 1, 0);
    while (true) {
        std::fill(mask.begin(), mask.end(), 0);
        for (std::size_t i = 0; i < petals; ++i)
            for (int pos : comb[i]) mask[inst.petals[i][pos - 1]] = 1;
        bool all_hit = std::all_of(inst.paths.begin(), inst.paths.end(),
                                   [&](const VertexSeq& p) { return hitting_vertex(p, mask).has_value(); });
        if (all_hit) {
            std::vector<VertexId> chosen;
            for (std::size_t i = 0; i < petals; ++i)
                for (int pos : comb[i]) chosen.push_back(inst.petals[i][pos - 1]);
            return Solution::yes(std::move(chosen), inst.paths);
        }
        // Odometer over petals, last petal fastest.
        std::size_t i = petals;
        while (i > 0) {
            --i;
            if (next_combination(comb[i], static_cast<int>(inst.petals[i].size()))) break;
            comb[i].clear();
            for (int j = 1; j <= inst.budgets[i]; ++j) comb[i].push_back(j);
            if (i == 0) return Solution::no();
        }
        if (petals == 0) return Solution::no();
    }
}

namespace {

bool extend_clique(const Graph& g, int k, VertexId from, std::vector<VertexId>& current) {
    if (static_cast<int>(current.size()) == k) return true;
    for (VertexId v = from; v <= g.num_vertices(); ++v) {
        if (!std::all_of(current.begin(), current.end(), [&](VertexId u) { return g.has_edge(u, v); })) continue;
        current.push_back(v);
        if (extend_clique(g, k, v + 1, current)) return true;
        current.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<VertexId>> has_k_clique(const Graph& g, int k) {
    if (k < 1) throw ValidationError("clique size must be at least 1");
    std::vector<VertexId> current;
    if (extend_clique(g, k, 1, current)) return current;
    return std::nullopt;
}

}  // namespace hitpaths
