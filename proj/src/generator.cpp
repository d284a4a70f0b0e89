#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "hitpaths/error.hpp"
#include "hitpaths/oracle.hpp"
#include "hitpaths/reductions.hpp"

namespace hitpaths {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    if (lo > hi) throw ValidationError("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
}

namespace {

template <class T>
void shuffle_portable(std::vector<T>& v, std::mt19937_64& rng) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[uniform_int(rng, 0, i)]);
}

Graph random_graph(int n, int k, std::mt19937_64& rng) {
    const long long max_extra = static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
    if (n < 1 || k < 0 || k > max_extra)
        throw InfeasibleConfig("cannot place " + std::to_string(k) + " extra edges on " + std::to_string(n) +
                               " vertices");
    std::vector<VertexId> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 1);
    shuffle_portable(label, rng);
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(label[i], label[uniform_int(rng, 0, i - 1)]);

    if (k > max_extra / 2) {
        std::vector<Edge> free;
        for (VertexId u = 1; u <= n; ++u)
            for (VertexId v = u + 1; v <= n; ++v)
                if (!g.has_edge(u, v)) free.push_back({u, v});
        for (int i = 0; i < k; ++i) {
            std::swap(free[i], free[uniform_int(rng, i, static_cast<int>(free.size()) - 1)]);
            g.add_edge(free[i].first, free[i].second);
        }
        return g;
    }
    for (int added = 0; added < k;) {
        VertexId u = uniform_int(rng, 1, n), v = uniform_int(rng, 1, n);
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        ++added;
    }
    return g;
}

}  // namespace

std::vector<VertexSeq> random_paths(const Graph& g, int count, int max_len, std::mt19937_64& rng) {
    std::vector<VertexSeq> out;
    if (g.num_vertices() == 0 || max_len < 1) return out;
    std::set<VertexSeq> seen;
    std::vector<char> on_path(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
    int failures = 0;
    while (static_cast<int>(out.size()) < count && failures < 50 * std::max(count, 1)) {
        const int len = uniform_int(rng, 1, max_len);
        VertexSeq p{uniform_int(rng, 1, g.num_vertices())};
        on_path[p.back()] = 1;
        while (static_cast<int>(p.size()) < len) {
            std::vector<VertexId> next;
            for (VertexId w : g.neighbors(p.back()))
                if (!on_path[w]) next.push_back(w);
            if (next.empty()) break;
            p.push_back(next[uniform_int(rng, 0, static_cast<int>(next.size()) - 1)]);
            on_path[p.back()] = 1;
        }
        for (VertexId v : p) on_path[v] = 0;
        VertexSeq rev(p.rbegin(), p.rend());
        if (seen.count(p) || seen.count(rev)) {
            ++failures;
            continue;
        }
        seen.insert(p);
        out.push_back(std::move(p));
    }
    return out;
}

HitPathsInstance gen_random_instance(const GeneratorConfig& cfg) {
    if (cfg.paths < 0 || cfg.max_path_len < 1) throw InfeasibleConfig("path count and length must be positive");
    std::mt19937_64 rng(cfg.seed);
    HitPathsInstance inst;
    inst.kind = TargetKind::Paths;
    inst.graph = random_graph(cfg.n, cfg.k, rng);
    inst.paths = random_paths(inst.graph, cfg.paths, cfg.max_path_len, rng);
    if (cfg.budget == BudgetPolicy::Fixed) {
        if (cfg.t < 0 || cfg.t > cfg.n) throw InfeasibleConfig("budget outside [0, n]");
        inst.t = cfg.t;
    } else {
        const int opt = *exact_min_hitting_set(to_set_system(inst), cfg.n).size;
        inst.t = std::clamp(opt + uniform_int(rng, -1, 1), 0, cfg.n);
    }
    return inst;
}

Graph subdivided_cubic(int k, int n) {
    if (k < 2) throw InfeasibleConfig("cubic kernel needs k >= 2");
    const int kernel = 2 * k - 2;
    const int kernel_edges = 3 * k - 3;
    if (n < kernel + kernel_edges) throw InfeasibleConfig("too few vertices to subdivide every kernel edge");

    // A cycle on the kernel vertices plus opposite chords: the theta graph for
    // k = 2, K4 for k = 3, K33 for k = 4.
    std::vector<Edge> kernel_list;
    for (int i = 0; i < kernel; ++i) kernel_list.push_back({i + 1, (i + 1) % kernel + 1});
    for (int i = 0; i < kernel / 2; ++i) kernel_list.push_back({i + 1, i + k});

    Graph g(n);
    int next = kernel + 1;
    const int spare = n - kernel;
    for (int e = 0; e < kernel_edges; ++e) {
        const int len = spare / kernel_edges + (e < spare % kernel_edges ? 1 : 0);
        VertexId prev = kernel_list[e].first;
        for (int i = 0; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, kernel_list[e].second);
    }
    if (cyclomatic_number(g) != k) throw InvariantViolation("subdivided kernel has the wrong cyclomatic number");
    return g;
}

HitPathsInstance gen_scaling_instance(int k, int n, int paths, int max_path_len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    HitPathsInstance inst;
    inst.kind = TargetKind::Paths;
    inst.graph = subdivided_cubic(k, n);
    inst.paths = random_paths(inst.graph, paths, max_path_len, rng);
    inst.t = n;
    return inst;
}

FlowerInstance gen_random_flower(const FlowerConfig& cfg, std::mt19937_64& rng) {
    FlowerInstance f;
    const int petals = uniform_int(rng, 1, cfg.max_petals);
    std::vector<int> lengths;
    int total = 0;
    for (int i = 0; i < petals; ++i) {
        lengths.push_back(uniform_int(rng, 1, cfg.max_length));
        total += lengths.back();
    }
    f.graph = Graph(total + 1);
    f.core = total + 1;
    VertexId next = 1;
    for (int i = 0; i < petals; ++i) {
        std::vector<VertexId> petal;
        for (int j = 0; j < lengths[i]; ++j) petal.push_back(next++);
        for (std::size_t j = 1; j < petal.size(); ++j) f.graph.add_edge(petal[j - 1], petal[j]);
        f.graph.add_edge(petal.front(), f.core);
        if (petal.size() > 1) f.graph.add_edge(petal.back(), f.core);
        f.petals.push_back(std::move(petal));
        f.budgets.push_back(uniform_int(rng, 1, cfg.max_budget));
    }

    // Fragment of petal i on the z side: prefix [1, c] or suffix [c, L],
    // listed in the order a path meets it when walking away from z.
    auto fragment = [&](int i, bool prefix, int c) {
        const auto& petal = f.petals[i];
        VertexSeq out;
        if (prefix) {
            for (int j = 1; j <= c; ++j) out.push_back(petal[j - 1]);
        } else {
            for (int j = static_cast<int>(petal.size()); j >= c; --j) out.push_back(petal[j - 1]);
        }
        return out;
    };

    const int paths = uniform_int(rng, 0, cfg.max_paths);
    for (int p = 0; p < paths; ++p) {
        const int kind = uniform_int(rng, 0, 19);
        if (kind == 0) {
            f.paths.push_back({f.core});
        } else if (kind < 8) {
            const int i = uniform_int(rng, 0, petals - 1);
            const int len = lengths[i];
            int a = uniform_int(rng, 1, len), b = uniform_int(rng, 1, len);
            if (a > b) std::swap(a, b);
            VertexSeq path;
            for (int j = a; j <= b; ++j) path.push_back(f.petals[i][j - 1]);
            if (uniform_int(rng, 0, 1) == 1) std::reverse(path.begin(), path.end());
            f.paths.push_back(std::move(path));
        } else {
            const int i = uniform_int(rng, 0, petals - 1);
            const bool pre_i = uniform_int(rng, 0, 1) == 1;
            auto left = fragment(i, pre_i, uniform_int(rng, 1, lengths[i]));
            std::reverse(left.begin(), left.end());
            VertexSeq path = left;
            path.push_back(f.core);
            if (uniform_int(rng, 0, 3) != 0) {
                const int j = uniform_int(rng, 0, petals - 1);
                const bool pre_j = uniform_int(rng, 0, 1) == 1;
                auto right = fragment(j, pre_j, uniform_int(rng, 1, lengths[j]));
                const bool overlaps = std::any_of(right.begin(), right.end(), [&](VertexId v) {
                    return std::find(left.begin(), left.end(), v) != left.end();
                });
                if (!overlaps) path.insert(path.end(), right.begin(), right.end());
            }
            if (uniform_int(rng, 0, 1) == 1) std::reverse(path.begin(), path.end());
            f.paths.push_back(std::move(path));
        }
    }
    validate_flower(f);
    return f;
}

}  // namespace hitpaths
