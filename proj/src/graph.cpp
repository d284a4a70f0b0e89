#include "hitpaths/graph.hpp"

#include <algorithm>
#include <string>

#include "hitpaths/error.hpp"

namespace hitpaths {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
    if (n < 0) throw ValidationError("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (!contains(u) || !contains(v))
        throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} has an endpoint outside 1.." + std::to_string(n_));
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        throw ValidationError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    edges_.emplace_back(u, v);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (!contains(u) || !contains(v)) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<VertexId>> comps;
    std::vector<VertexId> stack;
    for (VertexId s = 1; s <= n; ++s) {
        if (seen[s]) continue;
        auto& comp = comps.emplace_back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
    }
    return comps;
}

int cyclomatic_number(const Graph& g) {
    return g.num_edges() - g.num_vertices() + static_cast<int>(connected_components(g).size());
}

std::vector<VertexId> high_degree_set(const Graph& g) {
    std::vector<VertexId> out;
    for (VertexId v = 1; v <= g.num_vertices(); ++v)
        if (g.degree(v) >= 3) out.push_back(v);
    return out;
}

std::vector<PathComponent> path_components(const Graph& g, std::span<const VertexId> s) {
    const int n = g.num_vertices();
    std::vector<char> in_s(static_cast<std::size_t>(n) + 1, 0);
    for (VertexId v : s) {
        if (!g.contains(v)) throw ValidationError("vertex " + std::to_string(v) + " not in graph");
        in_s[v] = 1;
    }
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<PathComponent> out;

    auto inner_neighbors = [&](VertexId v) {
        std::vector<VertexId> r;
        for (VertexId w : g.neighbors(v))
            if (!in_s[w]) r.push_back(w);
        return r;
    };
    auto s_neighbors = [&](VertexId v) {
        std::vector<VertexId> r;
        for (VertexId w : g.neighbors(v))
            if (in_s[w]) r.push_back(w);
        return r;
    };

    // Scanning in ascending order makes the output ordered by smallest id.
    for (VertexId start = 1; start <= n; ++start) {
        if (in_s[start] || seen[start]) continue;
        std::vector<VertexId> comp;
        std::vector<VertexId> stack{start};
        seen[start] = 1;
        int inner_degree_sum = 0;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId w : inner_neighbors(v)) {
                ++inner_degree_sum;
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        const int size = static_cast<int>(comp.size());
        std::vector<VertexId> ends;
        for (VertexId v : comp) {
            const auto deg = inner_neighbors(v).size();
            if (deg > 2) throw NotAPath("vertex " + std::to_string(v) + " branches inside G - S");
            if (deg <= 1) ends.push_back(v);
        }
        if (inner_degree_sum / 2 != size - 1 || (size > 1 && ends.size() != 2) || (size == 1 && ends.size() != 1))
            throw NotAPath("component containing " + std::to_string(start) + " is not a path");

        PathComponent pc;
        VertexId first = *std::min_element(ends.begin(), ends.end());
        VertexId prev = 0;
        VertexId cur = first;
        while (cur != 0) {
            pc.vertices.push_back(cur);
            VertexId next = 0;
            for (VertexId w : inner_neighbors(cur))
                if (w != prev) next = w;
            prev = cur;
            cur = next;
        }
        for (int i = 1; i + 1 < size; ++i)
            if (!s_neighbors(pc.vertices[i]).empty())
                throw NotAPath("interior vertex " + std::to_string(pc.vertices[i]) + " is adjacent to S");

        auto front_s = s_neighbors(pc.vertices.front());
        auto back_s = s_neighbors(pc.vertices.back());
        if (size == 1) {
            if (!front_s.empty()) pc.attach_left = front_s.front();
            if (front_s.size() >= 2) pc.attach_right = front_s[1];
        } else {
            if (!front_s.empty()) pc.attach_left = front_s.front();
            if (!back_s.empty()) pc.attach_right = back_s.front();
        }
        out.push_back(std::move(pc));
    }
    return out;
}

Relabeled identify_vertices(const Graph& g, std::span<const VertexId> target) {
    const int n = g.num_vertices();
    if (target.empty()) throw ValidationError("identify_vertices: empty target set");
    std::vector<char> is_target(static_cast<std::size_t>(n) + 1, 0);
    for (VertexId v : target) {
        if (!g.contains(v)) throw ValidationError("vertex " + std::to_string(v) + " not in graph");
        is_target[v] = 1;
    }
    std::vector<VertexId> old_to_new(static_cast<std::size_t>(n) + 1, 0);
    int next = 0;
    for (VertexId v = 1; v <= n; ++v)
        if (!is_target[v]) old_to_new[v] = ++next;
    const VertexId z = next + 1;
    for (VertexId v = 1; v <= n; ++v)
        if (is_target[v]) old_to_new[v] = z;

    Graph out(z);
    for (auto [u, v] : g.edges()) {
        VertexId a = old_to_new[u];
        VertexId b = old_to_new[v];
        if (a == b || out.has_edge(a, b)) continue;
        out.add_edge(a, b);
    }
    return {std::move(out), std::move(old_to_new)};
}

Relabeled induced_subgraph(const Graph& g, const std::vector<char>& keep) {
    const int n = g.num_vertices();
    std::vector<VertexId> old_to_new(static_cast<std::size_t>(n) + 1, 0);
    int next = 0;
    for (VertexId v = 1; v <= n; ++v)
        if (keep[v]) old_to_new[v] = ++next;
    Graph out(next);
    for (auto [u, v] : g.edges())
        if (keep[u] && keep[v]) out.add_edge(old_to_new[u], old_to_new[v]);
    return {std::move(out), std::move(old_to_new)};
}

Graph connect_components(const Graph& g) {
    auto comps = connected_components(g);
    Graph out = g;
    for (std::size_t i = 1; i < comps.size(); ++i) out.add_edge(comps[0].front(), comps[i].front());
    return out;
}

bool is_simple_path(const Graph& g, std::span<const VertexId> path) {
    if (path.empty()) return false;
    std::vector<VertexId> sorted(path.begin(), path.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (!g.contains(sorted.front()) || !g.contains(sorted.back())) return false;
    for (std::size_t i = 1; i < path.size(); ++i)
        if (!g.has_edge(path[i - 1], path[i])) return false;
    return true;
}

bool induces_connected(const Graph& g, std::span<const VertexId> vertices) {
    if (vertices.empty()) return false;
    const int n = g.num_vertices();
    std::vector<char> member(static_cast<std::size_t>(n) + 1, 0);
    for (VertexId v : vertices) {
        if (!g.contains(v)) return false;
        member[v] = 1;
    }
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<VertexId> stack{vertices.front()};
    seen[vertices.front()] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        ++reached;
        for (VertexId w : g.neighbors(v)) {
            if (member[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::size_t distinct = 0;
    for (VertexId v = 1; v <= n; ++v) distinct += member[v];
    return reached == distinct;
}

bool is_tree(const Graph& g) {
    return g.num_vertices() >= 1 && g.num_edges() == g.num_vertices() - 1 &&
           connected_components(g).size() == 1;
}

}  // namespace hitpaths
