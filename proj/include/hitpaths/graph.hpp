#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hitpaths {

// Vertices are dense 1-based integers. 0 is used as "no vertex" in maps.
using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

// Ordered vertex sequence. For the path variant consecutive vertices are
// adjacent and all vertices distinct; for vertex sets the order is irrelevant.
using VertexSeq = std::vector<VertexId>;

// Simple undirected graph on vertices 1..n. Edge insertion order is kept
// because some constructions number edges in input order.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    // Throws ValidationError on self-loops, duplicates, or out-of-range ids.
    void add_edge(VertexId u, VertexId v);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    bool contains(VertexId v) const { return v >= 1 && v <= n_; }
    bool has_edge(VertexId u, VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    // Sorted ascending.
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<std::vector<VertexId>> adj_ = std::vector<std::vector<VertexId>>(1);
    std::vector<Edge> edges_;
};

// A maximal path of G - S. `vertices` runs from the endpoint with the smaller
// id to the one with the larger id; attach_left/right are the S-neighbours of
// the first/last vertex when they exist.
struct PathComponent {
    std::vector<VertexId> vertices;
    std::optional<VertexId> attach_left;
    std::optional<VertexId> attach_right;

    int size() const { return static_cast<int>(vertices.size()); }
    friend bool operator==(const PathComponent&, const PathComponent&) = default;
};

// Result of an operation that renumbers vertices. old_to_new[v] is the new id
// of old vertex v, or 0 when v was deleted; index 0 is unused.
struct Relabeled {
    Graph graph;
    std::vector<VertexId> old_to_new;
};

std::vector<std::vector<VertexId>> connected_components(const Graph& g);

// |E| - |V| + #components.
int cyclomatic_number(const Graph& g);

// Vertices of degree >= 3, ascending.
std::vector<VertexId> high_degree_set(const Graph& g);

// Components of g - s, each an induced path, ordered by smallest contained id.
// Throws NotAPath when a component is not an induced path or an interior
// vertex touches s.
std::vector<PathComponent> path_components(const Graph& g, std::span<const VertexId> s);

// Deletes `target` and adds a fresh vertex z adjacent to N(target). Surviving
// vertices keep their relative order and are numbered first; z receives the
// last id, and every target vertex maps to z.
Relabeled identify_vertices(const Graph& g, std::span<const VertexId> target);

// Subgraph induced by the vertices with keep[v] set, renumbered densely in
// ascending order. keep has size n + 1.
Relabeled induced_subgraph(const Graph& g, const std::vector<char>& keep);

// Joins every later component's lowest vertex to the lowest vertex of the
// first component. Cyclomatic number is unchanged.
Graph connect_components(const Graph& g);

bool is_simple_path(const Graph& g, std::span<const VertexId> path);
bool induces_connected(const Graph& g, std::span<const VertexId> vertices);
bool is_tree(const Graph& g);

}  // namespace hitpaths
