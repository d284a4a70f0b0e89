#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hitpaths/error.hpp"
#include "hitpaths/graph.hpp"
#include "hitpaths/reductions.hpp"

using namespace hitpaths;

namespace {

Graph make(int n, std::initializer_list<Edge> edges) {
    std::vector<Edge> e(edges);
    return Graph(n, e);
}

Graph cycle(int n) {
    Graph g(n);
    for (int i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

// Counts edges not in a BFS forest.
int feedback_edges(const Graph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
    int tree_edges = 0;
    for (VertexId r = 1; r <= g.num_vertices(); ++r) {
        if (seen[r]) continue;
        seen[r] = 1;
        std::vector<VertexId> q{r};
        for (std::size_t i = 0; i < q.size(); ++i)
            for (VertexId w : g.neighbors(q[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    ++tree_edges;
                    q.push_back(w);
                }
    }
    return g.num_edges() - tree_edges;
}

}  // namespace

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
    Graph g(3);
    g.add_edge(1, 2);
    EXPECT_THROW(g.add_edge(2, 1), ValidationError);
    EXPECT_THROW(g.add_edge(3, 3), ValidationError);
    EXPECT_THROW(g.add_edge(0, 1), ValidationError);
    EXPECT_THROW(g.add_edge(1, 4), ValidationError);
    EXPECT_TRUE(g.has_edge(2, 1));
    EXPECT_EQ(g.degree(1), 1);
}

TEST(Graph, NeighborsSortedAndEdgeOrderKept) {
    auto g = make(4, {{3, 1}, {1, 2}, {4, 1}});
    EXPECT_EQ(g.neighbors(1), (std::vector<VertexId>{2, 3, 4}));
    EXPECT_EQ(g.edges().front(), Edge(3, 1));
}

TEST(CyclomaticNumber, Examples) {
    EXPECT_EQ(cyclomatic_number(make(4, {{1, 2}, {2, 3}, {3, 4}})), 0);
    EXPECT_EQ(cyclomatic_number(cycle(4)), 1);
    EXPECT_EQ(cyclomatic_number(complete(4)), 3);
    EXPECT_EQ(cyclomatic_number(Graph(3)), 0);
}

TEST(CyclomaticNumber, EqualsFeedbackEdgeCount) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = uniform_int(rng, 1, 12);
        Graph g(n);
        for (int e = 0; e < 2 * n; ++e) {
            VertexId u = uniform_int(rng, 1, n), v = uniform_int(rng, 1, n);
            if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
        }
        EXPECT_EQ(cyclomatic_number(g), feedback_edges(g));
    }
}

TEST(HighDegreeSet, Examples) {
    EXPECT_TRUE(high_degree_set(cycle(4)).empty());
    auto chord = cycle(4);
    chord.add_edge(1, 3);
    EXPECT_EQ(high_degree_set(chord), (std::vector<VertexId>{1, 3}));
    auto bowtie = make(5, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 1}});
    EXPECT_EQ(high_degree_set(bowtie), (std::vector<VertexId>{1}));
}

TEST(PathComponents, Examples) {
    auto comps = path_components(cycle(4), std::vector<VertexId>{1, 3});
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0].vertices, (std::vector<VertexId>{2}));
    EXPECT_EQ(comps[1].vertices, (std::vector<VertexId>{4}));

    auto c6 = path_components(cycle(6), std::vector<VertexId>{1});
    ASSERT_EQ(c6.size(), 1u);
    EXPECT_EQ(c6[0].vertices, (std::vector<VertexId>{2, 3, 4, 5, 6}));
    EXPECT_EQ(c6[0].attach_left, 1);
    EXPECT_EQ(c6[0].attach_right, 1);

    auto chord = cycle(4);
    chord.add_edge(1, 3);
    auto s = high_degree_set(chord);
    auto cc = path_components(chord, s);
    EXPECT_EQ(cc.size(), 2u);
    EXPECT_LE(static_cast<int>(cc.size()), cyclomatic_number(chord) + static_cast<int>(s.size()) - 1);
}

TEST(PathComponents, OrientedFromSmallerEndpoint) {
    // Cycle 1-5-4-3-2-1 seen from S = {1}: the component runs 2..5.
    auto g = make(5, {{1, 5}, {5, 4}, {4, 3}, {3, 2}, {2, 1}});
    auto comps = path_components(g, std::vector<VertexId>{1});
    ASSERT_EQ(comps.size(), 1u);
    EXPECT_EQ(comps[0].vertices, (std::vector<VertexId>{2, 3, 4, 5}));
}

TEST(PathComponents, RejectsNonPath) {
    auto star = make(4, {{1, 2}, {1, 3}, {1, 4}});
    EXPECT_THROW(path_components(star, std::vector<VertexId>{}), NotAPath);
}

TEST(IdentifyVertices, Examples) {
    auto tri = identify_vertices(complete(3), std::vector<VertexId>{1, 2});
    EXPECT_EQ(tri.graph.num_vertices(), 2);
    EXPECT_EQ(tri.graph.num_edges(), 1);
    EXPECT_EQ(tri.old_to_new[1], 2);
    EXPECT_EQ(tri.old_to_new[2], 2);
    EXPECT_EQ(tri.old_to_new[3], 1);

    auto p4 = identify_vertices(make(4, {{1, 2}, {2, 3}, {3, 4}}), std::vector<VertexId>{1, 4});
    EXPECT_EQ(p4.graph.num_vertices(), 3);
    EXPECT_EQ(p4.graph.num_edges(), 3);
    EXPECT_EQ(cyclomatic_number(p4.graph), 1);

    auto all = identify_vertices(complete(4), std::vector<VertexId>{1, 2, 3, 4});
    EXPECT_EQ(all.graph.num_vertices(), 1);
    EXPECT_EQ(all.graph.num_edges(), 0);
}

TEST(IdentifyVertices, CoreSeesUnionOfNeighbourhoods) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = uniform_int(rng, 2, 10);
        Graph g(n);
        for (int e = 0; e < 2 * n; ++e) {
            VertexId u = uniform_int(rng, 1, n), v = uniform_int(rng, 1, n);
            if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
        }
        std::vector<VertexId> target;
        for (VertexId v = 1; v <= n; ++v)
            if (uniform_int(rng, 0, 2) == 0) target.push_back(v);
        if (target.empty()) target.push_back(1);
        auto r = identify_vertices(g, target);
        const VertexId z = r.graph.num_vertices();
        std::set<VertexId> expected;
        for (VertexId t : target)
            for (VertexId w : g.neighbors(t))
                if (r.old_to_new[w] != z) expected.insert(r.old_to_new[w]);
        const auto& got = r.graph.neighbors(z);
        EXPECT_EQ(std::set<VertexId>(got.begin(), got.end()), expected);
    }
}

TEST(ConnectComponents, Examples) {
    auto two = make(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
    auto joined = connect_components(two);
    EXPECT_EQ(connected_components(joined).size(), 1u);
    EXPECT_EQ(cyclomatic_number(joined), 2);
    EXPECT_TRUE(joined.has_edge(1, 4));

    auto tri = complete(3);
    EXPECT_EQ(connect_components(tri), tri);

    auto iso = connect_components(Graph(3));
    EXPECT_TRUE(is_tree(iso));
    EXPECT_EQ(cyclomatic_number(iso), 0);
}

TEST(Structure, BoundsOnKernelGraphs) {
    for (int k = 2; k <= 6; ++k) {
        auto g = subdivided_cubic(k, 5 * k + 3);
        auto s = high_degree_set(g);
        EXPECT_EQ(static_cast<int>(s.size()), 2 * k - 2);
        EXPECT_EQ(static_cast<int>(path_components(g, s).size()), k + static_cast<int>(s.size()) - 1);
    }
}

TEST(Paths, SimplePathAndConnectivity) {
    auto g = make(4, {{1, 2}, {2, 3}, {3, 4}});
    EXPECT_TRUE(is_simple_path(g, std::vector<VertexId>{1, 2, 3}));
    EXPECT_FALSE(is_simple_path(g, std::vector<VertexId>{1, 3}));
    EXPECT_FALSE(is_simple_path(g, std::vector<VertexId>{1, 2, 1}));
    EXPECT_FALSE(is_simple_path(g, std::vector<VertexId>{}));
    EXPECT_TRUE(induces_connected(g, std::vector<VertexId>{3, 2}));
    EXPECT_FALSE(induces_connected(g, std::vector<VertexId>{1, 3}));
    EXPECT_TRUE(is_tree(g));
    EXPECT_FALSE(is_tree(cycle(3)));
}
