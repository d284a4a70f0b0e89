#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "hitpaths/error.hpp"
#include "hitpaths/oracle.hpp"
#include "hitpaths/reductions.hpp"

using namespace hitpaths;

namespace {

bool has_triangle(const Graph& g) {
    const int n = g.num_vertices();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) return true;
    return false;
}

bool hitting_feasible(const HitPathsInstance& inst) {
    std::vector<std::vector<int>> sets(inst.paths.begin(), inst.paths.end());
    auto opt = brute::min_hitting_set(inst.graph.num_vertices(), sets);
    return opt && *opt <= inst.t;
}

bool acyclic_without(const Graph& g, std::vector<VertexId> removed) {
    std::vector<char> keep(static_cast<std::size_t>(g.num_vertices()) + 1, 1);
    for (VertexId v : removed) keep[v] = 0;
    return cyclomatic_number(induced_subgraph(g, keep).graph) == 0;
}

}  // namespace

TEST(CliqueReduction, Triangle) {
    Graph tri(3, std::vector<Edge>{{1, 2}, {2, 3}, {1, 3}});
    auto f = clique_to_signed3sat(tri, 3);
    EXPECT_EQ(f.num_vars, 6);
    EXPECT_EQ(f.num_values, 3);
    EXPECT_EQ(f.clauses.size(), 36u);
    EXPECT_LE(f.max_width(), 3u);
    EXPECT_TRUE(brute::signed_sat(f));
}

TEST(CliqueReduction, TooFewEdges) {
    Graph p3(3, std::vector<Edge>{{1, 2}, {2, 3}});
    EXPECT_THROW(clique_to_signed3sat(p3, 3), TooFewEdges);
    EXPECT_THROW(clique_to_signed3sat(p3, 1), ValidationError);
}

TEST(CliqueReduction, K4MinusEdge) {
    Graph g(4, std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    auto f = clique_to_signed3sat(g, 3);
    EXPECT_EQ(f.num_values, 5);
    EXPECT_EQ(f.num_vars, 6);
    EXPECT_TRUE(brute::signed_sat(f));
}

TEST(CliqueReduction, MoreVerticesThanEdges) {
    // A triangle on high ids plus a matching: vertex ids exceed |E|.
    Graph g(9, std::vector<Edge>{{7, 8}, {8, 9}, {7, 9}, {1, 2}, {3, 4}});
    auto f = clique_to_signed3sat(g, 3);
    EXPECT_EQ(f.num_values, 9);
    EXPECT_TRUE(brute::signed_sat(f));
    Graph h(8, std::vector<Edge>{{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    EXPECT_FALSE(brute::signed_sat(clique_to_signed3sat(h, 3)));
}

TEST(CliqueReduction, PairVariables) {
    EXPECT_EQ(pair_variable(3, 1, 2), 4);
    EXPECT_EQ(pair_variable(3, 1, 3), 5);
    EXPECT_EQ(pair_variable(3, 2, 3), 6);
    EXPECT_EQ(pair_variable(4, 3, 4), 10);
}

TEST(CliqueReduction, MatchesTriangleSearch) {
    std::mt19937_64 rng(41);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = uniform_int(rng, 3, 5);
        Graph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (uniform_int(rng, 0, 1) == 1) g.add_edge(u, v);
        if (g.num_edges() < 3) continue;
        auto f = clique_to_signed3sat(g, 3);
        if (f.num_values > 5) continue;  // keep N^6 small for the odometer
        EXPECT_EQ(brute::signed_sat(f), has_triangle(g)) << "trial " << trial;
        ++checked;
    }
    EXPECT_GT(checked, 50);
}

TEST(SubtreeReduction, SingleLiteral) {
    SignedFormula f{1, 2, {{{1, Sign::GE, 2}}}};
    auto inst = signed3sat_to_subtree_instance(f);
    EXPECT_EQ(inst.kind, TargetKind::Subgraphs);
    EXPECT_EQ(inst.graph.num_vertices(), 3);
    EXPECT_EQ(inst.paths, (std::vector<VertexSeq>{{1, 2}, {2, 3}}));
    EXPECT_EQ(inst.t, 1);
    EXPECT_TRUE(hitting_feasible(inst));

    SignedFormula unsat{1, 2, {{{1, Sign::GE, 2}}, {{1, Sign::LE, 1}}}};
    EXPECT_FALSE(hitting_feasible(signed3sat_to_subtree_instance(unsat)));
}

TEST(SubtreeReduction, DropsTrivialClauses) {
    SignedFormula f{1, 3, {{{1, Sign::LE, 1}, {1, Sign::GE, 2}}}};
    EXPECT_EQ(signed3sat_to_subtree_instance(f).paths.size(), 1u);
    SignedFormula wide{4, 2, {{{1, Sign::GE, 2}, {2, Sign::GE, 2}, {3, Sign::GE, 2}, {4, Sign::GE, 2}}}};
    EXPECT_THROW(signed3sat_to_subtree_instance(wide), ClauseTooWide);
}

TEST(Fvs2Reduction, SingleLiteral) {
    SignedFormula f{1, 2, {{{1, Sign::GE, 2}}}};
    auto inst = signed3sat_to_fvs2_instance(f);
    EXPECT_EQ(inst.graph.num_vertices(), 4);
    EXPECT_TRUE(hitting_feasible(inst));
    EXPECT_TRUE(acyclic_without(inst.graph, {3, 4}));
}

TEST(Fvs2Reduction, ThreeLiteralClauseThreadsBothSeparators) {
    SignedFormula f{3, 3, {{{1, Sign::GE, 2}, {2, Sign::LE, 1}, {3, Sign::GE, 3}}}};
    auto inst = signed3sat_to_fvs2_instance(f);
    const VertexId z = 10, z2 = 11;
    const auto& path = inst.paths.back();
    EXPECT_EQ(path, (VertexSeq{2, 3, z, 4, z2, 9}));
    EXPECT_TRUE(is_simple_path(inst.graph, path));
    validate_instance(inst);
}

TEST(Reductions, EquivalentToSatisfiability) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = uniform_int(rng, 1, 3), big_n = uniform_int(rng, 1, 4);
        auto f = brute::random_formula(rng, n, big_n, uniform_int(rng, 0, 5), 3);
        const bool sat = brute::signed_sat(f);
        auto tree = signed3sat_to_subtree_instance(f);
        validate_instance(tree);
        EXPECT_EQ(hitting_feasible(tree), sat) << "trial " << trial;
        EXPECT_LE(cyclomatic_number(tree.graph), n);
        auto fvs = signed3sat_to_fvs2_instance(f);
        validate_instance(fvs);
        EXPECT_EQ(hitting_feasible(fvs), sat) << "trial " << trial;
        EXPECT_TRUE(acyclic_without(fvs.graph, {n * big_n + 1, n * big_n + 2}));
    }
}

TEST(Generator, DeterministicAndExactCyclomaticNumber) {
    GeneratorConfig cfg;
    cfg.seed = 1;
    cfg.k = 0;
    cfg.n = 5;
    cfg.paths = 3;
    auto tree = gen_random_instance(cfg);
    EXPECT_TRUE(is_tree(tree.graph));
    EXPECT_EQ(oracle_solve(tree).verdict == Verdict::Yes, hitting_feasible(tree));

    cfg.k = 2;
    cfg.n = 10;
    cfg.paths = 8;
    auto a = gen_random_instance(cfg);
    EXPECT_EQ(write_instance(a), write_instance(gen_random_instance(cfg)));
    EXPECT_EQ(cyclomatic_number(a.graph), 2);
    EXPECT_EQ(a.paths.size(), 8u);
    EXPECT_EQ(connected_components(a.graph).size(), 1u);

    cfg.k = 10;
    cfg.n = 5;
    EXPECT_THROW(gen_random_instance(cfg), InfeasibleConfig);
}

TEST(Generator, PathsAreDistinctAndSimple) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        GeneratorConfig cfg{seed, 3, 12, 12, 5, BudgetPolicy::Fixed, 3};
        auto inst = gen_random_instance(cfg);
        validate_instance(inst);
        for (std::size_t i = 0; i < inst.paths.size(); ++i)
            for (std::size_t j = i + 1; j < inst.paths.size(); ++j) {
                VertexSeq rev(inst.paths[j].rbegin(), inst.paths[j].rend());
                EXPECT_NE(inst.paths[i], inst.paths[j]);
                EXPECT_NE(inst.paths[i], rev);
            }
    }
}

TEST(Generator, UniformIntStaysInRange) {
    std::mt19937_64 rng(1);
    std::vector<int> counts(5, 0);
    for (int i = 0; i < 5000; ++i) ++counts[uniform_int(rng, 3, 7) - 3];
    for (int c : counts) EXPECT_GT(c, 800);
}

TEST(Generator, SubdividedCubic) {
    EXPECT_THROW(subdivided_cubic(3, 9), InfeasibleConfig);
    auto g = subdivided_cubic(2, 5);
    EXPECT_EQ(g.num_vertices(), 5);
    EXPECT_EQ(cyclomatic_number(g), 2);
}
