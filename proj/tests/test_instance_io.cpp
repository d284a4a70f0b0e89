#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "hitpaths/error.hpp"
#include "hitpaths/instance_io.hpp"
#include "hitpaths/reductions.hpp"

using namespace hitpaths;

TEST(ParseInstance, Triangle) {
    auto inst = parse_instance("p hitpaths 3 3 1 1\ne 1 2\ne 2 3\ne 1 3\ns 2 1 2\n");
    EXPECT_EQ(inst.graph.num_vertices(), 3);
    EXPECT_EQ(inst.graph.num_edges(), 3);
    ASSERT_EQ(inst.paths.size(), 1u);
    EXPECT_EQ(inst.paths[0], (VertexSeq{1, 2}));
    EXPECT_EQ(inst.t, 1);
    EXPECT_EQ(inst.kind, TargetKind::Paths);
}

TEST(ParseInstance, CommentsAndFreeOrder) {
    auto inst = parse_instance("c hello\np hitpaths 3 2 1 0\ns 3 1 2 3\nc mid\ne 2 3\ne 1 2\n");
    EXPECT_EQ(inst.paths[0], (VertexSeq{1, 2, 3}));
}

TEST(ParseInstance, RejectsNonAdjacentPath) {
    EXPECT_THROW(parse_instance("p hitpaths 3 2 1 1\ne 1 2\ne 2 3\ns 2 1 3\n"), ValidationError);
}

TEST(ParseInstance, RejectsRepeatedVertexAndRange) {
    EXPECT_THROW(parse_instance("p hitpaths 3 2 1 1\ne 1 2\ne 2 3\ns 3 1 2 1\n"), ValidationError);
    EXPECT_THROW(parse_instance("p hitpaths 3 2 1 1\ne 1 2\ne 2 3\ns 1 4\n"), ValidationError);
    EXPECT_THROW(parse_instance("p hitpaths 3 2 0 1\ne 1 2\ne 1 2\n"), ValidationError);
    EXPECT_THROW(parse_instance("p hitpaths 3 1 0 4\ne 1 2\n"), ValidationError);
}

TEST(ParseInstance, SubgraphsMustBeConnected) {
    EXPECT_THROW(parse_instance("p hitsub 3 2 1 1\ne 1 2\ne 2 3\ns 2 1 3\n"), ValidationError);
    auto ok = parse_instance("p hitsub 3 2 1 1\ne 1 2\ne 2 3\ns 3 3 1 2\n");
    EXPECT_EQ(ok.kind, TargetKind::Subgraphs);
}

TEST(ParseInstance, SyntaxErrorsCarryLine) {
    try {
        parse_instance("p hitpaths 2 1 0 0\ne 1 x\n");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(parse_instance(""), SyntaxError);
    EXPECT_THROW(parse_instance("q 1 2\n"), SyntaxError);
}

TEST(ParseInstance, CountMismatch) {
    EXPECT_THROW(parse_instance("p hitpaths 3 2 0 1\ne 1 2\n"), ValidationError);
}

TEST(SignedFormulaIo, Examples) {
    auto f = parse_signed_formula("p scnf 2 3 1\n+1:2 -2:1 0\n");
    EXPECT_EQ(f.num_vars, 2);
    EXPECT_EQ(f.num_values, 3);
    ASSERT_EQ(f.clauses.size(), 1u);
    EXPECT_EQ(f.clauses[0], (SignedClause{{1, Sign::GE, 2}, {2, Sign::LE, 1}}));
    EXPECT_THROW(parse_signed_formula("p scnf 2 3 1\n+1:4 0\n"), ValidationError);
    EXPECT_THROW(parse_signed_formula("p scnf 2 3 1\n+3:1 0\n"), ValidationError);

    auto empty = parse_signed_formula("p scnf 1 2 1\n0\n");
    ASSERT_EQ(empty.clauses.size(), 1u);
    EXPECT_TRUE(empty.clauses[0].empty());
    EXPECT_FALSE(brute::signed_sat(empty));
}

TEST(SolutionIo, Examples) {
    Solution s{Verdict::Yes, {2, 4}, {}};
    EXPECT_EQ(write_solution(s), "s 2 2 4");
    EXPECT_EQ(write_solution(Solution::no()), "s -1");
    EXPECT_EQ(write_solution(Solution{Verdict::Yes, {}, {}}), "s 0");
    EXPECT_EQ(parse_solution("s 2 4 2\n").chosen, (std::vector<VertexId>{2, 4}));
    EXPECT_EQ(parse_solution("s -1").verdict, Verdict::No);
    EXPECT_THROW(parse_solution("s 3 1 2\n"), SyntaxError);
}

TEST(Verify, ReportsFirstUnhitTarget) {
    auto inst = parse_instance("p hitpaths 4 3 3 2\ne 1 2\ne 2 3\ne 3 4\ns 1 1\ns 2 2 3\ns 1 4\n");
    auto r = verify_solution(inst, Solution{Verdict::Yes, {1, 4}, {}});
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.unhit_target, 1u);
    EXPECT_TRUE(verify_solution(inst, Solution{Verdict::Yes, {1, 3}, {}}).ok == false);
    EXPECT_FALSE(verify_solution(inst, Solution{Verdict::Yes, {1, 2, 4}, {}}).ok);  // over budget
    EXPECT_FALSE(verify_solution(inst, Solution::no()).ok);
}

TEST(Solution, YesBuildsCertificate) {
    std::vector<VertexSeq> targets{{1, 2}, {3}};
    auto s = Solution::yes({3, 2, 3}, targets);
    EXPECT_EQ(s.chosen, (std::vector<VertexId>{2, 3}));
    EXPECT_EQ(s.certificate, (std::vector<VertexId>{2, 3}));
    EXPECT_THROW(Solution::yes({1}, targets), InvariantViolation);
}

TEST(RoundTrip, RandomInstancesAndFormulas) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        GeneratorConfig cfg;
        cfg.seed = static_cast<std::uint64_t>(i);
        cfg.k = i % 4;
        cfg.n = 6 + i % 10;
        cfg.paths = i % 9;
        cfg.budget = BudgetPolicy::Fixed;
        cfg.t = i % cfg.n;
        auto inst = gen_random_instance(cfg);
        EXPECT_EQ(parse_instance(write_instance(inst)), inst);

        auto f = brute::random_formula(rng, 1 + i % 4, 1 + i % 6, i % 7, 3);
        EXPECT_EQ(parse_signed_formula(write_signed_formula(f)), f);

        EXPECT_EQ(parse_graph(write_graph(inst.graph)), inst.graph);
    }
}

TEST(Fuzz, MutatedInputOnlyRaisesLibraryErrors) {
    const std::string seed_text = "p hitpaths 4 4 2 2\ne 1 2\ne 2 3\ne 3 4\ne 4 1\ns 3 1 2 3\ns 1 4\n";
    const std::string alphabet = "0123456789 -+:\nepsc\t9x";
    std::mt19937_64 rng(17);
    for (int i = 0; i < 5000; ++i) {
        std::string text = seed_text;
        const int edits = uniform_int(rng, 1, 6);
        for (int e = 0; e < edits; ++e) {
            const int pos = uniform_int(rng, 0, static_cast<int>(text.size()) - 1);
            switch (uniform_int(rng, 0, 2)) {
                case 0: text[pos] = alphabet[uniform_int(rng, 0, static_cast<int>(alphabet.size()) - 1)]; break;
                case 1: text.erase(pos, 1); break;
                default: text.insert(text.begin() + pos, alphabet[uniform_int(rng, 0, static_cast<int>(alphabet.size()) - 1)]);
            }
        }
        try {
            auto inst = parse_instance(text);
            validate_instance(inst);
        } catch (const Error&) {
        }
        try {
            parse_signed_formula(text);
        } catch (const Error&) {
        }
        try {
            parse_solution(text);
        } catch (const Error&) {
        }
    }
}
