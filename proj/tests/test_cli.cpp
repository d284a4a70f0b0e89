#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "hitpaths/cli.hpp"
#include "hitpaths/instance_io.hpp"

using namespace hitpaths;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("hitpaths_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& contents) {
        auto p = (dir_ / name).string();
        write_file(p, contents);
        return p;
    }
    std::string path(const std::string& name) { return (dir_ / name).string(); }

    fs::path dir_;
};

const char* kTriangle = "p hitpaths 3 3 1 1\ne 1 2\ne 2 3\ne 1 3\ns 2 1 2\n";

}  // namespace

TEST_F(CliTest, SolveTriangle) {
    auto r = run({"solve", file("tri.hp", kTriangle)});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "s 1 1\n");
}

TEST_F(CliTest, SolveNoExitsOne) {
    auto r = run({"solve", file("no.hp", "p hitpaths 2 1 2 1\ne 1 2\ns 1 1\ns 1 2\n")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "s -1\n");
}

TEST_F(CliTest, SolveStatsAreComments) {
    auto inst = file("c4.hp", "p hitpaths 4 5 3 3\ne 1 2\ne 2 3\ne 3 4\ne 4 1\ne 1 3\ns 1 2\ns 1 4\ns 2 1 3\n");
    auto r = run({"solve", inst, "--stats", "--threads", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("c branches_enumerated 16"), std::string::npos);
    EXPECT_NE(r.out.find("c flower_calls"), std::string::npos);
    auto sol = file("c4.sol", r.out);
    EXPECT_EQ(run({"verify", inst, sol}).code, 0);
}

TEST_F(CliTest, SolveSubgraphsOnTree) {
    auto r = run({"solve", file("sub.hp", "p hitsub 3 2 2 1\ne 1 2\ne 1 3\ns 2 1 2\ns 2 3 1\n"), "--stats"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, 6), "s 1 1\n");
    EXPECT_NE(r.out.find("c path tree"), std::string::npos);
}

TEST_F(CliTest, VerifyReportsOffendingPath) {
    auto inst = file("tri.hp", kTriangle);
    auto r = run({"verify", inst, file("bad.sol", "s 1 3\n")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("target 0"), std::string::npos);
    EXPECT_EQ(run({"verify", inst, file("no.sol", "s -1\n")}).code, 1);
}

TEST_F(CliTest, GenIsDeterministic) {
    auto a = run({"gen", "--seed", "1", "--k", "2", "--n", "10", "--paths", "8"});
    auto b = run({"gen", "--seed", "1", "--k", "2", "--n", "10", "--paths", "8"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto inst = parse_instance(a.out);
    EXPECT_EQ(inst.paths.size(), 8u);

    auto out = path("g.hp");
    EXPECT_EQ(run({"gen", "--seed", "1", "--k", "2", "--n", "10", "--paths", "8", "--out", out}).code, 0);
    EXPECT_EQ(read_file(out), a.out);
}

TEST_F(CliTest, SolveThenVerifyOnGeneratedInstances) {
    for (int seed = 1; seed <= 20; ++seed) {
        auto gen = run({"gen", "--seed", std::to_string(seed), "--k", std::to_string(seed % 5), "--n", "12", "--paths",
                        "9"});
        auto inst = file("i.hp", gen.out);
        auto sol = run({"solve", inst});
        auto oracle = run({"oracle", inst});
        EXPECT_EQ(sol.code, oracle.code);
        if (sol.code != 0) continue;
        EXPECT_EQ(run({"verify", inst, file("i.sol", sol.out)}).code, 0);
    }
}

TEST_F(CliTest, ReduceAllKinds) {
    auto graph = file("tri.g", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    EXPECT_EQ(run({"reduce", "clique3sat", graph, path("tri.scnf"), "--k", "3"}).code, 0);
    auto f = parse_signed_formula(read_file(path("tri.scnf")));
    EXPECT_EQ(f.num_vars, 6);

    auto formula = file("f.scnf", "p scnf 1 2 1\n+1:2 0\n");
    EXPECT_EQ(run({"reduce", "sat3tree", formula, path("t.hp")}).code, 0);
    EXPECT_EQ(parse_instance(read_file(path("t.hp"))).kind, TargetKind::Subgraphs);
    EXPECT_EQ(run({"reduce", "sat3fvs2", formula, path("v.hp")}).code, 0);
    EXPECT_EQ(run({"solve", path("v.hp")}).code, 0);

    auto p3 = file("p3.g", "p edge 3 2\ne 1 2\ne 2 3\n");
    EXPECT_EQ(run({"reduce", "clique3sat", p3, path("p3.scnf")}).code, 1);
}

TEST_F(CliTest, ErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"solve", path("missing.hp")}).code, 2);
    auto r = run({"solve", file("bad.hp", "p hitpaths 3 2 1 1\ne 1 2\ne 2 3\ns 2 1 3\n")});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(run({"reduce", "nonsense", "a", "b"}).code, 2);
}

TEST_F(CliTest, OracleHonoursCapOverride) {
    auto inst = file("two.hp", "p hitpaths 3 2 2 2\ne 1 2\ne 2 3\ns 1 1\ns 1 3\n");
    EXPECT_EQ(run({"oracle", inst}).code, 0);
    setenv("HITPATHS_CAP", "1", 1);
    auto r = run({"oracle", inst});
    unsetenv("HITPATHS_CAP");
    EXPECT_EQ(r.code, 2);
}

TEST_F(CliTest, BenchSuitesRun) {
    auto r = run({"bench", "--suite", "agreement", "--count", "30"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("agreements"), std::string::npos);
    EXPECT_EQ(run({"bench", "--suite", "bounds", "--count", "30"}).code, 0);
}
