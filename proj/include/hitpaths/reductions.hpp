#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hitpaths/flower.hpp"
#include "hitpaths/graph.hpp"
#include "hitpaths/instance_io.hpp"
#include "hitpaths/mv_sat.hpp"

namespace hitpaths {

// k-clique to signed 3-SAT. Variables x_1..x_k pick clique vertices and
// x_{i,j} (numbered k+1.. in lexicographic order of i < j) pick the edge
// between them. Edges are numbered 1..|E| in input order. Throws TooFewEdges
// when |E| < C(k,2).
SignedFormula clique_to_signed3sat(const Graph& g, int k);

// Variable number of x_{i,j} in the clique formula.
int pair_variable(int k, int i, int j);

// Signed 3-SAT to hitting connected subgraphs of a flower whose petals are
// closed into cycles through the core. Petal i occupies vertices
// (i-1)*N+1..i*N, the core is n*N+1. Targets are the petals followed by one
// subgraph per clause. t = n.
HitPathsInstance signed3sat_to_subtree_instance(const SignedFormula& f);

// Signed 3-SAT to hitting paths in a graph with feedback vertex set {z, z'}:
// the petals are plain paths, z = n*N+1 and z' = n*N+2 are adjacent to every
// petal vertex. Each clause becomes fragment, z, fragment, z', fragment.
HitPathsInstance signed3sat_to_fvs2_instance(const SignedFormula& f);

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

enum class BudgetPolicy { Fixed, NearOptimum };

struct GeneratorConfig {
    std::uint64_t seed = 1;
    int k = 0;              // cyclomatic number
    int n = 1;              // vertices
    int paths = 0;          // requested number of target paths
    int max_path_len = 4;   // in vertices
    BudgetPolicy budget = BudgetPolicy::NearOptimum;
    int t = 0;              // used by BudgetPolicy::Fixed
};

// Uniform integer in [lo, hi] drawn the same way on every platform.
int uniform_int(std::mt19937_64& rng, int lo, int hi);

// Random spanning tree plus k uniformly chosen non-edges, then random simple
// paths grown by self-avoiding walks. Duplicate paths (in either direction)
// are rejected; after 50 failed attempts per path the instance may hold fewer
// paths than requested. NearOptimum draws t from opt-1..opt+1 clamped to
// [0, n]. Throws InfeasibleConfig when k > C(n,2) - n + 1.
HitPathsInstance gen_random_instance(const GeneratorConfig& cfg);

// Random simple paths in g, as used by gen_random_instance.
std::vector<VertexSeq> random_paths(const Graph& g, int count, int max_len, std::mt19937_64& rng);

// A connected cubic multigraph with cyclomatic number k >= 2 whose edges are
// subdivided so that the result has n vertices. |S| = 2k-2 and G - S has
// 3k-3 path components. Throws InfeasibleConfig when n < 5k-5.
Graph subdivided_cubic(int k, int n);

// subdivided_cubic with random paths and t = n.
HitPathsInstance gen_scaling_instance(int k, int n, int paths, int max_path_len, std::uint64_t seed);

struct FlowerConfig {
    int max_petals = 5;
    int max_length = 7;
    int max_budget = 3;
    int max_paths = 8;
};

// Random valid flower: petals of random length and budget (a budget may
// exceed its petal), internal paths, and paths through the core made of a
// prefix or suffix on each side. Occasionally includes the path {core}.
FlowerInstance gen_random_flower(const FlowerConfig& cfg, std::mt19937_64& rng);

}  // namespace hitpaths
