#include "hitpaths/reductions.hpp"

#include <algorithm>
#include <string>

#include "hitpaths/error.hpp"

namespace hitpaths {

int pair_variable(int k, int i, int j) {
    // Pairs (1,2),(1,3),...,(1,k),(2,3),... follow the k vertex variables.
    int before = 0;
    for (int r = 1; r < i; ++r) before += k - r;
    return k + before + (j - i);
}

SignedFormula clique_to_signed3sat(const Graph& g, int k) {
    if (k < 2) throw ValidationError("clique size must be at least 2");
    const int m = g.num_edges();
    const long long pairs = static_cast<long long>(k) * (k - 1) / 2;
    if (m < pairs)
        throw TooFewEdges("graph has " + std::to_string(m) + " edges, a " + std::to_string(k) + "-clique needs " +
                          std::to_string(pairs));

    SignedFormula f;
    f.num_vars = k + static_cast<int>(pairs);
    // Vertex ids must be representable, so N can exceed |E|; the extra
    // values are then ruled out for the edge variables.
    f.num_values = std::max(m, g.num_vertices());
    const int big_n = f.num_values;
    const auto& edges = g.edges();
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            const int x = pair_variable(k, i, j);
            for (int l = 1; l <= m; ++l) {
                auto [p, q] = edges[l - 1];
                if (p > q) std::swap(p, q);
                SignedClause guard;
                if (l > 1) guard.push_back({x, Sign::LE, l - 1});
                if (l < big_n) guard.push_back({x, Sign::GE, l + 1});
                for (SignedLiteral tail : {SignedLiteral{i, Sign::LE, p}, SignedLiteral{i, Sign::GE, p},
                                           SignedLiteral{j, Sign::LE, q}, SignedLiteral{j, Sign::GE, q}}) {
                    SignedClause c = guard;
                    c.push_back(tail);
                    f.clauses.push_back(std::move(c));
                }
            }
            if (big_n > m) f.clauses.push_back({{x, Sign::LE, m}});
        }
    }
    return f;
}

namespace {

void check_width(const SignedFormula& f) {
    if (f.num_vars < 1) throw ValidationError("formula needs at least one variable");
    for (const auto& c : f.clauses)
        if (c.size() > 3) throw ClauseTooWide("clause with " + std::to_string(c.size()) + " literals");
}

// Petal vertices covered by a literal, ascending.
VertexSeq literal_fragment(const SignedLiteral& lit, int big_n) {
    const int base = (lit.var - 1) * big_n;
    VertexSeq out;
    const int lo = lit.sign == Sign::LE ? 1 : lit.bound;
    const int hi = lit.sign == Sign::LE ? lit.bound : big_n;
    for (int j = lo; j <= hi; ++j) out.push_back(base + j);
    return out;
}

Graph petal_graph(int n, int big_n, int extra) {
    Graph g(n * big_n + extra);
    for (int i = 0; i < n; ++i)
        for (int j = 1; j < big_n; ++j) g.add_edge(i * big_n + j, i * big_n + j + 1);
    return g;
}

}  // namespace

HitPathsInstance signed3sat_to_subtree_instance(const SignedFormula& input) {
    check_width(input);
    const SignedFormula f = simplify_trivial_clauses(input);
    const int n = f.num_vars, big_n = f.num_values;
    const VertexId z = n * big_n + 1;

    HitPathsInstance inst;
    inst.kind = TargetKind::Subgraphs;
    inst.graph = petal_graph(n, big_n, 1);
    for (int i = 0; i < n; ++i) {
        inst.graph.add_edge(i * big_n + 1, z);
        if (big_n > 1) inst.graph.add_edge(i * big_n + big_n, z);
    }
    for (int i = 0; i < n; ++i) {
        VertexSeq petal;
        for (int j = 1; j <= big_n; ++j) petal.push_back(i * big_n + j);
        inst.paths.push_back(std::move(petal));
    }
    for (const auto& clause : f.clauses) {
        VertexSeq target;
        for (const auto& lit : clause) {
            auto frag = literal_fragment(lit, big_n);
            target.insert(target.end(), frag.begin(), frag.end());
        }
        target.push_back(z);
        std::sort(target.begin(), target.end());
        target.erase(std::unique(target.begin(), target.end()), target.end());
        inst.paths.push_back(std::move(target));
    }
    inst.t = n;
    if (cyclomatic_number(inst.graph) > n) throw InvariantViolation("subtree instance has cyclomatic number above n");
    return inst;
}

HitPathsInstance signed3sat_to_fvs2_instance(const SignedFormula& input) {
    check_width(input);
    const SignedFormula f = simplify_trivial_clauses(input);
    const int n = f.num_vars, big_n = f.num_values;
    const VertexId z = n * big_n + 1, z2 = n * big_n + 2;

    HitPathsInstance inst;
    inst.kind = TargetKind::Paths;
    inst.graph = petal_graph(n, big_n, 2);
    for (VertexId v = 1; v <= n * big_n; ++v) {
        inst.graph.add_edge(v, z);
        inst.graph.add_edge(v, z2);
    }
    for (int i = 0; i < n; ++i) {
        VertexSeq petal;
        for (int j = 1; j <= big_n; ++j) petal.push_back(i * big_n + j);
        inst.paths.push_back(std::move(petal));
    }
    for (const auto& clause : f.clauses) {
        VertexSeq path;
        if (clause.empty()) path.push_back(z);
        for (std::size_t l = 0; l < clause.size(); ++l) {
            if (l == 1) path.push_back(z);
            if (l == 2) path.push_back(z2);
            auto frag = literal_fragment(clause[l], big_n);
            path.insert(path.end(), frag.begin(), frag.end());
        }
        if (!is_simple_path(inst.graph, path)) throw InvariantViolation("clause path is not simple");
        inst.paths.push_back(std::move(path));
    }
    inst.t = n;
    return inst;
}

}  // namespace hitpaths
