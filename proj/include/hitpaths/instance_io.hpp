#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hitpaths/graph.hpp"
#include "hitpaths/mv_sat.hpp"

namespace hitpaths {

enum class TargetKind {
    Paths,      // each target is an ordered simple path
    Subgraphs,  // each target is a vertex set inducing a connected subgraph
};

struct HitPathsInstance {
    Graph graph;
    std::vector<VertexSeq> paths;
    int t = 0;
    TargetKind kind = TargetKind::Paths;

    friend bool operator==(const HitPathsInstance&, const HitPathsInstance&) = default;
};

enum class Verdict { Yes, No };

struct Solution {
    Verdict verdict = Verdict::No;
    std::vector<VertexId> chosen;       // ascending; empty for No
    std::vector<VertexId> certificate;  // certificate[i] hits target i (Yes only)

    static Solution no() { return {}; }
    // Sorts `chosen` and fills the certificate from `targets`. Throws
    // InvariantViolation if some target is missed.
    static Solution yes(std::vector<VertexId> chosen, const std::vector<VertexSeq>& targets);

    friend bool operator==(const Solution&, const Solution&) = default;
};

// First vertex of `target` that lies in `chosen`, if any.
std::optional<VertexId> hitting_vertex(std::span<const VertexId> target, const std::vector<char>& chosen);

struct VerifyReport {
    bool ok = false;
    std::optional<std::size_t> unhit_target;  // 0-based
    std::string message;
};

// Checks that a YES solution stays within budget and hits every target.
VerifyReport verify_solution(const HitPathsInstance& inst, const Solution& sol);

// Throws ValidationError describing the first structural problem found.
void validate_instance(const HitPathsInstance& inst);

// Text formats. Parsers throw SyntaxError on malformed lines and
// ValidationError on well-formed input that breaks an invariant.
HitPathsInstance parse_instance(std::string_view text);
std::string write_instance(const HitPathsInstance& inst);

// Plain graph: `p edge <n> <m>` followed by m edge lines.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

SignedFormula parse_signed_formula(std::string_view text);
std::string write_signed_formula(const SignedFormula& f);

Solution parse_solution(std::string_view text);
std::string write_solution(const Solution& sol);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace hitpaths
