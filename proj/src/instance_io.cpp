#include "hitpaths/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hitpaths/error.hpp"

namespace hitpaths {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

// Non-empty, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            if (j > i) line.tokens.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.tokens.empty() && line.tokens.front() != "c") out.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

long long to_int(std::string_view tok, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw SyntaxError(line, "expected an integer, got '" + std::string(tok) + "'");
    if (value > 1'000'000'000 || value < -1'000'000'000)
        throw SyntaxError(line, "integer out of range: " + std::string(tok));
    return value;
}

constexpr long long kMaxCount = 10'000'000;

int to_count(std::string_view tok, std::size_t line) {
    long long v = to_int(tok, line);
    if (v < 0) throw ValidationError("line " + std::to_string(line) + ": negative count " + std::string(tok));
    if (v > kMaxCount) throw ValidationError("line " + std::to_string(line) + ": count too large " + std::string(tok));
    return static_cast<int>(v);
}

void expect_arity(const Line& line, std::size_t n, const char* what) {
    if (line.tokens.size() != n)
        throw SyntaxError(line.number, std::string("malformed ") + what + " line");
}

std::string join_seq(std::span<const VertexId> seq) {
    std::string s;
    for (VertexId v : seq) {
        s += ' ';
        s += std::to_string(v);
    }
    return s;
}

}  // namespace

Solution Solution::yes(std::vector<VertexId> chosen, const std::vector<VertexSeq>& targets) {
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    VertexId top = chosen.empty() ? 0 : chosen.back();
    for (const auto& t : targets)
        for (VertexId v : t) top = std::max(top, v);
    std::vector<char> mask(static_cast<std::size_t>(top) + 1, 0);
    for (VertexId v : chosen) mask[v] = 1;
    Solution sol;
    sol.verdict = Verdict::Yes;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        auto hit = hitting_vertex(targets[i], mask);
        if (!hit) throw InvariantViolation("solution misses target " + std::to_string(i));
        sol.certificate.push_back(*hit);
    }
    sol.chosen = std::move(chosen);
    return sol;
}

std::optional<VertexId> hitting_vertex(std::span<const VertexId> target, const std::vector<char>& chosen) {
    for (VertexId v : target)
        if (v >= 0 && static_cast<std::size_t>(v) < chosen.size() && chosen[v]) return v;
    return std::nullopt;
}

VerifyReport verify_solution(const HitPathsInstance& inst, const Solution& sol) {
    if (sol.verdict == Verdict::No) return {false, std::nullopt, "solution claims NO; nothing to verify"};
    const int n = inst.graph.num_vertices();
    std::vector<char> mask(static_cast<std::size_t>(n) + 1, 0);
    for (VertexId v : sol.chosen) {
        if (!inst.graph.contains(v)) return {false, std::nullopt, "vertex " + std::to_string(v) + " not in graph"};
        if (mask[v]) return {false, std::nullopt, "vertex " + std::to_string(v) + " listed twice"};
        mask[v] = 1;
    }
    if (static_cast<int>(sol.chosen.size()) > inst.t)
        return {false, std::nullopt,
                "solution size " + std::to_string(sol.chosen.size()) + " exceeds budget " + std::to_string(inst.t)};
    for (std::size_t i = 0; i < inst.paths.size(); ++i)
        if (!hitting_vertex(inst.paths[i], mask))
            return {false, i, "target " + std::to_string(i) + " is not hit"};
    return {true, std::nullopt, "ok"};
}

void validate_instance(const HitPathsInstance& inst) {
    const auto& g = inst.graph;
    if (inst.t < 0 || inst.t > g.num_vertices())
        throw ValidationError("budget " + std::to_string(inst.t) + " outside 0.." + std::to_string(g.num_vertices()));
    for (std::size_t i = 0; i < inst.paths.size(); ++i) {
        const auto& p = inst.paths[i];
        const std::string where = "target " + std::to_string(i) + ": ";
        if (p.empty()) throw ValidationError(where + "empty");
        for (VertexId v : p)
            if (!g.contains(v)) throw ValidationError(where + "vertex " + std::to_string(v) + " out of range");
        std::vector<VertexId> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ValidationError(where + "repeated vertex");
        if (inst.kind == TargetKind::Paths) {
            for (std::size_t j = 1; j < p.size(); ++j)
                if (!g.has_edge(p[j - 1], p[j]))
                    throw ValidationError(where + "vertices " + std::to_string(p[j - 1]) + " and " +
                                          std::to_string(p[j]) + " are not adjacent");
        } else if (!induces_connected(g, p)) {
            throw ValidationError(where + "vertex set does not induce a connected subgraph");
        }
    }
}

HitPathsInstance parse_instance(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw SyntaxError(1, "missing problem line");
    const Line& head = lines.front();
    if (head.tokens.front() != "p") throw SyntaxError(head.number, "expected problem line 'p hitpaths ...'");
    expect_arity(head, 6, "problem");
    HitPathsInstance inst;
    if (head.tokens[1] == "hitpaths") {
        inst.kind = TargetKind::Paths;
    } else if (head.tokens[1] == "hitsub") {
        inst.kind = TargetKind::Subgraphs;
    } else {
        throw SyntaxError(head.number, "unknown problem kind '" + std::string(head.tokens[1]) + "'");
    }
    const int n = to_count(head.tokens[2], head.number);
    const int m = to_count(head.tokens[3], head.number);
    const int p = to_count(head.tokens[4], head.number);
    inst.t = static_cast<int>(to_int(head.tokens[5], head.number));
    inst.graph = Graph(n);

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto kind = line.tokens.front();
        if (kind == "e") {
            expect_arity(line, 3, "edge");
            auto u = static_cast<VertexId>(to_int(line.tokens[1], line.number));
            auto v = static_cast<VertexId>(to_int(line.tokens[2], line.number));
            inst.graph.add_edge(u, v);
        } else if (kind == "s") {
            if (line.tokens.size() < 2) throw SyntaxError(line.number, "malformed target line");
            const int k = to_count(line.tokens[1], line.number);
            expect_arity(line, static_cast<std::size_t>(k) + 2, "target");
            VertexSeq seq;
            for (int j = 0; j < k; ++j)
                seq.push_back(static_cast<VertexId>(to_int(line.tokens[2 + j], line.number)));
            inst.paths.push_back(std::move(seq));
        } else if (kind == "p") {
            throw SyntaxError(line.number, "duplicate problem line");
        } else {
            throw SyntaxError(line.number, "unknown line type '" + std::string(kind) + "'");
        }
    }
    if (inst.graph.num_edges() != m)
        throw ValidationError("header announces " + std::to_string(m) + " edges, found " +
                              std::to_string(inst.graph.num_edges()));
    if (static_cast<int>(inst.paths.size()) != p)
        throw ValidationError("header announces " + std::to_string(p) + " targets, found " +
                              std::to_string(inst.paths.size()));
    validate_instance(inst);
    return inst;
}

std::string write_instance(const HitPathsInstance& inst) {
    std::ostringstream os;
    os << "p " << (inst.kind == TargetKind::Paths ? "hitpaths" : "hitsub") << ' ' << inst.graph.num_vertices()
       << ' ' << inst.graph.num_edges() << ' ' << inst.paths.size() << ' ' << inst.t << '\n';
    for (auto [u, v] : inst.graph.edges()) os << "e " << u << ' ' << v << '\n';
    for (const auto& p : inst.paths) os << "s " << p.size() << join_seq(p) << '\n';
    return os.str();
}

Graph parse_graph(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw SyntaxError(1, "missing problem line");
    const Line& head = lines.front();
    if (head.tokens.front() != "p" || head.tokens.size() != 4 || head.tokens[1] != "edge")
        throw SyntaxError(head.number, "expected 'p edge <n> <m>'");
    Graph g(to_count(head.tokens[2], head.number));
    const int m = to_count(head.tokens[3], head.number);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.front() != "e") throw SyntaxError(line.number, "expected an edge line");
        expect_arity(line, 3, "edge");
        g.add_edge(static_cast<VertexId>(to_int(line.tokens[1], line.number)),
                   static_cast<VertexId>(to_int(line.tokens[2], line.number)));
    }
    if (g.num_edges() != m)
        throw ValidationError("header announces " + std::to_string(m) + " edges, found " +
                              std::to_string(g.num_edges()));
    return g;
}

std::string write_graph(const Graph& g) {
    std::ostringstream os;
    os << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
    return os.str();
}

SignedFormula parse_signed_formula(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw SyntaxError(1, "missing problem line");
    const Line& head = lines.front();
    if (head.tokens.front() != "p" || head.tokens.size() != 5 || head.tokens[1] != "scnf")
        throw SyntaxError(head.number, "expected 'p scnf <n> <N> <c>'");
    SignedFormula f;
    f.num_vars = to_count(head.tokens[2], head.number);
    f.num_values = to_count(head.tokens[3], head.number);
    const int c = to_count(head.tokens[4], head.number);
    if (f.num_values < 1) throw ValidationError("truth value set must be nonempty");

    SignedClause current;
    bool open = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        for (auto tok : line.tokens) {
            if (tok == "0") {
                f.clauses.push_back(std::move(current));
                current.clear();
                open = false;
                continue;
            }
            open = true;
            if (tok.size() < 4 || (tok[0] != '+' && tok[0] != '-'))
                throw SyntaxError(line.number, "malformed literal '" + std::string(tok) + "'");
            auto colon = tok.find(':');
            if (colon == std::string_view::npos) throw SyntaxError(line.number, "literal lacks ':'");
            SignedLiteral lit;
            lit.sign = tok[0] == '+' ? Sign::GE : Sign::LE;
            lit.var = static_cast<int>(to_int(tok.substr(1, colon - 1), line.number));
            lit.bound = static_cast<int>(to_int(tok.substr(colon + 1), line.number));
            if (lit.var < 1 || lit.var > f.num_vars)
                throw ValidationError("line " + std::to_string(line.number) + ": variable " +
                                      std::to_string(lit.var) + " outside 1.." + std::to_string(f.num_vars));
            if (lit.bound < 1 || lit.bound > f.num_values)
                throw ValidationError("line " + std::to_string(line.number) + ": bound " + std::to_string(lit.bound) +
                                      " outside 1.." + std::to_string(f.num_values));
            current.push_back(lit);
        }
    }
    if (open) throw SyntaxError(lines.back().number, "clause not terminated by 0");
    if (static_cast<int>(f.clauses.size()) != c)
        throw ValidationError("header announces " + std::to_string(c) + " clauses, found " +
                              std::to_string(f.clauses.size()));
    return f;
}

std::string write_signed_formula(const SignedFormula& f) {
    std::ostringstream os;
    os << "p scnf " << f.num_vars << ' ' << f.num_values << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (const auto& lit : clause)
            os << (lit.sign == Sign::GE ? '+' : '-') << lit.var << ':' << lit.bound << ' ';
        os << "0\n";
    }
    return os.str();
}

Solution parse_solution(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.size() != 1) throw SyntaxError(lines.empty() ? 1 : lines[1].number, "expected exactly one 's' line");
    const Line& line = lines.front();
    if (line.tokens.front() != "s" || line.tokens.size() < 2) throw SyntaxError(line.number, "expected 's <size> ...'");
    long long size = to_int(line.tokens[1], line.number);
    if (size == -1) {
        expect_arity(line, 2, "solution");
        return Solution::no();
    }
    if (size < 0) throw ValidationError("negative solution size");
    expect_arity(line, static_cast<std::size_t>(size) + 2, "solution");
    Solution sol;
    sol.verdict = Verdict::Yes;
    for (long long i = 0; i < size; ++i)
        sol.chosen.push_back(static_cast<VertexId>(to_int(line.tokens[2 + i], line.number)));
    std::sort(sol.chosen.begin(), sol.chosen.end());
    return sol;
}

std::string write_solution(const Solution& sol) {
    if (sol.verdict == Verdict::No) return "s -1";
    return "s " + std::to_string(sol.chosen.size()) + join_seq(sol.chosen);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << contents;
}

}  // namespace hitpaths
