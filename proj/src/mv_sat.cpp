#include "hitpaths/mv_sat.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <string>

#include "hitpaths/error.hpp"

namespace hitpaths {

std::size_t SignedFormula::max_width() const {
    std::size_t w = 0;
    for (const auto& c : clauses) w = std::max(w, c.size());
    return w;
}

bool satisfies(const SignedFormula& f, const SignedAssignment& a) {
    if (static_cast<int>(a.size()) != f.num_vars) return false;
    for (int v : a)
        if (v < 1 || v > f.num_values) return false;
    for (const auto& clause : f.clauses) {
        bool sat = std::any_of(clause.begin(), clause.end(),
                               [&](const SignedLiteral& l) { return l.holds(a[l.var - 1]); });
        if (!sat) return false;
    }
    return true;
}

bool satisfies(const BoolCnf& cnf, const std::vector<bool>& model) {
    for (const auto& clause : cnf.clauses) {
        bool sat = std::any_of(clause.begin(), clause.end(),
                               [&](BoolLit l) { return model[l.var] == l.positive; });
        if (!sat) return false;
    }
    return true;
}

SignedAssignment ClassicalEncoding::decode(const std::vector<bool>& model) const {
    SignedAssignment out(num_signed_vars, 1);
    for (int i = 1; i <= num_signed_vars; ++i)
        for (int j = 1; j <= num_values; ++j)
            if (model[var_of(i, j)]) out[i - 1] = j;
    return out;
}

ClassicalEncoding signed_to_classical(const SignedFormula& f) {
    ClassicalEncoding enc;
    enc.num_signed_vars = f.num_vars;
    enc.num_values = f.num_values;
    enc.cnf.num_vars = f.num_vars * f.num_values;
    const int n_values = f.num_values;

    for (const auto& clause : f.clauses) {
        if (clause.size() > 2)
            throw ClauseTooWide("clause of width " + std::to_string(clause.size()) + " in a 2-CNF encoding");
        std::vector<BoolLit> out;
        bool always_true = false;
        for (const auto& lit : clause) {
            if (lit.sign == Sign::GE) {
                out.push_back({enc.var_of(lit.var, lit.bound), true});
            } else if (lit.bound >= n_values) {
                always_true = true;
            } else {
                out.push_back({enc.var_of(lit.var, lit.bound + 1), false});
            }
        }
        if (!always_true) enc.cnf.clauses.push_back(std::move(out));
    }
    for (int i = 1; i <= f.num_vars; ++i)
        for (int j = 1; j < n_values; ++j)
            enc.cnf.clauses.push_back({{enc.var_of(i, j + 1), false}, {enc.var_of(i, j), true}});
    for (int i = 1; i <= f.num_vars; ++i) enc.cnf.clauses.push_back({{enc.var_of(i, 1), true}});
    return enc;
}

namespace {

int node_of(BoolLit l) { return 2 * l.var + (l.positive ? 0 : 1); }

// Iterative Tarjan. comp[v] numbers components in the order they are closed,
// which is a reverse topological order of the condensation.
std::vector<int> tarjan_components(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> call;
    int counter = 0;
    int next_comp = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, edge] = call.back();
            if (edge < adj[v].size()) {
                int w = adj[v][edge++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = next_comp;
                } while (w != v);
                ++next_comp;
            }
            int finished = v;
            call.pop_back();
            if (!call.empty()) {
                int parent = call.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
    return comp;
}

}  // namespace

std::optional<std::vector<bool>> solve_2sat(const BoolCnf& cnf) {
    std::vector<std::vector<int>> adj(2 * static_cast<std::size_t>(cnf.num_vars));
    for (const auto& clause : cnf.clauses) {
        if (clause.empty()) return std::nullopt;
        BoolLit a = clause[0];
        BoolLit b = clause.size() > 1 ? clause[1] : clause[0];
        adj[node_of(~a)].push_back(node_of(b));
        adj[node_of(~b)].push_back(node_of(a));
    }
    auto comp = tarjan_components(adj);
    std::vector<bool> model(cnf.num_vars);
    for (int v = 0; v < cnf.num_vars; ++v) {
        int pos = comp[2 * v];
        int neg = comp[2 * v + 1];
        if (pos == neg) return std::nullopt;
        // A literal whose component closes first sits later in topological
        // order, so it is the one set true.
        model[v] = pos < neg;
    }
    return model;
}

std::optional<SignedAssignment> solve_tors2sat(const SignedFormula& f) {
    auto enc = signed_to_classical(f);
    auto model = solve_2sat(enc.cnf);
    if (!model) return std::nullopt;
    auto assignment = enc.decode(*model);
    if (!satisfies(f, assignment))
        throw InvariantViolation("decoded signed assignment does not satisfy the formula");
    return assignment;
}

namespace {

// Scans x_2..x_n lexicographically with x_1 fixed to `lead`. A clause is
// checked as soon as its highest variable is set, and a falsified prefix
// skips its whole subtree, so the first model found is still the
// lexicographically smallest.
std::optional<SignedAssignment> scan_with_lead(const SignedFormula& f, int lead) {
    const int n = f.num_vars;
    std::vector<std::vector<const SignedClause*>> closing(static_cast<std::size_t>(n));
    for (const auto& c : f.clauses) {
        int top = 0;
        for (const auto& lit : c) top = std::max(top, lit.var - 1);
        closing[top].push_back(&c);
    }
    SignedAssignment a(n, 1);
    a[0] = lead;
    auto prefix_ok = [&](int i) {
        for (const SignedClause* c : closing[i])
            if (std::none_of(c->begin(), c->end(), [&](const SignedLiteral& l) { return l.holds(a[l.var - 1]); }))
                return false;
        return true;
    };
    if (!prefix_ok(0)) return std::nullopt;
    int i = 1;
    while (i >= 1) {
        if (i == n) return a;
        if (prefix_ok(i)) {
            ++i;
            if (i < n) a[i] = 1;
            continue;
        }
        // Advance the deepest variable that still has values left.
        while (i >= 1 && a[i] == f.num_values) --i;
        if (i < 1) break;
        ++a[i];
    }
    return std::nullopt;
}

}  // namespace

std::optional<SignedAssignment> enumerate_signed(const SignedFormula& f, std::uint64_t cap, Exec exec) {
    std::uint64_t total = 1;
    for (int i = 0; i < f.num_vars; ++i) {
        if (total > cap / static_cast<std::uint64_t>(f.num_values))
            throw CapExceeded("N^n exceeds the enumeration cap of " + std::to_string(cap));
        total *= static_cast<std::uint64_t>(f.num_values);
    }
    if (total > cap) throw CapExceeded("N^n exceeds the enumeration cap of " + std::to_string(cap));
    if (f.num_vars == 0) {
        SignedAssignment empty;
        if (satisfies(f, empty)) return empty;
        return std::nullopt;
    }

    const int leads = f.num_values;
    if (exec == Exec::Serial) {
        for (int lead = 1; lead <= leads; ++lead)
            if (auto a = scan_with_lead(f, lead)) return a;
        return std::nullopt;
    }

    // First model by lexicographic order: keep the smallest successful lead.
    std::vector<std::optional<SignedAssignment>> found(static_cast<std::size_t>(leads));
    std::atomic<int> best{std::numeric_limits<int>::max()};
#pragma omp parallel for schedule(dynamic, 1)
    for (int lead = 1; lead <= leads; ++lead) {
        if (lead > best.load(std::memory_order_relaxed)) continue;
        found[lead - 1] = scan_with_lead(f, lead);
        if (found[lead - 1]) atomic_min(best, lead);
    }
    for (auto& a : found)
        if (a) return a;
    return std::nullopt;
}

SignedFormula simplify_trivial_clauses(const SignedFormula& f) {
    SignedFormula out{f.num_vars, f.num_values, {}};
    for (const auto& clause : f.clauses) {
        // Weakest bound per (variable, sign): largest <= bound, smallest >= bound.
        std::map<int, int> le, ge;
        for (const auto& lit : clause) {
            if (lit.sign == Sign::LE) {
                auto [it, inserted] = le.emplace(lit.var, lit.bound);
                if (!inserted) it->second = std::max(it->second, lit.bound);
            } else {
                auto [it, inserted] = ge.emplace(lit.var, lit.bound);
                if (!inserted) it->second = std::min(it->second, lit.bound);
            }
        }
        bool trivial = false;
        for (auto [var, c1] : le) {
            auto it = ge.find(var);
            if (it != ge.end() && it->second <= c1 + 1) trivial = true;
        }
        if (trivial) continue;
        SignedClause merged;
        std::map<std::pair<int, Sign>, bool> emitted;
        for (const auto& lit : clause) {
            if (emitted[{lit.var, lit.sign}]) continue;
            emitted[{lit.var, lit.sign}] = true;
            int bound = lit.sign == Sign::LE ? le[lit.var] : ge[lit.var];
            merged.push_back({lit.var, lit.sign, bound});
        }
        out.clauses.push_back(std::move(merged));
    }
    return out;
}

}  // namespace hitpaths
