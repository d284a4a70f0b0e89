#include "hitpaths/flower.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hitpaths/error.hpp"

namespace hitpaths {

namespace {

// petal index (1-based) and position (1-based) of every vertex; 0 for z.
struct PetalIndex {
    std::vector<int> petal;
    std::vector<int> position;
};

PetalIndex index_petals(const FlowerInstance& inst) {
    const auto n = static_cast<std::size_t>(inst.graph.num_vertices()) + 1;
    PetalIndex idx{std::vector<int>(n, 0), std::vector<int>(n, 0)};
    for (std::size_t i = 0; i < inst.petals.size(); ++i)
        for (std::size_t j = 0; j < inst.petals[i].size(); ++j) {
            idx.petal[inst.petals[i][j]] = static_cast<int>(i) + 1;
            idx.position[inst.petals[i][j]] = static_cast<int>(j) + 1;
        }
    return idx;
}

}  // namespace

void validate_flower(const FlowerInstance& inst) {
    const Graph& g = inst.graph;
    if (!g.contains(inst.core)) throw ValidationError("flower core not in graph");
    if (inst.budgets.size() != inst.petals.size()) throw ValidationError("one budget per petal required");
    std::vector<int> owner(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
    owner[inst.core] = -1;
    for (std::size_t i = 0; i < inst.petals.size(); ++i) {
        const auto& petal = inst.petals[i];
        if (petal.empty()) throw ValidationError("empty petal");
        if (inst.budgets[i] < 1) throw ValidationError("petal budgets must be at least 1");
        for (std::size_t j = 0; j < petal.size(); ++j) {
            VertexId v = petal[j];
            if (!g.contains(v) || owner[v] != 0) throw ValidationError("petals must be disjoint and avoid the core");
            owner[v] = static_cast<int>(i) + 1;
            if (j > 0 && !g.has_edge(petal[j - 1], v)) throw ValidationError("petal is not a path");
            if (j > 0 && j + 1 < petal.size() && g.has_edge(inst.core, v))
                throw ValidationError("interior petal vertex adjacent to the core");
        }
    }
    for (VertexId v = 1; v <= g.num_vertices(); ++v)
        if (owner[v] == 0) throw ValidationError("vertex " + std::to_string(v) + " is neither core nor petal");
    for (auto [u, v] : g.edges()) {
        if (u == inst.core || v == inst.core) continue;
        if (owner[u] != owner[v]) throw ValidationError("edge between two petals");
        const auto& petal = inst.petals[owner[u] - 1];
        auto pu = std::find(petal.begin(), petal.end(), u) - petal.begin();
        auto pv = std::find(petal.begin(), petal.end(), v) - petal.begin();
        if (std::abs(pu - pv) != 1) throw ValidationError("petal has a chord");
    }
    for (std::size_t i = 0; i < inst.paths.size(); ++i)
        if (!is_simple_path(g, inst.paths[i]))
            throw ValidationError("flower path " + std::to_string(i) + " is not a simple path");
}

std::optional<std::vector<int>> canonical_solution(int petal_length, std::span<const Interval> internal, int budget,
                                                   int start) {
    for (const auto& iv : internal)
        if (iv.hi < start) return std::nullopt;

    std::vector<char> in_set(static_cast<std::size_t>(petal_length) + 1, 0);
    std::vector<int> chosen{start};
    in_set[start] = 1;
    auto met = [&](const Interval& iv) {
        for (int p = iv.lo; p <= iv.hi; ++p)
            if (in_set[p]) return true;
        return false;
    };
    while (true) {
        const Interval* pick = nullptr;
        for (const auto& iv : internal)
            if (!met(iv) && (pick == nullptr || iv.hi < pick->hi)) pick = &iv;
        if (pick == nullptr) break;
        chosen.push_back(pick->hi);
        in_set[pick->hi] = 1;
    }
    for (int p = petal_length; p >= start && static_cast<int>(chosen.size()) < budget; --p) {
        if (in_set[p]) continue;
        chosen.push_back(p);
        in_set[p] = 1;
    }
    if (static_cast<int>(chosen.size()) != budget) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    if (chosen.front() != start) throw InvariantViolation("canonical solution does not start at its index");
    return chosen;
}

PetalCanon PetalCanon::compute(int petal_length, std::span<const Interval> internal, int budget) {
    PetalCanon pc;
    pc.length = petal_length;
    pc.by_start.resize(static_cast<std::size_t>(petal_length) + 1);
    int first = 0, last = 0;
    for (int start = 1; start <= petal_length; ++start) {
        pc.by_start[start] = canonical_solution(petal_length, internal, budget, start);
        if (!pc.by_start[start]) continue;
        if (first == 0) {
            first = start;
        } else if (last != start - 1) {
            throw ContiguityViolation("well-defined canonical indices are not contiguous");
        }
        last = start;
    }
    if (first != 0) pc.range = std::make_pair(first, last);
    return pc;
}

std::optional<std::pair<int, int>> canonical_range(int petal_length, std::span<const Interval> internal, int budget) {
    return PetalCanon::compute(petal_length, internal, budget).range;
}

std::optional<SignedLiteral> fragment_literal(const Fragment& fragment, const PetalCanon& canon) {
    if (fragment.kind == Fragment::Kind::Prefix) return SignedLiteral{fragment.petal, Sign::LE, fragment.cut};
    if (!canon.range) return std::nullopt;
    // The right ends of canonical solutions grow with the start index, so
    // the first start that reaches the cut bounds the literal.
    for (int start = canon.range->first; start <= canon.range->second; ++start)
        if (canon.by_start[start]->back() >= fragment.cut) return SignedLiteral{fragment.petal, Sign::GE, start};
    return std::nullopt;
}

FlowerFormula build_flower_formula(const FlowerInstance& inst) {
    const auto idx = index_petals(inst);
    const int petals = static_cast<int>(inst.petals.size());
    FlowerFormula out;
    out.formula.num_vars = petals;
    out.formula.num_values = 1;
    for (const auto& p : inst.petals) out.formula.num_values = std::max(out.formula.num_values, static_cast<int>(p.size()));

    // Deduplicate by vertex set; hitting one copy hits all.
    std::vector<const VertexSeq*> unique_paths;
    {
        std::map<std::vector<VertexId>, bool> seen;
        for (const auto& p : inst.paths) {
            std::vector<VertexId> key = p;
            std::sort(key.begin(), key.end());
            if (seen.emplace(std::move(key), true).second) unique_paths.push_back(&p);
        }
    }

    std::vector<std::vector<Interval>> internal(static_cast<std::size_t>(petals));
    for (const VertexSeq* p : unique_paths) {
        if (std::find(p->begin(), p->end(), inst.core) != p->end()) continue;
        int petal = idx.petal[p->front()];
        int lo = idx.position[p->front()], hi = lo;
        for (VertexId v : *p) {
            lo = std::min(lo, idx.position[v]);
            hi = std::max(hi, idx.position[v]);
        }
        internal[petal - 1].push_back({lo, hi});
    }

    for (int i = 0; i < petals; ++i) {
        out.canon.push_back(PetalCanon::compute(static_cast<int>(inst.petals[i].size()), internal[i], inst.budgets[i]));
        const auto& range = out.canon.back().range;
        if (!range) {
            out.no_reason = "a petal has no canonical solution";
            return out;
        }
        out.formula.clauses.push_back({{i + 1, Sign::GE, range->first}});
        out.formula.clauses.push_back({{i + 1, Sign::LE, range->second}});
    }

    for (const VertexSeq* p : unique_paths) {
        auto zpos = std::find(p->begin(), p->end(), inst.core);
        if (zpos == p->end()) continue;
        if (p->size() == 1) {
            out.no_reason = "a path consists of the core alone";
            return out;
        }
        // The run on each side of z, and the vertex next to z on that run.
        std::vector<Fragment> frags;
        auto make_fragment = [&](auto begin, auto end, VertexId touching) {
            if (begin == end) return;
            int petal = idx.petal[touching];
            int lo = idx.position[touching], hi = lo;
            for (auto it = begin; it != end; ++it) {
                lo = std::min(lo, idx.position[*it]);
                hi = std::max(hi, idx.position[*it]);
            }
            const int len = static_cast<int>(inst.petals[petal - 1].size());
            if (idx.position[touching] == 1) {
                frags.push_back({petal, Fragment::Kind::Prefix, hi});
            } else if (idx.position[touching] == len) {
                frags.push_back({petal, Fragment::Kind::Suffix, lo});
            } else {
                throw FlowerShapeViolation("path enters a petal through an interior vertex");
            }
        };
        if (zpos != p->begin()) make_fragment(p->begin(), zpos, *(zpos - 1));
        if (zpos + 1 != p->end()) make_fragment(zpos + 1, p->end(), *(zpos + 1));

        SignedClause clause;
        for (const auto& fr : frags)
            if (auto lit = fragment_literal(fr, out.canon[fr.petal - 1])) clause.push_back(*lit);
        if (clause.empty()) {
            out.no_reason = "no canonical solution can hit a path through the core";
            return out;
        }
        out.formula.clauses.push_back(std::move(clause));
    }
    return out;
}

Solution solve_flower(const FlowerInstance& inst) {
    auto built = build_flower_formula(inst);
    if (built.no_reason != nullptr) return Solution::no();
    auto model = solve_tors2sat(built.formula);
    if (!model) return Solution::no();

    std::vector<VertexId> chosen;
    for (std::size_t i = 0; i < inst.petals.size(); ++i) {
        const auto& canon = built.canon[i];
        const int start = (*model)[i];
        if (start > canon.length || !canon.by_start[start])
            throw InvariantViolation("model selects an undefined canonical solution");
        const auto& positions = *canon.by_start[start];
        if (static_cast<int>(positions.size()) != inst.budgets[i])
            throw InvariantViolation("canonical solution violates its petal budget");
        for (int pos : positions) chosen.push_back(inst.petals[i][pos - 1]);
    }
    if (std::find(chosen.begin(), chosen.end(), inst.core) != chosen.end())
        throw InvariantViolation("flower solution contains the core");
    // Solution::yes throws if some path is missed.
    return Solution::yes(std::move(chosen), inst.paths);
}

}  // namespace hitpaths
