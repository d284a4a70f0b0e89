#include "hitpaths/fpt.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <set>
#include <string>

#include "hitpaths/error.hpp"
#include "hitpaths/tree_cycle.hpp"

namespace hitpaths {

PreprocessResult preprocess(const HitPathsInstance& inst) {
    const Graph& g = inst.graph;
    const int n = g.num_vertices();
    std::vector<char> alive(static_cast<std::size_t>(n) + 1, 1);
    alive[0] = 0;
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
    std::set<VertexId> low;
    for (VertexId v = 1; v <= n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) low.insert(v);
    }
    std::vector<VertexSeq> paths = inst.paths;
    std::vector<char> path_alive(paths.size(), 1);
    std::vector<std::vector<std::size_t>> paths_at(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (VertexId v : paths[i]) paths_at[v].push_back(i);

    PreprocessResult out;
    out.t_remaining = inst.t;
    while (!low.empty()) {
        VertexId v = *low.begin();
        low.erase(low.begin());
        if (!alive[v]) continue;
        bool singleton = false;
        for (std::size_t i : paths_at[v])
            if (path_alive[i] && paths[i].size() == 1) singleton = true;
        if (singleton) {
            out.forced.push_back(v);
            --out.t_remaining;
            for (std::size_t i : paths_at[v]) path_alive[i] = 0;
        } else {
            // v has at most one neighbour, so it can only end a path.
            for (std::size_t i : paths_at[v]) {
                if (!path_alive[i]) continue;
                auto& p = paths[i];
                if (p.front() == v) {
                    p.erase(p.begin());
                } else if (p.back() == v) {
                    p.pop_back();
                } else {
                    throw InvariantViolation("low-degree vertex inside a path");
                }
            }
        }
        alive[v] = 0;
        for (VertexId w : g.neighbors(v)) {
            if (!alive[w]) continue;
            if (--deg[w] <= 1) low.insert(w);
        }
    }

    auto sub = induced_subgraph(g, alive);
    out.reduced.graph = std::move(sub.graph);
    out.reduced.kind = TargetKind::Paths;
    out.reduced.t = std::max(out.t_remaining, 0);
    out.old_to_new = std::move(sub.old_to_new);
    out.new_to_old.assign(static_cast<std::size_t>(out.reduced.graph.num_vertices()) + 1, 0);
    for (VertexId v = 1; v <= n; ++v)
        if (out.old_to_new[v] != 0) out.new_to_old[out.old_to_new[v]] = v;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (!path_alive[i]) continue;
        VertexSeq mapped;
        for (VertexId v : paths[i]) mapped.push_back(out.old_to_new[v]);
        out.reduced.paths.push_back(std::move(mapped));
    }
    std::sort(out.forced.begin(), out.forced.end());
    if (cyclomatic_number(out.reduced.graph) != cyclomatic_number(g))
        throw InvariantViolation("preprocessing changed the cyclomatic number");
    return out;
}

std::vector<ComponentBudget> component_budgets(std::span<const PathComponent> comps,
                                               const std::vector<VertexSeq>& paths, int num_vertices) {
    std::vector<int> comp_of(static_cast<std::size_t>(num_vertices) + 1, -1);
    std::vector<int> position(static_cast<std::size_t>(num_vertices) + 1, 0);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (std::size_t j = 0; j < comps[c].vertices.size(); ++j) {
            comp_of[comps[c].vertices[j]] = static_cast<int>(c);
            position[comps[c].vertices[j]] = static_cast<int>(j) + 1;
        }
    std::vector<ComponentBudget> out(comps.size());
    for (const auto& p : paths) {
        const int c = comp_of[p.front()];
        if (c < 0) continue;
        if (!std::all_of(p.begin(), p.end(), [&](VertexId v) { return comp_of[v] == c; })) continue;
        int lo = position[p.front()], hi = lo;
        for (VertexId v : p) {
            lo = std::min(lo, position[v]);
            hi = std::max(hi, position[v]);
        }
        out[c].internal.push_back({lo, hi});
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
        out[c].optimum = stab_intervals(comps[c].size(), out[c].internal);
        out[c].opt = out[c].optimum.size;
    }
    return out;
}

BranchSpec make_branch(std::uint64_t s_mask, std::uint64_t c_mask, std::span<const ComponentBudget> budgets) {
    BranchSpec spec{s_mask, c_mask, {}, std::popcount(s_mask)};
    for (std::size_t c = 0; c < budgets.size(); ++c) {
        const bool at_opt = (c_mask >> c) & 1U;
        spec.budgets.push_back(budgets[c].opt + (at_opt ? 0 : 1));
        spec.cost += spec.budgets.back();
    }
    return spec;
}

BranchOutcome build_flower_branch(const Graph& g, std::span<const VertexId> s, std::span<const PathComponent> comps,
                                  const std::vector<VertexSeq>& paths, const BranchSpec& spec) {
    const int n = g.num_vertices();
    std::vector<char> in_s_prime(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> in_core(static_cast<std::size_t>(n) + 1, 0);
    bool has_core = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if ((spec.s_mask >> i) & 1U) {
            in_s_prime[s[i]] = 1;
        } else {
            in_core[s[i]] = 1;
            has_core = true;
        }
    }
    std::vector<int> comp_of(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c].vertices) comp_of[v] = static_cast<int>(c);
    auto funded = [&](int c) { return c >= 0 && spec.budgets[c] > 0; };
    auto deleted = [&](VertexId v) { return comp_of[v] >= 0 && spec.budgets[comp_of[v]] == 0; };

    std::vector<VertexSeq> surviving;
    std::vector<int> covered(comps.size(), 0);
    for (const auto& p : paths) {
        // Step 1: targets through S' are already hit.
        if (std::any_of(p.begin(), p.end(), [&](VertexId v) { return in_s_prime[v] != 0; })) continue;
        // Step 2: a target covering a funded component is hit by its budget.
        std::fill(covered.begin(), covered.end(), 0);
        bool covers_funded = false;
        for (VertexId v : p) {
            const int c = comp_of[v];
            if (c >= 0 && ++covered[c] == comps[c].size() && funded(c)) covers_funded = true;
        }
        if (covers_funded) continue;
        // Step 3: unfunded components disappear from targets.
        VertexSeq rest;
        for (VertexId v : p)
            if (!deleted(v)) rest.push_back(v);
        if (rest.empty()) return BranchInfeasible{"a target lies inside an unfunded component"};
        surviving.push_back(std::move(rest));
    }

    if (!has_core) {
        for (const auto& p : surviving) {
            const int c = comp_of[p.front()];
            if (!funded(c) || !std::all_of(p.begin(), p.end(), [&](VertexId v) { return comp_of[v] == c; }))
                return DirectVerdict{false};
        }
        for (std::size_t c = 0; c < comps.size(); ++c)
            if (spec.budgets[c] > comps[c].size()) return DirectVerdict{false};
        return DirectVerdict{true};
    }

    // Step 4: identify S \ S' into the core.
    std::vector<char> keep(static_cast<std::size_t>(n) + 1, 0);
    for (VertexId v = 1; v <= n; ++v) keep[v] = !in_s_prime[v] && !deleted(v);
    auto sub = induced_subgraph(g, keep);
    std::vector<VertexId> core_members;
    for (VertexId v = 1; v <= n; ++v)
        if (in_core[v]) core_members.push_back(sub.old_to_new[v]);
    auto merged = identify_vertices(sub.graph, core_members);

    FlowerBranch out;
    out.flower.graph = std::move(merged.graph);
    out.flower.core = out.flower.graph.num_vertices();
    out.origin.assign(static_cast<std::size_t>(out.flower.core) + 1, 0);
    std::vector<VertexId> to_flower(static_cast<std::size_t>(n) + 1, 0);
    for (VertexId v = 1; v <= n; ++v) {
        if (!keep[v]) continue;
        to_flower[v] = merged.old_to_new[sub.old_to_new[v]];
        if (!in_core[v]) out.origin[to_flower[v]] = v;
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (!funded(static_cast<int>(c))) continue;
        std::vector<VertexId> petal;
        for (VertexId v : comps[c].vertices) petal.push_back(to_flower[v]);
        out.flower.petals.push_back(std::move(petal));
        out.flower.budgets.push_back(spec.budgets[c]);
    }
    for (const auto& p : surviving) {
        VertexSeq mapped;
        for (VertexId v : p) {
            VertexId w = to_flower[v];
            if (w == out.flower.core && !mapped.empty() && mapped.back() == w) continue;
            mapped.push_back(w);
        }
        out.flower.paths.push_back(std::move(mapped));
    }
    try {
        validate_flower(out.flower);
    } catch (const ValidationError& e) {
        throw FlowerShapeViolation(std::string("branch did not produce a flower: ") + e.what());
    }
    return out;
}

std::vector<int> padded_component_fill(int length, const PositionSet& optimum, int budget) {
    if (budget < optimum.size || budget > length) throw InvariantViolation("component budget out of range");
    std::vector<char> used(static_cast<std::size_t>(length) + 1, 0);
    std::vector<int> out = optimum.positions;
    for (int p : out) used[p] = 1;
    for (int p = length; p >= 1 && static_cast<int>(out.size()) < budget; --p)
        if (!used[p]) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> cycle_order(const Graph& g) {
    std::vector<VertexId> order;
    if (g.num_vertices() == 0) return order;
    VertexId prev = 0, cur = 1;
    do {
        order.push_back(cur);
        const auto& nb = g.neighbors(cur);
        VertexId next = nb.front() != prev ? nb.front() : nb.back();
        if (prev == 0) next = nb.front();
        prev = cur;
        cur = next;
    } while (cur != 1 && static_cast<int>(order.size()) <= g.num_vertices());
    if (static_cast<int>(order.size()) != g.num_vertices()) throw InvariantViolation("graph is not a single cycle");
    return order;
}

CycleArc path_to_arc(std::span<const VertexId> path, const std::vector<int>& position, int cycle_length) {
    const int a = position[path.front()];
    const int b = position[path.back()];
    if (path.size() == 1) return {a, a};
    const int second = position[path[1]];
    if (second == a % cycle_length + 1) return {a, b};
    return {b, a};
}

namespace {

struct BranchContext {
    const Graph* g;
    std::vector<VertexId> s;
    std::vector<PathComponent> comps;
    std::vector<ComponentBudget> budgets;
    const std::vector<VertexSeq>* paths;
    int t;
};

struct BranchCounters {
    std::atomic<std::uint64_t> within_budget{0};
    std::atomic<std::uint64_t> evaluated{0};
    std::atomic<std::uint64_t> flower_calls{0};
    std::atomic<std::uint64_t> direct{0};
    std::atomic<std::uint64_t> infeasible{0};
};

// Solution in the ids of ctx.g, with its cost, or nullopt.
std::optional<std::vector<VertexId>> evaluate_branch(const BranchContext& ctx, std::uint64_t index,
                                                     BranchCounters& counters) {
    const auto c_bits = ctx.comps.size();
    const std::uint64_t c_mask = c_bits == 0 ? 0 : index & ((std::uint64_t{1} << c_bits) - 1);
    const std::uint64_t s_mask = index >> c_bits;
    BranchSpec spec = make_branch(s_mask, c_mask, ctx.budgets);
    if (spec.cost > ctx.t) return std::nullopt;
    for (std::size_t c = 0; c < ctx.comps.size(); ++c)
        if (spec.budgets[c] > ctx.comps[c].size()) return std::nullopt;
    counters.within_budget.fetch_add(1, std::memory_order_relaxed);
    counters.evaluated.fetch_add(1, std::memory_order_relaxed);

    std::vector<VertexId> chosen;
    for (std::size_t i = 0; i < ctx.s.size(); ++i)
        if ((s_mask >> i) & 1U) chosen.push_back(ctx.s[i]);

    auto outcome = build_flower_branch(*ctx.g, ctx.s, ctx.comps, *ctx.paths, spec);
    if (std::holds_alternative<BranchInfeasible>(outcome)) {
        counters.infeasible.fetch_add(1, std::memory_order_relaxed);
        return std::nullopt;
    }
    if (auto* direct = std::get_if<DirectVerdict>(&outcome)) {
        counters.direct.fetch_add(1, std::memory_order_relaxed);
        if (!direct->feasible) return std::nullopt;
        for (std::size_t c = 0; c < ctx.comps.size(); ++c) {
            if (spec.budgets[c] == 0) continue;
            for (int pos : padded_component_fill(ctx.comps[c].size(), ctx.budgets[c].optimum, spec.budgets[c]))
                chosen.push_back(ctx.comps[c].vertices[pos - 1]);
        }
        return chosen;
    }
    auto& fb = std::get<FlowerBranch>(outcome);
    counters.flower_calls.fetch_add(1, std::memory_order_relaxed);
    Solution sol = solve_flower(fb.flower);
    if (sol.verdict == Verdict::No) return std::nullopt;
    for (VertexId v : sol.chosen) chosen.push_back(fb.origin[v]);
    return chosen;
}

struct BranchSearch {
    std::optional<std::uint64_t> winner;
    std::vector<VertexId> chosen;
    std::optional<int> best_cost;
};

BranchSearch search_serial(const BranchContext& ctx, std::uint64_t total, bool exhaustive, BranchCounters& counters) {
    BranchSearch out;
    for (std::uint64_t b = 0; b < total; ++b) {
        auto chosen = evaluate_branch(ctx, b, counters);
        if (!chosen) continue;
        const int cost = static_cast<int>(chosen->size());
        if (!out.best_cost || cost < *out.best_cost) out.best_cost = cost;
        if (!out.winner) {
            out.winner = b;
            out.chosen = std::move(*chosen);
        }
        if (!exhaustive) break;
    }
    return out;
}

BranchSearch search_parallel(const BranchContext& ctx, std::uint64_t total, bool exhaustive,
                             BranchCounters& counters) {
    BranchSearch out;
    std::atomic<std::uint64_t> first{std::numeric_limits<std::uint64_t>::max()};
    std::atomic<int> best_cost{std::numeric_limits<int>::max()};
    std::mutex lock;
    const auto n = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < n; ++i) {
        const auto b = static_cast<std::uint64_t>(i);
        if (!exhaustive && b > first.load(std::memory_order_relaxed)) continue;
        auto chosen = evaluate_branch(ctx, b, counters);
        if (!chosen) continue;
        atomic_min(best_cost, static_cast<int>(chosen->size()));
        std::lock_guard<std::mutex> guard(lock);
        if (b < first.load(std::memory_order_relaxed)) {
            first.store(b, std::memory_order_relaxed);
            out.chosen = std::move(*chosen);
        }
    }
    if (first.load() != std::numeric_limits<std::uint64_t>::max()) {
        out.winner = first.load();
        out.best_cost = best_cost.load();
    }
    return out;
}

Solution finish(const HitPathsInstance& inst, const PreprocessResult& pre, const std::vector<VertexId>& reduced_ids) {
    std::vector<VertexId> chosen = pre.forced;
    for (VertexId v : reduced_ids) chosen.push_back(pre.new_to_old[v]);
    Solution sol;
    try {
        sol = Solution::yes(std::move(chosen), inst.paths);
    } catch (const InvariantViolation& e) {
        throw InvariantViolation(std::string("assembled solution fails verification: ") + e.what());
    }
    auto report = verify_solution(inst, sol);
    if (!report.ok) throw InvariantViolation("assembled solution fails verification: " + report.message);
    return sol;
}

}  // namespace

SolveResult solve(const HitPathsInstance& inst, const SolveOptions& opts) {
    if (inst.kind != TargetKind::Paths) throw ValidationError("the branching solver only accepts path targets");
    SolveResult res;
    auto& stats = res.stats;
    const auto pre = preprocess(inst);
    stats.k = cyclomatic_number(pre.reduced.graph);

    if (pre.t_remaining < 0) return res;
    if (pre.reduced.graph.num_vertices() == 0) {
        stats.path = SolvePath::Empty;
        stats.best_cost = static_cast<int>(pre.forced.size());
        res.solution = finish(inst, pre, {});
        return res;
    }

    const Graph g = connect_components(pre.reduced.graph);
    const auto& paths = pre.reduced.paths;
    const int t = pre.t_remaining;
    const bool two_regular = [&] {
        for (VertexId v = 1; v <= g.num_vertices(); ++v)
            if (g.degree(v) != 2) return false;
        return true;
    }();

    if (two_regular) {
        stats.path = SolvePath::Cycle;
        const auto order = cycle_order(g);
        const int len = static_cast<int>(order.size());
        std::vector<int> position(static_cast<std::size_t>(len) + 1, 0);
        for (int i = 0; i < len; ++i) position[order[i]] = i + 1;
        std::vector<CycleArc> arcs;
        for (const auto& p : paths) arcs.push_back(path_to_arc(p, position, len));
        const auto best = hit_paths_in_cycle(len, arcs);
        stats.best_cost = static_cast<int>(pre.forced.size()) + best.size;
        if (best.size > t) return res;
        std::vector<VertexId> chosen;
        for (int pos : best.positions) chosen.push_back(order[pos - 1]);
        res.solution = finish(inst, pre, chosen);
        return res;
    }

    stats.path = SolvePath::Branching;
    BranchContext ctx{&g, high_degree_set(g), {}, {}, &paths, t};
    ctx.comps = path_components(g, ctx.s);
    ctx.budgets = component_budgets(ctx.comps, paths, g.num_vertices());
    stats.s_size = static_cast<int>(ctx.s.size());
    stats.c_size = static_cast<int>(ctx.comps.size());
    if (stats.s_size > 2 * stats.k - 2)
        throw InvariantViolation("more high-degree vertices than 2k - 2");
    if (stats.c_size > stats.k + stats.s_size - 1)
        throw InvariantViolation("more components than k + |S| - 1");
    const int bits = stats.s_size + stats.c_size;
    if (bits > 62) throw Error("branching space 2^" + std::to_string(bits) + " is too large");
    const std::uint64_t total = std::uint64_t{1} << bits;
    stats.branches_enumerated = total;

    BranchCounters counters;
    auto found = opts.exec == Exec::Serial ? search_serial(ctx, total, opts.exhaustive, counters)
                                           : search_parallel(ctx, total, opts.exhaustive, counters);
    stats.branches_within_budget = counters.within_budget.load();
    stats.branches_evaluated = counters.evaluated.load();
    stats.flower_calls = counters.flower_calls.load();
    stats.direct_verdicts = counters.direct.load();
    stats.infeasible_branches = counters.infeasible.load();
    if (!found.winner) return res;
    stats.winning_branch = found.winner;
    stats.best_cost = static_cast<int>(pre.forced.size()) + *found.best_cost;
    res.solution = finish(inst, pre, found.chosen);
    return res;
}

}  // namespace hitpaths
