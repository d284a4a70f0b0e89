// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "hitpaths/fpt.hpp"
#include "hitpaths/mv_sat.hpp"
#include "hitpaths/oracle.hpp"
#include "hitpaths/reductions.hpp"

using namespace hitpaths;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void BM_SolveExhaustive(benchmark::State& state) {
    const auto inst = gen_scaling_instance(static_cast<int>(state.range(1)), 40, 12, 4, 7);
    for (auto _ : state) benchmark::DoNotOptimize(solve(inst, {exec_of(state), true}));
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_SolveExhaustive)->ArgsProduct({{0, 1}, {3, 4}})->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
    GeneratorConfig cfg;
    cfg.seed = 11;
    cfg.k = 4;
    cfg.n = 40;
    cfg.paths = 30;
    cfg.max_path_len = 3;
    cfg.budget = BudgetPolicy::Fixed;
    cfg.t = 40;
    const auto sys = to_set_system(gen_random_instance(cfg));
    for (auto _ : state) benchmark::DoNotOptimize(exact_min_hitting_set(sys, 40, exec_of(state)));
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_Oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateSigned(benchmark::State& state) {
    // Unsatisfiable, so the whole space is scanned.
    SignedFormula f{6, 8, {{{1, Sign::GE, 8}}, {{1, Sign::LE, 7}}}};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_signed(f, kDefaultEnumerationCap, exec_of(state)));
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_EnumerateSigned)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
