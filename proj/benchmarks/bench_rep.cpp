#include <benchmark/benchmark.h>

#include "uqgl21/realization.hpp"
#include "uqgl21/repbuilder.hpp"
#include "uqgl21/structure.hpp"

using namespace uqgl21;

namespace {
RealizationParams params(long t1, long t2) {
    RealizationParams p;
    p.j1 = HalfInt(t1);
    p.j2 = HalfInt(t2);
    p.j3 = HalfInt(0);
    return p;
}
}  // namespace

static void BM_build_rep(benchmark::State& state) {
    RealizationParams p = params(state.range(0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(build_rep(p));
}
BENCHMARK(BM_build_rep)->Arg(1)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_fock_relation_suite(benchmark::State& state) {
    RealizationParams p = params(1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(verify_fock_relations(p, state.range(0)));
}
BENCHMARK(BM_fock_relation_suite)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_invariant_closure(benchmark::State& state) {
    Representation rep = build_rep(params(state.range(0), 0));
    for (auto _ : state)
        benchmark::DoNotOptimize(invariant_closure(rep, {basis_seed(rep, 0)}));
}
BENCHMARK(BM_invariant_closure)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
