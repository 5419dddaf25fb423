#include <benchmark/benchmark.h>

#include "uqgl21/qscalar.hpp"

using namespace uqgl21;

static void BM_qint_product(benchmark::State& state) {
    const long n = state.range(0);
    QScalar a = qint(n), b = qint(n + 1);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_qint_product)->Arg(5)->Arg(20);

static void BM_add_with_reduction(benchmark::State& state) {
    QScalar a = qint(7) / (qint(5) + QScalar(1));
    QScalar b = qint(3) / (qint(4) - QScalar(2));
    for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_add_with_reduction);

static void BM_inverse(benchmark::State& state) {
    QScalar a = (qint(9) + QScalar(1)) / (qint(6) - QScalar(3));
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_inverse);

static void BM_parse_roundtrip(benchmark::State& state) {
    std::string s = (qint(12) / (qint(7) + QScalar(2))).str();
    for (auto _ : state) benchmark::DoNotOptimize(QScalar::parse(s));
}
BENCHMARK(BM_parse_roundtrip);

BENCHMARK_MAIN();
