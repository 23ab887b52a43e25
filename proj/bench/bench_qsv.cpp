#include "qsv/laurent_series.hpp"
#include "qsv/verify.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qsv;

namespace {

LaurentSeries dense(long len, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    std::vector<Rational> cs;
    for (long i = 0; i < len; ++i) cs.push_back(make_rational(num(g), den(g)));
    return LaurentSeries::from_coeffs(0, cs, len - 1);
}

void BM_MulSerial(benchmark::State& st) {
    LaurentSeries f = dense(st.range(0), 1), g = dense(st.range(0), 2);
    for (auto _ : st) benchmark::DoNotOptimize(mul_serial(f, g));
}

void BM_MulParallel(benchmark::State& st) {
    LaurentSeries f = dense(st.range(0), 1), g = dense(st.range(0), 2);
    for (auto _ : st) benchmark::DoNotOptimize(mul_parallel(f, g));
}

SuitePlan bench_plan() {
    SuitePlan p;
    p.n_max = 4;
    p.exact_samples = 5;
    p.formal_samples = 3;
    p.analytic_samples = 3;
    return p;
}

void BM_SuiteSerial(benchmark::State& st) {
    SuitePlan p = bench_plan();
    for (auto _ : st) benchmark::DoNotOptimize(run_suite_serial(registry(), p));
}

void BM_SuiteParallel(benchmark::State& st) {
    SuitePlan p = bench_plan();
    for (auto _ : st) benchmark::DoNotOptimize(run_suite_parallel(registry(), p));
}

}  // namespace

BENCHMARK(BM_MulSerial)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulParallel)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK(BM_SuiteParallel)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
