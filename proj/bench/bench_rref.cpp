// Serial vs OpenMP row reduction on the kind of systems the classification produces.
#include <random>

#include <benchmark/benchmark.h>

#include "spin7/curvature.hpp"
#include "spin7/linalg.hpp"

using namespace spin7;

namespace {
Matrix random_matrix(std::size_t r, std::size_t c, bool irrational) {
    std::mt19937_64 rng(r * 1000 + c);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng, 4, 3, irrational && (i + j) % 5 == 0);
    return m;
}

void BM_Random(benchmark::State& st, Exec exec) {
    Matrix m = random_matrix(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(0)), true);
    for (auto _ : st) benchmark::DoNotOptimize(rref(m, exec));
}

void BM_Bianchi(benchmark::State& st, Exec exec) {
    Matrix m = bianchi_matrix_full(catalog("su3"));
    for (auto _ : st) benchmark::DoNotOptimize(rref(m, exec));
}
}  // namespace

BENCHMARK_CAPTURE(BM_Random, serial, Exec::Serial)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Random, parallel, Exec::Parallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Bianchi, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Bianchi, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
