// Serial reference kernels against the OpenMP ones on integer matrices.
#include <benchmark/benchmark.h>

#include <random>

#include "lefschetz/kernels.hpp"

using namespace lefschetz;

namespace {

Matrix random_matrix(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> d(-3, 3);
    Matrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = d(rng);
    return a;
}

void BM_multiply_serial(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    const Matrix a = random_matrix(n, 1), b = random_matrix(n, 2);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::reference::multiply(a, b));
}

void BM_multiply_parallel(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    const Matrix a = random_matrix(n, 1), b = random_matrix(n, 2);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::multiply(a, b));
}

void BM_compound_serial(benchmark::State& st) {
    const Matrix a = random_matrix(static_cast<std::size_t>(st.range(0)), 3);
    const auto k = static_cast<std::size_t>(st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::reference::compound(a, k));
}

void BM_compound_parallel(benchmark::State& st) {
    const Matrix a = random_matrix(static_cast<std::size_t>(st.range(0)), 3);
    const auto k = static_cast<std::size_t>(st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::compound(a, k));
}

void BM_powers_serial(benchmark::State& st) {
    const Matrix a = random_matrix(static_cast<std::size_t>(st.range(0)), 4);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::reference::powers(a, 24));
}

void BM_powers_parallel(benchmark::State& st) {
    const Matrix a = random_matrix(static_cast<std::size_t>(st.range(0)), 4);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::powers(a, 24));
}

}  // namespace

BENCHMARK(BM_multiply_serial)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(BM_multiply_parallel)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(BM_compound_serial)->Args({6, 3})->Args({8, 4});
BENCHMARK(BM_compound_parallel)->Args({6, 3})->Args({8, 4});
BENCHMARK(BM_powers_serial)->Arg(6)->Arg(12);
BENCHMARK(BM_powers_parallel)->Arg(6)->Arg(12);

BENCHMARK_MAIN();
