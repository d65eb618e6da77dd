#include <benchmark/benchmark.h>

#include "liemin/jets.hpp"

using liemin::Jet2;

static void BM_jet_mul(benchmark::State& state) {
    const Jet2 a = exp(Jet2::var_u(0.3) + Jet2::var_v(0.1));
    const Jet2 b = sin(Jet2::var_u(0.3)) + cosh(Jet2::var_v(0.1));
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_jet_mul);

static void BM_jet_div(benchmark::State& state) {
    const Jet2 a = exp(Jet2::var_u(0.3) + Jet2::var_v(0.1));
    const Jet2 b = 2.0 + sin(Jet2::var_u(0.3)) * cosh(Jet2::var_v(0.1));
    for (auto _ : state)
        benchmark::DoNotOptimize(a / b);
}
BENCHMARK(BM_jet_div);

static void BM_jet_sqrt(benchmark::State& state) {
    const Jet2 a = 1.5 + sin(Jet2::var_u(0.3)) * sin(Jet2::var_v(0.7));
    for (auto _ : state)
        benchmark::DoNotOptimize(sqrt(a));
}
BENCHMARK(BM_jet_sqrt);

static void BM_jet_composite_expression(benchmark::State& state) {
    for (auto _ : state) {
        const Jet2 u = Jet2::var_u(0.4);
        const Jet2 v = Jet2::var_v(-0.2);
        benchmark::DoNotOptimize(exp(sin(u) * cosh(v)) / sqrt(1.0 + u * u + v * v));
    }
}
BENCHMARK(BM_jet_composite_expression);
