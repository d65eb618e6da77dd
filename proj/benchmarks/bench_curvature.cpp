#include <benchmark/benchmark.h>

#include "liemin/lie_energy.hpp"
#include "liemin/rotational.hpp"
#include "liemin/surface.hpp"

using namespace liemin;

static void BM_forms_at_catenoid(benchmark::State& state) {
    const ImmersionPatch p = builtin_fixture("catenoid");
    for (auto _ : state)
        benchmark::DoNotOptimize(forms_at(p, 1.1, 0.3));
}
BENCHMARK(BM_forms_at_catenoid);

static void BM_curvature_point(benchmark::State& state) {
    const ImmersionPatch p = builtin_fixture("catenoid");
    for (auto _ : state)
        benchmark::DoNotOptimize(curvature_data(p, 1.1, 0.3));
}
BENCHMARK(BM_curvature_point);

static void BM_el_residual_row(benchmark::State& state) {
    const ImmersionPatch p = builtin_fixture("catenoid");
    const auto vs = grid_axis(p.domain.v0, p.domain.v1, 64);
    for (auto _ : state) {
        double acc = 0.0;
        for (double v : vs) {
            const ELResiduals el = el_residuals(curvature_data(p, 1.1, v));
            acc += el.r1_normalized;
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_el_residual_row);

static void BM_lie_energy_16(benchmark::State& state) {
    const ImmersionPatch p = builtin_fixture("enneper");
    for (auto _ : state)
        benchmark::DoNotOptimize(lie_energy(p, {16, 16}));
}
BENCHMARK(BM_lie_energy_16);
