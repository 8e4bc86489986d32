#include <benchmark/benchmark.h>

#include "netmoment/estimate.hpp"
#include "netmoment/noise.hpp"
#include "netmoment/specfun.hpp"

using namespace netmoment;

namespace {

void BM_BuildGrid(benchmark::State& state) {
    const int nr = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_grid(2e-3, nr, 256));
}
BENCHMARK(BM_BuildGrid)->Arg(50)->Arg(200);

void BM_SampleField(benchmark::State& state) {
    const auto scene = four_dipole_scene();
    const auto grid = build_grid(2e-3, static_cast<int>(state.range(0)), 256);
    for (auto _ : state) benchmark::DoNotOptimize(sample_field(scene, grid));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.nodes.size()));
}
BENCHMARK(BM_SampleField)->Arg(50)->Arg(200);

void BM_Estimate(benchmark::State& state) {
    const auto map = sample_field(four_dipole_scene(), build_grid(2e-3));
    const auto spec = all_specs()[static_cast<std::size_t>(state.range(0))];
    for (auto _ : state) benchmark::DoNotOptimize(estimate_moment(map, spec));
    state.SetLabel(to_string(spec));
}
BENCHMARK(BM_Estimate)->Arg(0)->Arg(4)->Arg(10)->Arg(14);

void BM_AddNoise(benchmark::State& state) {
    const auto map = sample_field(four_dipole_scene(), build_grid(7.5e-4));
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(add_noise(map, {20.0, seed++, 0, VarianceMode::weighted}));
}
BENCHMARK(BM_AddNoise);

void BM_Sweep(benchmark::State& state) {
    const auto scene = four_dipole_scene();
    const auto radii = log_spaced(3e-4, 2e-3, 24);
    const auto specs = all_specs();
    for (auto _ : state) benchmark::DoNotOptimize(sweep(scene, radii, specs));
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

void BM_BesselJ0(benchmark::State& state) {
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_j0(x));
        x = x < 49.0 ? x + 0.37 : 0.0;
    }
}
BENCHMARK(BM_BesselJ0);

void BM_StruveH0(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(struve_h0(x));
}
BENCHMARK(BM_StruveH0)->Arg(5)->Arg(45);

void BM_TailClosedForm(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(tail_integral(TailKind::j1_over_x5, 6.5));
}
BENCHMARK(BM_TailClosedForm);

void BM_TailQuadrature(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(tail_integral_quadrature(TailKind::j1_over_x5, 6.5));
}
BENCHMARK(BM_TailQuadrature)->Unit(benchmark::kMillisecond);

void BM_SinCosComponents(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sin_cos_components(0.4, 1.3));
}
BENCHMARK(BM_SinCosComponents);

void BM_SinCosTaylor(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sin_cos_taylor(1.3));
}
BENCHMARK(BM_SinCosTaylor);

}  // namespace

BENCHMARK_MAIN();
