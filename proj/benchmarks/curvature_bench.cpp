#include <benchmark/benchmark.h>

#include "metla/catalog.hpp"

namespace {

void curvature(benchmark::State& state, const char* key) {
  const metla::MetricLieAlgebra m = metla::catalog_build(key).algebra;
  for (auto _ : state) benchmark::DoNotOptimize(metla::compute_curvature(m));
}

void verdict(benchmark::State& state, const char* key) {
  const metla::AlgebraInstance inst = metla::catalog_build(key);
  for (auto _ : state) {
    metla::CurvatureBundle c = metla::compute_curvature(inst.algebra);
    auto o = metla::necessary_conditions(inst.algebra, c);
    benchmark::DoNotOptimize(metla::decide_verdict(inst.algebra, o, inst.line_extension));
  }
}

void killing_form(benchmark::State& state) {
  const metla::LieAlgebra g = metla::complex_realification(metla::sl3_split());
  for (auto _ : state) benchmark::DoNotOptimize(g.killing_form());
}

}  // namespace

BENCHMARK_CAPTURE(curvature, sl2C_real, "sl2C_real")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(curvature, so3ex, "so3ex")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(curvature, g_psi_phi, "g_psi_phi")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(curvature, sl3C_real, "sl3C_real")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verdict, osc_plus_line, "osc_plus_line")->Unit(benchmark::kMillisecond);
BENCHMARK(killing_form)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
