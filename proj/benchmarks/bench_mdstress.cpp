// Microbenchmarks for the hot evaluation paths: bilinear extraction, the two
// stress-tensor routes, the identity suites, and the lattice pipeline.  All
// inputs are drawn once from a fixed seed so runs are comparable.
#include <benchmark/benchmark.h>

#include <cmath>
#include <cstddef>
#include <cstdint>

#include "mdstress/bilinear.hpp"
#include "mdstress/fierz.hpp"
#include "mdstress/rng.hpp"
#include "mdstress/spherical.hpp"
#include "mdstress/stress.hpp"

namespace {

using namespace mdstress;

SpinorJet fixed_jet() {
  Rng rng(42);
  return rng.spinor_jet();
}

EMField fixed_field() {
  Rng rng(43);
  return rng.em_field(1.3, 0.7);
}

SphericalJet fixed_spherical() {
  Rng rng(44);
  return rng.spherical_jet();
}

GridTable trig_grid(std::size_t nt, std::size_t nr) {
  GridTable g;
  g.t.resize(nt);
  g.r.resize(nr);
  for (std::size_t i = 0; i < nt; ++i)
    g.t[i] = static_cast<double>(i) / static_cast<double>(nt - 1);
  for (std::size_t i = 0; i < nr; ++i)
    g.r[i] = 1.0 + static_cast<double>(i) / static_cast<double>(nr - 1);
  const std::size_t n = nt * nr;
  g.sigma.resize(n);
  g.w.resize(n);
  g.j_a.resize(n);
  g.j_b.resize(n);
  for (std::size_t it = 0; it < nt; ++it)
    for (std::size_t ir = 0; ir < nr; ++ir) {
      const double t = g.t[it];
      const double r = g.r[ir];
      const std::size_t k = g.index(it, ir);
      g.sigma[k] = 2.0 + 0.3 * std::sin(t) * std::cos(r);
      g.w[k] = 0.5 + 0.2 * std::cos(t) * std::sin(r);
      g.j_a[k] = 1.0 + 0.4 * std::sin(t + r);
      g.j_b[k] = 0.3 + 0.1 * std::cos(t - r);
    }
  return g;
}

void BM_compute_bilinears(benchmark::State& state) {
  const Spinor psi = fixed_jet().value;
  for (auto _ : state) benchmark::DoNotOptimize(compute_bilinears(psi));
}
BENCHMARK(BM_compute_bilinears);

void BM_bilinear_jet(benchmark::State& state) {
  const SpinorJet jet = fixed_jet();
  for (auto _ : state) benchmark::DoNotOptimize(bilinear_jet(jet));
}
BENCHMARK(BM_bilinear_jet);

void BM_belinfante_spinor_route(benchmark::State& state) {
  const BilinearJet bj = bilinear_jet(fixed_jet());
  for (auto _ : state) benchmark::DoNotOptimize(belinfante_spinor(bj));
}
BENCHMARK(BM_belinfante_spinor_route);

void BM_belinfante_current_route(benchmark::State& state) {
  const BilinearJet bj = bilinear_jet(fixed_jet());
  for (auto _ : state) benchmark::DoNotOptimize(belinfante_bilinear(bj));
}
BENCHMARK(BM_belinfante_current_route);

void BM_assemble_full_tensor(benchmark::State& state) {
  const BilinearJet bj = bilinear_jet(fixed_jet());
  const EMField em = fixed_field();
  for (auto _ : state) benchmark::DoNotOptimize(assemble_md(bj, em));
}
BENCHMARK(BM_assemble_full_tensor);

void BM_expansion_suite(benchmark::State& state) {
  const BilinearJet bj = bilinear_jet(fixed_jet());
  for (auto _ : state) benchmark::DoNotOptimize(fierz_expansion_suite(bj));
}
BENCHMARK(BM_expansion_suite);

void BM_evaluate_spherical(benchmark::State& state) {
  const SphericalJet sj = fixed_spherical();
  const SphericalParams p{+1, 1.3, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_spherical(sj, p));
}
BENCHMARK(BM_evaluate_spherical);

void BM_grid_evaluate(benchmark::State& state) {
  const GridTable grid = trig_grid(21, 21);
  const SphericalParams p{+1, 1.3, 0.7};
  for (auto _ : state)
    benchmark::DoNotOptimize(grid_evaluate(grid, p, FdConfig{}, false));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 441);
}
BENCHMARK(BM_grid_evaluate);

}  // namespace

BENCHMARK_MAIN();
