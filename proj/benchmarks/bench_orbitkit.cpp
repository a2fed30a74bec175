#include <random>

#include <benchmark/benchmark.h>

#include "orbitkit/catalog.hpp"
#include "orbitkit/haar.hpp"
#include "orbitkit/invariant_products.hpp"
#include "orbitkit/nijenhuis.hpp"
#include "orbitkit/orbit_geometry.hpp"
#include "orbitkit/spectral.hpp"

namespace {

using namespace orbitkit;

Element random_element(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Element v(n);
  for (int i = 0; i < n; ++i) v[i] = normal(rng);
  return v;
}

void BM_Decompose(benchmark::State& state, const char* name) {
  const auto alg = catalog_load(name);
  const Element w = random_element(alg.dim(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(alg, w));
}
BENCHMARK_CAPTURE(BM_Decompose, su2, "su2");
BENCHMARK_CAPTURE(BM_Decompose, su3, "su3");

void BM_OrbitReport(benchmark::State& state) {
  const auto su3 = catalog_load("su3");
  const auto k = killing_form(su3);
  const Element w = random_element(8, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit_report(su3, k, EquivariantMap::identity(), w));
  }
}
BENCHMARK(BM_OrbitReport)->Unit(benchmark::kMillisecond);

void BM_NijenhuisSweep(benchmark::State& state) {
  const auto su3 = catalog_load("su3");
  const auto d = decompose(su3, random_element(8, 3));
  const auto j = canonical_J(d);
  for (auto _ : state) benchmark::DoNotOptimize(nijenhuis_sweep(su3, d, j));
}
BENCHMARK(BM_NijenhuisSweep);

void BM_HaarAverage(benchmark::State& state, const char* name) {
  const auto alg = catalog_load(name);
  const auto sampler = HaarSampler::for_algebra(alg);
  const ScalarProduct p0(Matrix(random_element(alg.dim(), 4).cwiseAbs().asDiagonal()));
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(haar_average(alg, p0, sampler, 100000, 5, threads));
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK_CAPTURE(BM_HaarAverage, su2, "su2")->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HaarAverage, su3, "su3")->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
