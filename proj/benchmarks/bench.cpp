#include "gramvol/census.hpp"
#include "gramvol/cohomology.hpp"
#include "gramvol/simplex.hpp"
#include "gramvol/sym_matrix.hpp"
#include "gramvol/volume.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace gramvol;

namespace {

RationalSymMatrix random_gram(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution edge(density);
  std::uniform_int_distribution<int> num(1, 5), den(1, 3);
  RationalSymMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (edge(rng)) m.set(i, j, Rational(-num(rng), den(rng)));
  return m;
}

void BM_Signature(benchmark::State& state) {
  std::mt19937 rng(1);
  const int n = static_cast<int>(state.range(0));
  RationalSymMatrix m = random_gram(rng, n, 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(signature(m));
}
BENCHMARK(BM_Signature)->Arg(6)->Arg(12)->Arg(24);

void BM_Determinant(benchmark::State& state) {
  std::mt19937 rng(2);
  RationalSymMatrix m = random_gram(rng, static_cast<int>(state.range(0)), 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->Arg(6)->Arg(12);

void BM_FinitenessVerdict(benchmark::State& state) {
  std::mt19937 rng(3);
  std::bernoulli_distribution edge(0.3);
  const int n = static_cast<int>(state.range(0));
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (edge(rng)) g.add_edge(i, j);
  for (auto _ : state) benchmark::DoNotOptimize(finiteness_verdict(g));
}
BENCHMARK(BM_FinitenessVerdict)->Arg(10)->Arg(16)->Arg(20);

void BM_ConeSliceBounded(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cone_slice_bounded(pentagon()));
}
BENCHMARK(BM_ConeSliceBounded);

void BM_ClassesEqual(benchmark::State& state) {
  std::mt19937 rng(4);
  const int n = 8;
  Graph g = Graph::complete(n);
  std::uniform_int_distribution<int> num(1, 5), den(1, 3);
  std::vector<Rational> vals(g.edge_count());
  for (auto& v : vals) v = Rational(num(rng), den(rng));
  Cochain1Q f(g, vals);
  std::vector<Rational> gauge(n + 1, Rational(1));
  for (int v = 1; v <= n; ++v) gauge[v] = Rational(num(rng), den(rng));
  Cochain1Q dg = differential(g, gauge);
  std::vector<Rational> moved(vals);
  for (std::size_t k = 0; k < moved.size(); ++k) moved[k] *= dg.values[k];
  Cochain1Q f2(g, moved);
  for (auto _ : state) benchmark::DoNotOptimize(classes_equal(f, f2));
}
BENCHMARK(BM_ClassesEqual);

void BM_McVolume(benchmark::State& state) {
  MarkedSimplex pent = pentagon();
  for (auto _ : state)
    benchmark::DoNotOptimize(mc_volume_estimate(pent, 8.0, 100000, 7));
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_McVolume);

}  // namespace

BENCHMARK_MAIN();
