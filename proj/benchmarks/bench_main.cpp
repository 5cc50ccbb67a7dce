#include <benchmark/benchmark.h>

#include <random>

#include "einf/arc_surface.hpp"
#include "einf/chain_prop.hpp"
#include "einf/cochains.hpp"
#include "einf/ms_normalizer.hpp"
#include "einf/presentation.hpp"
#include "einf/term_parser.hpp"
#include "einf/verify/generators.hpp"

using namespace einf;

static void BM_Normalize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  verify::TermOptions opt;
  opt.max_vertices = static_cast<int>(state.range(0));
  std::vector<GraphTerm> terms;
  for (int k = 0; k < 64; ++k) terms.push_back(build_graph(verify::random_term(rng, opt)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normalize(terms[i++ % terms.size()]));
}
BENCHMARK(BM_Normalize)->Arg(4)->Arg(8)->Arg(12);

static void BM_Differential(benchmark::State& state) {
  const auto basis = enumerate_basis(1, 3, static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& t : basis) benchmark::DoNotOptimize(differential(generator(t)));
}
BENCHMARK(BM_Differential)->DenseRange(1, 4);

static void BM_ActOnSimplex(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Face top;
  for (int v = 0; v <= d; ++v) top.push_back(v);
  const SurjectionType u = parse_type("(1,2,1,2)");
  for (auto _ : state) benchmark::DoNotOptimize(act(u, chain_of({top})));
}
BENCHMARK(BM_ActOnSimplex)->DenseRange(3, 6);

static void BM_Cup1(benchmark::State& state) {
  const SimplicialComplex K = standard_simplex(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(2);
  const Cochain a = verify::random_coboundary(K, 2, rng), b = verify::random_coboundary(K, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(cup_i(1, a, b, K));
}
BENCHMARK(BM_Cup1)->DenseRange(4, 6);

static void BM_Surface(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<WeightedSurjection> xs;
  for (int k = 0; k < 32; ++k) xs.push_back(verify::random_surjection(2, 3, static_cast<int>(state.range(0)), rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(surface_summary(xs[i++ % xs.size()]));
}
BENCHMARK(BM_Surface)->DenseRange(1, 3);

BENCHMARK_MAIN();
