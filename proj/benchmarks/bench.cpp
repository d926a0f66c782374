#include <benchmark/benchmark.h>

#include <random>

#include "spherekit/bounds.hpp"
#include "spherekit/clifford.hpp"
#include "spherekit/harmonics.hpp"
#include "spherekit/hodge.hpp"
#include "spherekit/points.hpp"
#include "spherekit/wilson.hpp"

using namespace spherekit;

namespace {

Poly random_poly(int nvars, int deg, int terms, std::mt19937_64& rng) {
  Poly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Mono m(nvars);
    int rem = deg;
    for (int i = 0; i + 1 < nvars; ++i) {
      int e = int(rng() % (rem + 1));
      m.set(i, e);
      rem -= e;
    }
    m.set(nvars - 1, rem);
    p.add_term(m, random_rat(rng));
  }
  return p;
}

void BM_PolyMultiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  int nvars = int(state.range(0));
  Poly a = random_poly(nvars, 4, 40, rng), b = random_poly(nvars, 4, 40, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(4)->Arg(8)->Arg(16);

void BM_NormalForm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  int nvars = int(state.range(0));
  SphereContext ctx(nvars);
  Poly p = random_poly(nvars, 6, 60, rng);
  for (auto _ : state) benchmark::DoNotOptimize(nf_reduce(p, ctx));
}
BENCHMARK(BM_NormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_HopfVerify(benchmark::State& state) {
  long m = state.range(0);
  SphereMap H = hopf_construction(normed_bilinear_from_clifford(clifford_system(m)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_sphere_map(H));
}
BENCHMARK(BM_HopfVerify)->Arg(2)->Arg(8)->Arg(16);

void BM_ChainWitnessVerify(benchmark::State& state) {
  const SphereMap& c = chain_witness(ChainName::S31_to_S16);
  for (auto _ : state) benchmark::DoNotOptimize(verify_sphere_map(c));
}
BENCHMARK(BM_ChainWitnessVerify);

void BM_QTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(emit_table(int(state.range(0)), TableFormat::Csv));
}
BENCHMARK(BM_QTable)->Arg(15)->Arg(48);

void BM_HarmonicDecompose(benchmark::State& state) {
  std::mt19937_64 rng(3);
  Poly p = random_poly(int(state.range(0)), 6, 20, rng);
  for (auto _ : state) benchmark::DoNotOptimize(harmonic_decompose(p));
}
BENCHMARK(BM_HarmonicDecompose)->Arg(4)->Arg(8);

void BM_Intertwiner(benchmark::State& state) {
  int dim = int(state.range(0));
  auto v = rational_sphere_points(dim - 1, 1, 9)[0];
  for (auto _ : state) benchmark::DoNotOptimize(intertwiner_p(v));
}
BENCHMARK(BM_Intertwiner)->Arg(4)->Arg(8);

void BM_EnumerateClasses(benchmark::State& state) {
  SchottkyGroup G;
  G.generators.push_back({Rat(3), Rat(0), Rat(0), Rat(1, 3)});
  G.generators.push_back({Rat(49, 5), Rat(-24, 5), Rat(48, 5), Rat(-23, 5)});
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_classes(G, int(state.range(0))));
}
BENCHMARK(BM_EnumerateClasses)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
