#include <benchmark/benchmark.h>

#include <random>

#include "hypermat/characters.hpp"
#include "hypermat/euler.hpp"
#include "hypermat/multiplicities.hpp"
#include "hypermat/orbits.hpp"
#include "hypermat/quiver.hpp"
#include "hypermat/symchar.hpp"
#include "hypermat/verify.hpp"

using namespace hypermat;

// Fresh tables every iteration: measures Murnaghan-Nakayama plus the class sum.
static void BM_KroneckerCold(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Partition lam({d - d / 2, d / 2});
  for (auto _ : state) {
    SymmetricCharacters chars;
    benchmark::DoNotOptimize(chars.kron_invariant_dim(lam, lam, lam));
  }
}
BENCHMARK(BM_KroneckerCold)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_ClosedForm(benchmark::State& state) {
  const auto triples = two_row_triples(state.range(0));
  for (auto _ : state)
    for (const auto& t : triples) benchmark::DoNotOptimize(m_closed_form(TwoRowTriple(t)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(triples.size()));
}
BENCHMARK(BM_ClosedForm)->Arg(12)->Arg(40);

static void BM_OracleComparison(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_against_oracle(state.range(0)));
}
BENCHMARK(BM_OracleComparison)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_LocalizationMult(benchmark::State& state) {
  const auto w = TripleWeight{{3, 1}, {2, 2}, {2, 2}}.shifted(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mult_Sh_sqrt(w));
}
BENCHMARK(BM_LocalizationMult)->Arg(0)->Arg(20);

static void BM_EulerMult(benchmark::State& state) {
  const TripleWeight w{{8, -20}, {11, -23}, {6, -18}};
  for (auto _ : state) benchmark::DoNotOptimize(euler_mult(w));
}
BENCHMARK(BM_EulerMult);

static void BM_SumRules(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_sum_rules(-2, 6));
}
BENCHMARK(BM_SumRules)->Unit(benchmark::kMillisecond);

static void BM_PathBasis(benchmark::State& state) {
  const auto& qr = hypermatrix_quiver();
  const auto s = qr.quiver.vertex("s"), e = qr.quiver.vertex("e");
  for (auto _ : state) benchmark::DoNotOptimize(path_basis(qr, s, e));
}
BENCHMARK(BM_PathBasis)->Unit(benchmark::kMicrosecond);

static void BM_ClassifyOrbit(benchmark::State& state) {
  std::mt19937_64 rng(1729);
  std::vector<Tensor222> tensors;
  for (int i = 0; i < 64; ++i) tensors.push_back(act(random_group_element(rng), representative(kAllOrbits[i % 7])));
  for (auto _ : state)
    for (const auto& t : tensors) benchmark::DoNotOptimize(classify_orbit(t));
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_ClassifyOrbit);

static void BM_Hyperdet(benchmark::State& state) {
  std::mt19937_64 rng(1729);
  const Tensor222 t = random_tensor(rng, 50);
  for (auto _ : state) benchmark::DoNotOptimize(hyperdet(t));
}
BENCHMARK(BM_Hyperdet);

BENCHMARK_MAIN();
