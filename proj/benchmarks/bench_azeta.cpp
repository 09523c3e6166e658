#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "azeta/corpus.hpp"
#include "azeta/exact/int_matrix.hpp"
#include "azeta/exact/rational_function.hpp"
#include "azeta/exact/series.hpp"
#include "azeta/walk_census.hpp"
#include "azeta/zeta_engine.hpp"

using namespace azeta;

namespace {

Poly random_poly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> c(-20, 20);
  std::vector<BigInt> v(deg + 1);
  v[0] = 1;
  for (int i = 1; i <= deg; ++i) v[i] = c(rng);
  v[deg] = 7;
  return Poly::from_integers(v);
}

QuotientGroup big_klein() {
  return QuotientGroup::build(RootSystem::c2(), GroupSpec::klein(RootKind::C2, {1, 1}, {1, 0}, 3, 4, 3));
}

void BM_Berkowitz(benchmark::State& st) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> e(-3, 3);
  const auto n = static_cast<std::size_t>(st.range(0));
  std::vector<BigInt> entries(n * n);
  for (auto& x : entries) x = e(rng);
  IntMatrix m(n, entries);
  for (auto _ : st) benchmark::DoNotOptimize(det_identity_minus_wT(m));
}
BENCHMARK(BM_Berkowitz)->Arg(8)->Arg(32)->Arg(64);

void BM_PermutationDeterminant(benchmark::State& st) {
  std::mt19937_64 rng(2);
  std::vector<int> image(static_cast<std::size_t>(st.range(0)));
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  IntMatrix m = IntMatrix::permutation(image);
  for (auto _ : st) benchmark::DoNotOptimize(det_identity_minus_wT(m));
}
BENCHMARK(BM_PermutationDeterminant)->Arg(64)->Arg(256);

void BM_PolyGcd(benchmark::State& st) {
  std::mt19937_64 rng(3);
  const int d = static_cast<int>(st.range(0));
  Poly g = random_poly(rng, d / 2);
  Poly a = g * random_poly(rng, d / 2), b = g * random_poly(rng, d / 2);
  for (auto _ : st) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Arg(32)->Arg(128)->Arg(512);

void BM_SeriesExp(benchmark::State& st) {
  const int K = static_cast<int>(st.range(0));
  std::vector<BigInt> a(K + 1);
  for (int n = 1; n <= K; ++n) a[n] = (n % 3 == 0) ? 12 : 0;
  for (auto _ : st) benchmark::DoNotOptimize(exp_of_power_sums(a, K));
}
BENCHMARK(BM_SeriesExp)->Arg(96)->Arg(512);

void BM_ZetaBundle(benchmark::State& st) {
  QuotientGroup q = big_klein();
  for (auto _ : st) benchmark::DoNotOptimize(compute_zeta_bundle(q, std::nullopt));
}
BENCHMARK(BM_ZetaBundle)->Unit(benchmark::kMillisecond);

void BM_WalkCensus(benchmark::State& st) {
  QuotientGroup q = big_klein();
  for (auto _ : st) benchmark::DoNotOptimize(closed_walk_table(q, Rep::st, 24));
}
BENCHMARK(BM_WalkCensus)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& st) {
  QuotientGroup q = big_klein();
  for (auto _ : st) benchmark::DoNotOptimize(verify(q, std::nullopt));
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);

void BM_Corpus(benchmark::State& st) {
  CorpusOptions opt;
  auto entries = generate_corpus(opt);
  for (auto _ : st) benchmark::DoNotOptimize(verify_corpus(entries, VerifyOptions{}, 1));
}
BENCHMARK(BM_Corpus)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
