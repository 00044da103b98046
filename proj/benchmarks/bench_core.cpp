#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "weylps/certificates.hpp"
#include "weylps/fock.hpp"
#include "weylps/relations.hpp"
#include "weylps/top_symbol.hpp"

using namespace weylps;

static void BM_WeylProduct(benchmark::State& state) {
  weylps::testing::Rng rng(1);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto deg = static_cast<unsigned>(state.range(1));
  auto x = weylps::testing::random_weyl(rng, dim, deg, 6);
  auto y = weylps::testing::random_weyl(rng, dim, deg, 6);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_WeylProduct)->Args({1, 4})->Args({2, 4})->Args({3, 6});

static void BM_NumberOperatorPower(benchmark::State& state) {
  auto n = number_operator(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(power(n, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_NumberOperatorPower)->Arg(4)->Arg(8);

static void BM_LocalizedProduct(benchmark::State& state) {
  weylps::testing::Rng rng(2);
  auto x = weylps::testing::random_localized(rng, 2, Rational(1, 2), 4, 4);
  auto y = weylps::testing::random_localized(rng, 2, Rational(1, 2), 4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_LocalizedProduct);

static void BM_RelationSuite(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(relation_suite(static_cast<std::size_t>(state.range(0)), Rational(1, 2), 3));
}
BENCHMARK(BM_RelationSuite)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_CheckCircle(benchmark::State& state) {
  auto s = top_symbol(to_weyl(c_epsilon(Rational(1, 8))));
  for (auto _ : state) benchmark::DoNotOptimize(check_condition_ii(s));
}
BENCHMARK(BM_CheckCircle);

static void BM_MinEigInterior(benchmark::State& state) {
  auto q = position(1, 1);
  auto c = q * q * q * q;
  for (auto _ : state)
    benchmark::DoNotOptimize(min_eig_interior(c, Rational(0), static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_MinEigInterior)->Arg(16)->Arg(64);

static void BM_Sigma2Sdp(benchmark::State& state) {
  NPolynomial q(std::vector<Rational>{2, -3, 1});
  auto p = q * q + NPolynomial(std::vector<Rational>{1, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(sigma2_membership(p));
}
BENCHMARK(BM_Sigma2Sdp)->Unit(benchmark::kMillisecond);

static void BM_FindCertificate(benchmark::State& state) {
  auto p = c_epsilon(Rational(1, 8));
  for (auto _ : state) benchmark::DoNotOptimize(find_positivstellensatz(p, Rational(1, 2), 1, 0));
}
BENCHMARK(BM_FindCertificate)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
