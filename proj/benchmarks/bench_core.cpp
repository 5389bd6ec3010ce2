#include <zl1/atoms.hpp>
#include <zl1/central.hpp>
#include <zl1/character.hpp>
#include <zl1/metrics.hpp>

#include <benchmark/benchmark.h>

namespace {

void BM_CharacterTableD4(benchmark::State& state) {
  for (auto _ : state) {
    auto g = zl1::FiniteGroup::dihedral(4);
    benchmark::DoNotOptimize(zl1::character_table(g));
  }
}
BENCHMARK(BM_CharacterTableD4);

void BM_CharacterTableSL2(benchmark::State& state) {
  const long q = state.range(0);
  auto g = zl1::sl2_group(q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zl1::character_table(g));
  }
}
BENCHMARK(BM_CharacterTableSL2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CharacterTableCyclic(benchmark::State& state) {
  auto g = zl1::FiniteGroup::cyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zl1::character_table(g));
  }
}
BENCHMARK(BM_CharacterTableCyclic)->Arg(16)->Arg(32)->Arg(63)->Unit(benchmark::kMillisecond);

void BM_CentralConvolution(benchmark::State& state) {
  auto d4 = zl1::FiniteGroup::dihedral(4);
  auto s3 = zl1::FiniteGroup::symmetric(3);
  auto prod = zl1::FiniteGroup::direct_product(d4, s3);
  auto f = zl1::CentralElement::zero(prod);
  const int r = prod->classes().count();
  for (int i = 0; i < r; ++i) f.coeffs[i] = zl1::Cyclotomic(zl1::Rational(i % 5 - 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zl1::convolve(f, f));
  }
}
BENCHMARK(BM_CentralConvolution);

void BM_CyclotomicMul(benchmark::State& state) {
  auto a = zl1::Cyclotomic::root_of_unity(63, 5) + zl1::Cyclotomic::root_of_unity(63, 17);
  auto b = zl1::Cyclotomic::root_of_unity(63, 11) - zl1::Cyclotomic::root_of_unity(63, 40);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_CyclotomicMul);

void BM_LpNormInterval(benchmark::State& state) {
  auto g = zl1::FiniteGroup::dihedral(5);  // irrational character values
  auto t = zl1::character_table(g);
  const auto& chi = t.irreducibles.back();
  for (auto _ : state) {
    benchmark::DoNotOptimize(zl1::lp_norm_pth_power(chi, zl1::Rational(1)));
  }
}
BENCHMARK(BM_LpNormInterval);

}  // namespace

BENCHMARK_MAIN();
