#include <benchmark/benchmark.h>

#include "kleinzeta/character.hpp"
#include "kleinzeta/charsums.hpp"
#include "kleinzeta/curves.hpp"
#include "kleinzeta/hecke.hpp"
#include "kleinzeta/zeta.hpp"

using namespace kleinzeta;

static void BM_build_field(benchmark::State& state) {
  std::uint32_t p = std::uint32_t(state.range(0));
  unsigned r = unsigned(state.range(1));
  for (auto _ : state) {
    Field F = build_field(p, r);
    benchmark::DoNotOptimize(F.generator());
  }
}
BENCHMARK(BM_build_field)->Args({2, 10})->Args({3, 6})->Args({65521, 1});

static void BM_field_mul(benchmark::State& state) {
  Field F = build_field(2, 16);
  Elem a = 12345, b = 54321;
  for (auto _ : state) {
    a = F.mul(a, b);
    benchmark::DoNotOptimize(a);
    if (a == 0) a = 1;
  }
}
BENCHMARK(BM_field_mul);

static void BM_jacobi_sum(benchmark::State& state) {
  Field F = build_field(std::uint32_t(state.range(0)), 1);
  Character chi = character_of_order(F, 7);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_sum(chi, chi.power(2)));
}
BENCHMARK(BM_jacobi_sum)->Arg(29)->Arg(4943);

static void BM_jacobi_sum_ext(benchmark::State& state) {
  Field F = build_field(2, 18);  // q - 1 = 262143 = 3^3 * 7 * 19 * 73
  Character chi = character_of_order(F, 7);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_sum(chi, chi.power(2)));
}
BENCHMARK(BM_jacobi_sum_ext);

static void BM_brute_count(benchmark::State& state) {
  Field F = build_field(std::uint32_t(state.range(0)), 1);
  Budgets b;
  b.plane = 1u << 14;
  for (auto _ : state)
    benchmark::DoNotOptimize(count_projective_brute(F, CurveModel::klein(), b, 1));
}
BENCHMARK(BM_brute_count)->Arg(113)->Arg(1009)->Arg(4093);

static void BM_birational_count(benchmark::State& state) {
  Field F = build_field(std::uint32_t(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_birational(F));
}
BENCHMARK(BM_birational_count)->Arg(4093)->Arg(65521);

static void BM_zeta_klein(benchmark::State& state) {
  std::uint32_t p = std::uint32_t(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_klein(p));
}
BENCHMARK(BM_zeta_klein)->Arg(29)->Arg(79)->Arg(499);

static void BM_euler_product(benchmark::State& state) {
  std::uint32_t p = std::uint32_t(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(euler_product(p));
}
BENCHMARK(BM_euler_product)->Arg(29)->Arg(499);

static void BM_cornacchia(benchmark::State& state) {
  for (auto _ : state)
    for (std::uint32_t p : {113u, 10007u, 999983u})
      benchmark::DoNotOptimize(cornacchia_4p(p));
}
BENCHMARK(BM_cornacchia);

BENCHMARK_MAIN();
