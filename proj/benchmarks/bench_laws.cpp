// Timings for the exact residual kernels at desk-scale dimensions.

#include <benchmark/benchmark.h>

#include <random>

#include "alia/constructions.hpp"
#include "alia/fixtures.hpp"
#include "alia/laws.hpp"
#include "alia/yang_baxter.hpp"

namespace {

using namespace alia;

Algebra random_algebra(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2), pick(0, 2);
  Algebra a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (pick(rng) == 0) a.c.at(i, j, k) = Rat(num(rng), den(rng));
  return a;
}

void BM_LeftAlia(benchmark::State& state) {
  Algebra a = random_algebra(int(state.range(0)), 42);
  for (auto _ : state) {
    Residual r = check_left_alia(a);
    benchmark::DoNotOptimize(r.entries.size());
  }
}
BENCHMARK(BM_LeftAlia)->Arg(4)->Arg(8)->Arg(16);

void BM_Ybe(benchmark::State& state) {
  int n = int(state.range(0));
  Algebra a = random_algebra(n, 7);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-2, 2);
  TwoTensor t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.t.at(i, j) = Rat(num(rng));
  for (auto _ : state) {
    Residual r = alia_ybe_residual(a, t);
    benchmark::DoNotOptimize(r.entries.size());
  }
}
BENCHMARK(BM_Ybe)->Arg(4)->Arg(8)->Arg(16);

void BM_DoubleBuildAndCheck(benchmark::State& state) {
  auto a = *fixture("FIX_A4").bracket;
  auto c = *fixture("FIX_D4").comul;
  auto n = fixture("FIX_N4").maps.at("N");
  auto s = fixture("FIX_S4").maps.at("S");
  for (auto _ : state) {
    DoubleBundle dbl = drinfeld_double(a, c, n, s);
    bool ok = check_left_alia(dbl.big).passed() &&
              check_quadratic(dbl.big, dbl.form).passed() &&
              check_nijenhuis_algebra(dbl.big, *dbl.nij).passed();
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_DoubleBuildAndCheck);

void BM_FullBialgebraCheck(benchmark::State& state) {
  auto a = *fixture("FIX_A4").bracket;
  auto c = *fixture("FIX_D4").comul;
  auto n = fixture("FIX_N4").maps.at("N");
  auto s = fixture("FIX_S4").maps.at("S");
  for (auto _ : state) {
    Residual r = check_nijenhuis_left_alia_bialgebra(a, c, n, s);
    benchmark::DoNotOptimize(r.entries.size());
  }
}
BENCHMARK(BM_FullBialgebraCheck);

}  // namespace

BENCHMARK_MAIN();
