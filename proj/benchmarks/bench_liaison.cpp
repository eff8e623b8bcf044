#include <benchmark/benchmark.h>

#include "liaison/constructions.hpp"
#include "liaison/geometry.hpp"
#include "liaison/sampling.hpp"

using namespace liaison;

namespace {

std::vector<Polynomial> random_forms(const RingPtr& R, std::initializer_list<Multidegree> degrees, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Polynomial> out;
  for (const auto& d : degrees) out.push_back(random_form(R, d, rng));
  return out;
}

}  // namespace

// Complete intersection of two (a,b)-forms on P1xP2.
static void BM_BuchbergerBigraded(benchmark::State& state) {
  auto R = Ring::p1xp2(PrimeField(10007));
  const int a = static_cast<int>(state.range(0)), b = static_cast<int>(state.range(1));
  auto gens = random_forms(R, {{a, b}, {a, b}, {a - 1, b + 1}}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens));
  state.counters["pairs"] = static_cast<double>(last_groebner_stats().pairs_considered);
}
BENCHMARK(BM_BuchbergerBigraded)->Args({2, 1})->Args({3, 2})->Args({5, 2})->Unit(benchmark::kMillisecond);

static void BM_BuchbergerSugar(benchmark::State& state) {
  auto R = Ring::projective(PrimeField(10007), 4, "z");
  auto gens = random_forms(R, {{2}, {2}, {3}}, 2);
  GroebnerOptions opts;
  opts.sugar = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, opts));
}
BENCHMARK(BM_BuchbergerSugar)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_HilbertNumerator(benchmark::State& state) {
  auto R = Ring::p1xp2(PrimeField(10007));
  auto gb = buchberger(random_forms(R, {{2, 2}, {2, 2}, {3, 1}}, 3));
  const auto lms = gb.leading_monomials();
  for (auto _ : state) benchmark::DoNotOptimize(HilbertNumerator(*R, lms).polynomial());
  state.counters["generators"] = static_cast<double>(lms.size());
}
BENCHMARK(BM_HilbertNumerator)->Unit(benchmark::kMicrosecond);

// Union of a rational curve with n fiber lines, saturated.
static void BM_UnionSaturation(benchmark::State& state) {
  auto R = Ring::p1xp2(PrimeField(10007));
  Rng rng(4);
  std::vector<Ideal> parts{random_ci_rational_curve(R, rng)};
  for (int i = 0; i < state.range(0); ++i) parts.push_back(random_fiber_line(R, rng).ideal);
  for (auto _ : state) {
    std::vector<Ideal> fresh;
    for (const auto& p : parts) fresh.emplace_back(R, p.generators(), true);
    benchmark::DoNotOptimize(union_ideal(R, fresh));
  }
}
BENCHMARK(BM_UnionSaturation)->Arg(1)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

// (1,4) curve linked in two (2,2)-forms.
static void BM_SmallLink(benchmark::State& state) {
  auto R = Ring::p1xp2(PrimeField(10007));
  Rng rng(5);
  auto C = random_ci_rational_curve(R, rng);
  const std::vector<Multidegree> degrees{{2, 2}, {2, 2}};
  auto forms = random_hypersurfaces_containing(C, degrees, rng);
  for (auto _ : state) {
    Rng r(6);
    benchmark::DoNotOptimize(link(Ideal(R, C.generators(), true), forms, r));
  }
}
BENCHMARK(BM_SmallLink)->Unit(benchmark::kMillisecond);

static void BM_FiberScan(benchmark::State& state) {
  auto R = Ring::p1xp2(PrimeField(1009));
  auto C = saturate_irrelevant(Ideal(R, random_forms(R, {{1, 1}, {1, 3}}, 7)));
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(collinear_fiber_scan(C, 1, jobs));
}
BENCHMARK(BM_FiberScan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
