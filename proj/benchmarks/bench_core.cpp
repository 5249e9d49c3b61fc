#include <benchmark/benchmark.h>

#include "dercurve/families.hpp"
#include "dercurve/report.hpp"

using namespace dercurve;

static void bm_semigroup_construction(benchmark::State& state) {
  const std::int64_t h = state.range(0);
  const ArslanInstance a = arslan(h);
  for (auto _ : state) {
    NumericalSemigroup s(a.generators());
    benchmark::DoNotOptimize(s.frobenius());
  }
}
BENCHMARK(bm_semigroup_construction)->Arg(4)->Arg(10)->Arg(20);

static void bm_apery(benchmark::State& state) {
  NumericalSemigroup s(arslan(state.range(0)).generators());
  for (auto _ : state) {
    auto ap = s.apery(s.multiplicity());
    benchmark::DoNotOptimize(ap);
  }
}
BENCHMARK(bm_apery)->Arg(6)->Arg(12);

static void bm_plane_membership(benchmark::State& state) {
  PlaneSemigroup p{NumericalSemigroup(arslan(6).generators())};
  const std::int64_t ne = p.top();
  std::int64_t a = 0;
  for (auto _ : state) {
    PlanePoint q{a % (8 * ne), 8 * ne - a % (8 * ne)};
    benchmark::DoNotOptimize(p.contains(q));
    ++a;
  }
}
BENCHMARK(bm_plane_membership);

static void bm_derivation_module(benchmark::State& state) {
  const std::int64_t h = state.range(0);
  NumericalSemigroup s(arslan(h).generators());
  for (auto _ : state) {
    PlaneSemigroup p{s};
    DerivationModule m = derivation_module(p);
    benchmark::DoNotOptimize(m.mu);
  }
}
BENCHMARK(bm_derivation_module)->Arg(3)->Arg(6);

static void bm_backelin_validation(benchmark::State& state) {
  const BackelinInstance b = backelin(2, 8);
  for (auto _ : state) {
    FamilyValidation v = validate_family(b);
    benchmark::DoNotOptimize(v.all_pass());
  }
}
BENCHMARK(bm_backelin_validation);

static void bm_analyze_report(benchmark::State& state) {
  for (auto _ : state) {
    Analysis a = analyze({6, 7, 9, 10});
    std::string json = analysis_to_json(a, nullptr);
    benchmark::DoNotOptimize(json);
  }
}
BENCHMARK(bm_analyze_report);

BENCHMARK_MAIN();
