#include <benchmark/benchmark.h>

#include "invsemi/bresinsky.hpp"
#include "invsemi/enumeration.hpp"
#include "invsemi/factorization.hpp"
#include "invsemi/inverse_system.hpp"
#include "invsemi/structure.hpp"

using invsemi::Integer;
using invsemi::NumericalSemigroup;

namespace {

// Multiplicity grows with the argument; the Apery table has n_1 entries.
NumericalSemigroup wide(Integer n1) {
  return NumericalSemigroup::from_generators({n1, n1 + 1, 2 * n1 + 3, 3 * n1 + 7});
}

void BM_FromGenerators(benchmark::State& state) {
  const Integer n1 = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(wide(n1));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FromGenerators)->RangeMultiplier(4)->Range(64, 1 << 16)->Complexity();

void BM_Apery(benchmark::State& state) {
  const auto h = wide(1000);
  const Integer modulus = h.generator(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h.apery(modulus));
}
BENCHMARK(BM_Apery)->DenseRange(0, 3);

void BM_EnumerateSemigroups(benchmark::State& state) {
  const Integer fr = state.range(0);
  std::size_t count = 0;
  for (auto _ : state) {
    count = 0;
    invsemi::for_each_semigroup(8, fr, [&](const NumericalSemigroup&) { ++count; });
  }
  state.counters["semigroups"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateSemigroups)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_EnumerateSymmetric(benchmark::State& state) {
  const Integer fr = state.range(0);
  std::size_t count = 0;
  for (auto _ : state) {
    count = 0;
    invsemi::for_each_symmetric_semigroup(12, fr, [&](const NumericalSemigroup&) { ++count; });
  }
  state.counters["semigroups"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateSymmetric)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_Factorizations(benchmark::State& state) {
  const auto h = NumericalSemigroup::from_generators({7, 11, 13, 17});
  const Integer target = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(invsemi::factorizations(h, target));
}
BENCHMARK(BM_Factorizations)->RangeMultiplier(2)->Range(64, 512);

void BM_Denumerant(benchmark::State& state) {
  const auto h = NumericalSemigroup::from_generators({7, 11, 13, 17});
  const Integer target = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(invsemi::denumerant(h, target));
}
BENCHMARK(BM_Denumerant)->RangeMultiplier(8)->Range(64, 1 << 15);

void BM_MinimalGenerators(benchmark::State& state) {
  const auto h = NumericalSemigroup::from_generators({41, 99, 70, 53});
  for (auto _ : state) benchmark::DoNotOptimize(invsemi::minimal_generators(h));
}
BENCHMARK(BM_MinimalGenerators)->Unit(benchmark::kMillisecond);

void BM_AnnihilatorOfSemigroupJ(benchmark::State& state) {
  const auto h = NumericalSemigroup::from_generators({11, 13, 17});
  for (auto _ : state) benchmark::DoNotOptimize(invsemi::annihilator_of_semigroup_J(h, 143));
}
BENCHMARK(BM_AnnihilatorOfSemigroupJ);

void BM_ContractionSpan(benchmark::State& state) {
  const auto h = NumericalSemigroup::from_generators({11, 13, 17});
  const invsemi::InversePolynomial j[] = {invsemi::inverse_polynomial(h, state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(invsemi::contraction_span_dimension(j));
}
BENCHMARK(BM_ContractionSpan)->Arg(143)->Arg(221)->Arg(286)->Unit(benchmark::kMillisecond);

void BM_IntersectionCertificate(benchmark::State& state) {
  const auto h = NumericalSemigroup::from_generators({11, 13, 17});
  const auto level = state.range(0) == 0 ? invsemi::CertificateLevel::Degrees : invsemi::CertificateLevel::Polynomials;
  const auto a = invsemi::ExponentVector::unit(3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(invsemi::verify_intersection_theorem(h, a, level));
}
BENCHMARK(BM_IntersectionCertificate)->Arg(0)->Arg(1);

void BM_IsFree(benchmark::State& state) {
  const auto h = NumericalSemigroup::from_generators({32, 48, 10, 15});
  for (auto _ : state) benchmark::DoNotOptimize(invsemi::is_free(h));
}
BENCHMARK(BM_IsFree);

void BM_Check4Gor(benchmark::State& state) {
  const auto h = NumericalSemigroup::from_generators({41, 99, 70, 53});
  for (auto _ : state) benchmark::DoNotOptimize(invsemi::check_4gor(h));
}
BENCHMARK(BM_Check4Gor)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
