#include <cmath>
#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "pisot/field_io.hpp"
#include "pisot/reduction.hpp"

using namespace pisot;

namespace {

const char* const kFields[] = {"qsqrt2", "qsqrt5", "zeta7plus", "zeta5"};

FieldData field(int index) { return load_field_file(std::string(PISOT_DATA_DIR) + "/fields/" + kFields[index] + ".json"); }

TotallyPositiveElement random_form(const FieldData& f, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-5.0, 5.0);
  std::vector<double> c;
  for (int i = 0; i < f.signature().archimedean(); ++i) c.push_back(std::exp(unif(rng)));
  return {f.signature(), c};
}

void BM_ReduceUnary(benchmark::State& state) {
  const FieldData f = field(static_cast<int>(state.range(0)));
  const UnitExponentVector u = pisot_search(f, build_lattice(f), 0.01).unit;
  std::mt19937_64 rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_unary(f, random_form(f, rng), u, 0.99));
  state.SetLabel(kFields[state.range(0)]);
}
BENCHMARK(BM_ReduceUnary)->DenseRange(0, 2);

void BM_IntegerMinimum(benchmark::State& state) {
  const FieldData f = field(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(integer_minimum(f, random_form(f, rng)));
  state.SetLabel(kFields[state.range(0)]);
}
BENCHMARK(BM_IntegerMinimum)->DenseRange(0, 3);

void BM_EnumerateFacets(benchmark::State& state) {
  const FieldData f = field(static_cast<int>(state.range(0)));
  const LogUnitLattice lattice = build_lattice(f);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_facet_candidates(f, lattice));
  state.SetLabel(kFields[state.range(0)]);
}
BENCHMARK(BM_EnumerateFacets)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();
