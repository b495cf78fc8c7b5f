// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "sublrc/sublrc.hpp"

using namespace sublrc;

namespace {

void BM_FieldMul(benchmark::State& state) {
  const auto f = FieldContext::make(2, static_cast<unsigned>(state.range(0)));
  const Elem q = f->order();
  Elem acc = 1;
  for (auto _ : state) {
    for (Elem a = 1; a < q; a += 7) acc = f->mul(acc ? acc : 1, a);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(12);

void BM_Rref(benchmark::State& state) {
  const auto f = FieldContext::make(2, 4);
  const auto n = static_cast<std::size_t>(state.range(0));
  Mat m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<Elem>((r * 7 + c * 13 + r * c) % 16);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(64);

void BM_Grassmannian(benchmark::State& state) {
  const auto f = FieldContext::make(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_grassmannian(f, static_cast<std::size_t>(state.range(0)), 2).size());
}
BENCHMARK(BM_Grassmannian)->Arg(4)->Arg(6);

void BM_WeightDistribution(benchmark::State& state) {
  const auto code = construction_all_subspaces(FieldContext::make(2, 1), 5, 2);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(code, {}, threads).size());
}
BENCHMARK(BM_WeightDistribution)->Arg(1)->Arg(4);

void BM_NodeLocality(benchmark::State& state) {
  const auto code = construction_spread(FieldContext::make(2, 1), 6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(node_locality(code).value);
}
BENCHMARK(BM_NodeLocality);

void BM_NodeAvailability(benchmark::State& state) {
  const auto code = construction_all_subspaces(FieldContext::make(2, 1), 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(node_availability(code, 0, 2).count);
}
BENCHMARK(BM_NodeAvailability);

void BM_Pairing(benchmark::State& state) {
  const auto code = construction_all_subspaces(FieldContext::make(2, 1), 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(grassmann_pairing_sets(code, 0).size());
}
BENCHMARK(BM_Pairing);

void BM_StdDesign(benchmark::State& state) {
  const auto f = FieldContext::make(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_std(f, 2, 2, 2).blocks.size());
}
BENCHMARK(BM_StdDesign);

}  // namespace

BENCHMARK_MAIN();
