#include <benchmark/benchmark.h>

#include "kml/k0.hpp"
#include "kml/linalg.hpp"
#include "kml/random.hpp"

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  kml::InstanceGenerator gen(7);
  const kml::Matrix a = gen.matrix(kml::Ring::integers(), n, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(kml::smithNormalForm(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_SmithDiagonal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  kml::InstanceGenerator gen(7);
  const kml::Matrix a = gen.matrix(kml::Ring::integers(), n, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(kml::smithDiagonal(a));
}
BENCHMARK(BM_SmithDiagonal)->Arg(8)->Arg(32)->Arg(64);

void BM_KoszulHomologyFree(benchmark::State& state) {
  const auto vars = static_cast<std::size_t>(state.range(0));
  const kml::GradedModule x = kml::freeGraded(kml::Module::free(kml::Ring::integers(), 2), vars, 1, 10);
  for (auto _ : state) benchmark::DoNotOptimize(kml::koszulHomology(x));
}
BENCHMARK(BM_KoszulHomologyFree)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_K0ClassNil(benchmark::State& state) {
  kml::InstanceGenerator gen(11);
  const kml::GradedModule x = gen.nilModule(kml::Ring::integers(), 2, 4, 9);
  for (auto _ : state) benchmark::DoNotOptimize(kml::k0Class(x));
}
BENCHMARK(BM_K0ClassNil)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
