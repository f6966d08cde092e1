#include <benchmark/benchmark.h>

#include "kronhecke/character_table.hpp"
#include "kronhecke/kronecker.hpp"
#include "kronhecke/orbits.hpp"
#include "kronhecke/zoo.hpp"

namespace {

using namespace kronhecke;

void BM_TableSymmetric5(benchmark::State& state) {
  const GroupTable g = zoo::zoo_build(zoo::parse_family("symmetric", "5"));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g));
}
BENCHMARK(BM_TableSymmetric5)->Unit(benchmark::kMillisecond);

void BM_TablePsl27(benchmark::State& state) {
  const GroupTable g = zoo::zoo_build(zoo::parse_family("psl2", "7"));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g));
}
BENCHMARK(BM_TablePsl27)->Unit(benchmark::kMillisecond);

void BM_TableGl23(benchmark::State& state) {
  const GroupTable g = zoo::zoo_build(zoo::parse_family("gl2", "3"));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g));
}
BENCHMARK(BM_TableGl23)->Unit(benchmark::kMillisecond);

void BM_OrbitsSymmetric4(benchmark::State& state) {
  const GroupTable g = zoo::zoo_build(zoo::parse_family("symmetric", "4"));
  const auto d = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simultaneous_classes(g, d));
}
BENCHMARK(BM_OrbitsSymmetric4)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FusionTensor(benchmark::State& state) {
  const CharacterTable t = character_table(zoo::zoo_build(zoo::parse_family("psl2", "7")));
  for (auto _ : state) benchmark::DoNotOptimize(FusionTensor(t));
}
BENCHMARK(BM_FusionTensor)->Unit(benchmark::kMillisecond);

void BM_Burnside(benchmark::State& state) {
  const CharacterTable t = character_table(zoo::zoo_build(zoo::parse_family("symmetric", "5")));
  for (auto _ : state) benchmark::DoNotOptimize(conj_count(t, 3));
}
BENCHMARK(BM_Burnside)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
