// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "coverpoly/ideal.hpp"
#include "coverpoly/reference.hpp"
#include "coverpoly/structure.hpp"
#include "coverpoly/wp.hpp"

using namespace coverpoly;

namespace {

struct Fixture {
  Graph graph;
  VariableOrder order;
  MonomialIdeal base;
};

// A fixed 14-vertex generated cactus with a 5-cycle block.
const Fixture& fixture() {
  static const Fixture f = [] {
    auto inst = random_decomposed_graph(4, {2, 2, 1, 14});
    auto order = variable_order(inst.graph, inst.decomposition);
    auto base = cover_ideal(inst.graph).with_order(order);
    return Fixture{inst.graph, order, base};
  }();
  return f;
}

std::vector<Monomial> unreduced_products(unsigned k) {
  const auto& gens = fixture().base.generators();
  std::vector<Monomial> cur = ideal_power(fixture().base, k - 1).generators(), out;
  for (const auto& a : cur)
    for (const auto& b : gens) out.push_back(a * b);
  return out;
}

void BM_Minimalize(benchmark::State& state) {
  const auto input = unreduced_products(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimalize(input));
  state.counters["input"] = static_cast<double>(input.size());
}

void BM_MinimalizeReference(benchmark::State& state) {
  const auto input = unreduced_products(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::minimalize(input));
  state.counters["input"] = static_cast<double>(input.size());
}

void BM_IdealPower(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ideal_power(fixture().base, static_cast<unsigned>(state.range(0))));
}

void BM_IdealPowerReference(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::ideal_power(fixture().base, static_cast<unsigned>(state.range(0))));
}

void BM_WpCheck(benchmark::State& state) {
  const auto power = ideal_power(fixture().base, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wp_check(power, fixture().order));
  state.counters["generators"] = static_cast<double>(power.size());
}

void BM_WpCheckReference(benchmark::State& state) {
  const auto power = ideal_power(fixture().base, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::wp_check(power, fixture().order));
  state.counters["generators"] = static_cast<double>(power.size());
}

}  // namespace

BENCHMARK(BM_Minimalize)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinimalizeReference)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdealPower)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdealPowerReference)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WpCheck)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WpCheckReference)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
