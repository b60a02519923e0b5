#include <gtest/gtest.h>
#include <omp.h>

#include <numeric>
#include <random>

#include "coverpoly/reference.hpp"
#include "coverpoly/structure.hpp"
#include "coverpoly/wp.hpp"
#include "support.hpp"

using namespace coverpoly;
using coverpoly::testing::sorted;

namespace {

class ThreadCount {
public:
  explicit ThreadCount(int n) : saved_(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~ThreadCount() { omp_set_num_threads(saved_); }

private:
  int saved_;
};

bool same_result(const WpResult& a, const WpResult& b) {
  if (a.pairs != b.pairs || a.divergent_pairs != b.divergent_pairs || a.ok() != b.ok()) return false;
  if (a.ok()) return true;
  return a.counterexample->f_index == b.counterexample->f_index &&
         a.counterexample->g_index == b.counterexample->g_index && a.counterexample->z == b.counterexample->z;
}

}  // namespace

TEST(Parallel, MinimalizeMatchesReference) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + t % 6;
    std::uniform_int_distribution<Exponent> e(0, 3);
    std::vector<Monomial> gens(50 + t * 7, Monomial(n));
    for (auto& m : gens)
      for (Var v = 0; v < n; ++v) m[v] = e(rng);
    EXPECT_EQ(sorted(minimalize(gens)), sorted(reference::minimalize(gens)));
  }
}

TEST(Parallel, PowerMatchesReference) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = random_decomposed_graph(seed, {2, 1, 1, 12});
    auto J = cover_ideal(inst.graph).with_order(variable_order(inst.graph, inst.decomposition));
    for (unsigned k = 1; k <= 3; ++k) EXPECT_EQ(ideal_power(J, k), reference::ideal_power(J, k)) << seed;
  }
}

TEST(Parallel, WpCheckMatchesReference) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = random_decomposed_graph(seed, {2, 1, 1, 12});
    auto order = variable_order(inst.graph, inst.decomposition);
    auto J = cover_ideal(inst.graph).with_order(order);
    for (unsigned k = 1; k <= 2; ++k) {
      auto Jk = ideal_power(J, k);
      EXPECT_TRUE(same_result(wp_check(Jk, order), reference::wp_check(Jk, order))) << seed;
    }
  }
}

// Non-WP ideals under arbitrary orders exercise the counterexample reduction.
TEST(Parallel, CounterexampleMatchesReference) {
  std::mt19937_64 rng(23);
  std::size_t failures = 0;
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 3 + t % 4;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    Ring r(names);
    std::uniform_int_distribution<Exponent> e(0, 2);
    std::vector<Monomial> gens(4 + t % 6, Monomial(n));
    for (auto& m : gens)
      for (Var v = 0; v < n; ++v) m[v] = e(rng);
    std::vector<Var> perm(n);
    std::iota(perm.begin(), perm.end(), Var{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    VariableOrder order(perm);
    MonomialIdeal I(r, gens, order);
    auto a = wp_check(I, order);
    failures += !a.ok();
    EXPECT_TRUE(same_result(a, reference::wp_check(I, order))) << t;
  }
  EXPECT_GT(failures, 0u);
}

TEST(Parallel, ResultsIndependentOfThreadCount) {
  auto inst = random_decomposed_graph(4, {2, 2, 1, 14});
  auto order = variable_order(inst.graph, inst.decomposition);
  auto J = cover_ideal(inst.graph).with_order(order);
  MonomialIdeal serial_power;
  WpResult serial_wp;
  {
    ThreadCount one(1);
    serial_power = ideal_power(J, 2);
    serial_wp = wp_check(serial_power, order);
  }
  for (int threads : {2, 4, 7}) {
    ThreadCount many(threads);
    auto p = ideal_power(J, 2);
    EXPECT_EQ(p.generators(), serial_power.generators()) << threads;
    EXPECT_TRUE(same_result(wp_check(p, order), serial_wp)) << threads;
  }
}
