#include "coverpoly/reference.hpp"

#include <algorithm>
#include <functional>

#include "coverpoly/errors.hpp"

namespace coverpoly::reference {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < gens.size() && keep; ++j)
      if (j != i && gens[j].divides(gens[i])) keep = false;
    if (keep) out.push_back(gens[i]);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  return out;
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, unsigned k) {
  if (k == 0) throw std::invalid_argument("ideal_power needs k >= 1");
  if (multiset_count(ideal.size(), k) > kPowerProductBudget) throw BudgetError("power exceeds product budget");
  const auto& gens = ideal.generators();
  std::vector<Monomial> products;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, Monomial)> rec = [&](std::size_t from, Monomial acc) {
    if (pick.size() == k) {
      products.push_back(std::move(acc));
      return;
    }
    for (std::size_t i = from; i < gens.size(); ++i) {
      pick.push_back(i);
      rec(i, acc * gens[i]);
      pick.pop_back();
    }
  };
  rec(0, Monomial(ideal.ring().size()));
  return MonomialIdeal(ideal.ring(), reference::minimalize(std::move(products)), ideal.order());
}

WpResult wp_check(const MonomialIdeal& ideal, const VariableOrder& order) {
  const auto& gens = ideal.generators();
  auto in_ideal = [&](const Monomial& m) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
  };
  WpResult result;
  for (std::size_t fi = 0; fi < gens.size(); ++fi) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      if (fi == gi) continue;
      ++result.pairs;
      auto dp = first_divergence(gens[fi], gens[gi], order);
      if (!dp) continue;
      ++result.divergent_pairs;
      bool found = false;
      for (std::size_t r = order.rank(dp->z) + 1; r < order.size() && !found; ++r) {
        auto m = exchange(dp->g, dp->z, order.at(r));
        found = m && in_ideal(*m);
      }
      if (!found && !result.counterexample) result.counterexample = WpCounterexample{fi, gi, dp->z};
    }
  }
  return result;
}

}  // namespace coverpoly::reference
