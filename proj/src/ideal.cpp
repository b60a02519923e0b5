#include "coverpoly/ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

#include "coverpoly/errors.hpp"

namespace coverpoly {

namespace {

bool by_degree_then_exponents(const Monomial& a, const Monomial& b, std::uint64_t da, std::uint64_t db) {
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

void sort_lex_descending(std::vector<Monomial>& gens, const VariableOrder& order) {
  std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) { return order.lex(a, b) > 0; });
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens, std::optional<VariableOrder> order)
    : MonomialIdeal(std::move(ring), minimalize(std::move(gens)), std::move(order), true) {}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens, std::optional<VariableOrder> order, bool)
    : ring_(std::move(ring)), gens_(std::move(gens)), order_(std::move(order)) {
  for (const auto& m : gens_)
    if (m.nvars() != ring_.size()) throw std::invalid_argument("generator arity does not match ring");
  if (order_ && order_->size() != ring_.size()) throw std::invalid_argument("variable order size does not match ring");
  sort_lex_descending(gens_, sort_order());
}

VariableOrder MonomialIdeal::sort_order() const {
  return order_ ? *order_ : VariableOrder::by_name(ring_);
}

MonomialIdeal MonomialIdeal::with_order(VariableOrder order) const {
  return MonomialIdeal(ring_, gens_, std::move(order), true);
}

// ---------------------------------------------------------------------------

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return by_degree_then_exponents(a, b, a.degree(), b.degree());
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(gens.size());
  std::vector<std::uint64_t> deg(gens.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) deg[i] = gens[i].degree();

  // Distinct monomials of equal degree never divide each other, so only
  // strictly lower-degree candidates need checking.
  std::vector<char> redundant(gens.size(), 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::ptrdiff_t j = 0; j < n && deg[j] < deg[i]; ++j) {
      if (gens[j].divides(gens[i])) {
        redundant[i] = 1;
        break;
      }
    }
  }

  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (std::ptrdiff_t i = 0; i < n; ++i)
    if (!redundant[i]) out.push_back(std::move(gens[i]));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kCoverVertexBudget)
    throw BudgetError("minimal cover enumeration limited to " + std::to_string(kCoverVertexBudget) + " vertices, got " +
                      std::to_string(n));
  using Mask = std::uint64_t;
  const Mask all = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);

  // Independent sets of g are cliques of its complement.
  std::vector<Mask> non_adjacent(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    Mask nb = 0;
    for (VertexId w : g.neighbors(v)) nb |= Mask{1} << w;
    non_adjacent[v] = all & ~nb & ~(Mask{1} << v);
  }

  std::vector<Mask> maximal_independent;
  // Bron-Kerbosch with Tomita pivoting.
  std::function<void(Mask, Mask, Mask)> expand = [&](Mask r, Mask p, Mask x) {
    if (p == 0 && x == 0) {
      maximal_independent.push_back(r);
      return;
    }
    Mask px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    for (Mask it = px; it; it &= it - 1) {
      int u = std::countr_zero(it);
      int c = std::popcount(p & non_adjacent[u]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (Mask cand = p & ~non_adjacent[pivot]; cand; cand &= cand - 1) {
      int v = std::countr_zero(cand);
      Mask bit = Mask{1} << v;
      expand(r | bit, p & non_adjacent[v], x & non_adjacent[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  expand(0, all, 0);

  std::vector<VertexSet> covers;
  covers.reserve(maximal_independent.size());
  for (Mask ind : maximal_independent) {
    VertexSet c;
    for (Mask m = all & ~ind; m; m &= m - 1) c.push_back(static_cast<VertexId>(std::countr_zero(m)));
    covers.push_back(std::move(c));
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

Ring vertex_ring(const Graph& g) { return Ring(g.labels()); }

MonomialIdeal cover_ideal(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Monomial> gens;
  for (const auto& c : minimal_vertex_covers(g)) gens.push_back(Monomial::squarefree(n, c));
  return MonomialIdeal(vertex_ring(g), std::move(gens));
}

// ---------------------------------------------------------------------------

std::uint64_t multiset_count(std::uint64_t n, unsigned k) {
  if (n == 0) return k == 0 ? 1 : 0;
  // C(n+k-1, k) built incrementally; each partial value is itself a binomial.
  constexpr auto saturated = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    const std::uint64_t factor = n - 1 + i;
    if (c > saturated / factor) return saturated;
    c = c * factor / i;
  }
  return c;
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, unsigned k) {
  if (k == 0) throw std::invalid_argument("ideal_power needs k >= 1");
  if (k == 1) return ideal;
  const auto products = multiset_count(ideal.size(), k);
  if (products > kPowerProductBudget)
    throw BudgetError("I^" + std::to_string(k) + " needs " + std::to_string(products) + " generator products (budget " +
                      std::to_string(kPowerProductBudget) + ")");

  const auto& base = ideal.generators();
  std::vector<Monomial> current = base;
  for (unsigned step = 2; step <= k; ++step) {
    const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(current.size());
    const std::size_t cols = base.size();
    std::vector<Monomial> next(current.size() * cols);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) next[static_cast<std::size_t>(i) * cols + j] = current[i] * base[j];
    current = minimalize(std::move(next));
  }
  return MonomialIdeal(ideal.ring(), std::move(current), ideal.order(), true);
}

// ---------------------------------------------------------------------------

Monomial Factorization::product() const {
  Monomial p = cofactor;
  for (const auto& f : factors) p *= f;
  return p;
}

namespace {

// Depth-first search over non-decreasing generator index sequences; the
// visitor returns false to stop.
void search_factorizations(const MonomialIdeal& base, unsigned k, const Monomial& m,
                           const std::function<bool(const std::vector<std::size_t>&, const Monomial&)>& visit) {
  const auto& gens = base.generators();
  if (gens.empty()) return;
  std::uint64_t min_deg = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> deg(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    deg[i] = gens[i].degree();
    min_deg = std::min(min_deg, deg[i]);
  }
  if (m.nvars() != base.ring().size()) throw std::invalid_argument("monomial arity does not match ring");

  std::vector<std::size_t> chosen;
  bool stop = false;
  std::function<void(std::size_t, const Monomial&, std::uint64_t)> rec = [&](std::size_t from, const Monomial& rem,
                                                                              std::uint64_t rem_deg) {
    if (chosen.size() == k) {
      if (!visit(chosen, rem)) stop = true;
      return;
    }
    if (rem_deg < (k - chosen.size()) * min_deg) return;
    for (std::size_t i = from; i < gens.size() && !stop; ++i) {
      if (deg[i] > rem_deg || !gens[i].divides(rem)) continue;
      chosen.push_back(i);
      rec(i, rem / gens[i], rem_deg - deg[i]);
      chosen.pop_back();
    }
  };
  rec(0, m, m.degree());
}

Factorization make_factorization(const MonomialIdeal& base, const std::vector<std::size_t>& idx, const Monomial& rem) {
  Factorization f;
  for (std::size_t i : idx) f.factors.push_back(base.generators()[i]);
  f.cofactor = rem;
  return f;
}

}  // namespace

std::optional<Factorization> membership(const MonomialIdeal& base, unsigned k, const Monomial& m) {
  if (k == 0) throw std::invalid_argument("membership needs k >= 1");
  std::optional<Factorization> found;
  search_factorizations(base, k, m, [&](const std::vector<std::size_t>& idx, const Monomial& rem) {
    found = make_factorization(base, idx, rem);
    return false;
  });
  return found;
}

std::vector<Factorization> all_factorizations(const MonomialIdeal& base, unsigned k, const Monomial& m,
                                              std::size_t limit) {
  if (k == 0) throw std::invalid_argument("membership needs k >= 1");
  std::vector<Factorization> out;
  if (limit == 0) return out;
  search_factorizations(base, k, m, [&](const std::vector<std::size_t>& idx, const Monomial& rem) {
    out.push_back(make_factorization(base, idx, rem));
    return out.size() < limit;
  });
  return out;
}

// ---------------------------------------------------------------------------

GeneratorIndex::GeneratorIndex(const std::vector<Monomial>& gens) : exact_(gens.begin(), gens.end()), by_degree_(gens) {
  std::sort(by_degree_.begin(), by_degree_.end(), [](const Monomial& a, const Monomial& b) {
    return by_degree_then_exponents(a, b, a.degree(), b.degree());
  });
  degrees_.reserve(by_degree_.size());
  for (const auto& m : by_degree_) degrees_.push_back(m.degree());
}

const Monomial* GeneratorIndex::find_divisor(const Monomial& m) const {
  if (auto it = exact_.find(m); it != exact_.end()) return &*it;
  const auto d = m.degree();
  for (std::size_t i = 0; i < by_degree_.size() && degrees_[i] < d; ++i)
    if (by_degree_[i].divides(m)) return &by_degree_[i];
  return nullptr;
}

}  // namespace coverpoly
