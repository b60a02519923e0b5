#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "coverpoly/graph.hpp"
#include "coverpoly/monomial.hpp"

namespace coverpoly {

inline constexpr std::size_t kCoverVertexBudget = 22;
inline constexpr std::uint64_t kPowerProductBudget = 10'000'000;

/// Monomial ideal held by its minimal generating set.
///
/// Generators are sorted greatest first: by the ambient order's lex
/// comparison when an order is attached, else by the name order.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  /// Minimalizes and sorts `gens`.
  MonomialIdeal(Ring ring, std::vector<Monomial> gens, std::optional<VariableOrder> order = std::nullopt);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const std::optional<VariableOrder>& order() const { return order_; }

  /// Same generators, re-sorted under `order`.
  MonomialIdeal with_order(VariableOrder order) const;

  /// The order generators are sorted by (attached, else by name).
  VariableOrder sort_order() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }

private:
  MonomialIdeal(Ring ring, std::vector<Monomial> gens, std::optional<VariableOrder> order, bool already_minimal);

  Ring ring_;
  std::vector<Monomial> gens_;
  std::optional<VariableOrder> order_;

  friend MonomialIdeal ideal_power(const MonomialIdeal&, unsigned);
};

/// Sorts greatest first under `order`.
void sort_lex_descending(std::vector<Monomial>& gens, const VariableOrder& order);

/// Drops duplicates and every monomial divisible by another one. The result
/// is sorted by (degree, exponent vector). OpenMP-parallel over candidates.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Inclusion-minimal vertex covers as sorted vertex sets, found as
/// complements of maximal independent sets. Throws BudgetError above
/// kCoverVertexBudget vertices.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g);

/// Ring whose variables are the vertex labels, in vertex order.
Ring vertex_ring(const Graph& g);

/// The cover ideal: one squarefree generator per minimal vertex cover.
MonomialIdeal cover_ideal(const Graph& g);

/// Multiset count C(n + k - 1, k), saturating at UINT64_MAX.
std::uint64_t multiset_count(std::uint64_t n, unsigned k);

/// Minimal generators of I^k. Throws BudgetError when the number of k-fold
/// generator products exceeds kPowerProductBudget; k == 1 returns I.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, unsigned k);

/// k base generators (with repetition) and the leftover cofactor.
struct Factorization {
  std::vector<Monomial> factors;
  Monomial cofactor;

  Monomial product() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// First selection g_1 <= ... <= g_k (by generator index) of base generators
/// whose product divides `m`, or nullopt when m is not in I^k.
std::optional<Factorization> membership(const MonomialIdeal& base, unsigned k, const Monomial& m);

/// Every such selection, up to `limit`, in the same search order.
std::vector<Factorization> all_factorizations(const MonomialIdeal& base, unsigned k, const Monomial& m,
                                              std::size_t limit);

/// Fast membership in an ideal given by generators: hash lookup for
/// generators of equal degree, divisibility scan over lower degrees.
class GeneratorIndex {
public:
  explicit GeneratorIndex(const std::vector<Monomial>& gens);

  bool contains(const Monomial& m) const { return find_divisor(m) != nullptr; }
  /// A generator dividing m, or nullptr.
  const Monomial* find_divisor(const Monomial& m) const;

private:
  std::unordered_set<Monomial, MonomialHash> exact_;
  std::vector<Monomial> by_degree_;
  std::vector<std::uint64_t> degrees_;
};

}  // namespace coverpoly
