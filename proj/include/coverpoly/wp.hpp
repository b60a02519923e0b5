#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coverpoly/graph.hpp"
#include "coverpoly/ideal.hpp"
#include "coverpoly/monomial.hpp"
#include "coverpoly/structure.hpp"

namespace coverpoly {

/// (f, g, z): f and g agree above z and deg_z f > deg_z g.
struct DivergencePoint {
  Var z = 0;
  Monomial f;
  Monomial g;
};

/// Scans variables greatest first; nullopt when f == g or the first
/// difference favours g.
std::optional<DivergencePoint> first_divergence(const Monomial& f, const Monomial& g, const VariableOrder& order);

struct WpCounterexample {
  std::size_t f_index = 0;
  std::size_t g_index = 0;
  Var z = 0;
};

struct WpResult {
  std::optional<WpCounterexample> counterexample;
  std::size_t pairs = 0;            // ordered pairs of distinct generators
  std::size_t divergent_pairs = 0;  // pairs with a divergence point

  bool ok() const { return !counterexample.has_value(); }
};

/// Weakly polymatroidal check over all ordered generator pairs. Witnesses
/// are looked up per (g, z) in a table filled in parallel; the reported
/// counterexample is the first failing pair in (f index, g index) order.
WpResult wp_check(const MonomialIdeal& ideal, const VariableOrder& order);

/// The first w < z (nearest to z first) with z*g/w in `ideal`.
/// Used by wp_check; exposed for tests.
std::optional<Var> exchange_variable(const GeneratorIndex& ideal, const Monomial& g, Var z, const VariableOrder& order);

enum class WitnessMethod { constructive_y3, constructive_y4, brute_force };
std::string_view to_string(WitnessMethod m);

struct WitnessReport {
  DivergencePoint point;
  Var w = 0;
  Factorization certificate;  // factors * cofactor == z*g/w
  WitnessMethod method = WitnessMethod::brute_force;
  /// Constructive methods only: the exchanged factors as the swap produces
  /// them, before reduction to minimal covers.
  std::vector<Monomial> exchanged_factors;
};

/// z*g/w, or nullopt when w does not divide z*g.
std::optional<Monomial> exchange(const Monomial& g, Var z, Var w);

/// Tries w < z with deg_w g >= 1, nearest to z first, and returns the first
/// one for which membership(base, k, z*g/w) succeeds.
std::optional<WitnessReport> witness_bruteforce(const DivergencePoint& point, const MonomialIdeal& base, unsigned k,
                                                const VariableOrder& order);

// ---------------------------------------------------------------------------
// Five-cycle triple bookkeeping

/// The five minimal covers of a 5-cycle block, as positions.
enum Triple : std::size_t { t123 = 0, t125, t134, t245, t345 };
inline constexpr std::array<std::array<int, 3>, 5> kTriplePositions{{{1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {2, 4, 5}, {3, 4, 5}}};
std::string_view to_string(Triple t);
bool triple_contains(Triple t, int position);

/// The unique triple of `block` inside supp(m). Throws StructuralError when
/// the support holds none or several.
Triple triple_of(const Monomial& m, const FiveCycle& block);

struct TripleCounts {
  std::array<unsigned, 5> n{};

  unsigned operator[](Triple t) const { return n[t]; }
  unsigned total() const;
  /// Number of counted factors containing position `p` (1..5).
  unsigned at_position(int p) const;

  friend bool operator==(const TripleCounts&, const TripleCounts&) = default;
};

/// Counts the factors whose support contains each triple.
TripleCounts triple_counts(const Factorization& fact, const FiveCycle& block);

/// Which identities apply: the block positions where deg f == deg g, and the
/// position (1..5, 0 for none) where deg f > deg g.
struct IdentityHypotheses {
  std::bitset<6> equal_at;  // bit p for position p
  int strict_at = 0;
};

inline constexpr std::size_t kIdentityCount = 9;

/// Outcome per identity f1..f9; nullopt when its hypotheses do not apply.
///  f1..f4  the degree relation at y1..y4 expressed through the counts
///  f5      both count vectors sum to k
///  f6      f245+f345 = g245+g345          (from f1 and f5)
///  f7      f134+f345 = g134+g345          (from f2 and f5)
///  f8      f245+f125 = g245+g125          (from f3 and f5)
///  f9      the case deductions: divergence at y3 with g125 = 0 gives
///          f345 > f125+g345, f134 < g134, f245 < g245; divergence at y4
///          gives f245 > g245, f345 < g345, f125 < g125
struct IdentityReport {
  std::array<std::optional<bool>, kIdentityCount> results;

  bool all_hold() const;
  std::size_t applicable() const;
  std::size_t violations() const;
};

IdentityReport count_identities_check(const TripleCounts& f, const TripleCounts& g, const IdentityHypotheses& hyp);

/// Hypotheses implied by a divergence at `position` of a block: equality
/// above it, strict at it.
IdentityHypotheses hypotheses_for_divergence(int position);

// ---------------------------------------------------------------------------
// Constructive witness

/// A graph with a verified decomposition, its order, cover ideal and the
/// reachability split of every 5-cycle block.
struct CoverContext {
  Graph graph;
  Decomposition decomposition;
  VariableOrder order;
  MonomialIdeal base;
  std::vector<ReachableSplit> splits;

  /// Throws StructuralError when the decomposition does not verify.
  static CoverContext build(Graph g, Decomposition d);

  struct Location {
    std::size_t block;
    int position;
  };
  std::optional<Location> locate(Var v) const;
};

/// The corrected exchange for a divergence at y3 or y4 of a 5-cycle block.
/// Certificate factors are minimal covers; anything the swapped covers have
/// beyond them goes to the cofactor. The certificate is re-checked by
/// membership before returning. Throws StructuralError when a factor the
/// argument guarantees is missing or the certificate fails.
WitnessReport constructive_witness(const Factorization& f_fact, const Factorization& g_fact, const DivergencePoint& point,
                                   const CoverContext& ctx);

/// supp(m) meets every edge of g.
bool is_vertex_cover(const Graph& g, const Monomial& m);

/// Linear quotients of the generators in their stored (lex-descending) order:
/// every colon ideal (g_1..g_{i-1}) : g_i is generated by variables.
bool has_linear_quotients(const MonomialIdeal& ideal);

}  // namespace coverpoly
