#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coverpoly/graph.hpp"
#include "coverpoly/monomial.hpp"

namespace coverpoly {

/// A clique block F_i (2 or 3 vertices). `free_vertices` are the members
/// whose whole neighbourhood lies inside the clique.
struct CliqueBlock {
  VertexSet vertices;
  VertexSet free_vertices;

  friend bool operator==(const CliqueBlock&, const CliqueBlock&) = default;
};

/// Partition of V(G) into clique blocks, basic 5-cycles and degree-2 edges
/// lying on 4-cycles. Sequence order inside each list fixes the variable order.
struct Decomposition {
  std::vector<CliqueBlock> cliques;
  std::vector<FiveCycle> five_cycles;
  std::vector<Edge> four_cycle_edges;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct DecompositionCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

inline constexpr std::size_t kDecompositionVertexBudget = 24;

/// Members of `clique` whose neighbourhood stays inside it, sorted by id.
VertexSet free_vertices(const Graph& g, const VertexSet& clique);

/// Checks every clause of the decomposition against `g` and lists the
/// violated ones. Never throws on malformed decompositions.
DecompositionCheck verify_decomposition(const Graph& g, const Decomposition& d);

/// Assigns y1..y5 so the cycle reads y1, y4, y2, y3, y5 with y3, y4, y5 of
/// degree 2. Among valid assignments the one minimizing (label(y1),
/// label(y2)) wins. Throws StructuralError when none exists.
FiveCycle label_five_cycle(const Graph& g, std::span<const VertexId> cycle);

/// Exact-cover search for a decomposition: 5-cycles, then 4-cycle edges,
/// then cliques, candidates in lexicographic order. Throws BudgetError
/// above kDecompositionVertexBudget vertices.
std::optional<Decomposition> find_decomposition(const Graph& g);

/// Clique vertices (non-free before free, each by label), then every
/// 5-cycle as y1 > y2 > y3 > y4 > y5, then the 4-cycle edge pairs.
VariableOrder variable_order(const Graph& g, const Decomposition& d);

struct GeneratorLimits {
  std::size_t max_cliques = 2;
  std::size_t max_five_cycles = 1;
  std::size_t max_four_cycles = 1;
  std::size_t max_vertices = 14;
};

struct GeneratedInstance {
  Graph graph;
  Decomposition decomposition;
};

/// Deterministic random cactus assembled from clique blocks, basic 5-cycles
/// and 4-cycle units joined by bridges along a random tree. 5-cycles are
/// only joined at y1/y2 and 4-cycle edges never. The result always passes
/// is_cactus and verify_decomposition.
GeneratedInstance random_decomposed_graph(std::uint64_t seed, const GeneratorLimits& limits);

}  // namespace coverpoly
