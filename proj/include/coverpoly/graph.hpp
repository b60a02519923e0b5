#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace coverpoly {

using VertexId = std::size_t;
using VertexSet = std::vector<VertexId>;  // kept sorted by id
using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph over opaque string labels.
///
/// Vertex ids follow insertion order, which is the stable vertex order used
/// everywhere else (it doubles as the variable index of the cover ideal).
/// Every tie-break that has to be independent of insertion order uses
/// lexicographic label order instead.
class Graph {
public:
  Graph() = default;

  /// Returns the id of `label`, adding the vertex if it is new.
  VertexId add_vertex(std::string_view label);

  /// Adds the edge {u, v}; repeated edges collapse. Throws InputError on a loop.
  void add_edge(std::string_view u, std::string_view v);
  void add_edge(VertexId u, VertexId v);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;
  /// Like find(), but throws InputError for unknown labels.
  VertexId id(std::string_view label) const;

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool label_less(VertexId a, VertexId b) const { return labels_[a] < labels_[b]; }
  /// Vertex ids sorted by label.
  std::vector<VertexId> by_label() const;

private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Parses the edge-list text format: one "u v" pair per line, "vertex u" for
/// isolated vertices, '#' starts a comment, blank lines are ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string format_edge_list(const Graph& g);

bool is_connected(const Graph& g);

/// Biconnected blocks as edge lists (each edge appears in exactly one block).
std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g);

/// Connected, and every block is a bridge or a single cycle.
/// The empty graph is not a cactus; a single vertex is.
bool is_cactus(const Graph& g);

using Cycle = std::vector<VertexId>;
using CycleList = std::vector<Cycle>;

inline constexpr std::size_t kCycleLimit = 100'000;

/// Rotates/reflects `c` so it starts at its label-smallest vertex and
/// continues toward the smaller-labelled of that vertex's two cycle neighbours.
Cycle canonical_cycle(const Graph& g, Cycle c);

/// Every simple cycle once, in canonical form, sorted by label sequence.
/// Throws BudgetError past `limit` cycles.
CycleList simple_cycles(const Graph& g, std::size_t limit = kCycleLimit);

/// True when `c` is a 5-cycle of `g` in traversal order (either direction).
bool is_cycle_of(const Graph& g, std::span<const VertexId> c);

/// No two cyclically adjacent vertices of `c` both have degree >= 3.
/// Throws StructuralError if `c` is not a 5-cycle of `g`.
bool is_basic_five_cycle(const Graph& g, std::span<const VertexId> c);

/// A 5-cycle with positions y1..y5 (stored at indices 0..4), traversed
/// y1, y4, y2, y3, y5.
struct FiveCycle {
  std::array<VertexId, 5> y{};

  VertexId at(int position) const { return y.at(static_cast<std::size_t>(position - 1)); }
  /// 1..5 when `v` is on the cycle, 0 otherwise.
  int position_of(VertexId v) const;
  /// Traversal order y1, y4, y2, y3, y5.
  std::array<VertexId, 5> traversal() const { return {y[0], y[3], y[1], y[2], y[4]}; }

  friend bool operator==(const FiveCycle&, const FiveCycle&) = default;
};

struct ReachableSplit {
  VertexSet t1;
  VertexSet t2;
};

/// Removes y3, y4, y5 and returns the vertices (other than y1, y2) reachable
/// from y1 and from y2 in what is left. Throws StructuralError when the two
/// sets overlap or do not exhaust the remaining vertices.
ReachableSplit reachable_partition(const Graph& g, const FiveCycle& block);

}  // namespace coverpoly
