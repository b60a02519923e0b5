#include "coverpoly/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "coverpoly/errors.hpp"

namespace coverpoly {

VertexId Graph::add_vertex(std::string_view label) {
  std::string key(label);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  VertexId id = labels_.size();
  labels_.push_back(key);
  index_.emplace(std::move(key), id);
  adjacency_.emplace_back();
  return id;
}

void Graph::add_edge(std::string_view u, std::string_view v) {
  if (u == v) throw InputError("loop at vertex '" + std::string(u) + "'");
  add_edge(add_vertex(u), add_vertex(v));
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw InputError("loop at vertex '" + labels_.at(u) + "'");
  if (u >= labels_.size() || v >= labels_.size()) throw InputError("edge endpoint out of range");
  auto& nu = adjacency_[u];
  auto pos = std::lower_bound(nu.begin(), nu.end(), v);
  if (pos != nu.end() && *pos == v) return;
  nu.insert(pos, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

std::optional<VertexId> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::id(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw InputError("unknown vertex '" + std::string(label) + "'");
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& nu = adjacency_.at(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u)
    for (VertexId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<VertexId> Graph::by_label() const {
  std::vector<VertexId> ids(labels_.size());
  for (VertexId v = 0; v < ids.size(); ++v) ids[v] = v;
  std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) { return labels_[a] < labels_[b]; });
  return ids;
}

// ---------------------------------------------------------------------------
// Edge-list text format

Graph parse_edge_list(std::istream& in) {
  Graph g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(std::move(t));
    if (tok.empty()) continue;
    try {
      if (tok.size() == 2 && tok[0] == "vertex") {
        g.add_vertex(tok[1]);
      } else if (tok.size() == 2) {
        g.add_edge(tok[0], tok[1]);
      } else {
        throw InputError("expected 'u v' or 'vertex u'");
      }
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  try {
    return parse_edge_list(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) out << "vertex " << g.label(v) << '\n';
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Connectivity and blocks

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> blocks;
  int timer = 0;

  std::function<void(VertexId, VertexId)> dfs = [&](VertexId v, VertexId parent) {
    disc[v] = low[v] = timer++;
    for (VertexId w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(std::min(v, w), std::max(v, w));
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<Edge> block;
          const Edge cut{std::min(v, w), std::max(v, w)};
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == cut) break;
          }
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(std::min(v, w), std::max(v, w));
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };

  for (VertexId v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, v);
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

bool is_cactus(const Graph& g) {
  if (!is_connected(g)) return false;
  for (const auto& block : biconnected_blocks(g)) {
    if (block.size() == 1) continue;
    // A 2-connected block is a single cycle iff |E| == |V|.
    VertexSet verts;
    for (auto [u, v] : block) {
      verts.push_back(u);
      verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() != block.size()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Cycles

Cycle canonical_cycle(const Graph& g, Cycle c) {
  if (c.size() < 3) return c;
  auto start = std::min_element(c.begin(), c.end(), [&](VertexId a, VertexId b) { return g.label_less(a, b); });
  std::rotate(c.begin(), start, c.end());
  if (g.label_less(c.back(), c[1])) std::reverse(c.begin() + 1, c.end());
  return c;
}

CycleList simple_cycles(const Graph& g, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  // Label rank so that "smallest vertex" means smallest label.
  std::vector<std::size_t> rank(n);
  {
    auto order = g.by_label();
    for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;
  }

  CycleList out;
  for (const auto& block : biconnected_blocks(g)) {
    if (block.size() < 3) continue;
    std::vector<std::vector<VertexId>> adj(n);
    VertexSet verts;
    for (auto [u, v] : block) {
      adj[u].push_back(v);
      adj[v].push_back(u);
      verts.push_back(u);
      verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    std::vector<char> on_path(n, 0);
    Cycle path;
    for (VertexId s : verts) {
      std::function<void(VertexId)> extend = [&](VertexId v) {
        for (VertexId w : adj[v]) {
          if (w == s) {
            // Report each cycle once: second vertex smaller than last.
            if (path.size() >= 3 && rank[path[1]] < rank[path.back()]) {
              if (out.size() >= limit) throw BudgetError("simple cycle enumeration exceeded " + std::to_string(limit) + " cycles");
              out.push_back(path);
            }
            continue;
          }
          if (on_path[w] || rank[w] < rank[s]) continue;
          on_path[w] = 1;
          path.push_back(w);
          extend(w);
          path.pop_back();
          on_path[w] = 0;
        }
      };
      path.assign(1, s);
      on_path[s] = 1;
      extend(s);
      on_path[s] = 0;
    }
  }

  auto key = [&](const Cycle& c) {
    std::vector<std::string_view> k;
    for (VertexId v : c) k.push_back(g.label(v));
    return k;
  };
  std::sort(out.begin(), out.end(), [&](const Cycle& a, const Cycle& b) { return key(a) < key(b); });
  return out;
}

bool is_cycle_of(const Graph& g, std::span<const VertexId> c) {
  if (c.size() < 3) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= g.vertex_count()) return false;
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[i] == c[j]) return false;
    if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
  }
  return true;
}

bool is_basic_five_cycle(const Graph& g, std::span<const VertexId> c) {
  if (c.size() != 5 || !is_cycle_of(g, c)) throw StructuralError("not a 5-cycle of the graph");
  for (std::size_t i = 0; i < 5; ++i)
    if (g.degree(c[i]) >= 3 && g.degree(c[(i + 1) % 5]) >= 3) return false;
  return true;
}

int FiveCycle::position_of(VertexId v) const {
  for (int p = 0; p < 5; ++p)
    if (y[static_cast<std::size_t>(p)] == v) return p + 1;
  return 0;
}

ReachableSplit reachable_partition(const Graph& g, const FiveCycle& block) {
  const std::size_t n = g.vertex_count();
  std::vector<char> removed(n, 0);
  for (int p : {3, 4, 5}) removed[block.at(p)] = 1;

  auto reach = [&](VertexId from) {
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v))
        if (!removed[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    return seen;
  };

  const VertexId y1 = block.at(1), y2 = block.at(2);
  auto from1 = reach(y1);
  auto from2 = reach(y2);
  if (from1[y2] || from2[y1]) throw StructuralError("y1 and y2 are connected outside the 5-cycle");

  ReachableSplit split;
  for (VertexId v = 0; v < n; ++v) {
    if (removed[v] || v == y1 || v == y2) continue;
    if (from1[v] && from2[v]) throw StructuralError("reachability sets overlap at '" + g.label(v) + "'");
    if (from1[v]) {
      split.t1.push_back(v);
    } else if (from2[v]) {
      split.t2.push_back(v);
    } else {
      throw StructuralError("vertex '" + g.label(v) + "' is reachable from neither y1 nor y2");
    }
  }
  return split;
}

}  // namespace coverpoly
