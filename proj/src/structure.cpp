#include "coverpoly/structure.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "coverpoly/errors.hpp"

namespace coverpoly {

namespace {

std::string names(const Graph& g, const VertexSet& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += vs[i] < g.vertex_count() ? g.label(vs[i]) : "#" + std::to_string(vs[i]);
  }
  return out + "}";
}

bool on_four_cycle(const Graph& g, VertexId u, VertexId v) {
  for (VertexId a : g.neighbors(u)) {
    if (a == v) continue;
    for (VertexId b : g.neighbors(v))
      if (b != u && b != a && g.adjacent(a, b)) return true;
  }
  return false;
}

}  // namespace

VertexSet free_vertices(const Graph& g, const VertexSet& clique) {
  VertexSet out;
  for (VertexId v : clique) {
    bool inside = true;
    for (VertexId w : g.neighbors(v))
      if (std::find(clique.begin(), clique.end(), w) == clique.end()) inside = false;
    if (inside) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DecompositionCheck verify_decomposition(const Graph& g, const Decomposition& d) {
  DecompositionCheck report;
  auto violation = [&](std::string what) {
    report.ok = false;
    report.violations.push_back(std::move(what));
  };
  const std::size_t n = g.vertex_count();
  std::vector<int> owner(n, 0);
  auto claim = [&](VertexId v) {
    if (v >= n) {
      violation("vertex id " + std::to_string(v) + " is not in the graph");
      return false;
    }
    if (owner[v]++ == 1) violation("vertex " + g.label(v) + " belongs to more than one block");
    return true;
  };

  for (std::size_t i = 0; i < d.cliques.size(); ++i) {
    const auto& c = d.cliques[i];
    const std::string tag = "clique " + std::to_string(i + 1) + " " + names(g, c.vertices);
    bool valid = true;
    for (VertexId v : c.vertices) valid = claim(v) && valid;
    if (c.vertices.size() < 2 || c.vertices.size() > 3) violation(tag + ": size must be 2 or 3");
    if (!valid) continue;
    for (std::size_t a = 0; a < c.vertices.size(); ++a)
      for (std::size_t b = a + 1; b < c.vertices.size(); ++b)
        if (c.vertices[a] == c.vertices[b] || !g.adjacent(c.vertices[a], c.vertices[b]))
          violation(tag + ": does not induce a clique");
    VertexSet declared = c.free_vertices;
    std::sort(declared.begin(), declared.end());
    if (declared != free_vertices(g, c.vertices))
      violation(tag + ": free vertices should be " + names(g, free_vertices(g, c.vertices)));
  }

  for (std::size_t j = 0; j < d.five_cycles.size(); ++j) {
    const auto& fc = d.five_cycles[j];
    const std::string tag = "five-cycle " + std::to_string(j + 1);
    bool valid = true;
    for (VertexId v : fc.y) valid = claim(v) && valid;
    if (!valid) continue;
    auto order = fc.traversal();
    if (!is_cycle_of(g, order)) {
      violation(tag + ": y1,y4,y2,y3,y5 is not a cycle of the graph");
      continue;
    }
    if (!is_basic_five_cycle(g, order)) violation(tag + ": not basic (adjacent vertices of degree >= 3)");
    for (int p : {3, 4, 5})
      if (g.degree(fc.at(p)) != 2) violation(tag + ": y" + std::to_string(p) + " must have degree 2");
  }

  for (std::size_t l = 0; l < d.four_cycle_edges.size(); ++l) {
    auto [u, v] = d.four_cycle_edges[l];
    const std::string tag = "four-cycle edge " + std::to_string(l + 1);
    bool valid = claim(u);
    valid = claim(v) && valid;
    if (!valid) continue;
    if (u == v || !g.adjacent(u, v)) {
      violation(tag + ": not an edge");
      continue;
    }
    if (g.degree(u) != 2 || g.degree(v) != 2) violation(tag + ": endpoints must have degree 2");
    if (!on_four_cycle(g, u, v)) violation(tag + ": does not lie on a 4-cycle");
  }

  VertexSet missing;
  for (VertexId v = 0; v < n; ++v)
    if (owner[v] == 0) missing.push_back(v);
  if (!missing.empty()) violation("union of blocks is not V(G): missing " + names(g, missing));
  return report;
}

FiveCycle label_five_cycle(const Graph& g, std::span<const VertexId> cycle) {
  if (cycle.size() != 5 || !is_cycle_of(g, cycle)) throw StructuralError("not a 5-cycle of the graph");
  std::optional<FiveCycle> best;
  for (std::size_t start = 0; start < 5; ++start) {
    for (int dir : {1, -1}) {
      // Traversal t0..t4 is read as y1, y4, y2, y3, y5.
      std::array<VertexId, 5> t{};
      for (std::size_t i = 0; i < 5; ++i) t[i] = cycle[(start + 5 + dir * static_cast<int>(i)) % 5];
      FiveCycle fc{{t[0], t[2], t[3], t[1], t[4]}};
      if (g.degree(fc.at(3)) != 2 || g.degree(fc.at(4)) != 2 || g.degree(fc.at(5)) != 2) continue;
      if (!best || std::pair(g.label(fc.at(1)), g.label(fc.at(2))) < std::pair(g.label(best->at(1)), g.label(best->at(2))))
        best = fc;
    }
  }
  if (!best) throw StructuralError("5-cycle admits no labelling with y3, y4, y5 of degree 2");
  return *best;
}

std::optional<Decomposition> find_decomposition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kDecompositionVertexBudget)
    throw BudgetError("decomposition search limited to " + std::to_string(kDecompositionVertexBudget) + " vertices");
  if (n == 0) return std::nullopt;

  enum class Kind { five_cycle, four_edge, clique };
  struct Candidate {
    Kind kind;
    VertexSet vertices;  // sorted by id
    FiveCycle cycle;
    Edge edge;
  };
  auto label_key = [&](VertexSet vs) {
    std::vector<std::string> k;
    for (VertexId v : vs) k.push_back(g.label(v));
    std::sort(k.begin(), k.end());
    return k;
  };
  auto sorted = [](VertexSet vs) {
    std::sort(vs.begin(), vs.end());
    return vs;
  };

  std::vector<Candidate> cands;
  {
    std::vector<Candidate> fives;
    for (const auto& c : simple_cycles(g)) {
      if (c.size() != 5 || !is_basic_five_cycle(g, c)) continue;
      fives.push_back({Kind::five_cycle, sorted(c), label_five_cycle(g, c), {}});
    }
    std::vector<Candidate> fours, cliques;
    for (auto [u, v] : g.edges()) {
      Edge e = g.label_less(u, v) ? Edge{u, v} : Edge{v, u};
      if (g.degree(u) == 2 && g.degree(v) == 2 && on_four_cycle(g, u, v))
        fours.push_back({Kind::four_edge, sorted({u, v}), {}, e});
      cliques.push_back({Kind::clique, sorted({u, v}), {}, {}});
      for (VertexId w : g.neighbors(u))
        if (w > v && g.adjacent(v, w)) cliques.push_back({Kind::clique, sorted({u, v, w}), {}, {}});
    }
    auto by_labels = [&](const Candidate& a, const Candidate& b) { return label_key(a.vertices) < label_key(b.vertices); };
    std::sort(fives.begin(), fives.end(), by_labels);
    std::sort(fours.begin(), fours.end(), by_labels);
    std::sort(cliques.begin(), cliques.end(), by_labels);
    for (auto* group : {&fives, &fours, &cliques}) cands.insert(cands.end(), group->begin(), group->end());
  }

  std::vector<std::vector<std::size_t>> containing(n);
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (VertexId v : cands[i].vertices) containing[v].push_back(i);

  const auto label_order = g.by_label();
  std::vector<char> covered(n, 0);
  std::vector<std::size_t> chosen;
  std::function<bool()> solve = [&]() {
    auto next = std::find_if(label_order.begin(), label_order.end(), [&](VertexId v) { return !covered[v]; });
    if (next == label_order.end()) return true;
    for (std::size_t ci : containing[*next]) {
      const auto& c = cands[ci];
      if (std::any_of(c.vertices.begin(), c.vertices.end(), [&](VertexId v) { return covered[v]; })) continue;
      for (VertexId v : c.vertices) covered[v] = 1;
      chosen.push_back(ci);
      if (solve()) return true;
      chosen.pop_back();
      for (VertexId v : c.vertices) covered[v] = 0;
    }
    return false;
  };
  if (!solve()) return std::nullopt;

  std::sort(chosen.begin(), chosen.end());
  Decomposition d;
  for (std::size_t ci : chosen) {
    const auto& c = cands[ci];
    switch (c.kind) {
      case Kind::five_cycle: d.five_cycles.push_back(c.cycle); break;
      case Kind::four_edge: d.four_cycle_edges.push_back(c.edge); break;
      case Kind::clique: d.cliques.push_back({c.vertices, free_vertices(g, c.vertices)}); break;
    }
  }
  return d;
}

VariableOrder variable_order(const Graph& g, const Decomposition& d) {
  std::vector<Var> order;
  auto by_label = [&](VertexSet vs) {
    std::sort(vs.begin(), vs.end(), [&](VertexId a, VertexId b) { return g.label_less(a, b); });
    return vs;
  };
  for (const auto& c : d.cliques) {
    VertexSet non_free, free;
    for (VertexId v : c.vertices)
      (std::find(c.free_vertices.begin(), c.free_vertices.end(), v) != c.free_vertices.end() ? free : non_free)
          .push_back(v);
    for (VertexId v : by_label(non_free)) order.push_back(v);
    for (VertexId v : by_label(free)) order.push_back(v);
  }
  for (const auto& fc : d.five_cycles) order.insert(order.end(), fc.y.begin(), fc.y.end());
  for (auto [a, b] : d.four_cycle_edges) {
    order.push_back(a);
    order.push_back(b);
  }
  if (order.size() != g.vertex_count()) throw StructuralError("decomposition does not cover every vertex exactly once");
  try {
    return VariableOrder(std::move(order));
  } catch (const std::invalid_argument&) {
    throw StructuralError("decomposition does not cover every vertex exactly once");
  }
}

// ---------------------------------------------------------------------------

GeneratedInstance random_decomposed_graph(std::uint64_t seed, const GeneratorLimits& limits) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };

  enum class Kind { clique, five_cycle, four_cycle };
  std::vector<Kind> kinds;
  for (std::size_t i = uniform(0, limits.max_cliques); i > 0; --i) kinds.push_back(Kind::clique);
  for (std::size_t i = uniform(0, limits.max_five_cycles); i > 0; --i) kinds.push_back(Kind::five_cycle);
  for (std::size_t i = uniform(0, limits.max_four_cycles); i > 0; --i) kinds.push_back(Kind::four_cycle);
  if (kinds.empty()) {
    std::vector<Kind> allowed;
    if (limits.max_cliques) allowed.push_back(Kind::clique);
    if (limits.max_five_cycles) allowed.push_back(Kind::five_cycle);
    if (limits.max_four_cycles) allowed.push_back(Kind::four_cycle);
    if (allowed.empty()) allowed.push_back(Kind::clique);
    kinds.push_back(allowed[uniform(0, allowed.size() - 1)]);
  }
  std::shuffle(kinds.begin(), kinds.end(), rng);

  GeneratedInstance out;
  Graph& g = out.graph;
  std::vector<VertexSet> attach;  // per part: vertices bridges may use
  std::vector<VertexSet> clique_parts;
  std::size_t n_clique = 0, n_five = 0, n_four = 0;
  auto tag = [](char prefix, std::size_t block, std::size_t pos) {
    return std::string(1, prefix) + std::to_string(block) + "_" + std::to_string(pos);
  };

  for (Kind kind : kinds) {
    const std::size_t size = kind == Kind::clique ? uniform(2, 3) : kind == Kind::five_cycle ? 5 : 6;
    if (!attach.empty() && g.vertex_count() + size > limits.max_vertices) continue;
    VertexSet part_attach;
    switch (kind) {
      case Kind::clique: {
        ++n_clique;
        VertexSet vs;
        for (std::size_t p = 1; p <= size; ++p) vs.push_back(g.add_vertex(tag('x', n_clique, p)));
        for (std::size_t a = 0; a < vs.size(); ++a)
          for (std::size_t b = a + 1; b < vs.size(); ++b) g.add_edge(vs[a], vs[b]);
        clique_parts.push_back(vs);
        // The last vertex never receives a bridge, so it stays free.
        part_attach.assign(vs.begin(), vs.end() - 1);
        break;
      }
      case Kind::five_cycle: {
        ++n_five;
        FiveCycle fc;
        for (int p = 1; p <= 5; ++p) fc.y[static_cast<std::size_t>(p - 1)] = g.add_vertex(tag('y', n_five, p));
        auto t = fc.traversal();
        for (std::size_t i = 0; i < 5; ++i) g.add_edge(t[i], t[(i + 1) % 5]);
        out.decomposition.five_cycles.push_back(fc);
        part_attach = {fc.at(1), fc.at(2)};
        break;
      }
      case Kind::four_cycle: {
        // 4-cycle u1-u2-z2-z1 with whiskers w1, w2 on u1, u2: cliques
        // {u1,w1}, {u2,w2} and the degree-2 edge {z1,z2}.
        ++n_four;
        VertexId u1 = g.add_vertex(tag('u', n_four, 1)), u2 = g.add_vertex(tag('u', n_four, 2));
        VertexId z1 = g.add_vertex(tag('z', n_four, 1)), z2 = g.add_vertex(tag('z', n_four, 2));
        VertexId w1 = g.add_vertex(tag('w', n_four, 1)), w2 = g.add_vertex(tag('w', n_four, 2));
        g.add_edge(u1, u2);
        g.add_edge(u2, z2);
        g.add_edge(z2, z1);
        g.add_edge(z1, u1);
        g.add_edge(u1, w1);
        g.add_edge(u2, w2);
        clique_parts.push_back({u1, w1});
        clique_parts.push_back({u2, w2});
        out.decomposition.four_cycle_edges.emplace_back(z1, z2);
        part_attach = {u1, u2};
        break;
      }
    }
    if (!attach.empty()) {
      const auto& other = attach[uniform(0, attach.size() - 1)];
      g.add_edge(part_attach[uniform(0, part_attach.size() - 1)], other[uniform(0, other.size() - 1)]);
    }
    attach.push_back(std::move(part_attach));
  }

  for (auto& vs : clique_parts) {
    std::sort(vs.begin(), vs.end());
    out.decomposition.cliques.push_back({vs, free_vertices(g, vs)});
  }
  return out;
}

}  // namespace coverpoly
