#pragma once

// Independent brute-force oracles and fixture helpers shared by the test
// binaries. Nothing here calls into the library code paths it checks.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coverpoly/graph.hpp"
#include "coverpoly/monomial.hpp"

namespace coverpoly::testing {

inline std::string fixture(const std::string& name) { return std::string(COVERPOLY_FIXTURES) + "/" + name; }

inline std::vector<std::pair<std::string, Graph>> load_graph_collection(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::pair<std::string, std::string>> texts;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("==", 0) == 0) {
      texts.emplace_back(line.substr(3), "");
    } else if (!texts.empty()) {
      texts.back().second += line + "\n";
    }
  }
  std::vector<std::pair<std::string, Graph>> out;
  for (auto& [name, text] : texts) out.emplace_back(name, parse_edge_list(text));
  return out;
}

/// Graph on vertices v0..v{n-1} whose edges are the set bits of `mask` over
/// the pairs (i, j), i < j, in row order.
inline Graph graph_from_mask(int n, std::uint32_t mask) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1u) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return g;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return g;
}

/// Minimal vertex covers by testing all 2^n subsets.
inline std::vector<VertexSet> covers_by_subsets(const Graph& g) {
  const auto n = g.vertex_count();
  const auto edges = g.edges();
  auto covers = [&](std::uint64_t s) {
    return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return (s >> e.first & 1) || (s >> e.second & 1); });
  };
  std::vector<VertexSet> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!covers(s)) continue;
    bool minimal = true;
    for (std::size_t v = 0; v < n && minimal; ++v)
      if ((s >> v & 1) && covers(s & ~(std::uint64_t{1} << v))) minimal = false;
    if (!minimal) continue;
    VertexSet c;
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1) c.push_back(v);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Simple cycles as sorted edge sets, by trying every cyclic arrangement of
/// every vertex subset (fine up to 7 vertices).
inline std::set<std::vector<Edge>> cycles_by_arrangement(const Graph& g) {
  const auto n = g.vertex_count();
  std::set<std::vector<Edge>> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::vector<VertexId> vs;
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1) vs.push_back(v);
    if (vs.size() < 3) continue;
    // Fix vs[0] first and permute the rest.
    std::vector<VertexId> rest(vs.begin() + 1, vs.end());
    do {
      std::vector<VertexId> cyc{vs[0]};
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      bool ok = true;
      std::vector<Edge> es;
      for (std::size_t i = 0; i < cyc.size() && ok; ++i) {
        VertexId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        ok = g.adjacent(a, b);
        es.emplace_back(std::min(a, b), std::max(a, b));
      }
      if (ok) {
        std::sort(es.begin(), es.end());
        out.insert(es);
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

/// Every product g_i * g_j, i <= j, then a pairwise divisibility filter.
inline std::vector<Monomial> pairwise_products_minimized(const std::vector<Monomial>& gens) {
  std::vector<Monomial> prods;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) prods.push_back(gens[i] * gens[j]);
  std::sort(prods.begin(), prods.end());
  prods.erase(std::unique(prods.begin(), prods.end()), prods.end());
  std::vector<Monomial> out;
  for (const auto& m : prods) {
    bool keep = true;
    for (const auto& other : prods) {
      if (other == m) continue;
      bool divides = true;
      for (std::size_t v = 0; v < m.nvars(); ++v)
        if (other[v] > m[v]) divides = false;
      if (divides) keep = false;
    }
    if (keep) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Monomial> sorted(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace coverpoly::testing
