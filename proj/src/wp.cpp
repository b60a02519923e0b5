#include "coverpoly/wp.hpp"

#include <algorithm>
#include <limits>

#include "coverpoly/errors.hpp"

namespace coverpoly {

std::optional<DivergencePoint> first_divergence(const Monomial& f, const Monomial& g, const VariableOrder& order) {
  for (Var v : order.greatest_first()) {
    if (f[v] == g[v]) continue;
    if (f[v] < g[v]) return std::nullopt;
    return DivergencePoint{v, f, g};
  }
  return std::nullopt;
}

std::optional<Monomial> exchange(const Monomial& g, Var z, Var w) {
  if (z == w) return g;
  if (g[w] == 0) return std::nullopt;
  Monomial m = g;
  m[z] += 1;
  m[w] -= 1;
  return m;
}

std::optional<Var> exchange_variable(const GeneratorIndex& ideal, const Monomial& g, Var z, const VariableOrder& order) {
  for (std::size_t r = order.rank(z) + 1; r < order.size(); ++r) {
    Var w = order.at(r);
    if (g[w] == 0) continue;
    if (ideal.contains(*exchange(g, z, w))) return w;
  }
  return std::nullopt;
}

WpResult wp_check(const MonomialIdeal& ideal, const VariableOrder& order) {
  const auto& gens = ideal.generators();
  const std::size_t n = gens.size();
  const std::size_t nv = order.size();
  if (ideal.ring().size() != nv) throw std::invalid_argument("variable order size does not match ring");

  // Exponent rows in rank order so divergence is a linear scan.
  std::vector<Exponent> rows(n * nv);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < nv; ++r) rows[i * nv + r] = gens[i][order.at(r)];

  // Rank of the divergence point of (f, g), or nv when there is none.
  auto divergence_rank = [&](std::size_t fi, std::size_t gi) {
    const Exponent* f = &rows[fi * nv];
    const Exponent* g = &rows[gi * nv];
    for (std::size_t r = 0; r < nv; ++r)
      if (f[r] != g[r]) return f[r] > g[r] ? r : nv;
    return nv;
  };

  const auto sn = static_cast<std::ptrdiff_t>(n);
  std::vector<char> needed(n * nv, 0);
  std::size_t divergent = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : divergent)
  for (std::ptrdiff_t gi = 0; gi < sn; ++gi)
    for (std::size_t fi = 0; fi < n; ++fi) {
      if (fi == static_cast<std::size_t>(gi)) continue;
      auto r = divergence_rank(fi, gi);
      if (r < nv) {
        needed[gi * nv + r] = 1;
        ++divergent;
      }
    }

  const GeneratorIndex index(gens);
  std::vector<char> has_witness(n * nv, 1);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t gi = 0; gi < sn; ++gi)
    for (std::size_t r = 0; r < nv; ++r)
      if (needed[gi * nv + r]) has_witness[gi * nv + r] = exchange_variable(index, gens[gi], order.at(r), order).has_value();

  std::size_t first_fail = std::numeric_limits<std::size_t>::max();
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first_fail)
  for (std::ptrdiff_t fi = 0; fi < sn; ++fi)
    for (std::size_t gi = 0; gi < n; ++gi) {
      if (static_cast<std::size_t>(fi) == gi) continue;
      auto r = divergence_rank(fi, gi);
      if (r < nv && !has_witness[gi * nv + r]) {
        first_fail = std::min(first_fail, static_cast<std::size_t>(fi) * n + gi);
        break;
      }
    }

  WpResult result;
  result.pairs = n * (n > 0 ? n - 1 : 0);
  result.divergent_pairs = divergent;
  if (first_fail != std::numeric_limits<std::size_t>::max()) {
    const std::size_t fi = first_fail / n, gi = first_fail % n;
    result.counterexample = WpCounterexample{fi, gi, order.at(divergence_rank(fi, gi))};
  }
  return result;
}

std::string_view to_string(WitnessMethod m) {
  switch (m) {
    case WitnessMethod::constructive_y3: return "constructive-case-y3";
    case WitnessMethod::constructive_y4: return "constructive-case-y4";
    case WitnessMethod::brute_force: return "brute-force";
  }
  return "unknown";
}

std::optional<WitnessReport> witness_bruteforce(const DivergencePoint& point, const MonomialIdeal& base, unsigned k,
                                                const VariableOrder& order) {
  for (std::size_t r = order.rank(point.z) + 1; r < order.size(); ++r) {
    const Var w = order.at(r);
    auto target = exchange(point.g, point.z, w);
    if (!target) continue;
    if (auto cert = membership(base, k, *target))
      return WitnessReport{point, w, std::move(*cert), WitnessMethod::brute_force, {}};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Triple t) {
  static constexpr std::array<std::string_view, 5> names{"123", "125", "134", "245", "345"};
  return names.at(t);
}

bool triple_contains(Triple t, int position) {
  const auto& ps = kTriplePositions[t];
  return std::find(ps.begin(), ps.end(), position) != ps.end();
}

Triple triple_of(const Monomial& m, const FiveCycle& block) {
  std::optional<Triple> found;
  for (std::size_t t = 0; t < 5; ++t) {
    const auto& ps = kTriplePositions[t];
    if (std::all_of(ps.begin(), ps.end(), [&](int p) { return m[block.at(p)] > 0; })) {
      if (found) throw StructuralError("factor support contains more than one cover triple of the 5-cycle");
      found = static_cast<Triple>(t);
    }
  }
  if (!found) throw StructuralError("factor support contains no cover triple of the 5-cycle");
  return *found;
}

unsigned TripleCounts::total() const {
  unsigned s = 0;
  for (unsigned c : n) s += c;
  return s;
}

unsigned TripleCounts::at_position(int p) const {
  unsigned s = 0;
  for (std::size_t t = 0; t < 5; ++t)
    if (triple_contains(static_cast<Triple>(t), p)) s += n[t];
  return s;
}

TripleCounts triple_counts(const Factorization& fact, const FiveCycle& block) {
  TripleCounts c;
  for (const auto& factor : fact.factors) ++c.n[triple_of(factor, block)];
  return c;
}

bool IdentityReport::all_hold() const { return violations() == 0; }

std::size_t IdentityReport::applicable() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](auto r) { return r.has_value(); }));
}

std::size_t IdentityReport::violations() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](auto r) { return r.has_value() && !*r; }));
}

IdentityHypotheses hypotheses_for_divergence(int position) {
  IdentityHypotheses h;
  for (int p = 1; p < position; ++p) h.equal_at.set(static_cast<std::size_t>(p));
  h.strict_at = position;
  return h;
}

IdentityReport count_identities_check(const TripleCounts& f, const TripleCounts& g, const IdentityHypotheses& hyp) {
  IdentityReport rep;
  auto eq = [&](int p) { return hyp.equal_at.test(static_cast<std::size_t>(p)); };

  for (int p = 1; p <= 4; ++p) {
    auto& slot = rep.results[static_cast<std::size_t>(p - 1)];
    if (eq(p)) {
      slot = f.at_position(p) == g.at_position(p);
    } else if (hyp.strict_at == p) {
      slot = f.at_position(p) > g.at_position(p);
    }
  }
  rep.results[4] = f.total() == g.total();
  if (eq(1)) rep.results[5] = f[t245] + f[t345] == g[t245] + g[t345];
  if (eq(2)) rep.results[6] = f[t134] + f[t345] == g[t134] + g[t345];
  if (eq(3)) rep.results[7] = f[t245] + f[t125] == g[t245] + g[t125];

  if (hyp.strict_at == 3 && eq(1) && eq(2) && g[t125] == 0) {
    rep.results[8] = f[t345] > f[t125] + g[t345] && f[t134] < g[t134] && f[t245] < g[t245];
  } else if (hyp.strict_at == 4 && eq(1) && eq(2) && eq(3)) {
    rep.results[8] = f[t245] > g[t245] && f[t345] < g[t345] && f[t125] < g[t125];
  }
  return rep;
}

// ---------------------------------------------------------------------------

CoverContext CoverContext::build(Graph g, Decomposition d) {
  auto check = verify_decomposition(g, d);
  if (!check.ok) {
    std::string msg = "invalid decomposition:";
    for (const auto& v : check.violations) msg += " " + v + ";";
    throw StructuralError(msg);
  }
  CoverContext ctx;
  ctx.order = variable_order(g, d);
  ctx.base = cover_ideal(g).with_order(ctx.order);
  for (const auto& fc : d.five_cycles) ctx.splits.push_back(reachable_partition(g, fc));
  ctx.graph = std::move(g);
  ctx.decomposition = std::move(d);
  return ctx;
}

std::optional<CoverContext::Location> CoverContext::locate(Var v) const {
  for (std::size_t b = 0; b < decomposition.five_cycles.size(); ++b)
    if (int p = decomposition.five_cycles[b].position_of(v)) return Location{b, p};
  return std::nullopt;
}

bool is_vertex_cover(const Graph& g, const Monomial& m) {
  for (auto [u, v] : g.edges())
    if (m[u] == 0 && m[v] == 0) return false;
  return true;
}

namespace {

struct Residual {
  Monomial part1;  // on T1
  Monomial part2;  // on T2
};

// Splits factor / (its block triple) over the reachability sets.
Residual split_residual(const Monomial& factor, Triple t, const FiveCycle& block, const ReachableSplit& split) {
  std::vector<Var> triple;
  for (int p : kTriplePositions[t]) triple.push_back(block.at(p));
  Monomial rest = factor / Monomial::squarefree(factor.nvars(), triple);
  Residual r{Monomial(factor.nvars()), Monomial(factor.nvars())};
  for (Var v : split.t1) r.part1[v] = rest[v];
  for (Var v : split.t2) r.part2[v] = rest[v];
  if (r.part1 * r.part2 != rest) throw StructuralError("factor residual lies outside T1 and T2");
  return r;
}

Monomial block_monomial(const FiveCycle& block, std::size_t nvars, std::initializer_list<int> positions) {
  std::vector<Var> vs;
  for (int p : positions) vs.push_back(block.at(p));
  return Monomial::squarefree(nvars, vs);
}

std::optional<std::size_t> first_with(const std::vector<Triple>& triples, Triple t) {
  auto it = std::find(triples.begin(), triples.end(), t);
  if (it == triples.end()) return std::nullopt;
  return static_cast<std::size_t>(it - triples.begin());
}

}  // namespace

WitnessReport constructive_witness(const Factorization& f_fact, const Factorization& g_fact, const DivergencePoint& point,
                                   const CoverContext& ctx) {
  auto loc = ctx.locate(point.z);
  if (!loc || (loc->position != 3 && loc->position != 4))
    throw std::invalid_argument("constructive witness needs a divergence at y3 or y4 of a 5-cycle block");
  if (f_fact.product() != point.f || g_fact.product() != point.g)
    throw std::invalid_argument("factorizations do not multiply to the divergence pair");
  if (f_fact.factors.size() != g_fact.factors.size()) throw std::invalid_argument("factorizations of different length");

  const FiveCycle& block = ctx.decomposition.five_cycles[loc->block];
  const ReachableSplit& split = ctx.splits[loc->block];
  const std::size_t nv = ctx.graph.vertex_count();
  const auto k = static_cast<unsigned>(g_fact.factors.size());

  std::vector<Triple> g_triples;
  for (const auto& factor : g_fact.factors) g_triples.push_back(triple_of(factor, block));

  WitnessReport report{point, 0, g_fact, WitnessMethod::constructive_y3, {}};
  auto& factors = report.certificate.factors;

  auto swap = [&](std::size_t p, Triple tp, std::size_t q, Triple tq, std::initializer_list<int> first,
                  std::initializer_list<int> second) {
    auto rp = split_residual(factors[p], tp, block, split);
    auto rq = split_residual(factors[q], tq, block, split);
    factors[p] = block_monomial(block, nv, first) * rp.part1 * rq.part2;
    factors[q] = block_monomial(block, nv, second) * rq.part1 * rp.part2;
    report.exchanged_factors = {factors[p], factors[q]};
  };

  if (loc->position == 3) {
    if (auto s = first_with(g_triples, t125)) {
      report.w = block.at(5);
      Monomial& gs = factors[*s];
      gs[block.at(5)] -= 1;
      gs[block.at(3)] += 1;
      report.exchanged_factors = {gs};
    } else {
      auto p = first_with(g_triples, t245);
      auto q = first_with(g_triples, t134);
      if (!p || !q) throw StructuralError("divergence at y3 with g125 = 0 but no factors over {2,4,5} and {1,3,4}");
      report.w = block.at(4);
      // y3 g_p g_q / y4 = (y3y4y5 u1 v2)(y1y2y3 v1 u2)
      swap(*p, t245, *q, t134, {3, 4, 5}, {1, 2, 3});
    }
  } else {
    report.method = WitnessMethod::constructive_y4;
    auto p = first_with(g_triples, t345);
    auto q = first_with(g_triples, t125);
    if (!p || !q) throw StructuralError("divergence at y4 but no factors over {3,4,5} and {1,2,5}");
    report.w = block.at(5);
    // y4 g_p g_q / y5 = (y2y4y5 u1 v2)(y1y3y4 v1 u2)
    swap(*p, t345, *q, t125, {2, 4, 5}, {1, 3, 4});
  }

  // Reduce each factor to a minimal cover it contains.
  const GeneratorIndex covers(ctx.base.generators());
  for (auto& factor : factors) {
    const Monomial* cover = covers.find_divisor(factor);
    if (!cover) throw StructuralError("exchanged factor is not a vertex cover");
    report.certificate.cofactor *= factor / *cover;
    factor = *cover;
  }

  const auto target = exchange(point.g, point.z, report.w);
  if (!target || report.certificate.product() != *target)
    throw StructuralError("constructive certificate does not multiply to z*g/w");
  if (!membership(ctx.base, k, *target)) throw StructuralError("constructive certificate target is not in J^k");
  return report;
}

// ---------------------------------------------------------------------------

bool has_linear_quotients(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  for (std::size_t i = 1; i < gens.size(); ++i) {
    std::vector<Monomial> colon;
    colon.reserve(i);
    for (std::size_t j = 0; j < i; ++j) {
      Monomial q(gens[i].nvars());
      for (Var v = 0; v < q.nvars(); ++v) q[v] = gens[j][v] > gens[i][v] ? gens[j][v] - gens[i][v] : 0;
      colon.push_back(std::move(q));
    }
    for (const auto& m : minimalize(std::move(colon)))
      if (m.degree() != 1) return false;
  }
  return true;
}

}  // namespace coverpoly
