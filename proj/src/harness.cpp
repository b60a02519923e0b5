#include "coverpoly/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "coverpoly/errors.hpp"

namespace coverpoly {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct CachedWitness {
  bool ok = false;
  std::optional<WitnessReport> report;
  std::string error;
};

// Cover-ideal audit of one power: WP, the 5-cycle triple machinery and the
// constructive/brute-force agreement on every divergent pair.
PowerAudit audit_power(const CoverContext& ctx, unsigned k, const RunConfig& cfg, std::vector<std::string>& findings) {
  PowerAudit audit;
  audit.k = k;
  const Ring& ring = ctx.base.ring();
  const auto& order = ctx.order;
  const auto& blocks = ctx.decomposition.five_cycles;
  const std::string tag = "k=" + std::to_string(k) + ": ";

  auto t0 = Clock::now();
  const MonomialIdeal power = ideal_power(ctx.base, k);
  audit.power_ms = elapsed_ms(t0);
  const auto& gens = power.generators();
  const std::size_t n = gens.size();
  const std::size_t nv = order.size();
  audit.generators = n;

  t0 = Clock::now();
  audit.wp = wp_check(power, order);
  audit.wp_ms = elapsed_ms(t0);
  if (auto ce = audit.wp.counterexample) {
    audit.counterexample = std::array<std::string, 3>{format_monomial(ring, gens[ce->f_index]),
                                                      format_monomial(ring, gens[ce->g_index]), ring.name(ce->z)};
    findings.push_back(tag + "not weakly polymatroidal: f=" + (*audit.counterexample)[0] +
                       " g=" + (*audit.counterexample)[1] + " z=" + (*audit.counterexample)[2]);
  }

  t0 = Clock::now();
  for (const auto& m : gens)
    for (const auto& b : blocks) {
      Exponent s = 0;
      for (VertexId v : b.y) s += m[v];
      if (s != 3 * k) ++audit.degree_sum_violations;
    }

  // Factorizations and their triple counts, per generator and block.
  std::vector<std::vector<Factorization>> facts(n);
  std::vector<std::vector<std::vector<TripleCounts>>> counts(n);
  auto ensure = [&](std::size_t i) {
    if (!facts[i].empty()) return;
    facts[i] = all_factorizations(ctx.base, k, gens[i], std::max<std::size_t>(1, cfg.factorization_budget));
    if (facts[i].empty()) throw StructuralError("minimal generator of J^k without a factorization");
    counts[i].resize(blocks.size());
    for (const auto& f : facts[i]) {
      if (!f.cofactor.is_one()) ++audit.inexact_factorizations;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        auto c = triple_counts(f, blocks[b]);
        auto& list = counts[i][b];
        if (std::find(list.begin(), list.end(), c) == list.end()) list.push_back(c);
      }
    }
  };

  std::vector<Exponent> rows(n * nv);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < nv; ++r) rows[i * nv + r] = gens[i][order.at(r)];

  std::map<std::pair<std::size_t, Var>, CachedWitness> constructive, brute;
  const GeneratorIndex power_index(gens);

  for (std::size_t fi = 0; fi < n; ++fi) {
    for (std::size_t gi = 0; gi < n; ++gi) {
      if (fi == gi) continue;
      std::size_t r = 0;
      while (r < nv && rows[fi * nv + r] == rows[gi * nv + r]) ++r;
      if (r == nv || rows[fi * nv + r] < rows[gi * nv + r]) continue;
      const Var z = order.at(r);
      const auto loc = ctx.locate(z);
      const bool listed = audit.witnesses.size() < cfg.witness_cap;
      if (!listed) audit.witnesses_truncated = true;
      if (!loc && !listed) continue;

      const DivergencePoint dp{z, gens[fi], gens[gi]};
      std::optional<WitnessReport> shown;

      if (loc) {
        const int pos = loc->position;
        if (pos == 5) ++audit.y5_divergences;
        ensure(fi);
        ensure(gi);
        const auto hyp = hypotheses_for_divergence(pos);
        for (const auto& fc : counts[fi][loc->block])
          for (const auto& gc : counts[gi][loc->block]) {
            auto rep = count_identities_check(fc, gc, hyp);
            ++audit.identity_checks;
            if (rep.results[8].has_value()) ++(pos == 3 ? audit.y3_deductions : audit.y4_deductions);
            for (std::size_t i = 0; i < kIdentityCount; ++i)
              if (rep.results[i].has_value() && !*rep.results[i]) ++audit.identity_violations[i];
          }

        if (pos == 3 || pos == 4) {
          ++audit.constructive_pairs;
          const auto key = std::pair{gi, z};
          auto [cit, fresh] = constructive.try_emplace(key);
          if (fresh) {
            try {
              cit->second.report = constructive_witness(facts[fi].front(), facts[gi].front(), dp, ctx);
              cit->second.ok = true;
            } catch (const StructuralError& e) {
              cit->second.error = e.what();
            }
          }
          auto [bit, bfresh] = brute.try_emplace(key);
          if (bfresh) {
            bit->second.report = witness_bruteforce(dp, ctx.base, k, order);
            bit->second.ok = bit->second.report.has_value();
          }
          if (!cit->second.ok) {
            ++audit.constructive_failures;
            if (fresh)
              findings.push_back(tag + "constructive witness failed for g=" + format_monomial(ring, gens[gi]) +
                                 " z=" + ring.name(z) + ": " + cit->second.error);
          }
          if (!bit->second.ok) {
            ++audit.bruteforce_failures;
            if (bfresh)
              findings.push_back(tag + "no brute-force witness for g=" + format_monomial(ring, gens[gi]) + " z=" + ring.name(z));
          }
          if (listed) shown = cit->second.ok ? cit->second.report : bit->second.report;
        }
      }

      if (!listed) continue;
      if (!shown) {
        if (exchange_variable(power_index, gens[gi], z, order)) {
          auto [bit, bfresh] = brute.try_emplace(std::pair{gi, z});
          if (bfresh) {
            bit->second.report = witness_bruteforce(dp, ctx.base, k, order);
            bit->second.ok = bit->second.report.has_value();
          }
          shown = bit->second.report;
        }
      }
      Json entry{{"f", format_monomial(ring, gens[fi])}, {"g", format_monomial(ring, gens[gi])}};
      if (shown) {
        shown->point = dp;
        entry["witness"] = witness_to_json(ring, *shown);
      } else {
        entry["witness"] = nullptr;
      }
      audit.witnesses.push_back(std::move(entry));
    }
  }

  if (audit.wp.ok() && n <= cfg.linear_quotient_cap) {
    audit.linear_quotients = has_linear_quotients(power);
    if (!*audit.linear_quotients) findings.push_back(tag + "weakly polymatroidal but lex order has no linear quotients");
  }
  audit.audit_ms = elapsed_ms(t0);

  if (audit.identity_violation_total() > 0)
    findings.push_back(tag + std::to_string(audit.identity_violation_total()) + " count-identity violations");
  if (audit.y5_divergences > 0) findings.push_back(tag + std::to_string(audit.y5_divergences) + " divergences at y5");
  if (audit.degree_sum_violations > 0)
    findings.push_back(tag + std::to_string(audit.degree_sum_violations) + " 5-cycle degree sums differ from 3k");
  if (audit.inexact_factorizations > 0)
    findings.push_back(tag + std::to_string(audit.inexact_factorizations) + " generator factorizations with a cofactor");
  return audit;
}

// Plain WP check for graphs without a decomposition: no 5-cycle audit.
PowerAudit plain_power(const MonomialIdeal& base, const VariableOrder& order, unsigned k, std::vector<std::string>& findings) {
  PowerAudit audit;
  audit.k = k;
  auto t0 = Clock::now();
  const MonomialIdeal power = ideal_power(base, k);
  audit.power_ms = elapsed_ms(t0);
  audit.generators = power.size();
  t0 = Clock::now();
  audit.wp = wp_check(power, order);
  audit.wp_ms = elapsed_ms(t0);
  if (auto ce = audit.wp.counterexample) {
    const Ring& ring = base.ring();
    audit.counterexample = std::array<std::string, 3>{format_monomial(ring, power.generators()[ce->f_index]),
                                                      format_monomial(ring, power.generators()[ce->g_index]),
                                                      ring.name(ce->z)};
    findings.push_back("k=" + std::to_string(k) + ": not weakly polymatroidal: f=" + (*audit.counterexample)[0] +
                       " g=" + (*audit.counterexample)[1] + " z=" + (*audit.counterexample)[2]);
  }
  return audit;
}

Json config_json(const RunConfig& cfg) {
  Json c{{"k", {cfg.k.lo, cfg.k.hi}}, {"strict", cfg.strict}, {"require_cactus", cfg.require_cactus}};
  if (cfg.command == "fuzz") {
    c["seed"] = cfg.seed;
    c["instances"] = cfg.instances;
    c["limits"] = {{"cliques", cfg.limits.max_cliques},
                   {"five_cycles", cfg.limits.max_five_cycles},
                   {"four_cycles", cfg.limits.max_four_cycles},
                   {"vertices", cfg.limits.max_vertices}};
  }
  if (!cfg.graph_path.empty()) c["graph"] = cfg.graph_path;
  c["order"] = cfg.order_path.empty() ? "auto" : cfg.order_path;
  return c;
}

}  // namespace

KRange parse_k_range(const std::string& text, unsigned max_k) {
  auto number = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 3)
      throw InputError("bad k range '" + text + "'");
    return static_cast<unsigned>(std::stoul(s));
  };
  KRange r;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    r.lo = number(text.substr(0, dots));
    r.hi = number(text.substr(dots + 2));
  } else {
    r.lo = r.hi = number(text);
  }
  if (r.lo < 1 || r.lo > r.hi || r.hi > max_k)
    throw InputError("k range must satisfy 1 <= lo <= hi <= " + std::to_string(max_k) + ", got '" + text + "'");
  return r;
}

std::size_t PowerAudit::identity_violation_total() const {
  std::size_t s = 0;
  for (auto v : identity_violations) s += v;
  return s;
}

Json InstanceResult::to_json() const {
  Json powers_json = Json::array();
  for (const auto& p : powers) {
    Json violations = Json::object();
    for (std::size_t i = 0; i < kIdentityCount; ++i) violations["f" + std::to_string(i + 1)] = p.identity_violations[i];
    Json entry{{"k", p.k},
               {"generators", p.generators},
               {"pairs", p.wp.pairs},
               {"divergent_pairs", p.wp.divergent_pairs},
               {"wp", p.wp.ok() ? "ok" : "counterexample"}};
    if (p.counterexample)
      entry["counterexample"] = {{"f", (*p.counterexample)[0]}, {"g", (*p.counterexample)[1]}, {"z", (*p.counterexample)[2]}};
    entry["constructive_pairs"] = p.constructive_pairs;
    entry["constructive_failures"] = p.constructive_failures;
    entry["bruteforce_failures"] = p.bruteforce_failures;
    entry["identity_checks"] = p.identity_checks;
    entry["identity_violations"] = violations;
    entry["y3_deductions"] = p.y3_deductions;
    entry["y4_deductions"] = p.y4_deductions;
    entry["y5_divergences"] = p.y5_divergences;
    entry["degree_sum_violations"] = p.degree_sum_violations;
    if (p.linear_quotients) {
      entry["linear_quotients"] = *p.linear_quotients;
    } else {
      entry["linear_quotients"] = nullptr;
    }
    entry["witnesses"] = p.witnesses;
    entry["witnesses_truncated"] = p.witnesses_truncated;
    entry["timings_ms"] = {{"power", p.power_ms}, {"wp_check", p.wp_ms}, {"audit", p.audit_ms}};
    powers_json.push_back(std::move(entry));
  }
  Json out{{"name", name},
           {"vertices", vertices},
           {"edges", edges},
           {"cactus", cactus},
           {"order_source", order_source},
           {"decomposition", decomposition ? *decomposition : Json(nullptr)},
           {"decomposition_violations", decomposition_violations},
           {"covers", covers},
           {"five_triple_violations", five_triple_violations},
           {"powers", powers_json},
           {"findings", findings},
           {"status", status}};
  out["error"] = error ? Json(*error) : Json(nullptr);
  return out;
}

std::size_t Report::findings() const {
  std::size_t s = 0;
  for (const auto& i : instances) s += i.findings.size();
  return s;
}

Json Report::to_json() const {
  Json list = Json::array();
  std::size_t counterexamples = 0, errors = 0;
  for (const auto& i : instances) {
    list.push_back(i.to_json());
    if (i.status == 1) ++counterexamples;
    if (i.status == 2) ++errors;
  }
  return Json{{"schema", kReportSchema},
              {"command", command},
              {"config", config_json(config)},
              {"instances", list},
              {"summary", {{"instances", instances.size()}, {"findings", findings()}, {"counterexamples", counterexamples}, {"errors", errors}}},
              {"exit_code", exit_code}};
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& i : instances) {
    out << i.name << ": " << i.vertices << " vertices, " << i.edges << " edges, " << (i.cactus ? "cactus" : "not a cactus")
        << ", order from " << i.order_source << '\n';
    if (i.error) out << "  error: " << *i.error << '\n';
    for (const auto& p : i.powers) {
      out << "  k=" << p.k << ": " << p.generators << " generators, " << p.wp.divergent_pairs << " divergent pairs, "
          << (p.wp.ok() ? "weakly polymatroidal" : "NOT weakly polymatroidal");
      if (p.counterexample) out << " (f=" << (*p.counterexample)[0] << " g=" << (*p.counterexample)[1] << " z=" << (*p.counterexample)[2] << ")";
      out << '\n';
      if (p.constructive_pairs)
        out << "       constructive pairs " << p.constructive_pairs << ", failures " << p.constructive_failures
            << ", brute-force failures " << p.bruteforce_failures << ", identity checks " << p.identity_checks
            << ", violations " << p.identity_violation_total() << '\n';
    }
    for (const auto& f : i.findings) out << "  finding: " << f << '\n';
  }
  out << instances.size() << " instance(s), " << findings() << " finding(s), exit " << exit_code << '\n';
  return out.str();
}

InstanceResult check_instance(const std::string& name, const Graph& g, const std::optional<Decomposition>& decomposition,
                              std::string order_source, const RunConfig& cfg) {
  InstanceResult res;
  res.name = name;
  res.vertices = g.vertex_count();
  res.edges = g.edge_count();
  res.cactus = is_cactus(g);
  res.order_source = std::move(order_source);
  try {
    if (cfg.require_cactus && !res.cactus) throw StructuralError("graph is not a cactus");

    std::optional<Decomposition> d = decomposition;
    if (!d && res.cactus && g.vertex_count() <= kDecompositionVertexBudget) {
      d = find_decomposition(g);
      if (d) res.order_source = "search";
    }
    if (d) {
      res.decomposition = decomposition_to_json(g, *d);
      auto check = verify_decomposition(g, *d);
      res.decomposition_violations = check.violations;
      for (const auto& v : check.violations) res.findings.push_back("decomposition: " + v);
      if (!check.ok) throw StructuralError("decomposition does not verify");
      if (!res.cactus) throw StructuralError("decomposition given for a graph that is not a cactus");

      const CoverContext ctx = CoverContext::build(g, *d);
      res.covers = ctx.base.size();
      for (const auto& cover : ctx.base.generators())
        for (const auto& block : ctx.decomposition.five_cycles) {
          try {
            triple_of(cover, block);
          } catch (const StructuralError&) {
            ++res.five_triple_violations;
          }
        }
      if (res.five_triple_violations)
        res.findings.push_back(std::to_string(res.five_triple_violations) + " minimal covers miss the five-triple pattern");
      for (unsigned k = cfg.k.lo; k <= cfg.k.hi; ++k) res.powers.push_back(audit_power(ctx, k, cfg, res.findings));
    } else {
      res.order_source = "name";
      const MonomialIdeal base = cover_ideal(g);
      res.covers = base.size();
      const auto order = VariableOrder::by_name(base.ring());
      const MonomialIdeal ordered = base.with_order(order);
      for (unsigned k = cfg.k.lo; k <= cfg.k.hi; ++k) res.powers.push_back(plain_power(ordered, order, k, res.findings));
    }
    const bool counterexample =
        std::any_of(res.powers.begin(), res.powers.end(), [](const PowerAudit& p) { return !p.wp.ok(); });
    res.status = counterexample ? 1 : 0;
  } catch (const InputError& e) {
    res.error = e.what();
    res.status = 2;
  } catch (const StructuralError& e) {
    res.error = e.what();
    res.status = 2;
  } catch (const BudgetError& e) {
    res.error = e.what();
    res.status = 2;
  }
  if (res.error) res.findings.push_back("error: " + *res.error);
  return res;
}

Report run_check(const RunConfig& cfg) {
  Report report;
  report.command = cfg.command.empty() ? "wp-check" : cfg.command;
  report.config = cfg;
  try {
    const Graph g = read_graph_file(cfg.graph_path);
    std::optional<Decomposition> d;
    std::string source = "search";
    if (!cfg.order_path.empty() && cfg.order_path != "auto") {
      d = read_decomposition_file(g, cfg.order_path);
      source = "file";
    }
    report.instances.push_back(check_instance(cfg.graph_path, g, d, source, cfg));
  } catch (const InputError& e) {
    InstanceResult res;
    res.name = cfg.graph_path;
    res.error = e.what();
    res.status = 2;
    res.findings.push_back("error: " + *res.error);
    report.instances.push_back(std::move(res));
  }
  const auto& inst = report.instances.front();
  report.exit_code = inst.status;
  if (report.exit_code == 0 && cfg.strict && report.findings() > 0) report.exit_code = 1;
  return report;
}

Report fuzz_campaign(const RunConfig& cfg) {
  Report report;
  report.command = "fuzz";
  report.config = cfg;
  std::mt19937_64 seeds(cfg.seed);
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    const std::uint64_t s = seeds();
    auto inst = random_decomposed_graph(s, cfg.limits);
    report.instances.push_back(
        check_instance("fuzz-" + std::to_string(i) + "-seed-" + std::to_string(s), inst.graph, inst.decomposition, "generator", cfg));
  }
  if (!cfg.graph_path.empty()) {
    try {
      const Graph g = read_graph_file(cfg.graph_path);
      std::optional<Decomposition> d;
      if (!cfg.order_path.empty() && cfg.order_path != "auto") d = read_decomposition_file(g, cfg.order_path);
      report.instances.push_back(check_instance("injected:" + cfg.graph_path, g, d, d ? "file" : "search", cfg));
    } catch (const InputError& e) {
      InstanceResult res;
      res.name = "injected:" + cfg.graph_path;
      res.error = e.what();
      res.status = 2;
      res.findings.push_back("error: " + *res.error);
      report.instances.push_back(std::move(res));
    }
  }
  report.exit_code = cfg.strict && report.findings() > 0 ? 1 : 0;
  return report;
}

std::vector<CuratedInstance> curated_instances() {
  std::vector<CuratedInstance> out{
      {"K2", parse_edge_list("a b\n"), std::nullopt},
      {"K3", parse_edge_list("a b\nb c\na c\n"), std::nullopt},
      {"C5", parse_edge_list("y1 y4\ny4 y2\ny2 y3\ny3 y5\ny5 y1\n"), std::nullopt},
      {"K3+whisker", parse_edge_list("a b\nb c\na c\nc d\n"), std::nullopt},
  };
  // The only decomposition is {a,b} + {c,d}; the clique sequence decides the
  // order. Listing {c,d} first gives c > d > a > b. The lexicographically first
  // sequence (a > b > c > d) is not weakly polymatroidal for this graph, which
  // is not unmixed.
  Graph& kw = out[3].graph;
  Decomposition d;
  d.cliques.push_back({{kw.id("c"), kw.id("d")}, {kw.id("d")}});
  d.cliques.push_back({{kw.id("a"), kw.id("b")}, {}});
  out[3].decomposition = d;
  return out;
}

}  // namespace coverpoly
