// coverpoly: cover ideals of graphs, their powers, and weakly polymatroidal checks.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "coverpoly/errors.hpp"
#include "coverpoly/graph.hpp"
#include "coverpoly/harness.hpp"
#include "coverpoly/ideal.hpp"
#include "coverpoly/io.hpp"
#include "coverpoly/structure.hpp"
#include "coverpoly/wp.hpp"

using namespace coverpoly;

namespace {

struct Options {
  std::string graph;
  std::string order = "auto";
  std::string k = "1";
  std::string f, g;
  bool json = false;
  bool strict = false;
  bool require_cactus = false;
  std::uint64_t seed = 42;
  std::size_t n = 25;
  std::size_t factorizations = 4;
  GeneratorLimits limits;
};

// Decomposition from --order, or a searched one; nullopt when neither exists.
std::optional<Decomposition> decomposition_for(const Graph& g, const Options& o) {
  if (o.order != "auto" && !o.order.empty()) return read_decomposition_file(g, o.order);
  if (!is_cactus(g)) return std::nullopt;
  return find_decomposition(g);
}

VariableOrder order_for(const Graph& g, const Options& o) {
  if (auto d = decomposition_for(g, o)) {
    auto check = verify_decomposition(g, *d);
    if (!check.ok) throw StructuralError("decomposition does not verify: " + check.violations.front());
    return variable_order(g, *d);
  }
  return VariableOrder::by_name(vertex_ring(g));
}

int cmd_check_cactus(const Options& o) {
  const Graph g = read_graph_file(o.graph);
  const bool cactus = is_cactus(g);
  if (o.json) {
    Json cycles = Json::array();
    if (cactus)
      for (const auto& c : simple_cycles(g)) {
        Json labels = Json::array();
        for (VertexId v : c) labels.push_back(g.label(v));
        cycles.push_back(labels);
      }
    std::cout << Json{{"schema", kReportSchema}, {"cactus", cactus}, {"cycles", cycles}}.dump(2) << '\n';
  } else {
    std::cout << (cactus ? "cactus" : "not a cactus") << '\n';
  }
  return cactus ? 0 : 1;
}

int cmd_decompose(const Options& o) {
  const Graph g = read_graph_file(o.graph);
  if (!is_cactus(g)) throw StructuralError("graph is not a cactus");
  auto d = find_decomposition(g);
  if (!d) {
    std::cerr << "no decomposition exists\n";
    return 1;
  }
  std::cout << decomposition_to_json(g, *d).dump(2) << '\n';
  return 0;
}

int cmd_covers(const Options& o) {
  const Graph g = read_graph_file(o.graph);
  const auto covers = minimal_vertex_covers(g);
  if (o.json) {
    Json list = Json::array();
    for (const auto& c : covers) {
      Json labels = Json::array();
      for (VertexId v : c) labels.push_back(g.label(v));
      list.push_back(labels);
    }
    std::cout << Json{{"schema", kReportSchema}, {"covers", list}}.dump(2) << '\n';
  } else {
    for (const auto& c : covers) {
      for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? " " : "") << g.label(c[i]);
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_ideal_power(const Options& o) {
  const Graph g = read_graph_file(o.graph);
  const auto k = parse_k_range(o.k, 64).hi;
  const auto power = ideal_power(cover_ideal(g).with_order(order_for(g, o)), k);
  if (o.json) {
    std::cout << ideal_to_json(power).dump(2) << '\n';
  } else {
    for (const auto& m : power.generators()) std::cout << format_monomial(power.ring(), m) << '\n';
  }
  return 0;
}

int cmd_witness(const Options& o) {
  const Graph g = read_graph_file(o.graph);
  const unsigned k = parse_k_range(o.k, 64).hi;
  const Ring ring = vertex_ring(g);
  const Monomial f = parse_monomial(ring, o.f);
  const Monomial gm = parse_monomial(ring, o.g);
  const MonomialIdeal base = cover_ideal(g);

  std::optional<CoverContext> ctx;
  if (auto d = decomposition_for(g, o)) ctx = CoverContext::build(g, *d);
  const VariableOrder order = ctx ? ctx->order : VariableOrder::by_name(ring);

  Json out{{"schema", kReportSchema}, {"f", format_monomial(ring, f)}, {"g", format_monomial(ring, gm)}};
  auto dp = first_divergence(f, gm, order);
  if (!dp) {
    out["z"] = nullptr;
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  out["z"] = ring.name(dp->z);
  const auto bf = witness_bruteforce(*dp, base, k, order);
  out["bruteforce"] = bf ? witness_to_json(ring, *bf) : Json(nullptr);

  if (ctx) {
    if (auto loc = ctx->locate(dp->z)) {
      auto f_fact = membership(ctx->base, k, f);
      auto g_fact = membership(ctx->base, k, gm);
      if (f_fact && g_fact) {
        const auto& block = ctx->decomposition.five_cycles[loc->block];
        out["identities"] = identities_to_json(count_identities_check(
            triple_counts(*f_fact, block), triple_counts(*g_fact, block), hypotheses_for_divergence(loc->position)));
        if (loc->position == 3 || loc->position == 4)
          out["constructive"] = witness_to_json(ring, constructive_witness(*f_fact, *g_fact, *dp, *ctx));
      }
    }
  }
  std::cout << out.dump(2) << '\n';
  return bf ? 0 : 1;
}

RunConfig run_config(const std::string& command, const Options& o) {
  RunConfig cfg;
  cfg.command = command;
  cfg.graph_path = o.graph;
  cfg.order_path = o.order;
  cfg.k = parse_k_range(o.k);
  cfg.seed = o.seed;
  cfg.instances = o.n;
  cfg.limits = o.limits;
  cfg.strict = o.strict;
  cfg.require_cactus = o.require_cactus;
  cfg.factorization_budget = o.factorizations;
  return cfg;
}

int emit(const Report& report, bool json) {
  if (json) {
    std::cout << report.to_json().dump(2) << '\n';
  } else {
    std::cout << report.to_text();
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex cover ideals, their powers, and the weakly polymatroidal property"};
  app.require_subcommand(1);
  Options o;

  auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", o.graph, "edge-list file")->required(); };
  auto order_opt = [&](CLI::App* sub) {
    sub->add_option("--order", o.order, "decomposition JSON fixing the variable order, or 'auto'");
  };

  auto* cactus = app.add_subcommand("check-cactus", "test whether the graph is a cactus");
  graph_arg(cactus);
  cactus->add_flag("--json", o.json);

  auto* decompose = app.add_subcommand("decompose", "search a clique / 5-cycle / 4-cycle-edge decomposition");
  graph_arg(decompose);

  auto* covers = app.add_subcommand("covers", "list the minimal vertex covers");
  graph_arg(covers);
  covers->add_flag("--json", o.json);

  auto* power = app.add_subcommand("ideal-power", "minimal generators of J(G)^k");
  graph_arg(power);
  power->add_option("--k", o.k, "power");
  order_opt(power);
  power->add_flag("--json", o.json);

  auto* wp = app.add_subcommand("wp-check", "check J(G)^k for the weakly polymatroidal property");
  graph_arg(wp);
  wp->add_option("--k", o.k, "power or range lo..hi");
  order_opt(wp);
  wp->add_flag("--json", o.json);
  wp->add_flag("--strict", o.strict, "exit 1 on any finding");
  wp->add_flag("--require-cactus", o.require_cactus, "exit 2 unless the graph is a cactus");
  wp->add_option("--factorizations", o.factorizations, "factorizations per generator in the identity suite");

  auto* witness = app.add_subcommand("witness", "exchange witness for one pair of generators");
  graph_arg(witness);
  witness->add_option("--k", o.k, "power");
  witness->add_option("--f", o.f, "generator f")->required();
  witness->add_option("--g", o.g, "generator g")->required();
  order_opt(witness);

  auto* fuzz = app.add_subcommand("fuzz", "check generated decomposed cactus graphs");
  fuzz->add_option("--seed", o.seed, "campaign seed");
  fuzz->add_option("--n", o.n, "number of generated instances");
  fuzz->add_option("--k", o.k, "power or range lo..hi");
  fuzz->add_option("--max-vertices", o.limits.max_vertices);
  fuzz->add_option("--max-cliques", o.limits.max_cliques);
  fuzz->add_option("--max-five-cycles", o.limits.max_five_cycles);
  fuzz->add_option("--max-four-cycles", o.limits.max_four_cycles);
  fuzz->add_option("--inject-graph", o.graph, "extra fixture instance");
  order_opt(fuzz);
  fuzz->add_flag("--json", o.json);
  fuzz->add_flag("--strict", o.strict, "exit 1 on any finding");
  fuzz->add_option("--factorizations", o.factorizations, "factorizations per generator in the identity suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cactus) return cmd_check_cactus(o);
    if (*decompose) return cmd_decompose(o);
    if (*covers) return cmd_covers(o);
    if (*power) return cmd_ideal_power(o);
    if (*witness) return cmd_witness(o);
    if (*wp) return emit(run_check(run_config("wp-check", o)), o.json);
    if (*fuzz) {
      if (o.graph.empty()) o.order = "auto";
      return emit(fuzz_campaign(run_config("fuzz", o)), o.json);
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const StructuralError& e) {
    std::cerr << "structural error: " << e.what() << '\n';
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
  }
  return 2;
}
