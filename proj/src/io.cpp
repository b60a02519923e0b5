#include "coverpoly/io.hpp"

#include <algorithm>
#include <fstream>

#include "coverpoly/errors.hpp"

namespace coverpoly {

namespace {

Json labels(const Graph& g, const VertexSet& vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(g.label(v));
  return out;
}

VertexId vertex(const Graph& g, const Json& j) {
  if (!j.is_string()) throw InputError("decomposition: vertex labels must be strings");
  return g.id(j.get<std::string>());
}

VertexSet vertex_list(const Graph& g, const Json& j) {
  if (!j.is_array()) throw InputError("decomposition: expected an array of labels");
  VertexSet out;
  for (const auto& item : j) out.push_back(vertex(g, item));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Json decomposition_to_json(const Graph& g, const Decomposition& d) {
  Json cliques = Json::array();
  for (const auto& c : d.cliques) cliques.push_back({{"vertices", labels(g, c.vertices)}, {"free", labels(g, c.free_vertices)}});
  Json fives = Json::array();
  for (const auto& fc : d.five_cycles) {
    Json entry = Json::object();
    for (int p = 1; p <= 5; ++p) entry["y" + std::to_string(p)] = g.label(fc.at(p));
    fives.push_back(entry);
  }
  Json fours = Json::array();
  for (auto [a, b] : d.four_cycle_edges) fours.push_back({g.label(a), g.label(b)});
  return Json{{"cliques", cliques}, {"five_cycles", fives}, {"four_cycle_edges", fours}};
}

Decomposition decomposition_from_json(const Graph& g, const Json& j) {
  if (!j.is_object()) throw InputError("decomposition: expected a JSON object");
  Decomposition d;
  if (j.contains("cliques")) {
    for (const auto& c : j.at("cliques")) {
      if (!c.is_object() || !c.contains("vertices")) throw InputError("decomposition: clique needs \"vertices\"");
      CliqueBlock block;
      block.vertices = vertex_list(g, c.at("vertices"));
      block.free_vertices = c.contains("free") ? vertex_list(g, c.at("free")) : free_vertices(g, block.vertices);
      d.cliques.push_back(std::move(block));
    }
  }
  if (j.contains("five_cycles")) {
    for (const auto& c : j.at("five_cycles")) {
      if (!c.is_object()) throw InputError("decomposition: five_cycles entries must be objects");
      FiveCycle fc;
      for (int p = 1; p <= 5; ++p) {
        const std::string key = "y" + std::to_string(p);
        if (!c.contains(key)) throw InputError("decomposition: five-cycle is missing " + key);
        fc.y[static_cast<std::size_t>(p - 1)] = vertex(g, c.at(key));
      }
      d.five_cycles.push_back(fc);
    }
  }
  if (j.contains("four_cycle_edges")) {
    for (const auto& e : j.at("four_cycle_edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("decomposition: four_cycle_edges entries must be pairs");
      d.four_cycle_edges.emplace_back(vertex(g, e[0]), vertex(g, e[1]));
    }
  }
  return d;
}

Decomposition read_decomposition_file(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open decomposition file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return decomposition_from_json(g, j);
}

Json ideal_to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& m : ideal.generators()) gens.push_back(format_monomial(ideal.ring(), m));
  return Json{{"generators", gens}};
}

MonomialIdeal ideal_from_json(const Ring& ring, const Json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.at("generators").is_array())
    throw InputError("ideal: expected {\"generators\": [...]}");
  std::vector<Monomial> gens;
  for (const auto& item : j.at("generators")) {
    if (!item.is_string()) throw InputError("ideal: generators must be strings");
    gens.push_back(parse_monomial(ring, item.get<std::string>()));
  }
  return MonomialIdeal(ring, std::move(gens));
}

Json witness_to_json(const Ring& ring, const WitnessReport& w) {
  Json cert = Json::array();
  for (const auto& f : w.certificate.factors) cert.push_back(format_monomial(ring, f));
  Json out{{"z", ring.name(w.point.z)}, {"w", ring.name(w.w)}, {"method", std::string(to_string(w.method))}, {"certificate", cert}};
  if (!w.certificate.cofactor.is_one()) out["cofactor"] = format_monomial(ring, w.certificate.cofactor);
  return out;
}

Json identities_to_json(const IdentityReport& r) {
  Json out = Json::object();
  for (std::size_t i = 0; i < r.results.size(); ++i) {
    const std::string key = "f" + std::to_string(i + 1);
    if (r.results[i]) {
      out[key] = *r.results[i];
    } else {
      out[key] = nullptr;
    }
  }
  return out;
}

}  // namespace coverpoly
