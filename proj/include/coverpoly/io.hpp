#pragma once

#include <string>

#include "json.hpp"

#include "coverpoly/graph.hpp"
#include "coverpoly/ideal.hpp"
#include "coverpoly/structure.hpp"
#include "coverpoly/wp.hpp"

namespace coverpoly {

using Json = nlohmann::ordered_json;

/// {"cliques":[{"vertices":[...],"free":[...]}],
///  "five_cycles":[{"y1":..,"y2":..,"y3":..,"y4":..,"y5":..}],
///  "four_cycle_edges":[["z1","z2"]]}
Json decomposition_to_json(const Graph& g, const Decomposition& d);
/// Labels must name vertices of `g`. A missing "free" list is computed from
/// the graph. Throws InputError on malformed documents.
Decomposition decomposition_from_json(const Graph& g, const Json& j);
Decomposition read_decomposition_file(const Graph& g, const std::string& path);

/// {"generators":["...", ...]}
Json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Ring& ring, const Json& j);

/// {"z":..,"w":..,"method":..,"certificate":[...]} plus "cofactor" when it is
/// not 1.
Json witness_to_json(const Ring& ring, const WitnessReport& w);

/// {"f1":true|false|null, ..., "f9":...}
Json identities_to_json(const IdentityReport& r);

}  // namespace coverpoly
