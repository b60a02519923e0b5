#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coverpoly/io.hpp"
#include "coverpoly/structure.hpp"
#include "coverpoly/wp.hpp"

namespace coverpoly {

inline constexpr const char* kReportSchema = "coverpoly/1";
inline constexpr unsigned kMaxPower = 6;

struct KRange {
  unsigned lo = 1;
  unsigned hi = 1;
};

/// "3" or "1..4". Throws InputError unless 1 <= lo <= hi <= max_k.
KRange parse_k_range(const std::string& text, unsigned max_k = kMaxPower);

struct RunConfig {
  std::string command;
  std::string graph_path;
  std::string order_path;  // decomposition JSON; empty or "auto" searches for one
  KRange k;
  std::uint64_t seed = 0;
  std::size_t instances = 25;
  GeneratorLimits limits;
  bool strict = false;
  bool require_cactus = false;
  std::size_t factorization_budget = 4;  // factorizations per generator in the identity suite
  std::size_t witness_cap = 1000;        // witness entries listed per power
  std::size_t linear_quotient_cap = 400;  // largest generator count for the linear-quotient cross-check
};

/// Everything recorded for one J(G)^k.
struct PowerAudit {
  unsigned k = 0;
  std::size_t generators = 0;
  WpResult wp;
  std::optional<std::array<std::string, 3>> counterexample;  // f, g, z

  std::size_t constructive_pairs = 0;  // divergence at y3 or y4 of a 5-cycle block
  std::size_t constructive_failures = 0;
  std::size_t bruteforce_failures = 0;  // on constructive pairs
  std::size_t identity_checks = 0;
  std::array<std::size_t, kIdentityCount> identity_violations{};
  std::size_t y3_deductions = 0;  // checks where the g125 = 0 deduction applied
  std::size_t y4_deductions = 0;
  std::size_t y5_divergences = 0;
  std::size_t degree_sum_violations = 0;
  std::size_t inexact_factorizations = 0;
  std::optional<bool> linear_quotients;

  Json witnesses = Json::array();
  bool witnesses_truncated = false;
  double power_ms = 0, wp_ms = 0, audit_ms = 0;

  std::size_t identity_violation_total() const;
};

struct InstanceResult {
  std::string name;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool cactus = false;
  std::string order_source;  // "file", "search", "generator" or "name"
  std::optional<Json> decomposition;
  std::vector<std::string> decomposition_violations;
  std::size_t covers = 0;
  std::size_t five_triple_violations = 0;
  std::vector<PowerAudit> powers;
  std::vector<std::string> findings;
  std::optional<std::string> error;
  int status = 0;  // 0 ok, 1 counterexample, 2 input/structural error

  Json to_json() const;
};

struct Report {
  std::string command;
  RunConfig config;
  std::vector<InstanceResult> instances;
  int exit_code = 0;

  std::size_t findings() const;
  Json to_json() const;
  std::string to_text() const;
};

/// Runs the full pipeline on one graph. `decomposition` may be null, in which
/// case cactus graphs get a searched decomposition and everything else is
/// checked under the name order without the 5-cycle audit.
InstanceResult check_instance(const std::string& name, const Graph& g, const std::optional<Decomposition>& decomposition,
                              std::string order_source, const RunConfig& cfg);

/// Loads cfg.graph_path (and cfg.order_path) and checks every k in range.
/// Exit code 0 when J(G)^k is weakly polymatroidal for all k, 1 on a
/// counterexample (or on findings with --strict), 2 on bad input.
Report run_check(const RunConfig& cfg);

/// cfg.instances generated graphs, plus an injected fixture when
/// cfg.graph_path is set. Findings do not change the exit code unless
/// cfg.strict.
Report fuzz_campaign(const RunConfig& cfg);

struct CuratedInstance {
  std::string name;
  Graph graph;
  std::optional<Decomposition> decomposition;  // nullopt: use the searched one
};

/// The curated instances with known structure: K2, K3, C5, K3 with a whisker.
std::vector<CuratedInstance> curated_instances();

}  // namespace coverpoly
