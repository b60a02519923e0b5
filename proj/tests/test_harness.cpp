#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <sys/wait.h>

#include "coverpoly/errors.hpp"
#include "coverpoly/harness.hpp"
#include "support.hpp"

using namespace coverpoly;
using coverpoly::testing::fixture;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(COVERPOLY_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) r.out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void strip_timings(Json& j) {
  if (j.is_object()) {
    j.erase("timings_ms");
    for (auto& [key, value] : j.items()) strip_timings(value);
  } else if (j.is_array()) {
    for (auto& value : j) strip_timings(value);
  }
}

RunConfig config(const std::string& command, const std::string& k) {
  RunConfig cfg;
  cfg.command = command;
  cfg.k = parse_k_range(k);
  return cfg;
}

}  // namespace

TEST(KRange, Parsing) {
  EXPECT_EQ(parse_k_range("3").lo, 3u);
  auto r = parse_k_range("1..4");
  EXPECT_EQ(r.lo, 1u);
  EXPECT_EQ(r.hi, 4u);
  EXPECT_THROW(parse_k_range("0"), InputError);
  EXPECT_THROW(parse_k_range("3..2"), InputError);
  EXPECT_THROW(parse_k_range("1..7"), InputError);
  EXPECT_THROW(parse_k_range("x"), InputError);
  EXPECT_EQ(parse_k_range("9", 10).hi, 9u);
}

TEST(RunCheck, C5SecondPowerReportsTheExamplePair) {
  auto cfg = config("wp-check", "2");
  cfg.graph_path = fixture("c5.txt");
  auto report = run_check(cfg);
  EXPECT_EQ(report.exit_code, 0);
  EXPECT_EQ(report.findings(), 0u);
  ASSERT_EQ(report.instances.size(), 1u);
  ASSERT_EQ(report.instances[0].powers.size(), 1u);
  const auto& audit = report.instances[0].powers[0];
  EXPECT_TRUE(audit.wp.ok());
  EXPECT_EQ(audit.generators, 15u);
  bool found = false;
  for (const auto& w : audit.witnesses)
    found |= w["f"] == "y1*y2*y3^2*y4*y5" && w["g"] == "y1*y2*y3*y4^2*y5" &&
             w["witness"]["method"] == "constructive-case-y3" && w["witness"]["w"] == "y4";
  EXPECT_TRUE(found);
}

TEST(RunCheck, CuratedInstancesUpToFourthPower) {
  auto cfg = config("wp-check", "1..4");
  for (const auto& c : curated_instances()) {
    const auto& name = c.name;
    auto res = check_instance(c.name, c.graph, c.decomposition, c.decomposition ? "file" : "search", cfg);
    EXPECT_EQ(res.status, 0) << name;
    EXPECT_TRUE(res.findings.empty()) << name << ": " << (res.findings.empty() ? "" : res.findings.front());
    for (const auto& p : res.powers) EXPECT_TRUE(p.wp.ok()) << name << " k=" << p.k;
  }
}

// Under the lexicographically first clique sequence a > b > c > d, J of the
// whiskered triangle already fails at k = 1.
TEST(RunCheck, WhiskeredTriangleDependsOnCliqueSequence) {
  auto cfg = config("wp-check", "1");
  auto curated = curated_instances();
  const auto& kw = curated.back();
  ASSERT_EQ(kw.name, "K3+whisker");
  auto res = check_instance(kw.name, kw.graph, std::nullopt, "search", cfg);
  EXPECT_EQ(res.status, 1);
  ASSERT_EQ(res.powers.size(), 1u);
  ASSERT_TRUE(res.powers[0].counterexample);
  EXPECT_EQ((*res.powers[0].counterexample)[0], "a*b*d");
  EXPECT_EQ((*res.powers[0].counterexample)[1], "a*c");
  EXPECT_EQ((*res.powers[0].counterexample)[2], "b");
}

TEST(RunCheck, RequireCactusAndBadInput) {
  auto cfg = config("wp-check", "1");
  cfg.graph_path = fixture("diamond.txt");
  cfg.require_cactus = true;
  EXPECT_EQ(run_check(cfg).exit_code, 2);
  cfg.require_cactus = false;
  EXPECT_EQ(run_check(cfg).exit_code, 0);  // name order fallback, still WP at k = 1
  cfg.graph_path = fixture("malformed.txt");
  EXPECT_EQ(run_check(cfg).exit_code, 2);
  cfg.graph_path = fixture("c5.txt");
  cfg.order_path = fixture("c5_bad_decomposition.json");
  EXPECT_EQ(run_check(cfg).exit_code, 2);
}

TEST(Fuzz, SeedFortyTwoHasNoIdentityViolations) {
  auto cfg = config("fuzz", "1..2");
  cfg.seed = 42;
  cfg.instances = 25;
  auto report = fuzz_campaign(cfg);
  EXPECT_EQ(report.exit_code, 0);
  ASSERT_EQ(report.instances.size(), 25u);
  for (const auto& inst : report.instances)
    for (const auto& p : inst.powers) EXPECT_EQ(p.identity_violation_total(), 0u) << inst.name;
  EXPECT_EQ(report.findings(), 0u);
}

TEST(Fuzz, EmptyCampaign) {
  auto cfg = config("fuzz", "1");
  cfg.instances = 0;
  auto report = fuzz_campaign(cfg);
  EXPECT_TRUE(report.instances.empty());
  EXPECT_EQ(report.exit_code, 0);
}

TEST(Fuzz, ReportIsDeterministic) {
  auto cfg = config("fuzz", "1..2");
  cfg.seed = 7;
  cfg.instances = 6;
  Json a = fuzz_campaign(cfg).to_json();
  Json b = fuzz_campaign(cfg).to_json();
  strip_timings(a);
  strip_timings(b);
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("wp-check " + fixture("c5.txt") + " --k 1..2").code, 0);
  EXPECT_EQ(run_cli("wp-check " + fixture("diamond.txt") + " --require-cactus").code, 2);
  EXPECT_EQ(run_cli("wp-check " + fixture("malformed.txt")).code, 2);
  EXPECT_EQ(run_cli("wp-check " + fixture("c5.txt") + " --k 0").code, 2);
  EXPECT_EQ(run_cli("fuzz --n 0").code, 0);
  EXPECT_EQ(run_cli("fuzz --n 2 --strict --inject-graph " + fixture("c5.txt") + " --order " +
                    fixture("c5_bad_decomposition.json"))
                .code,
            1);
  EXPECT_EQ(run_cli("check-cactus " + fixture("c5.txt")).code, 0);
  EXPECT_EQ(run_cli("check-cactus " + fixture("diamond.txt")).code, 1);
  EXPECT_EQ(run_cli("decompose " + fixture("c5.txt")).code, 0);
  EXPECT_EQ(run_cli("no-such-command").code, 2);
}

TEST(Cli, JsonOutputsAreByteIdenticalModuloTimings) {
  const std::string args = "fuzz --seed 3 --n 4 --k 1..2 --json";
  auto a = Json::parse(run_cli(args).out);
  auto b = Json::parse(run_cli(args).out);
  EXPECT_EQ(a["schema"], kReportSchema);
  strip_timings(a);
  strip_timings(b);
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Cli, WitnessCommand) {
  auto r = run_cli("witness " + fixture("c5.txt") + " --k 2 --f 'y1*y2*y3^2*y4*y5' --g 'y1*y2*y3*y4^2*y5' --order " +
                   fixture("c5_decomposition.json"));
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["z"], "y3");
  EXPECT_EQ(j["bruteforce"]["w"], "y4");
  EXPECT_EQ(j["constructive"]["w"], "y4");
  EXPECT_EQ(j["constructive"]["method"], "constructive-case-y3");
  EXPECT_EQ(j["identities"]["f9"], true);
}

TEST(Cli, CoversAndPower) {
  auto covers = Json::parse(run_cli("covers " + fixture("c5.txt") + " --json").out);
  EXPECT_EQ(covers["covers"].size(), 5u);
  auto power = Json::parse(run_cli("ideal-power " + fixture("c5.txt") + " --k 2 --json").out);
  EXPECT_EQ(power["generators"].size(), 15u);
  EXPECT_EQ(power["generators"][0], "y1^2*y2^2*y3^2");
}
