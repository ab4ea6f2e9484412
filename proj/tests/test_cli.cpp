#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gradedgrowth/cli.hpp"

using gradedgrowth::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

const std::vector<std::string> kProbeArgs{"tile-algebra-probe", "--group", "z",     "--p",    "2",   "--basis",
                                          "0;1",                "--epsilon", "1/4", "--delta", "1/16", "--zeta",
                                          "5/4",                "--t",     "2"};

}  // namespace

TEST_CASE("growth TSV golden file") {
  const Result r = cli({"growth", "--group", "c2xc2", "--p", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(GOLDEN_DIR "/growth_c2xc2.tsv"));
}

TEST_CASE("probe report golden file") {
  const Result r = cli(kProbeArgs);
  CHECK(r.code == 0);
  CHECK(r.out == slurp(GOLDEN_DIR "/probe_z.json"));
}

TEST_CASE("probe report schema") {
  const auto j = nlohmann::json::parse(cli(kProbeArgs).out);
  for (const char* key : {"config", "kind", "experimental", "note", "steps", "complement", "tower"})
    CHECK(j.contains(key));
  for (const auto& step : j.at("steps"))
    for (const char* key : {"overlap_bound", "dim_equation", "envelope_bound", "maximality", "mu_ge_delta", "s_ge_one"})
      CHECK(step.at("assertions").contains(key));
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"crystal", "--group", "lamplighter", "--radius", "2", "--sample", "50",
                                      "--seed",  "3"};
  std::vector<std::string> global{"--seed", "3", "crystal", "--group", "lamplighter", "--radius", "2", "--sample", "50"};
  const Result a = cli(global), b = cli(global);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(cli(args).out == a.out);
}

TEST_CASE("every output echoes its config") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gs", "--d", "2", "--degrees", ""},
           {"deadends", "--group", "z2", "--radius", "6"},
           {"groups"},
           {"rs-check", "--group", "c4", "--ideals", "3"},
           {"folner", "--group", "z", "--ball-radius", "2"},
           {"growth", "--group", "c4", "--format", "json"}}) {
    const Result r = cli(args);
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("config").at("command") == args[0]);
  }
}

TEST_CASE("gs and deadends examples") {
  CHECK(nlohmann::json::parse(cli({"gs", "--d", "2", "--degrees", ""}).out).at("is_GS") == true);
  const auto de = nlohmann::json::parse(cli({"deadends", "--group", "z2", "--radius", "6"}).out);
  CHECK(de.at("dead_ends").empty());
  const auto gs = nlohmann::json::parse(cli({"gs", "--d", "2", "--relators", "x^3;[x,y]", "--p", "3"}).out);
  CHECK(gs.at("degrees") == nlohmann::json::array({2, 3}));
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"growth", "--nope"}).code == 2);
  CHECK(cli({"growth", "--group", "no-such-group"}).code == 2);
  CHECK(cli({"gs", "--d", "2", "--grid", "10"}).code == 4);
  CHECK(cli({"gs", "--d", "2", "--relators", "x^40", "--max-deg", "4"}).code == 4);
  CHECK(cli({"tile", "--group", "z2", "--epsilon", "1/2"}).code == 5);
  setenv("GRADEDGROWTH_BUDGET_MB", "1", 1);
  CHECK(cli({"deadends", "--group", "f3", "--radius", "12"}).code == 3);
  unsetenv("GRADEDGROWTH_BUDGET_MB");
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("tile certificate verifies and tampering is caught") {
  const std::string path = "cli_test_certificate.json";
  const Result r = cli({"--output", path, "tile", "--group", "z", "--k", "-1;0;1", "--epsilon", "1/2", "--delta",
                        "1/16", "--zeta", "5/4", "--t", "3"});
  REQUIRE(r.code == 0);
  CHECK(cli({"verify", "--certificate", path}).code == 0);
  auto j = nlohmann::ordered_json::parse(slurp(path));
  j["transversal"][0] = "(999)";
  std::ofstream(path) << j.dump();
  CHECK(cli({"verify", "--certificate", path}).code == 4);
  std::remove(path.c_str());
}

TEST_CASE("gs certificate verifies") {
  const std::string path = "cli_test_gs.json";
  REQUIRE(cli({"--output", path, "gs", "--d", "2", "--degrees", "5..100"}).code == 0);
  CHECK(cli({"verify", "--certificate", path}).code == 0);
  std::remove(path.c_str());
}

TEST_CASE("registry file") {
  const std::string path = "cli_test_registry.json";
  std::ofstream(path) << R"({"klein": {"kind": "finite_cayley_table", "generators": ["a", "b"],
    "params": {"table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]], "generator_indices": [1, 2]}}})";
  const Result r = cli({"--registry", path, "growth", "--group", "klein"});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(r.out.find("2\t1\t1\t1.000000") != std::string::npos);
}
