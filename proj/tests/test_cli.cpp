#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "selschur/json_io.hpp"

using namespace selschur;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

// Run the CLI binary, capturing stdout; stderr is dropped so usage errors
// stay quiet in test logs.
RunResult run_cli(const std::string& args) {
  char out_file[] = "/tmp/selschur_cli_XXXXXX";
  int fd = mkstemp(out_file);
  REQUIRE(fd >= 0);
  close(fd);
  std::string cmd = std::string(SELSCHUR_CLI_PATH) + " " + args + " > " +
                    out_file + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(out_file);
  return {WEXITSTATUS(rc), ss.str()};
}

}  // namespace

TEST_CASE("eval prints the worked two-column value") {
  RunResult r = run_cli(
      "eval theorem7 --a 1 --b 1 --rho 1 --N 2 --shape 1,1 --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j.at("value").at("re").get<double>() ==
        doctest::Approx(0.15).epsilon(1e-12));
  CHECK(j.at("conditions").at("real_ok").get<bool>());
}

TEST_CASE("eval of the bare product integral") {
  RunResult r = run_cli("eval selberg_J0 --a 2 --b 3 --rho 0.5 --N 1 --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j.at("value").at("re").get<double>() ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("degenerate rho exits with the formula-error code") {
  RunResult r = run_cli("eval theorem7 --a 1 --b 1 --rho 0 --N 2 --shape 1,1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("eval no_such_formula --a 1").exit_code == 1);
  CHECK(run_cli("eval theorem7 --a 1 --b 1 --rho 1 --N 2").exit_code == 1);
  CHECK(run_cli("nonsense").exit_code == 1);
}

TEST_CASE("pretty and json values match") {
  RunResult pj = run_cli(
      "eval theorem5 --a 1.5 --b 0.7 --rho 0.6 --N 3 --shape 1,2 --format json");
  RunResult pp = run_cli(
      "eval theorem5 --a 1.5 --b 0.7 --rho 0.6 --N 3 --shape 1,2 --format pretty");
  REQUIRE(pj.exit_code == 0);
  REQUIRE(pp.exit_code == 0);
  json j = json::parse(pj.output);
  std::ostringstream expect;
  expect.precision(17);
  expect << j.at("value").at("re").get<double>();
  CHECK(pp.output.find(expect.str()) != std::string::npos);
}

TEST_CASE("complex parameters parse") {
  RunResult r = run_cli(
      "eval selberg_J0 --a 1.1+0.3i --b 0.9-0.1i --rho 0.8 --N 2 --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j.at("value").at("im").get<double>() != 0.0);
}

TEST_CASE("sweep emits one row per point and isolates poles") {
  RunResult r = run_cli(
      "sweep selberg_J0 --b 1.5 --rho 0.4 --N 1 --axis a --start -2 --stop 1 "
      "--count 4 --format csv");
  REQUIRE(r.exit_code == 0);
  // Rows: a = -2, -1, 0 (gamma poles), 1 (fine).
  std::istringstream lines(r.output);
  std::string line;
  std::getline(lines, line);  // header
  CHECK(line == "index,a,re,im,logabs,arg,status");
  int rows = 0, poles = 0, ok = 0;
  while (std::getline(lines, line)) {
    ++rows;
    if (line.find("pole") != std::string::npos) ++poles;
    if (line.substr(line.size() - 2) == "ok") ++ok;
  }
  CHECK(rows == 4);
  CHECK(poles == 3);
  CHECK(ok == 1);
}

TEST_CASE("sweep over rho hits the rho = 1 closed form") {
  RunResult r = run_cli(
      "sweep theorem7 --a 1.2 --b 0.9 --N 2 --shape 1,1 --axis rho "
      "--start 0.5 --stop 2.0 --count 16 --format json");
  REQUIRE(r.exit_code == 0);
  json arr = json::parse(r.output);
  REQUIRE(arr.size() == 16);
  bool found = false;
  for (const auto& row : arr) {
    if (std::abs(row.at("rho").get<double>() - 1.0) < 1e-12) {
      found = true;
      SelbergParams p{{1.2, 0.0}, {0.9, 0.0}, {1.0, 0.0}, 2};
      double want = kadell_rho1(p, Partition{2}).real();
      CHECK(row.at("value").at("re").get<double>() ==
            doctest::Approx(want).epsilon(1e-11));
    }
  }
  CHECK(found);
}

TEST_CASE("verify runs a small pinned suite") {
  RunResult r = run_cli(
      "verify theorem7 --N 2 --a 1.0 --b 1.0 --rho 1.0 --format json");
  CHECK(r.exit_code == 0);
  json arr = json::parse(r.output);
  CHECK(arr.size() == 6);  // shapes (n,m) with 0 <= n <= m <= 2
  for (const auto& rep : arr) {
    CHECK(rep.at("pass").get<bool>());
    CHECK(rep.at("tier").get<std::string>() == "exact");
  }
}

TEST_CASE("verify lemmas in the polynomial tier") {
  RunResult r = run_cli(
      "verify lemmas --N 3 --a 1 --b 1 --rho 1 --format json");
  CHECK(r.exit_code == 0);
  json arr = json::parse(r.output);
  REQUIRE(!arr.empty());
  for (const auto& rep : arr) {
    CHECK(rep.at("pass").get<bool>());
    CHECK(rep.at("abs_error").get<double>() <= 1e-12);
  }
}

TEST_CASE("budget override via environment flags cases without aborting") {
  RunResult r = run_cli(
      "verify theorem7 --N 2 --a 1.0 --b 1.0 --rho 0.5 --format json "
      "--budget 50");
  CHECK(r.exit_code == 1);  // cases flagged as failed, run completed
  json arr = json::parse(r.output);
  REQUIRE(!arr.empty());
  bool budget_flagged = false;
  for (const auto& rep : arr)
    if (rep.at("tier").get<std::string>() == "error") budget_flagged = true;
  CHECK(budget_flagged);

  // Same through the environment variable.
  std::string cmd = std::string("SELSCHUR_BUDGET=50 ") + SELSCHUR_CLI_PATH +
                    " verify theorem7 --N 2 --a 1.0 --b 1.0 --rho 0.5 "
                    "--format json >/dev/null 2>/dev/null";
  int rc = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(rc) == 1);
}

TEST_CASE("verification reports round-trip through json") {
  VerificationReport rep;
  rep.formula = "theorem7";
  rep.params = SelbergParams{{1.5, 0.0}, {0.7, 0.25}, {0.6, 0.0}, 3};
  rep.shape = "(2^1 1^1)";
  rep.closed_form = Complex(0.123456789012345, -4.5e-3);
  rep.oracle_value = Complex(0.123456789012340, 0.0);
  rep.abs_error = 5e-15;
  rep.rel_error = 4.05e-14;
  rep.node_count = 1728000;
  rep.region = "unit-cube";
  rep.tier = "smooth";
  rep.pass = true;
  rep.conditions = validate_conditions(rep.params);
  rep.nodes_per_dim = 120;
  rep.seed = 42;
  json j = report_to_json(rep);
  VerificationReport back = report_from_json(j);
  CHECK(back == rep);
  // And the serialized form parses back to the identical json.
  CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("complex literal parsing") {
  CHECK(parse_complex("1.5") == Complex(1.5, 0.0));
  CHECK(parse_complex("0.3+0.2i") == Complex(0.3, 0.2));
  CHECK(parse_complex("-0.3-1e-2i") == Complex(-0.3, -0.01));
  CHECK(parse_complex("2i") == Complex(0.0, 2.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK_THROWS_AS(parse_complex("abc"), std::exception);
}
