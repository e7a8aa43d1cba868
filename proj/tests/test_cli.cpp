#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "subprocess.hpp"

using nlohmann::json;

namespace {

// The unit test target exports BILLIARD_CLI; skip quietly when run bare.
#define REQUIRE_CLI()                                     \
  const std::string cli = quoted_cli_path();              \
  if (cli.empty()) {                                      \
    WARN("BILLIARD_CLI not set, skipping CLI test case"); \
    return;                                               \
  }

}  // namespace

TEST_CASE("crossing reports the analytic count as json") {
  REQUIRE_CLI();
  const auto run = run_command(cli + " crossing --sides 4,3 --point 1,1");
  REQUIRE(run.exit_code == 0);
  const json out = json::parse(run.out);
  CHECK(out["box"] == json::array({4, 3}));
  CHECK(out["scale"] == 1);
  CHECK(out["ell"] == 12);
  CHECK(out["method"] == "csp");
  CHECK(out["convention"] == "visits-exclude-start");
  CHECK(out["point"] == json::array({1, 1}));
  CHECK(out["m"] == 2);
}

TEST_CASE("crossing can cross-check both methods") {
  REQUIRE_CLI();
  const auto run = run_command(cli + " crossing --sides 4,3 --point 1,1 --method both");
  REQUIRE(run.exit_code == 0);
  const json out = json::parse(run.out);
  CHECK(out["agree"] == true);
  CHECK(out["analytic"]["m"] == 2);
  CHECK(out["simulate"]["m"] == 2);
  CHECK(out["analytic"]["ns"].is_number());
}

TEST_CASE("crossing applies the corner convention") {
  REQUIRE_CLI();
  const auto run = run_command(cli + " crossing --sides 2,6 --point 0,0");
  REQUIRE(run.exit_code == 0);
  const json out = json::parse(run.out);
  CHECK(out["m"] == 1);
  CHECK(out["method"] == "corner-convention");
}

TEST_CASE("crossing accepts rational sides and points") {
  REQUIRE_CLI();
  const auto run = run_command(cli + " crossing --sides 1,3/4 --point 1/4,1/4");
  REQUIRE(run.exit_code == 0);
  const json out = json::parse(run.out);
  CHECK(out["box"] == json::array({4, 3}));
  CHECK(out["scale"] == 4);
  CHECK(out["point"] == json::array({1, 1}));
  CHECK(out["m"] == 2);

  // (1/4,1/4) in the 4x3 box is its own query, not a rescaling of (1,1).
  const auto finer = run_command(cli + " crossing --sides 4,3 --point 1/4,1/4");
  REQUIRE(finer.exit_code == 0);
  const json refined = json::parse(finer.out);
  CHECK(refined["box"] == json::array({16, 12}));
  CHECK(refined["scale"] == 4);
  CHECK(refined["m"] == 1);
}

TEST_CASE("simulate emits json, csv and svg") {
  REQUIRE_CLI();
  const auto run = run_command(cli + " simulate --sides 4,3");
  REQUIRE(run.exit_code == 0);
  const json out = json::parse(run.out);
  CHECK(out["t_final"] == 12);
  CHECK(out["method"] == "simulation");
  REQUIRE(out["polyline"].size() == 7);
  CHECK(out["polyline"][0] == json::array({0, 0}));
  CHECK(out["polyline"][6] == json::array({4, 0}));
  CHECK(out["visits"].size() == 9);

  const auto csv = run_command(cli + " simulate --sides 4,3 --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.out.rfind("t,v1,v2\n1,1,1\n", 0) == 0);

  const auto svg = run_command(cli + " simulate --sides 4,3 --format svg --unfolded --color");
  REQUIRE(svg.exit_code == 0);
  CHECK(svg.out.rfind("<?xml", 0) == 0);
  CHECK(svg.out.find("stroke-dasharray") != std::string::npos);

  const auto bad = run_command(cli + " simulate --sides 2,3,5 --format svg");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("times lists the crossing steps") {
  REQUIRE_CLI();
  const auto run = run_command(cli + " times --sides 4,3 --point 1,1");
  REQUIRE(run.exit_code == 0);
  const json out = json::parse(run.out);
  CHECK(out["m"] == 2);
  CHECK(out["times"] == json::array({1, 7}));

  const auto corner = run_command(cli + " times --sides 4,3 --point 0,0");
  CHECK(corner.exit_code == 1);
}

TEST_CASE("verify sweeps one box clean") {
  REQUIRE_CLI();
  const auto run = run_command(cli + " verify --sides 4,3");
  REQUIRE(run.exit_code == 0);
  const json out = json::parse(run.out);
  CHECK(out["boxes_checked"] == 1);
  CHECK(out["points_checked"] == 20);
  CHECK(out["clean"] == true);
  CHECK(out["complete"] == true);
  CHECK(out["mismatches"].empty());
}

TEST_CASE("verify over a family needs bounds") {
  REQUIRE_CLI();
  const auto run = run_command(cli + " verify --max-dim 2 --max-side 3");
  REQUIRE(run.exit_code == 0);
  const json out = json::parse(run.out);
  CHECK(out["boxes_checked"] == 12);
  CHECK(out["box"].is_null());
  CHECK(out["clean"] == true);

  const auto missing = run_command(cli + " verify");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("bounce prints the table and checks it on request") {
  REQUIRE_CLI();
  const auto run = run_command(cli + " bounce --sides 4,3");
  REQUIRE(run.exit_code == 0);
  const json out = json::parse(run.out);
  CHECK(out["method"] == "formula");
  CHECK(out["b"] == json::array({3, 5, 2}));

  const auto checked = run_command(cli + " bounce --sides 4,3 --check");
  REQUIRE(checked.exit_code == 0);
  CHECK(json::parse(checked.out)["agree"] == true);

  const auto wide = run_command(cli + " bounce --sides 2,6");
  REQUIRE(wide.exit_code == 0);
  const json enumerated = json::parse(wide.out);
  CHECK(enumerated["method"] == "enumeration");
  CHECK(enumerated["b"] == json::array({3, 2, 2}));
  CHECK(enumerated.contains("note"));

  CHECK(run_command(cli + " bounce --sides 2,6 --check").exit_code == 1);

  const auto unit = run_command(cli + " bounce --sides 1,1");
  CHECK(json::parse(unit.out)["b"] == json::array({0, 0, 2}));
}

TEST_CASE("bench reports both timings") {
  REQUIRE_CLI();
  const auto run = run_command(cli + " bench --sides 4,3 --point 1,1");
  REQUIRE(run.exit_code == 0);
  const json out = json::parse(run.out);
  CHECK(out["analytic_m"] == 2);
  CHECK(out["simulate_m"] == 2);
  CHECK(out["simulate_skipped"] == false);
  CHECK(out["analytic_ns"].is_number());
}

TEST_CASE("caps come from flags or the environment and refuse with code 3") {
  REQUIRE_CLI();
  CHECK(run_command(cli + " simulate --sides 4,3 --sim-cap 10").exit_code == 3);
  CHECK(run_command("BILLIARD_SIM_CAP=10 " + cli + " simulate --sides 4,3").exit_code == 3);
  CHECK(run_command("BILLIARD_SIM_CAP=12 " + cli + " simulate --sides 4,3").exit_code == 0);
  CHECK(run_command(cli + " crossing --sides 4,3 --point 1,1 --method simulate --sim-cap 10")
            .exit_code == 3);
}

TEST_CASE("bad input exits with code 1") {
  REQUIRE_CLI();
  CHECK(run_command(cli + " crossing --sides 4,3 --point 5,1").exit_code == 1);
  CHECK(run_command(cli + " crossing --sides 4,0 --point 1,1").exit_code == 1);
  CHECK(run_command(cli + " crossing --sides x --point 1,1").exit_code == 1);
  CHECK(run_command(cli + " crossing --sides 4,3 --point 1").exit_code == 1);
  CHECK(run_command(cli + " simulate").exit_code == 1);
  CHECK(run_command(cli).exit_code == 1);
  CHECK(run_command(cli + " --help").exit_code == 0);
}
