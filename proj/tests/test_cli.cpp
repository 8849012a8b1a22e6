#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "support.hpp"

using testsupport::data_file;
using testsupport::run_cli;

TEST_CASE("poly prints the polynomial and a value table") {
  auto r = run_cli("poly " + data_file("mixed_triangle.graph"));
  REQUIRE(r.exit_code == 0);
  REQUIRE_THAT(r.output,
               Catch::Matchers::ContainsSubstring("1/6*k^3 + 1/2*k^2 - 2/3*k"));
  REQUIRE_THAT(r.output, Catch::Matchers::ContainsSubstring("k=2: 2"));
  REQUIRE_THAT(r.output, Catch::Matchers::ContainsSubstring("k=3: 7"));
  REQUIRE_THAT(r.output, Catch::Matchers::ContainsSubstring("k=4: 16"));
}

TEST_CASE("poly handles strong semantics and dot input") {
  auto strong = run_cli("poly --strong " + data_file("single_arc.graph"));
  REQUIRE(strong.exit_code == 0);
  REQUIRE_THAT(strong.output,
               Catch::Matchers::ContainsSubstring("1/2*k^2 - 1/2*k"));

  auto empty = run_cli("poly " + data_file("isolated3.graph"));
  REQUIRE(empty.exit_code == 0);
  REQUIRE_THAT(empty.output, Catch::Matchers::ContainsSubstring("k^3"));

  auto dot = run_cli("poly --format dot " + data_file("mixed_triangle.dot"));
  REQUIRE(dot.exit_code == 0);
  REQUIRE_THAT(dot.output,
               Catch::Matchers::ContainsSubstring("1/6*k^3 + 1/2*k^2 - 2/3*k"));
}

TEST_CASE("poly emits schema-stable JSON") {
  auto r = run_cli("poly --json " + data_file("mixed_triangle.graph"));
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  REQUIRE(j["command"] == "poly");
  REQUIRE(j.contains("input"));
  REQUIRE(j["polynomial"] ==
          nlohmann::json::array({"0", "-2/3", "1/2", "1/6"}));
  REQUIRE(j["rows"][1] == nlohmann::json::array({2, "2"}));
  for (auto& [key, value] : j.items())
    REQUIRE((key == "command" || key == "input" || key == "polynomial" ||
             key == "rows" || key == "verdict" || key == "failures"));
}

TEST_CASE("eval evaluates at arbitrary integers") {
  auto r = run_cli("eval " + data_file("mixed_triangle.graph") + " -k -2");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output == "2\n");

  auto s = run_cli("eval " + data_file("mixed_triangle.graph") + " -k -2 --signed");
  REQUIRE(s.exit_code == 0);
  REQUIRE(s.output == "2\n-2\n");

  auto three = run_cli("eval " + data_file("mixed_triangle.graph") + " -k 3");
  REQUIRE(three.output == "7\n");

  auto zero = run_cli("eval " + data_file("mixed_triangle.graph") + " -k 0");
  REQUIRE(zero.output == "0\n");
  auto zero2 = run_cli("eval " + data_file("edge_arc_path.graph") + " -k 0");
  REQUIRE(zero2.output == "0\n");
}

TEST_CASE("orientations lists both orientations with acyclicity flags") {
  auto r = run_cli("orientations " + data_file("mixed_triangle.graph"));
  REQUIRE(r.exit_code == 0);
  REQUIRE_THAT(r.output, Catch::Matchers::ContainsSubstring("[cyclic]"));
  REQUIRE_THAT(r.output, Catch::Matchers::ContainsSubstring("[acyclic]"));
  REQUIRE(std::count(r.output.begin(), r.output.end(), '\n') == 2);

  auto only = run_cli("orientations --acyclic-only " +
                      data_file("mixed_triangle.graph"));
  REQUIRE(std::count(only.output.begin(), only.output.end(), '\n') == 1);

  auto counted = run_cli("orientations --acyclic-only -k 2 " +
                         data_file("mixed_triangle.graph"));
  REQUIRE_THAT(counted.output,
               Catch::Matchers::ContainsSubstring("intercompatible(k=2)=0"));

  auto lone = run_cli("orientations " + data_file("single_arc.graph"));
  REQUIRE(std::count(lone.output.begin(), lone.output.end(), '\n') == 1);
}

TEST_CASE("reciprocity verdicts drive the exit code") {
  auto pass = run_cli("reciprocity " + data_file("single_arc.graph") + " --kmax 3");
  REQUIRE(pass.exit_code == 0);
  REQUIRE_THAT(pass.output, Catch::Matchers::ContainsSubstring("verdict: PASS"));

  auto forced = run_cli("reciprocity " + data_file("mixed_triangle.graph") +
                        " --force --kmax 2");
  REQUIRE(forced.exit_code == 1);
  REQUIRE_THAT(forced.output,
               Catch::Matchers::ContainsSubstring("k=2: lhs=-2 rhs=0 FAIL"));

  auto refused = run_cli("reciprocity " + data_file("mixed_triangle.graph"));
  REQUIRE(refused.exit_code == 2);
  REQUIRE_THAT(refused.output,
               Catch::Matchers::ContainsSubstring("not an acyclic mixed graph"));

  auto strong = run_cli("reciprocity --strong " + data_file("mixed_triangle.graph"));
  REQUIRE(strong.exit_code == 0);
}

TEST_CASE("order-poly prints both polynomials and the check table") {
  auto r = run_cli("order-poly " + data_file("two_chain.poset"));
  REQUIRE(r.exit_code == 0);
  REQUIRE_THAT(r.output,
               Catch::Matchers::ContainsSubstring("1/2*k^2 + 1/2*k"));
  REQUIRE_THAT(r.output,
               Catch::Matchers::ContainsSubstring("1/2*k^2 - 1/2*k"));
  REQUIRE_THAT(r.output, Catch::Matchers::ContainsSubstring("verdict: PASS"));

  auto anti = run_cli("order-poly " + data_file("antichain2.poset"));
  REQUIRE(anti.exit_code == 0);
  REQUIRE(anti.output.find("k^2") != std::string::npos);
  REQUIRE(anti.output.find("k^2", anti.output.find("k^2") + 1) !=
          std::string::npos);

  auto bad = run_cli("order-poly " + data_file("cycle_rel.poset"));
  REQUIRE(bad.exit_code == 2);
  REQUIRE_THAT(bad.output, Catch::Matchers::ContainsSubstring("antisymmetry"));
}

TEST_CASE("verify sweeps and exit codes") {
  auto weak = run_cli("verify --theorem weak -n 3 --kmax 3");
  REQUIRE(weak.exit_code == 0);
  REQUIRE_THAT(weak.output, Catch::Matchers::ContainsSubstring("failures: 0"));

  auto strong = run_cli("verify --theorem strong -n 3 --kmax 3");
  REQUIRE(strong.exit_code == 0);
  REQUIRE_THAT(strong.output, Catch::Matchers::ContainsSubstring("universe: 64"));

  auto order = run_cli("verify --theorem stanley-order -n 3 --kmax 3 --json");
  REQUIRE(order.exit_code == 0);
  auto j = nlohmann::json::parse(order.output);
  REQUIRE(j["verdict"] == true);
  REQUIRE(j["failures"].empty());

  auto bad_n = run_cli("verify --theorem weak -n 5");
  REQUIRE(bad_n.exit_code == 2);
  auto bad_theorem = run_cli("verify --theorem nonsense");
  REQUIRE(bad_theorem.exit_code == 2);
  auto missing = run_cli("verify");
  REQUIRE(missing.exit_code == 2);
}

TEST_CASE("parse failures exit with code 2") {
  auto attr = run_cli("poly --format dot " + data_file("attr.dot"));
  REQUIRE(attr.exit_code == 2);
  REQUIRE_THAT(attr.output, Catch::Matchers::ContainsSubstring("attribute"));

  auto missing = run_cli("poly /nonexistent/file.graph");
  REQUIRE(missing.exit_code == 2);

  auto usage = run_cli("frobnicate");
  REQUIRE(usage.exit_code == 2);
}
