#include "doctest.h"

#include <sstream>

#include "../tools/cli.hpp"
#include "a1deg/bezout.hpp"
#include "a1deg/modular.hpp"
#include "a1deg/serialize.hpp"

using namespace a1deg;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  Result r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("degree of the level 3 hauptmodul map") {
  Result r = run({"degree", "rational-map", "--map", "(t+27)*(t+3)^3/t"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, r.out.find('\n')) == "2(⟨1⟩ + ⟨−1⟩)");
}

TEST_CASE("modular X0(11)") {
  Result r = run({"modular", "--family", "x0", "--level", "11"});
  CHECK(r.code == 0);
  CHECK(r.out == "X0(11): degree 12, profile all_double, A1 degree 6(⟨1⟩ + ⟨−1⟩)\n");
  Json j = run_json({"modular", "--family", "x0", "--level", "11"});
  CHECK(j["degree"] == 12);
  CHECK(j["profile"] == "all_double");
  CHECK(j["a1_degree"]["hyperbolic_multiple"] == 6);
}

TEST_CASE("gw simplify") {
  Result r = run({"gw", "simplify", "--diagonal", "1,-1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "hyperbolic_multiple: 1"));
  Json j = run_json({"gw", "simplify", "--diagonal", "1,-1"});
  CHECK(j["hyperbolic_multiple"] == 1);
  Json k = run_json({"gw", "simplify", "--diagonal", "2,3,6,-1"});
  CHECK(k["hyperbolic_multiple"].is_null());
  CHECK(gw_from_json(k) == GWClass(BaseField::rationals(), {2, 3, 6, -1}));
}

TEST_CASE("ascii output") {
  Result r = run({"--ascii", "degree", "rational-map", "--map", "t^2"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, r.out.find('\n')) == "<1> + <-1>");
}

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"bezout"}).code == 2);
  CHECK(run({"bezout", "--map", "(t+"}).code == 2);
  CHECK(run({"modular", "--family", "x7", "--level", "3"}).code == 2);
  CHECK(run({"--field", "Fp:9", "bezout", "--map", "t^2"}).code == 2);

  Result nonlocal = run({"ekl", "--system", "x*y;x", "--vars", "x,y"});
  CHECK(nonlocal.code == 1);
  CHECK(nonlocal.out.empty());
  CHECK(!nonlocal.err.empty());
  CHECK(run({"bezout", "--map", "t/t"}).code == 1);
  CHECK(run({"modular", "--family", "x1", "--level", "2"}).code == 1);
}

TEST_CASE("errors are structured in JSON mode") {
  std::ostringstream out, err;
  int code = cli::run({"--json", "ekl", "--system", "x*y;x", "--vars", "x,y"}, out, err);
  CHECK(code == 1);
  Json j = Json::parse(out.str().empty() ? err.str() : out.str());
  CHECK(j.contains("error"));
}

TEST_CASE("bezout subcommand") {
  Json j = run_json({"bezout", "--map", "(t+27)*(t+3)^3/t"});
  CHECK(j["matrix"] == matrix_to_json(bezout_matrix(RationalMap::parse("(t+27)*(t+3)^3/t")).entries()));
  CHECK(j["class"]["hyperbolic_multiple"] == 2);

  Json f = run_json({"--field", "Fp:5", "bezout", "--map", "t^2+2"});
  CHECK(f["class"]["field"] == "Fp:5");
}

TEST_CASE("ekl and trace subcommands") {
  Json e = run_json({"ekl", "--system", "y^2-x^3+x;x", "--vars", "x,y"});
  CHECK(e["dimension"] == 2);
  CHECK(e["class"]["hyperbolic_multiple"] == 1);
  Json ej = run_json({"ekl", "--system", "y^2-x^3+x;x", "--vars", "x,y", "--normalization", "jacobian"});
  CHECK(ej["class"] == e["class"]);

  Json t = run_json({"trace", "--minpoly", "a^2-2", "--gram", "0,1;1,0"});
  CHECK(t["class"]["hyperbolic_multiple"] == 2);
}

TEST_CASE("JSON class output round-trips") {
  for (const auto& entry : hauptmodul_catalog()) {
    const std::string map = entry.map.to_string();
    Json j = run_json({"degree", "rational-map", "--map", map});
    Json c = j.contains("class") ? j["class"] : j;
    GWClass x = gw_from_json(c);
    CHECK(gw_to_json(x) == c);
    CHECK(x == global_a1_degree(entry.map));
  }
}

TEST_CASE("--via local agrees with the Bezout route on the catalog") {
  for (const auto& entry : hauptmodul_catalog()) {
    const std::string map = entry.map.to_string();
    Result a = run({"degree", "rational-map", "--map", map});
    Result b = run({"degree", "rational-map", "--map", map, "--via", "local"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out.substr(0, a.out.find('\n')) == b.out.substr(0, b.out.find('\n')));
    Json ja = run_json({"degree", "rational-map", "--map", map});
    Json jb = run_json({"degree", "rational-map", "--map", map, "--via", "local"});
    Json ca = ja.contains("class") ? ja["class"] : ja;
    Json cb = jb.contains("class") ? jb["class"] : jb;
    CHECK(gw_equal(gw_from_json(ca), gw_from_json(cb)));
  }
}

TEST_CASE("range output is ordered by level") {
  Result r = run({"modular", "--family", "x0", "--range", "2..40"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  long expected = 2;
  while (std::getline(lines, line)) {
    if (line.rfind("X0(", 0) != 0) continue;
    CHECK(line.rfind("X0(" + std::to_string(expected) + ")", 0) == 0);
    ++expected;
  }
  CHECK(expected == 41);

  Json j = run_json({"modular", "--family", "full", "--range", "2..12"});
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 11);
  for (std::size_t i = 0; i < j.size(); ++i) CHECK(j[i]["N"] == static_cast<long>(i + 2));
}

TEST_CASE("catalog") {
  Result r = run({"catalog"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "X0(3) standard:"));
  CHECK(contains(r.out, "class 2(⟨1⟩ + ⟨−1⟩)"));
  Json j = run_json({"catalog", "--check"});
  CHECK(j["x0_11"]["proportional"] == true);
  CHECK(j["x0_11"]["conclusion"]["hyperbolic_multiple"] == 6);
  CHECK(j["cross_checks"].size() == 3);
}
