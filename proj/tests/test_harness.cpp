#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "cherednik/harness.hpp"

using namespace cherednik;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(P_tmpdir) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("module aliases") {
  CHECK(parse_module_spec("natural:2") == make_natural(2));
  CHECK(parse_module_spec("trivial:3") == make_trivial(3));
  CHECK(parse_module_spec("onedim:1:-1") == make_onedim(1, {Rational(-1)}));
  CHECK(parse_module_spec("onedim:2:1/2,1/2") == make_onedim(2, {Rational(1, 2), Rational(1, 2)}));
  CHECK(parse_module_spec("natural:2*natural:2") == tensor(make_natural(2), make_natural(2)));
  // Unequal weights do not define a gl_2-module.
  CHECK_THROWS_WITH_AS(parse_module_spec("onedim:2:1,0"), doctest::Contains("(1,2,2,1)"), ModuleError);
  CHECK_THROWS_AS(parse_module_spec("natural:x"), ConfigError);
  CHECK_THROWS_AS(parse_module_spec("onedim:2"), ConfigError);
  CHECK_THROWS_AS(parse_module_spec("/no/such/file.json"), ConfigError);
}

TEST_CASE("module JSON files") {
  const std::string good = write_temp("astchk_nat2.json", R"({"m": 2, "dim": 2, "action": [
      [["1","0"],["0","0"]], [["0","1"],["0","0"]], [["0","0"],["1","0"]], [["0","0"],["0","1"]]]})");
  CHECK(parse_module_spec(good) == make_natural(2));
  const std::string bad = write_temp("astchk_bad.json", R"({"m": 2, "dim": 2, "action": [
      [["1","0"],["0","0"]], [["0","1"],["0","0"]], [["0","0"],["2","0"]], [["0","0"],["0","1"]]]})");
  CHECK_THROWS_WITH_AS(parse_module_spec(bad), doctest::Contains("(a,b,c,d)=("), ModuleError);
  const std::string syntax = write_temp("astchk_syntax.json", R"({"m": 2, "dim": )");
  CHECK_THROWS_WITH_AS(parse_module_spec(syntax), doctest::Contains("parse error"), ConfigError);
  const std::string entry = write_temp("astchk_entry.json", R"({"m": 1, "dim": 1, "action": [[["1/0"]]]})");
  CHECK_THROWS_WITH_AS(parse_module_spec(entry), doctest::Contains("action[0][0][0]"), ConfigError);
  const std::string count = write_temp("astchk_count.json", R"({"m": 2, "dim": 1, "action": [[["0"]]]})");
  CHECK_THROWS_WITH_AS(parse_module_spec(count), doctest::Contains("m^2 = 4"), ConfigError);
}

TEST_CASE("config validation and registry") {
  RunConfig c;
  c.suite = "nope";
  CHECK_THROWS_AS(run_suite(c), ConfigError);
  c.suite = "cybe";
  c.kappas.clear();
  CHECK_THROWS_AS(run_suite(c), ConfigError);
  c.kappas = {Rational(1)};
  c.lo = 1;
  c.hi = 0;
  CHECK_THROWS_AS(run_suite(c), ConfigError);
  for (const char* s : {"hecke_en", "hecke_fn", "dunkl_rational", "dunkl_trig", "cybe", "casimir", "affine_jacobi",
                        "affine_rep", "ast_prop15", "ast_lemmas3", "ast_commutator_j", "ast_j_element", "prop15_qw",
                        "thm17", "thm125"})
    CHECK(suite_registry().count(s) == 1);
}

TEST_CASE("reports") {
  RunConfig c;
  c.suite = "dunkl_rational";
  c.N = 3;
  c.degree = 3;
  c.format = "json";
  const auto rep = run_suite(c);
  CHECK(rep.passed());
  const auto j = nlohmann::json::parse(emit_report(rep, c));
  CHECK(j["status"] == "pass");
  CHECK(j["suite"] == "dunkl_rational");
  CHECK(j["config"]["kappa"] == "1,5/2,-7/3");
  CHECK(j["total_instances"].get<long>() == rep.total_instances());
  CHECK(j["failures"].empty());
  CHECK(run_suite(c) == rep);

  RunConfig f;
  f.suite = "thm125";
  f.m = 1;
  f.n = 1;
  f.bound_shift = 1;
  f.format = "json";
  const auto bad = run_suite(f);
  CHECK_FALSE(bad.passed());
  const auto jb = nlohmann::json::parse(emit_report(bad, f));
  CHECK(jb["status"] == "fail");
  REQUIRE_FALSE(jb["failures"].empty());
  CHECK(jb["failures"][0].contains("expected"));

  f.expect_fail = true;
  const auto expected = run_suite(f);
  CHECK(expected.passed());
  CHECK(expected.params.count("witness") == 1);
  f.bound_shift = 0;
  CHECK_FALSE(run_suite(f).passed());

  f.format = "text";
  f.expect_fail = false;
  CHECK(emit_report(run_suite(f), f).find("suite thm125: PASS") == 0);
}
