#include "balcat/cli/commands.hpp"
#include "doctest.h"

using namespace balcat;

namespace {

std::string data(const std::string& name) { return std::string(BALCAT_TEST_DATA) + "/" + name; }

const Check* find_check(const RunReport& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("balanced-product simple counts") {
  ProductOptions o;
  o.sweep = 3;
  SUBCASE("k[Z2] over Q") {
    const RunReport r = cmd_balanced_product(o);
    CHECK(r.passed());
    CHECK(r.results.at("simples") == 2);
    CHECK(r.results.at("simples") == r.results.at("group").at("classes"));
    CHECK(r.results.at("hom_formula_sweep").at("agreed") == 3);
  }
  SUBCASE("k[S3] over Q") {
    o.group = "symmetric:3";
    const RunReport r = cmd_balanced_product(o);
    CHECK(r.passed());
    CHECK(r.results.at("simples") == 3);
  }
  SUBCASE("unit algebras give |K|") {
    o.algebra_a = o.algebra_b = "unit";
    for (const auto& [g, f, n] : {std::tuple{"cyclic:3", "Fp:7", 3}, std::tuple{"symmetric:3", "Q", 6},
                                  std::tuple{"cyclic:1", "Q", 1}}) {
      o.group = g;
      o.field = f;
      const RunReport r = cmd_balanced_product(o);
      CHECK(r.passed());
      CHECK(r.results.at("simples") == n);
    }
  }
  SUBCASE("no count without a splitting field") {
    o.group = "cyclic:3";
    const RunReport r = cmd_balanced_product(o);
    CHECK(r.passed());
    CHECK(r.results.at("splitting_asserted") == false);
    CHECK(r.results.at("simples").is_null());
  }
  SUBCASE("algebra files") {
    o.group = data("z2_group.json");
    o.algebra_a = data("z2_group_algebra.json");
    o.splitting = "yes";
    const RunReport r = cmd_balanced_product(o);
    CHECK(r.passed());
    CHECK(r.results.at("simples") == 2);
  }
  SUBCASE("bad flags") {
    o.field = "Fp:8";
    CHECK_THROWS_AS(cmd_balanced_product(o), InputError);
    o.field = "R";
    CHECK_THROWS_AS(cmd_balanced_product(o), InputError);
    o.field = "Q";
    o.group = "dihedral:4";
    CHECK_THROWS_AS(cmd_balanced_product(o), InputError);
    o.group = data("bad_group.json");
    CHECK_THROWS_AS(cmd_balanced_product(o), InputError);
    o.group = "cyclic:2";
    o.splitting = "maybe";
    CHECK_THROWS_AS(cmd_balanced_product(o), InputError);
  }
}

TEST_CASE("verify") {
  SUBCASE("all scopes pass") {
    const RunReport r = cmd_verify(VerifyOptions{});
    CHECK(r.passed());
    CHECK(r.to_json().at("verdict") == "pass");
  }
  SUBCASE("the balanced scope covers coherence, hom formula and round trips") {
    const RunReport r = cmd_verify(VerifyOptions{Scope::balanced, 3, false});
    CHECK(r.passed());
    CHECK(find_check(r, "balanced/S3/Q/pentagon_triangle"));
    CHECK(find_check(r, "balanced/Z3/F7/hom_formula"));
    CHECK(find_check(r, "balanced/Z2/Q/round_trip_and_coequalizer"));
    CHECK_FALSE(find_check(r, "linalg/"));
  }
  SUBCASE("an injected fault is caught and named") {
    for (Scope s : {Scope::linalg, Scope::algebra, Scope::balanced}) {
      const RunReport r = cmd_verify(VerifyOptions{s, 1, true});
      CHECK_FALSE(r.passed());
      const Check* c = find_check(r, "reference/");
      REQUIRE(c);
      CHECK_FALSE(c->passed);
      CHECK(c->detail.find("e_1") != std::string::npos);
    }
    const RunReport r = cmd_verify(VerifyOptions{Scope::algebra, 1, true});
    CHECK_FALSE(find_check(r, "algebra/Z2/Q/axioms")->passed);
    CHECK(find_check(r, "algebra/S3/Q/axioms")->passed);
  }
  SUBCASE("reports are deterministic") {
    const VerifyOptions o{Scope::modcat, 11, false};
    CHECK(cmd_verify(o).to_json(false).dump() == cmd_verify(o).to_json(false).dump());
    CHECK(cmd_verify(o).to_json(false).dump() != cmd_verify(VerifyOptions{Scope::modcat, 12, false}).to_json(false).dump());
  }
  SUBCASE("scope names") {
    CHECK(parse_scope("graded") == Scope::graded);
    CHECK_FALSE(parse_scope("everything"));
  }
}

TEST_CASE("homcheck") {
  HomcheckOptions o;
  SUBCASE("regulars over k[Z2] from files") {
    o.x = o.x2 = data("z2_regular_left.json");
    o.y = o.y2 = data("z2_regular_right.json");
    const RunReport r = cmd_homcheck(o);
    CHECK(r.passed());
    CHECK(r.results.at("lhs") == 2);
    CHECK(r.results.at("rhs") == 2);
  }
  SUBCASE("x' = 0") {
    o.x2 = data("z2_zero_left.json");
    const RunReport r = cmd_homcheck(o);
    CHECK(r.passed());
    CHECK(r.results.at("lhs") == 0);
    CHECK(r.results.at("rhs") == 0);
  }
  SUBCASE("regulars over k[S3]") {
    o.group = "symmetric:3";
    const RunReport r = cmd_homcheck(o);
    CHECK(r.results.at("lhs") == 6);
    CHECK(r.results.at("rhs") == 6);
  }
  SUBCASE("mismatches") {
    o.x = data("z2_regular_right.json");
    CHECK_THROWS_AS(cmd_homcheck(o), InputError);
    o.x = data("z2_regular_left.json");
    o.group = "cyclic:3";
    CHECK_THROWS_AS(cmd_homcheck(o), InputError);
  }
  SUBCASE("syntax errors carry line and column") {
    o.x = data("malformed.json");
    try {
      cmd_homcheck(o);
      FAIL("no error");
    } catch (const InputError& e) {
      const std::string what = e.what();
      CHECK(what.find("malformed.json:4:10:") != std::string::npos);
    }
    o.x = data("missing.json");
    CHECK_THROWS_AS(cmd_homcheck(o), InputError);
  }
}
