#include "doctest.h"
#include "designforge/case_studies.hpp"

using namespace designforge;

TEST_CASE("claim log") {
  ClaimLog log;
  CHECK(log.check("a", 1, 1));
  CHECK_FALSE(log.check("b", 1, 2));
  log.note("c", 0, 5, false);
  CHECK_FALSE(log.all_pass());
  CHECK(log.get("c").informational);
  CHECK_THROWS_AS(log.get("missing"), NotFound);
  ClaimLog ok;
  ok.check("x", "7", "7");
  ok.note("y", 1, 2, false);
  CHECK(ok.all_pass());
  ClaimLog merged;
  merged.append(ok, "p ");
  CHECK(merged.get("p x").pass);
  const auto j = make_report("cmd", 9, nlohmann::json::object(), ok);
  CHECK(j["schema_version"] == 1);
  CHECK(j["seed"] == 9);
  CHECK(j["all_pass"] == true);
  CHECK(j["claim_checks"].size() == 2);
}

TEST_CASE("permutation character formula values") {
  // PGL(2,3) in PSL(2,9): index q(q^2+1)/2 = 15.
  CHECK(psl_perm_char_formula(3, 1, true, false, false) == 15);
  CHECK(psl_perm_char_formula(3, 2, false, false, false) == 3);
  CHECK(psl_perm_char_formula(3, 3, false, true, false) == 3);
  CHECK(psl_perm_char_formula(3, 3, false, false, false) == 0);
}

TEST_CASE("minimal block of a dihedral action") {
  // D8 on the square's corners: {0,2} is a block.
  const std::vector<Permutation> gens{Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                                      Permutation::from_cycles(4, {{1, 3}})};
  const auto B = minimal_block(4, gens, {2});
  REQUIRE(B);
  CHECK(*B == std::vector<Point>{0, 2});
  CHECK_FALSE(minimal_block(4, gens, {1}).has_value());
}

TEST_CASE("stabilizer report on the M22 order-3 design") {
  const MathieuRow r = run_mathieu_row(22, 3);
  CHECK(r.claims.all_pass());
  REQUIRE(r.stab);
  CHECK(r.stab->pass());
  CHECK(r.stab->s_order == 72);
  CHECK(r.block_stabilizer_order == 72);
  CHECK(r.dual_block_system == std::optional<std::size_t>{4});
}

TEST_CASE("PSL(2,9) involution example") {
  ClaimLog log;
  run_psl29_involution_example(log);
  CHECK(log.all_pass());
  CHECK(log.get("PSL(2,9)/S4 involutions AD(G) order").observed == "720");
}

TEST_CASE("Mathieu expectations") {
  CHECK(mathieu_expected(24, 2).block_stabilizer_order == 322560);
  CHECK(mathieu_expected(23, 3).lambda_t == 16);
  CHECK_THROWS_AS(mathieu_expected(21, 2), InvalidArgument);
}
