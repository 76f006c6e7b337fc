#include "doctest.h"
#include "designforge/atlas.hpp"
#include "designforge/aut_design.hpp"

using namespace designforge;

namespace {

Method2Design psl29_involutions() {
  const PermGroup G = build_psl2(9), M = embed_pgl2(3, UnipotentClass::Squared);
  return method2_design({G, M, element_of_order(M, 2)});
}

}  // namespace

TEST_CASE("S(I) order and generators") {
  const IncidenceStructure D(6, {{0, 1, 2, 3}, {2, 3, 4, 5}, {0, 1, 4, 5}});
  const ReducedStructure R = reduce_design(D);
  CHECK(s_of_i_order(R) == 8);
  const auto gens = s_of_i_generators(R);
  CHECK(PermGroup(6, gens).order() == 8);
  const auto sigma = Permutation::from_cycles(3, {{0, 1}});
  const Permutation lifted = expand_quotient_map(R, sigma);
  CHECK(lifted == Permutation::from_cycles(6, {{0, 2}, {1, 3}}));
  CHECK(D.is_automorphism(lifted));
  CHECK_THROWS_AS(expand_quotient_map(R, Permutation(4)), InvalidArgument);
}

TEST_CASE("quotient theorem on the PSL(2,9) involution design") {
  const Method2Design D = psl29_involutions();
  const ReducedStructure R = reduce_design(D.design);
  const auto rep = verify_quotient_theorem(D.design, R);
  CHECK(rep.pass());
  CHECK(rep.quotient_aut_order == 720);
  CHECK(rep.s_of_i == BigInt(470184984576ULL));  // 6^15
  REQUIRE(rep.block_kernel_is_s_of_i);
  CHECK(*rep.block_kernel_is_s_of_i);
}

TEST_CASE("lifting maps on PSL(2,9)") {
  const Method2Design D = psl29_involutions();
  const Permutation frob = frobenius_on_projline(9, 1);
  CHECK(normalizing_map_check(D.G, frob));
  const LiftResult f = lift_test_method2(D, frob);
  CHECK(f.lifts());
  CHECK(f.automorphism);
  const LiftResult d = lift_test_method2(D, diagonal_outer_on_projline(9));
  CHECK(d.normalizes);
  CHECK_FALSE(d.lifts());
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const LiftResult r = lift_test_method2(D, D.G.random_element(rng));
    CHECK(r.lifts());
    CHECK(r.automorphism);
  }
  CHECK_FALSE(normalizing_map_check(D.G, Permutation::from_cycles(10, {{0, 1}})));
  const auto pm = induced_point_map(D, frob);
  REQUIRE(pm);
  CHECK(verify_s_i_intersection(D.design, {*pm}).pass());
}

TEST_CASE("method 1 lifts through a coset action") {
  const PermGroup A6 = build_alternating(6);
  const CosetAction coset(A6, build_group(recipes::a6_s4_second_class()));
  const Method1Design D = method1_design({coset.action(), 0, 8, 0});
  const LiftResult t = lift_test_method1(D, A6, coset, Permutation::from_cycles(6, {{0, 1}}));
  CHECK(t.normalizes);
  CHECK(t.lifts() == t.automorphism);
  const Method1Design P = method1_design({A6, 0, 5, 0});
  CHECK(lift_test_method1(P, Permutation::from_cycles(6, {{0, 1}})).lifts());
}
