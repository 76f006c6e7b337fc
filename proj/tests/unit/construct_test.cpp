#include "doctest.h"
#include "designforge/aut_design.hpp"
#include "designforge/case_studies.hpp"

using namespace designforge;

TEST_CASE("method 1 on A6 and on the cosets of S4") {
  const PermGroup A6 = build_alternating(6);
  const Method1Design D = method1_design({A6, 0, 5, 0});
  CHECK(D.params == DesignParams{1, 6, 6, 5, 5, 5});
  CHECK(faithfulness_check(D));
  const CosetAction coset(A6, build_group(recipes::a6_s4_second_class()));
  CHECK(coset.degree() == 15);
  const Method1Design E = method1_design({coset.action(), 0, 8, 0});
  CHECK(E.params.v == 15);
  CHECK(E.params.k == 8);
  CHECK(E.params.lambda == 8);
  for (std::size_t j = 0; j < E.design.b(); ++j)
    CHECK(image_of_set(E.delta, E.block_reps[j]) == E.design.block(j));
  CHECK_THROWS_AS(method1_design({A6, 0, 4, 0}), InvalidArgument);
}

TEST_CASE("stabilizer orbits of PSL(2,27) on the cosets of D26") {
  const PermGroup G = build_psl2(27);
  const CosetAction coset(G, build_group(recipes::normalizer_of_cyclic(recipes::psl2(27), 13)));
  CHECK(coset.degree() == 378);
  std::map<std::size_t, int> lens;
  for (const auto& o : stabilizer_orbits(coset.action(), 0)) ++lens[o.size()];
  CHECK(lens == std::map<std::size_t, int>{{1, 1}, {13, 13}, {26, 8}});
}

TEST_CASE("method 2 on PSL(2,9) with the squared S4 and an involution") {
  const PermGroup G = build_psl2(9), M = embed_pgl2(3, UnipotentClass::Squared);
  const Permutation g = element_of_order(M, 2);
  const Method2Design D = method2_design({G, M, g});
  CHECK(D.params.v == 45);
  CHECK(D.params.b == 15);
  CHECK(D.params.k == 9);
  CHECK(D.params.lambda == 3);
  CHECK(perm_char_value_by_class(G, M, g) == 3);
  CHECK(perm_char_value(CosetAction(G, M), g) == 3);
  CHECK(faithfulness_check(D));
  // Block j is the part of the class inside M^y with y = block_reps[j].
  for (std::size_t j = 0; j < D.design.b(); ++j) {
    const Permutation yinv = D.block_reps[j].inverse();
    std::size_t inside = 0;
    for (std::size_t x = 0; x < D.cls.size(); ++x) inside += M.contains(D.cls[x].conjugate_by(yinv));
    CHECK(inside == D.design.block(j).size());
    for (Point x : D.design.block(j)) CHECK(M.contains(D.cls[x].conjugate_by(yinv)));
  }
  CHECK_THROWS_AS(method2_design({G, M, Permutation(G.degree())}), InvalidArgument);
}

TEST_CASE("classes of G meeting M") {
  const PermGroup G = build_psl2(9), M = embed_pgl2(3, UnipotentClass::Squared);
  const auto reps = g_classes_meeting(G, M);
  // S4 has elements of orders 2, 3, 4; in PSL(2,9) the order-3 elements of
  // S4 fall in one class, and so do the two involution classes of S4.
  std::vector<std::uint64_t> orders;
  for (const auto& r : reps) orders.push_back(r.order());
  CHECK(orders == std::vector<std::uint64_t>{2, 3, 4});
}

TEST_CASE("projective line and unipotent classification") {
  const ProjectiveLine line(Field::make(3, 2));
  CHECK(line.size() == 10);
  const Permutation u = line.mobius({line.field().one(), line.field().one(), line.field().zero(), line.field().one()});
  CHECK(u.order() == 3);
  CHECK(classify_unipotent(line, u) == UnipotentClass::Squared);
  const FieldElem nu = line.field().primitive_element();
  const Permutation w = line.mobius({line.field().one(), nu, line.field().zero(), line.field().one()});
  CHECK(classify_unipotent(line, w) == UnipotentClass::NonSquared);
  CHECK_FALSE(classify_unipotent(line, Permutation(10)).has_value());
  CHECK(prime_power(49) == std::pair<std::uint32_t, std::uint32_t>{7, 2});
  CHECK_THROWS_AS(prime_power(12), InvalidArgument);
}

TEST_CASE("group recipes round trip through JSON") {
  for (const GroupRecipe& r : {recipes::psl2(9), recipes::pgl2_in_psl2sq(3, UnipotentClass::NonSquared),
                               recipes::point_stabilizer(recipes::mathieu(22), 0), recipes::a6_s4_second_class(),
                               recipes::normalizer_of_cyclic(recipes::psl2(27), 13)}) {
    const GroupRecipe back = GroupRecipe::from_json(r.to_json());
    CHECK(back.to_json() == r.to_json());
    CHECK(build_group(back).order() == build_group(r).order());
  }
  CHECK(build_group(recipes::point_stabilizer(recipes::mathieu(22), 0)).order() == 20160);
}
