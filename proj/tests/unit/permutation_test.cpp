#include "doctest.h"
#include "designforge/errors.hpp"
#include "designforge/permutation.hpp"

using namespace designforge;

TEST_CASE("products act on the right") {
  const auto g = Permutation::from_cycles(4, {{0, 1}});
  const auto h = Permutation::from_cycles(4, {{1, 2}});
  // 0 -> 1 under g, then 1 -> 2 under h.
  CHECK((g * h)[0] == 2);
  CHECK((h * g)[0] == 1);
  CHECK(g.conjugate_by(h) == Permutation::from_cycles(4, {{0, 2}}));
}

TEST_CASE("inverse, power and order") {
  const auto g = Permutation::from_cycles(7, {{0, 1, 2}, {3, 4}});
  CHECK(g.order() == 6);
  CHECK((g * g.inverse()).is_identity());
  CHECK(g.pow(6).is_identity());
  CHECK(g.pow(-1) == g.inverse());
  CHECK(g.pow(4) == g * g * g * g);
  CHECK(g.fixed_point_count() == 2);
  CHECK(g.cycle_type() == std::vector<std::size_t>{1, 1, 2, 3});
  CHECK(g.to_cycle_string() == "(1,2,3)(4,5)");
  CHECK(g.to_cycle_string(false) == "(0,1,2)(3,4)");
  CHECK(Permutation(3).to_cycle_string() == "()");
  CHECK(Permutation(3).first_moved_point() == 3);
}

TEST_CASE("invalid image lists are rejected") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3}), InvalidPermutation);
}

TEST_CASE("image of a set is sorted") {
  const auto g = Permutation::from_cycles(5, {{0, 4}, {1, 2}});
  CHECK(image_of_set(std::vector<Point>{0, 1}, g) == std::vector<Point>{2, 4});
}
