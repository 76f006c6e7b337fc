#include "doctest.h"
#include "../property_suites.hpp"

using namespace designforge;

TEST_CASE("Fano plane has automorphism group of order 168") {
  std::vector<Block> blocks;
  for (Point i = 0; i < 7; ++i) blocks.push_back({i, (i + 1) % 7, (i + 3) % 7});
  const AutResult A = aut_group(IncidenceStructure(7, blocks));
  CHECK(A.complete);
  CHECK(A.order == 168);
  CHECK(A.point_transitive);
  CHECK(A.block_transitive);
}

TEST_CASE("repeated blocks contribute a separate factor") {
  const IncidenceStructure D(3, {{0, 1}, {0, 1}, {0, 1}, {2}});
  const AutResult A = aut_group(D);
  CHECK(A.order == 2);
  CHECK(A.repeated_block_factor == 6);
}

TEST_CASE("complete design: every k-subset") {
  std::vector<Block> blocks;
  for (Point a = 0; a < 6; ++a)
    for (Point b = a + 1; b < 6; ++b)
      for (Point c = b + 1; c < 6; ++c) blocks.push_back({a, b, c});
  CHECK(aut_group(IncidenceStructure(6, blocks)).order == 720);
}

TEST_CASE("tiny budget stops the search") {
  std::vector<Block> blocks;
  for (Point i = 0; i < 7; ++i) blocks.push_back({i, (i + 1) % 7, (i + 3) % 7});
  const AutResult A = aut_group(IncidenceStructure(7, blocks), 1);
  CHECK_FALSE(A.complete);
}

TEST_CASE("aut search against brute force on random small structures") {
  const auto r = testing::aut_vs_brute_suite(13, 1000);
  INFO(r.first_failure());
  CHECK(r.ok());
}
