#include <random>

#include "doctest.h"
#include "designforge/design.hpp"
#include "designforge/design_io.hpp"
#include "designforge/errors.hpp"

using namespace designforge;

namespace {

// The Fano plane: lines {i, i+1, i+3} mod 7.
IncidenceStructure fano() {
  std::vector<Block> blocks;
  for (Point i = 0; i < 7; ++i) blocks.push_back({i, (i + 1) % 7, (i + 3) % 7});
  return IncidenceStructure(7, blocks);
}

}  // namespace

TEST_CASE("Fano plane parameters") {
  const auto D = fano();
  const DesignParams P = validate_1design(D);
  CHECK(P.v == 7);
  CHECK(P.b == 7);
  CHECK(P.k == 3);
  CHECK(P.lambda == 3);
  const auto t2 = t_design_lambda(D, 2);
  CHECK(t2.uniform);
  CHECK(t2.lambda == 1);
  CHECK_FALSE(t_design_lambda(D, 3).uniform);
  CHECK(max_uniform_t(D, 3) == 2);
}

TEST_CASE("non-uniform structures are rejected") {
  CHECK_THROWS_AS(validate_1design(IncidenceStructure(3, {{0, 1}, {2}})), NonUniformBlockSize);
  CHECK_THROWS_AS(validate_1design(IncidenceStructure(3, {{0, 1}, {1, 2}})), NonUniformReplication);
  CHECK_THROWS_AS(IncidenceStructure(3, {{0, 3}}), InvalidArgument);
  CHECK_THROWS_AS(IncidenceStructure(3, {{0, 0}}), InvalidArgument);
}

TEST_CASE("t-design counter reports a witness") {
  const IncidenceStructure D(4, {{0, 1}, {2, 3}});
  const auto r = t_design_lambda(D, 2);
  CHECK_FALSE(r.uniform);
  REQUIRE(r.witness);
  CHECK(r.witness_counts->first != r.witness_counts->second);
  CHECK_THROWS_AS(t_design_lambda(fano(), 2, 3), BudgetExceeded);
}

TEST_CASE("dual of a dual is the original") {
  const auto D = fano();
  const auto Dd = dual_design(D);
  CHECK(Dd.v() == 7);
  CHECK(dual_design(Dd) == D);
  const IncidenceStructure E(4, {{0, 1, 2}, {0, 1, 3}, {0, 1, 2}});
  CHECK(dual_design(dual_design(E)) == E);
}

TEST_CASE("reduction by I-classes") {
  // Points 2i, 2i+1 always appear together.
  const IncidenceStructure D(6, {{0, 1, 2, 3}, {2, 3, 4, 5}, {0, 1, 4, 5}});
  const ReducedStructure R = reduce_design(D);
  CHECK(R.class_size == 2);
  CHECK(R.classes.size() == 3);
  CHECK(R.classes[1] == std::vector<Point>{2, 3});
  CHECK(validate_1design(R.quotient).k == 2);
  CHECK(reduce_design(fano()).trivial());
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(24, 5) == 42504);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(10, 0) == 1);
}

TEST_CASE("design file round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t v = 1 + rng() % 12;
    std::vector<Block> blocks;
    const std::size_t b = 1 + rng() % 10;
    for (std::size_t j = 0; j < b; ++j) {
      Block B;
      for (Point p = 0; p < v; ++p)
        if (rng() % 2) B.push_back(p);
      blocks.push_back(B);
    }
    DesignFile f{{" trial " + std::to_string(trial)}, IncidenceStructure(v, blocks), std::nullopt};
    if (trial % 2) f.params = DesignFile::Params{1, 2, 3};
    const std::string text = format_design(f);
    const DesignFile g = parse_design(text);
    CHECK(g.design == f.design);
    CHECK(g.leading_comments == f.leading_comments);
    CHECK(g.params.has_value() == f.params.has_value());
    CHECK(format_design(g) == text);
  }
  CHECK_THROWS_AS(parse_design("design 3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_design("nonsense\n"), ParseError);
}
