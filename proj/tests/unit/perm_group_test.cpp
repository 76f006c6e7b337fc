#include "doctest.h"
#include "../property_suites.hpp"
#include "designforge/conjugacy.hpp"
#include "designforge/generator_io.hpp"

using namespace designforge;

TEST_CASE("orders of standard groups") {
  CHECK(build_symmetric(5).order() == 120);
  CHECK(build_alternating(7).order() == 2520);
  CHECK(build_psl2(9).order() == 360);
  CHECK(build_psl2(8).order() == 504);
  CHECK(build_pgammal2(8).order() == 1512);
  CHECK(embed_pgl2(5, UnipotentClass::Squared).order() == 120);
  CHECK(load_group(std::filesystem::path(DESIGNFORGE_DATA_DIR) / "m24.gens").order() == 244823040);
  CHECK(load_group(std::filesystem::path(DESIGNFORGE_DATA_DIR) / "m23.gens").order() == 10200960);
  CHECK(load_group(std::filesystem::path(DESIGNFORGE_DATA_DIR) / "m22.gens").order() == 443520);
}

TEST_CASE("BSGS membership against brute force") {
  const auto r = testing::bsgs_membership_suite(11);
  INFO(r.first_failure());
  CHECK(r.ok());
}

TEST_CASE("orbit-stabilizer identity on random pairs") {
  const auto r = testing::orbit_stabilizer_suite(12, 200);
  INFO(r.first_failure());
  CHECK(r.ok());
}

TEST_CASE("stabilizers by base change") {
  const PermGroup S6 = build_symmetric(6);
  CHECK(S6.point_stabilizer(3).order() == 120);
  const std::vector<Point> pts{0, 5};
  const PermGroup K = S6.pointwise_stabilizer(pts);
  CHECK(K.order() == 24);
  for (const auto& g : K.generators()) CHECK((g[0] == 0 && g[5] == 5));
  CHECK(set_stabilizer(S6, {1, 2, 3}).order() == 36);
}

TEST_CASE("Mathieu groups are 5-, 4- and 3-transitive") {
  for (auto [n, t] : {std::pair{24, 5}, {23, 4}, {22, 3}}) {
    CAPTURE(n);
    const PermGroup G = load_group(std::filesystem::path(DESIGNFORGE_DATA_DIR) / ("m" + std::to_string(n) + ".gens"));
    // Stabilizing points one at a time, each stabilizer is transitive on the rest.
    PermGroup H = G;
    for (int i = 0; i < t; ++i) {
      CHECK(H.orbit_of(static_cast<Point>(i)).size() == static_cast<std::size_t>(n - i));
      H = H.point_stabilizer(static_cast<Point>(i));
    }
    CHECK(H.orbit_of(static_cast<Point>(t)).size() < static_cast<std::size_t>(n - t));
  }
}

TEST_CASE("random elements lie in the group") {
  const PermGroup G = build_psl2(11);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) CHECK(G.contains(G.random_element(rng)));
  CHECK_FALSE(G.contains(Permutation::from_cycles(12, {{0, 1}})));
}

TEST_CASE("centralizers and classes") {
  const PermGroup S5 = build_symmetric(5);
  const auto t = Permutation::from_cycles(5, {{0, 1}});
  CHECK(centralizer(S5, t).order() == 12);
  CHECK(conjugacy_class(S5, t).size() == 10);
  const ConjugacyClass cls(S5, Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}));
  CHECK(cls.size() == 24);
  CHECK(cls.centralizer().order() == 5);
  for (std::uint32_t i = 0; i < cls.size(); ++i)
    CHECK(cls.representative().conjugate_by(cls.conjugator(i)) == cls[i]);
  CHECK(normalizer_of_cyclic(S5, cls.representative()).order() == 20);
  // S5 has 7 classes; A5 has 5.
  CHECK(conjugacy_class_representatives(S5).size() == 7);
  CHECK(conjugacy_class_representatives(build_alternating(5)).size() == 5);
}

TEST_CASE("element_of_order honours the class tag") {
  const PermGroup S6 = build_symmetric(6);
  const auto g = element_of_order(S6, 2, {.fixed_points = 0});
  CHECK(g.order() == 2);
  CHECK(g.fixed_point_count() == 0);
  const auto h = element_of_order(S6, 2, {.fixed_points = 4});
  CHECK(h.fixed_point_count() == 4);
  CHECK_THROWS_AS(element_of_order(S6, 7), NotFound);
}

TEST_CASE("generator file round trip") {
  const std::string text = "# two generators\ndegree 5\n(1,2,3,4,5)\n# comment between\nimg: 1 0 2 3 4\n";
  const GeneratorFile f = parse_generator_file(text);
  CHECK(f.degree == 5);
  CHECK(format_generator_file(f) == text);
  CHECK(f.group().order() == 120);
  CHECK_THROWS_AS(parse_generator_file("degree 3\n(1,2,4)\n"), Error);
}
