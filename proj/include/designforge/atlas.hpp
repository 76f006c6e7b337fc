#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "designforge/field.hpp"
#include "designforge/orbit.hpp"
#include "json.hpp"

namespace designforge {

struct Mat2 {
  FieldElem a, b, c, d;  // [[a, b], [c, d]]
};

/// PG(1,q): point i < q is (element(i) : 1), point q is (1 : 0).
class ProjectiveLine {
 public:
  explicit ProjectiveLine(Field field) : field_(std::move(field)) {}

  const Field& field() const { return field_; }
  std::size_t size() const { return field_.size() + 1; }
  Point infinity() const { return field_.size(); }

  /// Canonical point of (a : b); throws InvalidArgument for (0 : 0).
  Point point_of(const FieldElem& a, const FieldElem& b) const;
  std::pair<FieldElem, FieldElem> coordinates(Point p) const;

  /// x -> (a x + b) / (c x + d). Throws InvalidArgument for singular m.
  Permutation mobius(const Mat2& m) const;
  /// (a : b) -> (a^(p^i) : b^(p^i)).
  Permutation frobenius(std::uint32_t i) const;
  /// Matrix inducing g, if g is a Moebius transformation.
  std::optional<Mat2> matrix_of(const Permutation& g) const;

  FieldElem det(const Mat2& m) const;

 private:
  Field field_;
};

/// Writes q = p^e; throws InvalidArgument if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

/// PSL(2,q) on the q+1 points of PG(1,q).
PermGroup build_psl2(std::uint64_t q);

enum class UnipotentClass { Squared, NonSquared };

/// PGL(2,q) as a subgroup of PSL(2,q^2) acting on PG(1,q^2). The squared
/// variant is the subgroup of matrices over GF(q); the non-squared variant is
/// its conjugate under x -> nu x with nu a non-square of GF(q^2).
PermGroup embed_pgl2(std::uint64_t q, UnipotentClass variant);

/// Classifies a unipotent element of PSL(2,Q) on PG(1,Q). Returns nullopt if g
/// is the identity, not a Moebius map, outside PSL(2,Q), or not unipotent.
std::optional<UnipotentClass> classify_unipotent(const ProjectiveLine& line, const Permutation& g);

/// PGammaL(2,q) on PG(1,q).
PermGroup build_pgammal2(std::uint64_t q);

PermGroup build_alternating(std::size_t n);
PermGroup build_symmetric(std::size_t n);

/// Stabilizer of a point, via base change; index equals the orbit length.
PermGroup point_stabilizer_subgroup(const PermGroup& G, Point pt);

/// Frobenius a -> a^(p^i) on PG(1,Q).
Permutation frobenius_on_projline(std::uint64_t Q, std::uint32_t i);
/// x -> nu x on PG(1,Q) with nu the primitive element; lies in PGL(2,Q) but
/// not PSL(2,Q) for odd Q.
Permutation diagonal_outer_on_projline(std::uint64_t Q);

/// Serializable description of how a group was built.
struct GroupRecipe {
  std::string name;
  /// alternating | symmetric | psl2 | pgl2-in-psl2sq | pgammal2 | from-file |
  /// point-stabilizer | normalizer-of-cyclic | generators
  std::string kind;
  nlohmann::json params = nlohmann::json::object();

  nlohmann::json to_json() const;
  static GroupRecipe from_json(const nlohmann::json& j);
};

/// Builds a recipe. `from-file` paths are resolved against `data_dir` when relative.
PermGroup build_group(const GroupRecipe& recipe,
                      const std::filesystem::path& data_dir = DESIGNFORGE_DATA_DIR);

namespace recipes {
GroupRecipe alternating(std::size_t n);
GroupRecipe symmetric(std::size_t n);
GroupRecipe psl2(std::uint64_t q);
GroupRecipe pgl2_in_psl2sq(std::uint64_t q, UnipotentClass variant);
GroupRecipe pgammal2(std::uint64_t q);
GroupRecipe mathieu(int n);
GroupRecipe point_stabilizer(const GroupRecipe& parent, Point pt);
GroupRecipe normalizer_of_cyclic(const GroupRecipe& parent, std::uint64_t order,
                                 std::uint64_t seed = kDefaultSeed);
/// Explicit generators in 1-based cycle notation.
GroupRecipe generators(std::string name, std::size_t degree, std::vector<std::string> cycles);
/// The second class of S4 in A6, generated by (1,2,3)(4,5,6) and (1,4)(3,5).
GroupRecipe a6_s4_second_class();
}  // namespace recipes

}  // namespace designforge
