#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "designforge/permutation.hpp"

namespace designforge {

using BigInt = boost::multiprecision::cpp_int;

/// A permutation group held as a base and strong generating set.
///
/// The BSGS is built by deterministic Schreier-Sims when the group is
/// constructed; base points are taken greedily from the requested prefix and
/// then from the first moved point of each strong generator that fixes the
/// current base. Instances are immutable afterwards.
class PermGroup {
 public:
  PermGroup() = default;
  /// The trivial group on `degree` points.
  explicit PermGroup(std::size_t degree);
  /// Throws InvalidGenerators if some generator has a different degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::span<const Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const BigInt& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Permutation& g) const;
  /// True iff every generator of `h` lies in this group.
  bool contains_group(const PermGroup& h) const;

  std::vector<Point> base() const;
  /// Sizes of the fundamental orbits; their product is the order.
  std::vector<std::size_t> basic_orbit_sizes() const;
  /// All strong generators (duplicates removed).
  std::vector<Permutation> strong_generators() const;

  /// Uniform random element (product of random transversal elements).
  Permutation random_element(std::mt19937_64& rng) const;
  /// Every element; only sensible for small groups.
  std::vector<Permutation> elements() const;

  /// Orbits on points, each sorted, ordered by least element.
  std::vector<std::vector<Point>> orbits() const;
  std::vector<Point> orbit_of(Point p) const;
  bool is_transitive() const;

  /// Subgroup fixing every point of `pts`, via base change.
  PermGroup pointwise_stabilizer(std::span<const Point> pts) const;
  PermGroup point_stabilizer(Point p) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> gens;          // strong generators fixing the earlier base points
    std::vector<Point> orbit;               // orbit of base_point under gens
    std::vector<std::int32_t> orbit_index;  // point -> position in orbit, or -1
    std::vector<Permutation> transversal;   // base_point^transversal[i] == orbit[i]
    std::vector<Permutation> inverse_transversal;
    // Per orbit point, how many generators' Schreier generators are known to sift.
    std::vector<std::uint32_t> checked;
  };

  void schreier_sims(std::span<const Point> base_prefix);
  void rebuild_orbit(Level& level) const;
  /// Adds `s` to the level's generators and extends the orbit, keeping the
  /// existing transversal entries.
  void extend_level(Level& level, const Permutation& s) const;
  /// Sifts g from `start`; returns the residue and the level where sifting stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start) const;
  void compute_order();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

/// Smallest subgroup of `G` containing `elems`. Throws NotASubgroupElement if
/// some element is outside `G`.
PermGroup subgroup_closure(const PermGroup& G, const std::vector<Permutation>& elems);

/// Grows a subgroup one element at a time, rebuilding only when an element is new.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(std::size_t degree) : group_(degree) {}
  /// Returns true if `g` enlarged the subgroup.
  bool add(const Permutation& g);
  const PermGroup& group() const { return group_; }

 private:
  std::vector<Permutation> gens_;
  PermGroup group_;
};

/// Product-replacement random element generator with a fixed seed.
class ProductReplacement {
 public:
  ProductReplacement(const std::vector<Permutation>& gens, std::size_t degree,
                     std::uint64_t seed);
  Permutation next();

 private:
  std::vector<Permutation> slots_;
  Permutation accumulator_;
  std::mt19937_64 rng_;
};

}  // namespace designforge
