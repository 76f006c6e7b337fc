#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace designforge {

using Point = std::uint32_t;

/// Mixes a 64-bit value; used by every hash in the library.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_points(std::span<const Point> pts) {
  std::uint64_t h = mix64(pts.size());
  for (Point p : pts) h = mix64(h ^ p);
  return h;
}

/// A bijection of {0,...,n-1}, stored as its image array.
///
/// Permutations act on the right, as in x^(gh) = (x^g)^h: the product
/// `g * h` applies g first, then h.
class Permutation {
 public:
  Permutation() = default;
  /// The identity on `degree` points.
  explicit Permutation(std::size_t degree);
  /// Throws InvalidPermutation unless `images` is a bijection of [0, n).
  explicit Permutation(std::vector<Point> images);

  /// Builds from 0-based cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);
  Permutation inverse() const;
  /// x^-1 * this * x.
  Permutation conjugate_by(const Permutation& x) const;
  Permutation pow(std::int64_t e) const;

  bool is_identity() const;
  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;
  std::size_t fixed_point_count() const;
  Point first_moved_point() const;  // degree() when identity

  /// Nontrivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;
  /// Sorted cycle lengths including fixed points.
  std::vector<std::size_t> cycle_type() const;
  /// `(1,2,3)(4,5)` style; "()" for the identity.
  std::string to_cycle_string(bool one_based = true) const;

  std::uint64_t hash() const { return hash_points(images_); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

/// Image of a point set under g, sorted.
std::vector<Point> image_of_set(std::span<const Point> set, const Permutation& g);

}  // namespace designforge

template <>
struct std::hash<designforge::Permutation> {
  std::size_t operator()(const designforge::Permutation& p) const noexcept { return p.hash(); }
};
