#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "designforge/orbit.hpp"

namespace designforge {

/// The conjugacy class g^G, indexed in BFS order from g (index 0).
///
/// Besides the elements it keeps the action of every generator of G on class
/// indices, so designs whose points are class elements can be acted on
/// without recomputing conjugates.
class ConjugacyClass {
 public:
  ConjugacyClass(const PermGroup& G, const Permutation& g, std::size_t cap = kDefaultOrbitCap);

  const Permutation& representative() const { return orbit_->operator[](0); }
  std::size_t size() const { return orbit_->size(); }
  const Permutation& operator[](std::size_t i) const { return orbit_->operator[](i); }
  const std::vector<Permutation>& elements() const { return orbit_->elements(); }
  std::optional<std::uint32_t> index_of(const Permutation& h) const { return orbit_->index_of(h); }

  /// Generator i of G acting on class indices.
  const Permutation& generator_action(std::size_t i) const { return actions_[i]; }
  const std::vector<Permutation>& generator_actions() const { return actions_; }
  /// x in G with representative()^x == element i.
  Permutation conjugator(std::uint32_t i) const { return orbit_->transversal(i); }
  /// Centralizer of the representative (computed on first use).
  const PermGroup& centralizer() const;

 private:
  std::shared_ptr<const PermGroup> group_;
  std::shared_ptr<Orbit<Permutation>> orbit_;
  std::vector<Permutation> actions_;
  mutable std::shared_ptr<PermGroup> centralizer_;
};

/// g^G as a list; throws OrbitOverflow above `cap`.
std::vector<Permutation> conjugacy_class(const PermGroup& G, const Permutation& g,
                                         std::size_t cap = kDefaultOrbitCap);

/// Selects among classes of equal element order.
struct ClassTag {
  std::optional<std::size_t> fixed_points;
  std::optional<std::size_t> class_size;
};

/// An element of order exactly m, found by seeded product replacement.
/// Throws NotFound when the search budget is exhausted.
Permutation element_of_order(const PermGroup& G, std::uint64_t m,
                             const ClassTag& tag = {}, std::uint64_t seed = kDefaultSeed,
                             std::size_t budget = 20000);

/// Representatives of all conjugacy classes (small groups; enumerates G).
/// Classes are ordered by (element order, class size, least element).
std::vector<Permutation> conjugacy_class_representatives(const PermGroup& G);

}  // namespace designforge
