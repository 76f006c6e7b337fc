#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "designforge/conjugacy.hpp"
#include "designforge/design.hpp"

namespace designforge {

/// G acting on the cosets of a subgroup M, realized either on the orbit of a
/// point fixed by M (when M is that point's stabilizer) or on the conjugates
/// of M, each stored as its sorted element list. Point 0 corresponds to M.
class CosetAction {
 public:
  enum class Model { PointOrbit, ConjugateSubgroups };

  /// Throws InvalidArgument if M is not a subgroup of G, and
  /// InternalInconsistency if neither model yields |G:M| points (for the
  /// conjugation model this happens when M is not self-normalizing).
  CosetAction(const PermGroup& G, const PermGroup& M, std::size_t max_subgroup_order = 10000,
              std::size_t cap = kDefaultOrbitCap);

  Model model() const { return model_; }
  std::size_t degree() const { return action_.degree(); }
  /// The action; generator i is the image of generator i of G.
  const PermGroup& action() const { return action_; }

  /// Permutation induced on the cosets by an element of G, or by a map φ of
  /// G's domain that normalizes G. Returns nullopt when φ does not permute
  /// the cosets of M (it sends M outside its conjugacy class).
  std::optional<Permutation> induced(const Permutation& phi) const;

  /// For the point model: the point of G's domain behind each coset.
  const std::vector<Point>& orbit_points() const { return orbit_points_; }
  /// For the conjugation model: the conjugates of M as sorted element lists.
  const std::vector<std::vector<Permutation>>& conjugates() const { return conjugates_; }

 private:
  Model model_;
  PermGroup action_;
  std::vector<Point> orbit_points_;
  std::vector<std::int64_t> label_of_point_;
  std::vector<std::vector<Permutation>> conjugates_;
  std::shared_ptr<IndexedSet<std::vector<Permutation>>> conjugate_index_;
};

/// Orbits of G_alpha on the points, sorted by (length, least point).
std::vector<std::vector<Point>> stabilizer_orbits(const PermGroup& G, Point alpha);

struct Method1Input {
  PermGroup group;  // transitive
  Point alpha = 0;
  std::size_t orbit_size = 0;   // selects a G_alpha-orbit of this length ...
  std::size_t orbit_index = 0;  // ... the orbit_index-th one in stabilizer_orbits order
};

struct Method1Design {
  PermGroup group;
  Point alpha = 0;
  std::vector<Point> delta;
  IncidenceStructure design;
  DesignParams params;
  /// block_reps[j] maps delta onto block j.
  std::vector<Permutation> block_reps;
};

/// Blocks are the images of the chosen G_alpha-orbit. Throws InvalidArgument
/// for a bad selector or intransitive G, InternalInconsistency if the number
/// of distinct blocks differs from the degree.
Method1Design method1_design(const Method1Input& in);

struct Method2Input {
  PermGroup G;
  PermGroup M;
  Permutation g;
};

struct Method2Design {
  PermGroup G;
  PermGroup M;
  ConjugacyClass cls;  // the points; point i is cls[i]
  std::vector<std::uint32_t> base_block;  // indices of cls ∩ M
  IncidenceStructure design;
  DesignParams params;
  /// block_reps[j] conjugates M onto the subgroup behind block j.
  std::vector<Permutation> block_reps;
};

/// Points are g^G, blocks the sets g^G ∩ M^y. Throws InvalidArgument if
/// g is trivial or outside M, InternalInconsistency if the block count
/// differs from |G:M| or the result is not a 1-design.
Method2Design method2_design(const Method2Input& in, std::size_t cap = kDefaultOrbitCap);

/// Number of cosets of M fixed by g (the permutation character 1_M^G at g).
std::uint64_t perm_char_value(const CosetAction& coset, const Permutation& g);

/// Same value from |C_G(g)| |g^G ∩ M| / |M|.
BigInt perm_char_value_by_class(const PermGroup& G, const PermGroup& M, const Permutation& g);

/// True iff the generators of G and `samples` seeded random elements, other
/// than the identity, all move some point of the design.
bool faithfulness_check(const Method2Design& D, std::size_t samples = 100,
                        std::uint64_t seed = kDefaultSeed);
/// Method 1 points are G's own domain, so this checks that the sampled
/// nonidentity elements are automorphisms of the design.
bool faithfulness_check(const Method1Design& D, std::size_t samples = 100,
                        std::uint64_t seed = kDefaultSeed);

/// Representatives of the G-classes meeting M in nonidentity elements, one
/// per G-class, taken from M. Ordered by (order, G-class size, representative).
std::vector<Permutation> g_classes_meeting(const PermGroup& G, const PermGroup& M);

}  // namespace designforge
