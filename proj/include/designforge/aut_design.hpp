#pragma once

#include <optional>
#include <vector>

#include "designforge/aut_search.hpp"
#include "designforge/construct.hpp"

namespace designforge {

/// (|I_x|!)^(number of classes): the order of the group of permutations
/// moving points only inside their I-classes.
BigInt s_of_i_order(const ReducedStructure& R);

/// Generators of that group: for each class of size >= 2, a transposition of
/// its two least points and a cycle through all of it.
std::vector<Permutation> s_of_i_generators(const ReducedStructure& R);

/// Point permutation of D induced by an automorphism of the quotient, sending
/// the members of each class in ascending order to those of its image.
Permutation expand_quotient_map(const ReducedStructure& R, const Permutation& sigma);

struct QuotientTheoremReport {
  BigInt aut_order, quotient_aut_order, s_of_i;
  bool complete = true;                   // both searches finished
  bool order_identity = false;            // |Aut(D)| = |S(I)| |Aut(D_I)|
  bool quotient_generators_lift = false;  // each expands to an automorphism of D
  bool s_of_i_generators_fix_blocks = false;
  /// |kernel of Aut(D) on blocks| = |S(I)|; computed when points plus
  /// distinct blocks number at most `max_kernel_degree`.
  std::optional<bool> block_kernel_is_s_of_i;
  bool pass() const;
};

QuotientTheoremReport verify_quotient_theorem(const IncidenceStructure& D, const ReducedStructure& R,
                                              std::uint64_t node_budget = kDefaultNodeBudget,
                                              std::size_t max_kernel_degree = 5000);

/// True iff φ has G's degree and conjugates every generator of G into G.
bool normalizing_map_check(const PermGroup& G, const Permutation& phi);

struct LiftResult {
  bool normalizes = false;
  /// Method 2: φ(g) lies in g^G. Method 1: φ permutes the cosets of M.
  bool preserves_points = false;
  /// Method 2: the image of the base block is a block. Method 1: the induced
  /// map sends the block set onto itself.
  bool maps_blocks = false;
  /// Direct check that the induced point map is a design automorphism.
  bool automorphism = false;
  std::optional<Permutation> point_map;
  bool lifts() const { return normalizes && preserves_points && maps_blocks; }
};

/// φ acts on the points of D, which are the domain of D.group.
LiftResult lift_test_method1(const Method1Design& D, const Permutation& phi);

/// D was built on `coset.action()`; φ acts on the domain of G and is carried
/// to the cosets of M.
LiftResult lift_test_method1(const Method1Design& D, const PermGroup& G, const CosetAction& coset,
                             const Permutation& phi);

/// Points h of D are sent to φ⁻¹hφ.
LiftResult lift_test_method2(const Method2Design& D, const Permutation& phi);

/// The map of D's points induced by h ↦ φ⁻¹hφ, if φ preserves the class.
std::optional<Permutation> induced_point_map(const Method2Design& D, const Permutation& phi);

struct SIntersectionReport {
  /// For each supplied nonidentity map, a block it moves (or nullopt).
  std::vector<std::optional<std::size_t>> moved_block;
  bool pass() const;
};

/// Members of S(I) fix every block, so no lifted nonidentity map may.
SIntersectionReport verify_s_i_intersection(const IncidenceStructure& D,
                                            const std::vector<Permutation>& lifted_maps);

}  // namespace designforge
