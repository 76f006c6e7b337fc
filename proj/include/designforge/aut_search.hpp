#pragma once

#include <cstdint>
#include <vector>

#include "designforge/design.hpp"

namespace designforge {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct AutResult {
  /// Generators acting on the points.
  std::vector<Permutation> point_generators;
  /// The same generators on points followed by the distinct blocks
  /// (vertex v + j is distinct block j, in order of first occurrence).
  std::vector<Permutation> generators;
  /// Order of the group generated by point_generators.
  BigInt order = 1;
  /// Product of m! over block multiplicities m: extra automorphisms that only
  /// permute copies of a repeated block.
  BigInt repeated_block_factor = 1;
  bool complete = true;  // false when the node budget ran out
  bool point_transitive = false;
  bool block_transitive = false;
  std::uint64_t nodes = 0;

  PermGroup group(std::size_t v) const { return PermGroup(v, point_generators); }
};

/// Automorphism group of an incidence structure: point permutations mapping
/// the block multiset onto itself.
///
/// Works on the bipartite point/block graph (repeated blocks merged into one
/// vertex colored by multiplicity) by equitable refinement and backtracking
/// over point cells, collecting automorphisms level by level below the first
/// leaf and skipping vertices already in a known orbit. Each refinement counts
/// as one node; past `node_budget` the search stops and returns the subgroup
/// found so far with complete == false.
AutResult aut_group(const IncidenceStructure& D, std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace designforge
