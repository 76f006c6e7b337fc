#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "designforge/perm_group.hpp"

namespace designforge {

using Block = std::vector<Point>;

/// Points 0..v-1 and a list of blocks, each a sorted point set. Repeated
/// blocks are allowed and kept as separate entries; block order is the order
/// of construction.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  /// Sorts each block. Throws InvalidArgument for a point >= v, a point
  /// repeated inside a block, or an empty block list.
  IncidenceStructure(std::size_t v, std::vector<Block> blocks);

  std::size_t v() const { return v_; }
  std::size_t b() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_[i]; }

  /// Indices of the blocks containing x, ascending.
  const std::vector<std::uint32_t>& blocks_through(Point x) const { return through_[x]; }
  std::size_t replication(Point x) const { return through_[x].size(); }
  bool incident(Point x, std::size_t block) const;

  /// Distinct blocks with their multiplicities, in order of first occurrence.
  std::vector<std::pair<Block, std::size_t>> block_multiplicities() const;
  std::size_t max_block_multiplicity() const;
  bool is_simple() const { return max_block_multiplicity() <= 1; }

  /// True iff `g` (on points) maps the block multiset onto itself.
  bool is_automorphism(const Permutation& g) const;

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.v_ == b.v_ && a.blocks_ == b.blocks_;
  }

 private:
  std::size_t v_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::vector<std::uint32_t>> through_;
};

struct DesignParams {
  std::size_t t = 1;
  std::size_t v = 0, b = 0, k = 0;
  std::uint64_t lambda = 0;  // lambda_t
  std::size_t r = 0;         // replication

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// Checks constant block size and constant replication. Throws
/// NonUniformBlockSize / NonUniformReplication.
DesignParams validate_1design(const IncidenceStructure& D);

struct TDesignResult {
  bool uniform = false;
  std::uint64_t lambda = 0;
  /// When not uniform: two t-subsets with different counts.
  std::optional<std::pair<Block, Block>> witness;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness_counts;
};

inline constexpr std::uint64_t kDefaultTallyBudget = std::uint64_t{1} << 28;

/// Counts, with multiplicity, the blocks through every t-subset of points.
/// `budget` caps the number of subset increments; throws BudgetExceeded.
TDesignResult t_design_lambda(const IncidenceStructure& D, std::size_t t,
                              std::uint64_t budget = kDefaultTallyBudget);

/// Largest t <= max_t for which D is a t-design (0 if not even a 1-design).
std::size_t max_uniform_t(const IncidenceStructure& D, std::size_t max_t,
                          std::uint64_t budget = kDefaultTallyBudget);

/// Points of the dual are the blocks of D; block x of the dual lists the
/// blocks of D through point x.
IncidenceStructure dual_design(const IncidenceStructure& D);

/// Partition of the points into the sets I_x (intersection of all blocks
/// through x) and the quotient structure on those classes.
struct ReducedStructure {
  std::vector<std::vector<Point>> classes;  // ordered by least point
  std::vector<std::uint32_t> class_of;      // point -> class index
  std::size_t class_size = 0;
  IncidenceStructure quotient;
  bool trivial() const { return class_size == 1; }
};

/// Requires a 1-design. Throws PartitionViolation if the classes are not a
/// partition into equal parts or some block is not a union of classes.
ReducedStructure reduce_design(const IncidenceStructure& D);

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace designforge
