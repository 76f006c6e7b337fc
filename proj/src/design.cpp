#include "designforge/design.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "designforge/errors.hpp"
#include "designforge/orbit.hpp"

namespace designforge {

IncidenceStructure::IncidenceStructure(std::size_t v, std::vector<Block> blocks)
    : v_(v), blocks_(std::move(blocks)), through_(v) {
  if (blocks_.empty()) throw InvalidArgument("an incidence structure needs at least one block");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    Block& B = blocks_[i];
    std::sort(B.begin(), B.end());
    if (std::adjacent_find(B.begin(), B.end()) != B.end())
      throw InvalidArgument("block " + std::to_string(i) + " repeats a point");
    for (Point x : B) {
      if (x >= v_)
        throw InvalidArgument("block " + std::to_string(i) + " has point " + std::to_string(x) +
                              " outside 0.." + std::to_string(v_ - 1));
      through_[x].push_back(static_cast<std::uint32_t>(i));
    }
  }
}

bool IncidenceStructure::incident(Point x, std::size_t block) const {
  return std::binary_search(blocks_[block].begin(), blocks_[block].end(), x);
}

std::vector<std::pair<Block, std::size_t>> IncidenceStructure::block_multiplicities() const {
  IndexedSet<Block> distinct;
  std::vector<std::size_t> count;
  for (const auto& B : blocks_) {
    auto [idx, fresh] = distinct.insert(B);
    if (fresh) count.push_back(0);
    ++count[idx];
  }
  std::vector<std::pair<Block, std::size_t>> out;
  for (std::size_t i = 0; i < distinct.size(); ++i) out.emplace_back(distinct[i], count[i]);
  return out;
}

std::size_t IncidenceStructure::max_block_multiplicity() const {
  std::size_t m = 0;
  for (const auto& [B, c] : block_multiplicities()) m = std::max(m, c);
  return m;
}

bool IncidenceStructure::is_automorphism(const Permutation& g) const {
  if (g.degree() != v_) return false;
  std::vector<Block> mine = blocks_, images;
  images.reserve(blocks_.size());
  for (const auto& B : blocks_) images.push_back(image_of_set(B, g));
  std::sort(mine.begin(), mine.end());
  std::sort(images.begin(), images.end());
  return mine == images;
}

DesignParams validate_1design(const IncidenceStructure& D) {
  DesignParams P;
  P.v = D.v();
  P.b = D.b();
  P.k = D.block(0).size();
  for (std::size_t i = 1; i < D.b(); ++i)
    if (D.block(i).size() != P.k)
      throw NonUniformBlockSize("block 0 has " + std::to_string(P.k) + " points, block " +
                                std::to_string(i) + " has " + std::to_string(D.block(i).size()));
  P.r = D.v() ? D.replication(0) : 0;
  for (Point x = 1; x < D.v(); ++x)
    if (D.replication(x) != P.r)
      throw NonUniformReplication("point 0 lies on " + std::to_string(P.r) + " blocks, point " +
                                  std::to_string(x) + " on " + std::to_string(D.replication(x)));
  P.lambda = P.r;
  return P;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

// Colex rank of a sorted subset: sum of C(s_i, i+1).
std::uint64_t subset_rank(const std::vector<Point>& s, const std::vector<std::vector<std::uint64_t>>& C) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) r += C[s[i]][i + 1];
  return r;
}

Block subset_unrank(std::uint64_t r, std::size_t t, std::size_t v) {
  Block s(t);
  std::uint64_t c = v;
  for (std::size_t i = t; i-- > 0;) {
    while (binomial(c, i + 1) > r) --c;
    s[i] = static_cast<Point>(c);
    r -= binomial(c, i + 1);
  }
  return s;
}

// Calls f on each t-subset of B (as sorted vectors).
template <class F>
void for_each_subset(const Block& B, std::size_t t, F&& f) {
  if (t > B.size()) return;
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  std::vector<Point> s(t);
  while (true) {
    for (std::size_t i = 0; i < t; ++i) s[i] = B[idx[i]];
    f(s);
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == B.size() - t + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

TDesignResult t_design_lambda(const IncidenceStructure& D, std::size_t t, std::uint64_t budget) {
  TDesignResult res;
  const std::size_t v = D.v();
  if (t == 0) {
    res.uniform = true;
    res.lambda = D.b();
    return res;
  }
  if (t > v) throw InvalidArgument("t exceeds the number of points");
  std::uint64_t work = 0;
  for (const auto& B : D.blocks()) {
    work += binomial(B.size(), t);
    if (work > budget)
      throw BudgetExceeded("t-subset tally needs more than " + std::to_string(budget) + " increments");
  }
  const std::uint64_t N = binomial(v, t);
  std::vector<std::vector<std::uint64_t>> C(v + 1, std::vector<std::uint64_t>(t + 1));
  for (std::size_t n = 0; n <= v; ++n)
    for (std::size_t j = 0; j <= t; ++j) C[n][j] = binomial(n, j);

  auto differ = [&](std::uint64_t r1, std::uint64_t c1, std::uint64_t r2, std::uint64_t c2) {
    res.uniform = false;
    res.witness = std::make_pair(subset_unrank(r1, t, v), subset_unrank(r2, t, v));
    res.witness_counts = std::make_pair(c1, c2);
    return res;
  };

  if (N <= (std::uint64_t{1} << 24)) {
    std::vector<std::uint32_t> count(N, 0);
    for (const auto& B : D.blocks())
      for_each_subset(B, t, [&](const std::vector<Point>& s) { ++count[subset_rank(s, C)]; });
    for (std::uint64_t r = 1; r < N; ++r)
      if (count[r] != count[0]) return differ(0, count[0], r, count[r]);
    res.uniform = true;
    res.lambda = count[0];
    return res;
  }

  if (N == UINT64_MAX) throw BudgetExceeded("too many t-subsets to rank");
  std::unordered_map<std::uint64_t, std::uint64_t> count;
  for (const auto& B : D.blocks())
    for_each_subset(B, t, [&](const std::vector<Point>& s) { ++count[subset_rank(s, C)]; });
  if (count.size() < N) {
    // Some t-subset is on no block; find the least such rank.
    std::uint64_t missing = 0;
    while (count.count(missing)) ++missing;
    if (count.empty()) {
      res.uniform = true;
      return res;
    }
    const auto& [r, c] = *std::min_element(count.begin(), count.end());
    return differ(missing, 0, r, c);
  }
  const auto first = std::min_element(count.begin(), count.end());
  for (const auto& [r, c] : count)
    if (c != first->second) return differ(first->first, first->second, r, c);
  res.uniform = true;
  res.lambda = first->second;
  return res;
}

std::size_t max_uniform_t(const IncidenceStructure& D, std::size_t max_t, std::uint64_t budget) {
  std::size_t kmin = D.block(0).size();
  for (const auto& B : D.blocks()) kmin = std::min(kmin, B.size());
  std::size_t best = 0;
  for (std::size_t t = 1; t <= std::min(max_t, kmin); ++t) {
    if (!t_design_lambda(D, t, budget).uniform) break;
    best = t;
  }
  return best;
}

IncidenceStructure dual_design(const IncidenceStructure& D) {
  std::vector<Block> blocks;
  blocks.reserve(D.v());
  for (Point x = 0; x < D.v(); ++x)
    blocks.emplace_back(D.blocks_through(x).begin(), D.blocks_through(x).end());
  return IncidenceStructure(D.b(), std::move(blocks));
}

ReducedStructure reduce_design(const IncidenceStructure& D) {
  validate_1design(D);
  ReducedStructure R;
  R.class_of.assign(D.v(), 0);
  std::map<std::vector<std::uint32_t>, std::uint32_t> by_signature;
  for (Point x = 0; x < D.v(); ++x) {
    auto [it, fresh] = by_signature.try_emplace(D.blocks_through(x), static_cast<std::uint32_t>(R.classes.size()));
    if (fresh) R.classes.emplace_back();
    R.classes[it->second].push_back(x);
    R.class_of[x] = it->second;
  }
  // With constant replication, y lies on every block through x exactly when
  // both lie on the same blocks, so the signature classes are the sets I_x.
  // Intersecting the blocks directly is costly on large designs; it is done
  // for an evenly spaced sample of classes as a cross-check.
  const std::size_t step = std::max<std::size_t>(1, R.classes.size() / 64);
  for (std::size_t ci = 0; ci < R.classes.size(); ci += step) {
    const auto& cls = R.classes[ci];
    const auto& through = D.blocks_through(cls.front());
    if (through.empty()) throw PartitionViolation("point " + std::to_string(cls.front()) + " lies on no block");
    Block I = D.block(through.front());
    for (std::size_t j = 1; j < through.size(); ++j) {
      Block next;
      const Block& B = D.block(through[j]);
      std::set_intersection(I.begin(), I.end(), B.begin(), B.end(), std::back_inserter(next));
      I = std::move(next);
    }
    if (I != cls)
      throw PartitionViolation("intersection of the blocks through " + std::to_string(cls.front()) +
                               " is not its class");
  }
  R.class_size = R.classes.front().size();
  for (const auto& cls : R.classes)
    if (cls.size() != R.class_size)
      throw PartitionViolation("I-classes of sizes " + std::to_string(R.class_size) + " and " +
                               std::to_string(cls.size()));
  std::vector<Block> qblocks;
  qblocks.reserve(D.b());
  std::vector<std::size_t> hits(R.classes.size(), 0);
  for (std::size_t i = 0; i < D.b(); ++i) {
    Block q;
    for (Point x : D.block(i))
      if (hits[R.class_of[x]]++ == 0) q.push_back(R.class_of[x]);
    for (Point c : q) {
      if (hits[c] != R.class_size)
        throw PartitionViolation("block " + std::to_string(i) + " meets class " + std::to_string(c) +
                                 " in " + std::to_string(hits[c]) + " points");
      hits[c] = 0;
    }
    qblocks.push_back(std::move(q));
  }
  R.quotient = IncidenceStructure(R.classes.size(), std::move(qblocks));
  return R;
}

}  // namespace designforge
