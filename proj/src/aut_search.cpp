#include "designforge/aut_search.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>

#include "designforge/errors.hpp"
#include "designforge/orbit.hpp"

namespace designforge {

namespace {

struct BudgetHit {};

// Ordered partition of the vertices; a cell is identified by its first position.
struct Partition {
  std::vector<std::uint32_t> lab;   // vertices in cell order
  std::vector<std::uint32_t> pos;   // vertex -> position in lab
  std::vector<std::uint32_t> cell;  // vertex -> start of its cell
  std::vector<std::uint32_t> len;   // start -> length (only meaningful at starts)
};

class Searcher {
 public:
  Searcher(const IncidenceStructure& D, std::uint64_t budget) : v_(D.v()), budget_(budget) {
    auto mult = D.block_multiplicities();
    nb_ = mult.size();
    adj_.resize(v_ + nb_);
    for (std::size_t j = 0; j < nb_; ++j) {
      blocks_.insert(mult[j].first);
      multiplicity_.push_back(mult[j].second);
      for (Point x : mult[j].first) {
        adj_[x].push_back(static_cast<std::uint32_t>(v_ + j));
        adj_[v_ + j].push_back(x);
      }
    }
    const std::size_t n = v_ + nb_;
    cnt_.assign(n, 0);
    in_queue_.assign(n, 0);
  }

  std::size_t distinct_blocks() const { return nb_; }
  const std::vector<std::size_t>& multiplicities() const { return multiplicity_; }
  std::uint64_t nodes() const { return nodes_; }

  Partition initial() const {
    const std::size_t n = v_ + nb_;
    Partition P;
    P.lab.resize(n);
    std::iota(P.lab.begin(), P.lab.end(), 0u);
    // Blocks ordered by multiplicity, then index.
    std::stable_sort(P.lab.begin() + static_cast<std::ptrdiff_t>(v_), P.lab.end(),
                     [this](std::uint32_t a, std::uint32_t b) {
                       return multiplicity_[a - v_] < multiplicity_[b - v_];
                     });
    P.pos.resize(n);
    P.cell.resize(n);
    P.len.assign(n, 0);
    for (std::uint32_t p = 0; p < n; ++p) P.pos[P.lab[p]] = p;
    auto set_cell = [&P](std::uint32_t s, std::uint32_t e) {
      for (std::uint32_t p = s; p < e; ++p) P.cell[P.lab[p]] = s;
      P.len[s] = e - s;
    };
    if (v_ > 0) set_cell(0, static_cast<std::uint32_t>(v_));
    std::uint32_t s = static_cast<std::uint32_t>(v_);
    for (std::uint32_t p = s + 1; p <= n; ++p)
      if (p == n || multiplicity_[P.lab[p] - v_] != multiplicity_[P.lab[s] - v_]) {
        set_cell(s, p);
        s = p;
      }
    return P;
  }

  std::vector<std::uint32_t> all_cells(const Partition& P) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < P.lab.size(); s += P.len[s]) out.push_back(s);
    return out;
  }

  /// Refines P to the coarsest equitable partition below it, starting from
  /// the given splitter cells. Returns a hash of the refinement trace.
  std::uint64_t refine(Partition& P, const std::vector<std::uint32_t>& splitters) {
    if (++nodes_ > budget_) throw BudgetHit{};
    std::uint64_t h = mix64(0x5eed);
    std::deque<std::uint32_t> queue;
    for (auto s : splitters) {
      queue.push_back(s);
      in_queue_[s] = 1;
    }
    std::vector<std::uint32_t> touched, cells;
    while (!queue.empty()) {
      const std::uint32_t W = queue.front();
      queue.pop_front();
      in_queue_[W] = 0;
      touched.clear();
      for (std::uint32_t p = W; p < W + P.len[W]; ++p)
        for (std::uint32_t y : adj_[P.lab[p]])
          if (cnt_[y]++ == 0) touched.push_back(y);
      std::sort(touched.begin(), touched.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (P.cell[a] != P.cell[b]) return P.cell[a] < P.cell[b];
        if (cnt_[a] != cnt_[b]) return cnt_[a] < cnt_[b];
        return a < b;
      });
      h = mix64(h ^ W);
      for (std::size_t i = 0; i < touched.size();) {
        const std::uint32_t c = P.cell[touched[i]];
        std::size_t j = i;
        while (j < touched.size() && P.cell[touched[j]] == c) ++j;
        split_cell(P, c, touched.data() + i, j - i, queue, h);
        i = j;
      }
      for (std::uint32_t y : touched) cnt_[y] = 0;
    }
    return h;
  }

  /// Splits v off its cell and refines.
  std::uint64_t individualize(Partition& P, std::uint32_t v) {
    const std::uint32_t c = P.cell[v];
    const std::uint32_t L = P.len[c];
    const std::uint32_t pv = P.pos[v];
    std::swap(P.lab[c], P.lab[pv]);
    P.pos[P.lab[pv]] = pv;
    P.pos[v] = c;
    P.len[c] = 1;
    if (L > 1) {
      P.len[c + 1] = L - 1;
      for (std::uint32_t p = c + 1; p < c + L; ++p) P.cell[P.lab[p]] = c + 1;
    }
    return refine(P, {c});
  }

  /// First smallest non-singleton point cell, or nullopt if the points are discrete.
  std::optional<std::uint32_t> target_cell(const Partition& P) const {
    std::optional<std::uint32_t> best;
    for (std::uint32_t s = 0; s < v_; s += P.len[s])
      if (P.len[s] > 1 && (!best || P.len[s] < P.len[*best])) best = s;
    return best;
  }

  /// Point permutation taking leaf `from` to leaf `to`, if it is an automorphism.
  std::optional<Permutation> leaf_map(const Partition& from, const Partition& to) const {
    std::vector<Point> img(v_);
    for (std::uint32_t p = 0; p < v_; ++p) img[from.lab[p]] = to.lab[p];
    Permutation g(std::move(img));
    for (std::size_t j = 0; j < nb_; ++j) {
      auto k = blocks_.find(image_of_set(blocks_[j], g));
      if (!k || multiplicity_[*k] != multiplicity_[j]) return std::nullopt;
    }
    return g;
  }

  Permutation with_blocks(const Permutation& g) const {
    std::vector<Point> img(v_ + nb_);
    for (Point x = 0; x < v_; ++x) img[x] = g[x];
    for (std::size_t j = 0; j < nb_; ++j)
      img[v_ + j] = static_cast<Point>(v_ + *blocks_.find(image_of_set(blocks_[j], g)));
    return Permutation(std::move(img));
  }

 private:
  void split_cell(Partition& P, std::uint32_t c, const std::uint32_t* T, std::size_t m,
                  std::deque<std::uint32_t>& queue, std::uint64_t& h) {
    const std::uint32_t L = P.len[c];
    if (L == 1) {
      h = mix64(h ^ (std::uint64_t{c} << 24) ^ cnt_[T[0]]);
      return;
    }
    if (m == L && cnt_[T[0]] == cnt_[T[m - 1]]) {
      h = mix64(h ^ (std::uint64_t{c} << 24) ^ cnt_[T[0]]);
      return;
    }
    // Untouched members stay in front; touched ones go to the tail sorted by count.
    std::uint32_t end = c + L;
    for (std::size_t i = m; i-- > 0;) {
      const std::uint32_t y = T[i];
      --end;
      const std::uint32_t py = P.pos[y];
      const std::uint32_t z = P.lab[end];
      std::swap(P.lab[py], P.lab[end]);
      P.pos[z] = py;
      P.pos[y] = end;
    }
    // T is sorted by (count, vertex); the loop above placed T[i] at c+L-m+i.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> frags;  // (start, length)
    if (end > c) frags.emplace_back(c, end - c);
    for (std::size_t i = 0; i < m;) {
      std::size_t j = i;
      while (j < m && cnt_[T[j]] == cnt_[T[i]]) ++j;
      frags.emplace_back(end + static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j - i));
      i = j;
    }
    h = mix64(h ^ (std::uint64_t{c} << 24) ^ frags.size());
    if (end > c) h = mix64(h ^ frags[0].second);
    for (std::size_t i = 0; i < m;) {
      std::size_t j = i;
      while (j < m && cnt_[T[j]] == cnt_[T[i]]) ++j;
      h = mix64(h ^ (std::uint64_t{cnt_[T[i]]} << 32) ^ (j - i));
      i = j;
    }
    if (frags.size() == 1) return;
    for (auto [s, l] : frags) {
      P.len[s] = l;
      for (std::uint32_t p = s; p < s + l; ++p) P.cell[P.lab[p]] = s;
    }
    if (in_queue_[c]) {
      for (std::size_t i = 1; i < frags.size(); ++i) {
        queue.push_back(frags[i].first);
        in_queue_[frags[i].first] = 1;
      }
    } else {
      std::size_t largest = 0;
      for (std::size_t i = 1; i < frags.size(); ++i)
        if (frags[i].second > frags[largest].second) largest = i;
      for (std::size_t i = 0; i < frags.size(); ++i)
        if (i != largest) {
          queue.push_back(frags[i].first);
          in_queue_[frags[i].first] = 1;
        }
    }
  }

  std::size_t v_, nb_ = 0;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::uint32_t>> adj_;
  IndexedSet<Block> blocks_;
  std::vector<std::size_t> multiplicity_;
  std::vector<std::uint32_t> cnt_;
  std::vector<char> in_queue_;
};

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct FirstPathLevel {
  Partition before;  // refined partition before individualizing
  std::uint32_t target = 0;
  std::vector<std::uint32_t> members;  // target cell, ascending
  std::uint64_t trace = 0;             // refinement trace after individualizing members[0]
};

class LevelSearch {
 public:
  LevelSearch(Searcher& S, const std::vector<FirstPathLevel>& path, const Partition& leaf)
      : S_(S), path_(path), leaf_(leaf) {}

  // Looks below `P` (which sits at `level`) with w individualized for a leaf
  // equivalent to the first leaf.
  std::optional<Permutation> explore(const Partition& P, std::uint32_t w, std::size_t level) {
    Partition child = P;
    if (S_.individualize(child, w) != path_[level].trace) return std::nullopt;
    if (level + 1 == path_.size()) {
      if (S_.target_cell(child)) return std::nullopt;
      return S_.leaf_map(leaf_, child);
    }
    auto t = S_.target_cell(child);
    const auto& next = path_[level + 1];
    if (!t || *t != next.target || child.len[*t] != next.members.size()) return std::nullopt;
    std::vector<std::uint32_t> members(child.lab.begin() + *t, child.lab.begin() + *t + child.len[*t]);
    std::sort(members.begin(), members.end());
    for (std::uint32_t u : members)
      if (auto g = explore(child, u, level + 1)) return g;
    return std::nullopt;
  }

 private:
  Searcher& S_;
  const std::vector<FirstPathLevel>& path_;
  const Partition& leaf_;
};

BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

AutResult aut_group(const IncidenceStructure& D, std::uint64_t node_budget) {
  AutResult res;
  const std::size_t v = D.v();
  Searcher S(D, node_budget);
  for (std::size_t m : S.multiplicities()) res.repeated_block_factor *= factorial(m);

  std::vector<Permutation> gens;
  try {
    Partition P = S.initial();
    S.refine(P, S.all_cells(P));
    std::vector<FirstPathLevel> path;
    while (auto t = S.target_cell(P)) {
      FirstPathLevel L;
      L.before = P;
      L.target = *t;
      L.members.assign(P.lab.begin() + *t, P.lab.begin() + *t + P.len[*t]);
      std::sort(L.members.begin(), L.members.end());
      L.trace = S.individualize(P, L.members.front());
      path.push_back(std::move(L));
    }
    const Partition leaf = P;
    LevelSearch search(S, path, leaf);

    for (std::size_t i = path.size(); i-- > 0;) {
      const auto& L = path[i];
      UnionFind uf(v);
      for (const auto& g : gens)
        for (Point x = 0; x < v; ++x) uf.unite(x, g[x]);
      std::vector<std::uint32_t> failed;
      const std::uint32_t first = L.members.front();
      for (std::uint32_t w : L.members) {
        if (uf.find(w) == uf.find(first)) continue;
        if (std::any_of(failed.begin(), failed.end(),
                        [&](std::uint32_t f) { return uf.find(f) == uf.find(w); }))
          continue;
        if (auto g = search.explore(L.before, w, i)) {
          for (Point x = 0; x < v; ++x) uf.unite(x, (*g)[x]);
          gens.push_back(std::move(*g));
        } else {
          failed.push_back(w);
        }
      }
    }
  } catch (const BudgetHit&) {
    res.complete = false;
  }
  res.nodes = S.nodes();

  res.point_generators = gens;
  for (const auto& g : gens) res.generators.push_back(S.with_blocks(g));
  const PermGroup A(v, gens);
  res.order = A.order();
  res.point_transitive = v <= 1 || A.is_transitive();
  // Block orbits by union-find; a BSGS on the blocks would be far too large.
  const std::size_t nb = S.distinct_blocks();
  UnionFind blocks(nb);
  for (const auto& g : res.generators)
    for (std::size_t j = 0; j < nb; ++j)
      blocks.unite(static_cast<std::uint32_t>(j), g[static_cast<Point>(v + j)] - static_cast<Point>(v));
  res.block_transitive = true;
  for (std::size_t j = 0; j < nb; ++j)
    if (blocks.find(static_cast<std::uint32_t>(j)) != 0) res.block_transitive = false;
  return res;
}

}  // namespace designforge
