#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "designforge/errors.hpp"
#include "designforge/perm_group.hpp"

namespace designforge {

inline constexpr std::size_t kDefaultOrbitCap = std::size_t{1} << 24;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Canonical hashes for the objects groups act on.
template <class T>
struct ObjectHash;

template <>
struct ObjectHash<Point> {
  std::uint64_t operator()(Point p) const { return mix64(p); }
};
template <>
struct ObjectHash<std::vector<Point>> {
  std::uint64_t operator()(const std::vector<Point>& v) const { return hash_points(v); }
};
template <>
struct ObjectHash<Permutation> {
  std::uint64_t operator()(const Permutation& p) const { return p.hash(); }
};
template <>
struct ObjectHash<std::vector<Permutation>> {
  std::uint64_t operator()(const std::vector<Permutation>& v) const {
    std::uint64_t h = mix64(v.size());
    for (const auto& p : v) h = mix64(h ^ p.hash());
    return h;
  }
};

/// Insertion-ordered set with stable indices (open addressing over indices).
template <class T, class Hash = ObjectHash<T>>
class IndexedSet {
 public:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  IndexedSet() : slots_(16, kEmpty) {}

  std::size_t size() const { return items_.size(); }
  const T& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<T>& items() const { return items_; }

  std::optional<std::uint32_t> find(const T& x) const {
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = Hash{}(x)&mask;; s = (s + 1) & mask) {
      const std::uint32_t idx = slots_[s];
      if (idx == kEmpty) return std::nullopt;
      if (items_[idx] == x) return idx;
    }
  }

  /// Returns the index of x and whether it was newly inserted.
  std::pair<std::uint32_t, bool> insert(T x) {
    if (2 * (items_.size() + 1) > slots_.size()) grow();
    std::size_t mask = slots_.size() - 1;
    std::size_t s = Hash{}(x)&mask;
    for (;; s = (s + 1) & mask) {
      const std::uint32_t idx = slots_[s];
      if (idx == kEmpty) break;
      if (items_[idx] == x) return {idx, false};
    }
    const auto idx = static_cast<std::uint32_t>(items_.size());
    slots_[s] = idx;
    items_.push_back(std::move(x));
    return {idx, true};
  }

 private:
  void grow() {
    std::vector<std::uint32_t> fresh(slots_.size() * 2, kEmpty);
    const std::size_t mask = fresh.size() - 1;
    for (std::uint32_t i = 0; i < items_.size(); ++i) {
      std::size_t s = Hash{}(items_[i]) & mask;
      while (fresh[s] != kEmpty) s = (s + 1) & mask;
      fresh[s] = i;
    }
    slots_ = std::move(fresh);
  }

  std::vector<std::uint32_t> slots_;
  std::vector<T> items_;
};

/// Orbit of an object under a permutation group, with a Schreier vector.
///
/// `act(obj, i)` must return the image of obj under the i-th generator of the
/// group and define a right action. The orbit is listed in BFS order.
template <class T, class Hash = ObjectHash<T>>
class Orbit {
 public:
  template <class Act>
  Orbit(const PermGroup& G, T seed, Act&& act, std::size_t cap = kDefaultOrbitCap)
      : group_(&G) {
    const std::size_t r = G.generators().size();
    set_.insert(std::move(seed));
    parent_.push_back(0);
    parent_gen_.push_back(0);
    for (std::size_t a = 0; a < set_.size(); ++a) {
      for (std::size_t i = 0; i < r; ++i) {
        T img = act(set_[a], i);
        auto [idx, fresh] = set_.insert(std::move(img));
        if (fresh) {
          if (set_.size() > cap)
            throw OrbitOverflow("orbit exceeds cap of " + std::to_string(cap));
          parent_.push_back(static_cast<std::uint32_t>(a));
          parent_gen_.push_back(static_cast<std::uint32_t>(i));
        }
        edges_.push_back(idx);
      }
    }
  }

  std::size_t size() const { return set_.size(); }
  const T& operator[](std::size_t i) const { return set_[i]; }
  const std::vector<T>& elements() const { return set_.items(); }
  std::optional<std::uint32_t> index_of(const T& x) const { return set_.find(x); }

  /// Index of the image of orbit[idx] under generator `gen`.
  std::uint32_t image(std::uint32_t idx, std::size_t gen) const {
    return edges_[idx * group_->generators().size() + gen];
  }

  /// Action of generator `gen` on orbit indices.
  Permutation generator_action(std::size_t gen) const {
    std::vector<Point> img(size());
    for (std::uint32_t a = 0; a < size(); ++a) img[a] = image(a, gen);
    return Permutation(std::move(img));
  }

  /// An element u of the group with seed^u == orbit[idx].
  Permutation transversal(std::uint32_t idx) const {
    std::vector<std::uint32_t> path;
    for (std::uint32_t j = idx; j != 0; j = parent_[j]) path.push_back(parent_gen_[j]);
    Permutation u(group_->degree());
    for (auto it = path.rbegin(); it != path.rend(); ++it) u *= group_->generators()[*it];
    return u;
  }

  /// Stabilizer of the seed, from Schreier generators taken in a seeded
  /// shuffled order until the order |G|/|orbit| is reached.
  PermGroup stabilizer(std::uint64_t seed = kDefaultSeed) const {
    const PermGroup& G = *group_;
    const BigInt target = G.order() / size();
    if (target * size() != G.order())
      throw InternalInconsistency("orbit length does not divide the group order");
    SubgroupBuilder H(G.degree());
    if (target == 1) return H.group();
    const std::size_t r = G.generators().size();
    std::vector<std::uint64_t> pairs(size() * r);
    for (std::uint64_t k = 0; k < pairs.size(); ++k) pairs[k] = k;
    std::mt19937_64 rng(seed);
    for (std::size_t k = pairs.size(); k > 1; --k) std::swap(pairs[k - 1], pairs[rng() % k]);
    for (std::uint64_t k : pairs) {
      const auto a = static_cast<std::uint32_t>(k / r);
      const std::size_t i = k % r;
      const std::uint32_t b = edges_[k];
      if (parent_[b] == a && parent_gen_[b] == i && b != 0) continue;  // tree edge
      Permutation h = transversal(a) * G.generators()[i] * transversal(b).inverse();
      if (h.is_identity()) continue;
      H.add(h);
      if (H.group().order() == target) break;
    }
    if (H.group().order() != target)
      throw InternalInconsistency("Schreier generators failed to reach the stabilizer order");
    return H.group();
  }

 private:
  const PermGroup* group_;
  IndexedSet<T, Hash> set_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> parent_gen_;
  std::vector<std::uint32_t> edges_;
};

template <class T>
struct OrbitStabilizer {
  std::vector<T> orbit;
  PermGroup stabilizer;
};

template <class T, class Act>
OrbitStabilizer<T> orbit_with_stabilizer(const PermGroup& G, T seed, Act&& act,
                                         std::size_t cap = kDefaultOrbitCap) {
  Orbit<T> orb(G, std::move(seed), std::forward<Act>(act), cap);
  return {orb.elements(), orb.stabilizer()};
}

// Standard actions. Each returns a callable (object, generator index) -> object.

inline auto on_points(const PermGroup& G) {
  return [&G](Point p, std::size_t i) { return G.generators()[i][p]; };
}

inline auto on_sets(const PermGroup& G) {
  return [&G](const std::vector<Point>& s, std::size_t i) {
    return image_of_set(s, G.generators()[i]);
  };
}

inline auto on_tuples(const PermGroup& G) {
  return [&G](const std::vector<Point>& s, std::size_t i) {
    std::vector<Point> out(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) out[k] = G.generators()[i][s[k]];
    return out;
  };
}

inline auto by_conjugation(const PermGroup& G) {
  return [&G](const Permutation& h, std::size_t i) {
    return h.conjugate_by(G.generators()[i]);
  };
}

inline auto on_element_sets(const PermGroup& G) {
  return [&G](const std::vector<Permutation>& s, std::size_t i) {
    std::vector<Permutation> out;
    out.reserve(s.size());
    for (const auto& h : s) out.push_back(h.conjugate_by(G.generators()[i]));
    std::sort(out.begin(), out.end());
    return out;
  };
}

/// Conjugacy class g^G and centralizer C_G(g).
PermGroup centralizer(const PermGroup& G, const Permutation& g,
                      std::size_t cap = kDefaultOrbitCap);

/// Normalizer of the cyclic subgroup generated by g.
PermGroup normalizer_of_cyclic(const PermGroup& G, const Permutation& g,
                               std::size_t cap = kDefaultOrbitCap);

/// Setwise stabilizer of a point set.
PermGroup set_stabilizer(const PermGroup& G, const std::vector<Point>& set,
                         std::size_t cap = kDefaultOrbitCap);

}  // namespace designforge
