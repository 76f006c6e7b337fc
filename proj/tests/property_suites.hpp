#pragma once

// Randomized checks of the kernel against brute-force oracles. Shared by the
// unit tests and the acceptance binary.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "designforge/atlas.hpp"
#include "designforge/aut_search.hpp"
#include "designforge/orbit.hpp"

namespace designforge::testing {

struct SuiteResult {
  std::size_t cases = 0, passed = 0;
  std::vector<std::string> failures;
  bool ok() const { return cases > 0 && cases == passed; }
  std::string first_failure() const { return failures.empty() ? std::string() : failures.front(); }
  void record(bool pass, const std::string& what) {
    ++cases;
    if (pass) ++passed;
    else if (failures.size() < 10) failures.push_back(what);
  }
};

inline Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

/// Every element, by closing the generators under right multiplication.
inline std::set<Permutation> brute_elements(std::size_t n, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(n)};
  std::vector<Permutation> todo{Permutation(n)};
  while (!todo.empty()) {
    const Permutation g = todo.back();
    todo.pop_back();
    for (const auto& s : gens) {
      Permutation h = g * s;
      if (seen.insert(h).second) todo.push_back(std::move(h));
    }
  }
  return seen;
}

struct NamedGroup {
  std::string name;
  PermGroup group;
};

/// Groups of order at most 5000: the small atlas groups plus random
/// two-generator subgroups of S_n for n <= 7.
inline std::vector<NamedGroup> small_groups(std::uint64_t seed, std::size_t random_count = 40) {
  std::vector<NamedGroup> out;
  for (std::size_t n : {3, 4, 5, 6}) {
    out.push_back({"A" + std::to_string(n), build_alternating(n)});
    out.push_back({"S" + std::to_string(n), build_symmetric(n)});
  }
  out.push_back({"A7", build_alternating(7)});
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 11, 13, 16}) out.push_back({"PSL(2," + std::to_string(q) + ")", build_psl2(q)});
  out.push_back({"PGammaL(2,8)", build_pgammal2(8)});
  out.push_back({"PGL(2,3) squared", embed_pgl2(3, UnipotentClass::Squared)});
  out.push_back({"PGL(2,3) non-squared", embed_pgl2(3, UnipotentClass::NonSquared)});
  std::mt19937_64 rng(seed);
  while (random_count > 0) {
    const std::size_t n = 3 + rng() % 5;
    PermGroup G(n, {random_perm(n, rng), random_perm(n, rng)});
    if (G.order() > 5000) continue;
    out.push_back({"random on " + std::to_string(n), G});
    --random_count;
  }
  return out;
}

/// Order, membership of every element and of random permutations, against
/// the brute-force closure.
inline SuiteResult bsgs_membership_suite(std::uint64_t seed, std::size_t probes = 200) {
  SuiteResult res;
  std::mt19937_64 rng(seed);
  for (const auto& [name, G] : small_groups(seed)) {
    const auto elems = brute_elements(G.degree(), G.generators());
    bool ok = G.order() == BigInt(elems.size());
    for (const auto& g : elems) ok = ok && G.contains(g);
    for (std::size_t i = 0; i < probes; ++i) {
      const Permutation p = random_perm(G.degree(), rng);
      ok = ok && G.contains(p) == (elems.count(p) > 0);
    }
    res.record(ok, name);
  }
  return res;
}

/// |orbit| |stabilizer| = |G| and the stabilizer fixes the object, for random
/// groups and objects (points, sets, tuples, elements under conjugation).
inline SuiteResult orbit_stabilizer_suite(std::uint64_t seed, std::size_t pairs = 200) {
  SuiteResult res;
  std::mt19937_64 rng(seed);
  const auto groups = small_groups(seed + 1, 20);
  for (std::size_t k = 0; k < pairs; ++k) {
    const auto& [name, G] = groups[rng() % groups.size()];
    const std::size_t n = G.degree();
    const int kind = static_cast<int>(k % 4);
    bool ok = true;
    std::string what = name + " kind " + std::to_string(kind);
    auto check = [&](const auto& orb, auto&& fixes) {
      const PermGroup S = orb.stabilizer(seed + k);
      ok = BigInt(orb.size()) * S.order() == G.order() && G.contains_group(S);
      for (const auto& s : S.generators()) ok = ok && fixes(s);
    };
    if (kind == 0) {
      const Point p = static_cast<Point>(rng() % n);
      Orbit<Point> orb(G, p, on_points(G));
      check(orb, [&](const Permutation& s) { return s[p] == p; });
    } else if (kind == 1 || kind == 2) {
      std::vector<Point> pts(n);
      for (Point i = 0; i < n; ++i) pts[i] = i;
      std::shuffle(pts.begin(), pts.end(), rng);
      pts.resize(1 + rng() % n);
      if (kind == 1) {
        std::sort(pts.begin(), pts.end());
        Orbit<std::vector<Point>> orb(G, pts, on_sets(G));
        check(orb, [&](const Permutation& s) { return image_of_set(pts, s) == pts; });
      } else {
        Orbit<std::vector<Point>> orb(G, pts, on_tuples(G));
        check(orb, [&](const Permutation& s) {
          for (Point p : pts)
            if (s[p] != p) return false;
          return true;
        });
      }
    } else {
      const Permutation h = G.random_element(rng);
      Orbit<Permutation> orb(G, h, by_conjugation(G));
      check(orb, [&](const Permutation& s) { return h * s == s * h; });
    }
    res.record(ok, what);
  }
  return res;
}

/// Counts point permutations mapping the block multiset onto itself by
/// depth-first assignment, pruning as soon as a block whose points are all
/// assigned has no image block.
inline std::uint64_t brute_aut_count(const IncidenceStructure& D) {
  const std::size_t v = D.v();
  std::map<Block, std::size_t> mult;
  for (const auto& B : D.blocks()) ++mult[B];
  std::vector<std::vector<const Block*>> closing(v);  // blocks whose largest point is i
  for (const auto& [B, m] : mult)
    if (!B.empty()) closing[B.back()].push_back(&B);
  std::vector<Point> img(v);
  std::vector<bool> used(v, false);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == v) {
      ++count;
      return;
    }
    for (Point y = 0; y < v; ++y) {
      if (used[y] || D.replication(static_cast<Point>(i)) != D.replication(y)) continue;
      img[i] = y;
      bool ok = true;
      for (const Block* B : closing[i]) {
        Block C;
        for (Point p : *B) C.push_back(img[p]);
        std::sort(C.begin(), C.end());
        auto it = mult.find(C);
        if (it == mult.end() || it->second != mult.at(*B)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[y] = true;
      go(i + 1);
      used[y] = false;
    }
  };
  go(0);
  return count;
}

/// Random incidence structures on at most 12 points, with repeated blocks
/// allowed. About one in five is built to be symmetric (a union of orbits of a
/// random cyclic group) so that large automorphism groups are also covered.
inline IncidenceStructure random_structure(std::mt19937_64& rng) {
  const std::size_t v = 2 + rng() % 11;
  std::vector<Block> blocks;
  const std::size_t b = 1 + rng() % (2 * v);
  auto random_block = [&] {
    Block B;
    for (Point p = 0; p < v; ++p)
      if (rng() % 3 == 0) B.push_back(p);
    if (B.empty()) B.push_back(static_cast<Point>(rng() % v));
    return B;
  };
  if (rng() % 5 == 0) {
    const Permutation c = random_perm(v, rng);
    while (blocks.size() < b) {
      Block B = random_block();
      const std::uint64_t o = c.order();
      for (std::uint64_t e = 0; e < o; ++e) {
        blocks.push_back(B);
        B = image_of_set(B, c);
      }
    }
  } else {
    for (std::size_t j = 0; j < b; ++j) blocks.push_back(random_block());
    if (rng() % 4 == 0) blocks.push_back(blocks.front());
  }
  return IncidenceStructure(v, blocks);
}

inline SuiteResult aut_vs_brute_suite(std::uint64_t seed, std::size_t count = 1000) {
  SuiteResult res;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    const IncidenceStructure D = random_structure(rng);
    const AutResult A = aut_group(D);
    bool ok = A.complete && A.order == BigInt(brute_aut_count(D));
    for (const auto& g : A.point_generators) ok = ok && D.is_automorphism(g);
    res.record(ok, "structure " + std::to_string(k) + " on " + std::to_string(D.v()) + " points");
  }
  return res;
}

}  // namespace designforge::testing
