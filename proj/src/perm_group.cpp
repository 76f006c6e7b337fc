#include "designforge/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "designforge/errors.hpp"

namespace designforge {

PermGroup::PermGroup(std::size_t degree) : degree_(degree) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::span<const Point> base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw InvalidGenerators("generator of degree " + std::to_string(g.degree()) +
                              " in a group of degree " + std::to_string(degree_));
  for (Point p : base_prefix)
    if (p >= degree_) throw InvalidArgument("base point out of range");
  schreier_sims(base_prefix);
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.orbit_index.assign(degree_, -1);
  level.orbit_index[level.base_point] = 0;
  level.transversal.assign(1, Permutation(degree_));
  for (std::size_t a = 0; a < level.orbit.size(); ++a) {
    const Point beta = level.orbit[a];
    for (const auto& s : level.gens) {
      const Point gamma = s[beta];
      if (level.orbit_index[gamma] >= 0) continue;
      level.orbit_index[gamma] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(gamma);
      level.transversal.push_back(level.transversal[a] * s);
    }
  }
  level.inverse_transversal.clear();
  level.inverse_transversal.reserve(level.transversal.size());
  for (const auto& u : level.transversal) level.inverse_transversal.push_back(u.inverse());
  level.checked.assign(level.orbit.size(), 0);
}

void PermGroup::extend_level(Level& level, const Permutation& s) const {
  level.gens.push_back(s);
  auto visit = [&](std::size_t a, const Permutation& g) {
    const Point gamma = g[level.orbit[a]];
    if (level.orbit_index[gamma] >= 0) return;
    level.orbit_index[gamma] = static_cast<std::int32_t>(level.orbit.size());
    level.orbit.push_back(gamma);
    level.transversal.push_back(level.transversal[a] * g);
    level.inverse_transversal.push_back(level.transversal.back().inverse());
  };
  const std::size_t old = level.orbit.size();
  for (std::size_t a = 0; a < old; ++a) visit(a, s);
  for (std::size_t a = old; a < level.orbit.size(); ++a)
    for (const auto& g : level.gens) visit(a, g);
  level.checked.resize(level.orbit.size(), 0);
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    const std::int32_t idx = L.orbit_index[g[L.base_point]];
    if (idx < 0) return {std::move(g), l};
    if (idx > 0) g *= L.inverse_transversal[static_cast<std::size_t>(idx)];
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims(std::span<const Point> base_prefix) {
  std::vector<Permutation> strong;
  {
    std::set<Permutation> seen;
    for (const auto& g : generators_)
      if (!g.is_identity() && seen.insert(g).second) strong.push_back(g);
  }

  std::vector<Point> base;
  for (Point p : base_prefix)
    if (std::find(base.begin(), base.end(), p) == base.end()) base.push_back(p);
  for (const auto& s : strong) {
    const bool fixes_base =
        std::all_of(base.begin(), base.end(), [&](Point b) { return s[b] == b; });
    if (fixes_base) base.push_back(s.first_moved_point());
  }

  levels_.assign(base.size(), Level{});
  for (std::size_t i = 0; i < base.size(); ++i) {
    levels_[i].base_point = base[i];
    for (const auto& s : strong) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = s[base[j]] == base[j];
      if (fixes) levels_[i].gens.push_back(s);
    }
    rebuild_orbit(levels_[i]);
  }

  // Schreier generators already shown to sift stay valid: the transversals
  // only ever grow, so each (orbit point, generator) pair is checked once.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t a = 0; a < levels_[li].orbit.size() && !extended; ++a) {
      for (std::size_t si = levels_[li].checked[a]; si < levels_[li].gens.size(); ++si) {
        const Level& L = levels_[li];
        const Point gamma = L.gens[si][L.orbit[a]];
        const auto gidx = static_cast<std::size_t>(L.orbit_index[gamma]);
        Permutation h = L.transversal[a] * L.gens[si];
        if (h != L.transversal[gidx]) {
          h *= L.inverse_transversal[gidx];
          auto [residue, j] = sift(std::move(h), li + 1);
          if (j < levels_.size() || !residue.is_identity()) {
            if (j == levels_.size()) {
              Level fresh;
              fresh.base_point = residue.first_moved_point();
              levels_.push_back(std::move(fresh));
              rebuild_orbit(levels_.back());
            }
            for (std::size_t l = li + 1; l <= j; ++l) extend_level(levels_[l], residue);
            i = static_cast<std::ptrdiff_t>(j);
            extended = true;
            break;
          }
        }
        levels_[li].checked[a] = static_cast<std::uint32_t>(si + 1);
      }
    }
    if (!extended) --i;
  }
  compute_order();
}

void PermGroup::compute_order() {
  order_ = 1;
  for (const auto& L : levels_) order_ *= L.orbit.size();
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, j] = sift(g, 0);
  return j == levels_.size() && residue.is_identity();
}

bool PermGroup::contains_group(const PermGroup& h) const {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& g) { return contains(g); });
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& L : levels_) b.push_back(L.base_point);
  return b;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> s;
  for (const auto& L : levels_) s.push_back(L.orbit.size());
  return s;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> out;
  std::set<Permutation> seen;
  for (const auto& L : levels_)
    for (const auto& g : L.gens)
      if (seen.insert(g).second) out.push_back(g);
  return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const auto& T = levels_[l].transversal;
    g *= T[rng() % T.size()];
  }
  return g;
}

std::vector<Permutation> PermGroup::elements() const {
  std::vector<Permutation> cur{Permutation(degree_)};
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(cur.size() * levels_[l].transversal.size());
    for (const auto& e : cur)
      for (const auto& u : levels_[l].transversal) next.push_back(e * u);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Point> PermGroup::orbit_of(Point p) const {
  std::vector<char> seen(degree_, 0);
  std::vector<Point> orb{p};
  seen[p] = 1;
  for (std::size_t a = 0; a < orb.size(); ++a)
    for (const auto& g : generators_) {
      const Point q = g[orb[a]];
      if (!seen[q]) {
        seen[q] = 1;
        orb.push_back(q);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(degree_, 0);
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto orb = orbit_of(p);
    for (Point q : orb) seen[q] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const {
  return degree_ == 0 || orbit_of(0).size() == degree_;
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const Point> pts) const {
  if (pts.empty()) return *this;
  PermGroup rebased(degree_, strong_generators(), pts);
  std::vector<Point> distinct(pts.begin(), pts.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const std::size_t m = distinct.size();
  if (m >= rebased.levels_.size()) return PermGroup(degree_);
  return PermGroup(degree_, rebased.levels_[m].gens);
}

PermGroup PermGroup::point_stabilizer(Point p) const {
  const Point pts[] = {p};
  return pointwise_stabilizer(pts);
}

PermGroup subgroup_closure(const PermGroup& G, const std::vector<Permutation>& elems) {
  for (const auto& e : elems)
    if (!G.contains(e))
      throw NotASubgroupElement(e.to_cycle_string() + " is not in the ambient group");
  return PermGroup(G.degree(), elems);
}

bool SubgroupBuilder::add(const Permutation& g) {
  if (group_.contains(g)) return false;
  gens_.push_back(g);
  group_ = PermGroup(group_.degree(), gens_);
  return true;
}

ProductReplacement::ProductReplacement(const std::vector<Permutation>& gens,
                                       std::size_t degree, std::uint64_t seed)
    : accumulator_(degree), rng_(seed) {
  if (gens.empty()) {
    slots_.assign(2, Permutation(degree));
  } else {
    const std::size_t r = std::max<std::size_t>(10, gens.size());
    for (std::size_t i = 0; i < r; ++i) slots_.push_back(gens[i % gens.size()]);
  }
  for (int i = 0; i < 60; ++i) next();
}

Permutation ProductReplacement::next() {
  const std::size_t n = slots_.size();
  const std::size_t i = rng_() % n;
  std::size_t j = rng_() % (n - 1);
  if (j >= i) ++j;
  if (rng_() & 1)
    slots_[i] = slots_[i] * slots_[j];
  else
    slots_[i] = slots_[i] * slots_[j].inverse();
  accumulator_ = accumulator_ * slots_[i];
  return accumulator_;
}

}  // namespace designforge
