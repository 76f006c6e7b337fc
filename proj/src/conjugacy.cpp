#include "designforge/conjugacy.hpp"

#include <algorithm>
#include <tuple>

namespace designforge {

ConjugacyClass::ConjugacyClass(const PermGroup& G, const Permutation& g, std::size_t cap)
    : group_(std::make_shared<const PermGroup>(G)) {
  if (g.degree() != G.degree()) throw InvalidArgument("element degree differs from group degree");
  orbit_ = std::make_shared<Orbit<Permutation>>(*group_, g, by_conjugation(*group_), cap);
  for (std::size_t i = 0; i < group_->generators().size(); ++i)
    actions_.push_back(orbit_->generator_action(i));
}

const PermGroup& ConjugacyClass::centralizer() const {
  if (!centralizer_) centralizer_ = std::make_shared<PermGroup>(orbit_->stabilizer());
  return *centralizer_;
}

std::vector<Permutation> conjugacy_class(const PermGroup& G, const Permutation& g,
                                         std::size_t cap) {
  return Orbit<Permutation>(G, g, by_conjugation(G), cap).elements();
}

PermGroup centralizer(const PermGroup& G, const Permutation& g, std::size_t cap) {
  return Orbit<Permutation>(G, g, by_conjugation(G), cap).stabilizer();
}

PermGroup normalizer_of_cyclic(const PermGroup& G, const Permutation& g, std::size_t cap) {
  std::vector<Permutation> cyclic;
  Permutation x(g.degree());
  do {
    cyclic.push_back(x);
    x *= g;
  } while (!x.is_identity());
  std::sort(cyclic.begin(), cyclic.end());
  return Orbit<std::vector<Permutation>>(G, cyclic, on_element_sets(G), cap).stabilizer();
}

PermGroup set_stabilizer(const PermGroup& G, const std::vector<Point>& set, std::size_t cap) {
  std::vector<Point> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  return Orbit<std::vector<Point>>(G, sorted, on_sets(G), cap).stabilizer();
}

Permutation element_of_order(const PermGroup& G, std::uint64_t m, const ClassTag& tag,
                             std::uint64_t seed, std::size_t budget) {
  if (m == 0) throw InvalidArgument("element order must be positive");
  if (m == 1) return Permutation(G.degree());
  ProductReplacement pr(G.generators(), G.degree(), seed);
  for (std::size_t trial = 0; trial < budget; ++trial) {
    const Permutation x = pr.next();
    const std::uint64_t o = x.order();
    if (o % m != 0) continue;
    Permutation y = x.pow(static_cast<std::int64_t>(o / m));
    if (tag.fixed_points && y.fixed_point_count() != *tag.fixed_points) continue;
    if (tag.class_size && conjugacy_class(G, y).size() != *tag.class_size) continue;
    return y;
  }
  throw NotFound("no element of order " + std::to_string(m) + " matching the class tag after " +
                 std::to_string(budget) + " random elements");
}

std::vector<Permutation> conjugacy_class_representatives(const PermGroup& G) {
  IndexedSet<Permutation> all;
  for (auto& e : G.elements()) all.insert(std::move(e));
  std::vector<char> done(all.size(), 0);
  std::vector<std::tuple<std::uint64_t, std::size_t, Permutation>> classes;
  for (std::uint32_t start = 0; start < all.size(); ++start) {
    if (done[start]) continue;
    std::vector<std::uint32_t> members{start};
    done[start] = 1;
    for (std::size_t a = 0; a < members.size(); ++a)
      for (const auto& s : G.generators()) {
        const auto idx = *all.find(all[members[a]].conjugate_by(s));
        if (!done[idx]) {
          done[idx] = 1;
          members.push_back(idx);
        }
      }
    Permutation least = all[members[0]];
    for (auto idx : members) least = std::min(least, all[idx]);
    classes.emplace_back(least.order(), members.size(), std::move(least));
  }
  std::sort(classes.begin(), classes.end());
  std::vector<Permutation> reps;
  for (auto& c : classes) reps.push_back(std::move(std::get<2>(c)));
  return reps;
}

}  // namespace designforge
