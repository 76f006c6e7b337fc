#include "designforge/construct.hpp"

#include <algorithm>
#include <tuple>

#include "designforge/errors.hpp"

namespace designforge {

CosetAction::CosetAction(const PermGroup& G, const PermGroup& M, std::size_t max_subgroup_order,
                         std::size_t cap) {
  if (M.degree() != G.degree() || !G.contains_group(M))
    throw InvalidArgument("M is not a subgroup of G");
  const BigInt index = G.order() / M.order();

  // A point fixed by M whose orbit length is |G:M| has stabilizer exactly M.
  for (Point a = 0; a < G.degree(); ++a) {
    bool fixed = std::all_of(M.generators().begin(), M.generators().end(),
                             [a](const Permutation& m) { return m[a] == a; });
    if (!fixed) continue;
    Orbit<Point> orb(G, a, on_points(G), cap);
    if (BigInt(orb.size()) != index) continue;
    model_ = Model::PointOrbit;
    orbit_points_ = orb.elements();
    label_of_point_.assign(G.degree(), -1);
    for (std::size_t i = 0; i < orbit_points_.size(); ++i) label_of_point_[orbit_points_[i]] = static_cast<std::int64_t>(i);
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < G.generators().size(); ++i) gens.push_back(orb.generator_action(i));
    action_ = PermGroup(orb.size(), std::move(gens));
    return;
  }

  if (M.order() > max_subgroup_order)
    throw InvalidArgument("M has order " + M.order().str() + "; element-set model limited to " +
                          std::to_string(max_subgroup_order));
  auto elems = M.elements();
  std::sort(elems.begin(), elems.end());
  Orbit<std::vector<Permutation>> orb(G, std::move(elems), on_element_sets(G), cap);
  if (BigInt(orb.size()) != index)
    throw InternalInconsistency("M has " + std::to_string(orb.size()) + " conjugates but index " +
                                index.str() + "; it is not self-normalizing");
  model_ = Model::ConjugateSubgroups;
  conjugates_ = orb.elements();
  conjugate_index_ = std::make_shared<IndexedSet<std::vector<Permutation>>>();
  for (const auto& c : conjugates_) conjugate_index_->insert(c);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < G.generators().size(); ++i) gens.push_back(orb.generator_action(i));
  action_ = PermGroup(orb.size(), std::move(gens));
}

std::optional<Permutation> CosetAction::induced(const Permutation& phi) const {
  std::vector<Point> img(degree());
  if (model_ == Model::PointOrbit) {
    if (phi.degree() != label_of_point_.size()) return std::nullopt;
    for (std::size_t i = 0; i < degree(); ++i) {
      const std::int64_t l = label_of_point_[phi[orbit_points_[i]]];
      if (l < 0) return std::nullopt;
      img[i] = static_cast<Point>(l);
    }
    return Permutation(std::move(img));
  }
  for (std::size_t i = 0; i < degree(); ++i) {
    std::vector<Permutation> S;
    S.reserve(conjugates_[i].size());
    for (const auto& s : conjugates_[i]) {
      if (s.degree() != phi.degree()) return std::nullopt;
      S.push_back(s.conjugate_by(phi));
    }
    std::sort(S.begin(), S.end());
    auto idx = conjugate_index_->find(S);
    if (!idx) return std::nullopt;
    img[i] = *idx;
  }
  try {
    return Permutation(std::move(img));
  } catch (const InvalidPermutation&) {
    return std::nullopt;
  }
}

std::vector<std::vector<Point>> stabilizer_orbits(const PermGroup& G, Point alpha) {
  if (alpha >= G.degree()) throw InvalidArgument("base point out of range");
  auto orbits = G.point_stabilizer(alpha).orbits();
  std::stable_sort(orbits.begin(), orbits.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return orbits;
}

Method1Design method1_design(const Method1Input& in) {
  const PermGroup& G = in.group;
  if (!G.is_transitive()) throw InvalidArgument("Method 1 needs a transitive group");
  const auto orbits = stabilizer_orbits(G, in.alpha);
  std::vector<const std::vector<Point>*> matching;
  for (const auto& o : orbits)
    if (o.size() == in.orbit_size && !(o.size() == 1 && o[0] == in.alpha)) matching.push_back(&o);
  if (in.orbit_index >= matching.size())
    throw InvalidArgument("no stabilizer orbit of length " + std::to_string(in.orbit_size) +
                          " with index " + std::to_string(in.orbit_index) + " (" +
                          std::to_string(matching.size()) + " available)");
  Method1Design out;
  out.group = G;
  out.alpha = in.alpha;
  out.delta = *matching[in.orbit_index];
  Orbit<std::vector<Point>> blocks(G, out.delta, on_sets(G));
  if (blocks.size() != G.degree())
    throw InternalInconsistency("orbit of the base block has " + std::to_string(blocks.size()) +
                                " members, expected " + std::to_string(G.degree()));
  out.design = IncidenceStructure(G.degree(), blocks.elements());
  out.params = validate_1design(out.design);
  if (out.params.k != out.delta.size() || out.params.lambda != out.delta.size())
    throw InternalInconsistency("Method 1 design parameters disagree with the orbit length");
  for (std::uint32_t j = 0; j < blocks.size(); ++j) out.block_reps.push_back(blocks.transversal(j));
  return out;
}

Method2Design method2_design(const Method2Input& in, std::size_t cap) {
  const PermGroup& G = in.G;
  const PermGroup& M = in.M;
  if (in.g.degree() != G.degree() || in.g.is_identity())
    throw InvalidArgument("g must be a nonidentity element of G's degree");
  if (!M.contains(in.g)) throw InvalidArgument("g is not an element of M");
  if (!G.contains_group(M)) throw InvalidArgument("M is not a subgroup of G");

  ConjugacyClass cls(G, in.g, cap);
  std::vector<std::uint32_t> base;
  for (std::uint32_t i = 0; i < cls.size(); ++i)
    if (M.contains(cls[i])) base.push_back(i);

  auto act = [&cls](const std::vector<Point>& B, std::size_t i) {
    return image_of_set(B, cls.generator_action(i));
  };
  Orbit<std::vector<Point>> blocks(G, std::vector<Point>(base.begin(), base.end()), act, cap);
  const BigInt index = G.order() / M.order();
  if (BigInt(blocks.size()) != index)
    throw InternalInconsistency("Method 2 produced " + std::to_string(blocks.size()) +
                                " blocks, expected |G:M| = " + index.str());

  Method2Design out{G, M, cls, base, IncidenceStructure(cls.size(), blocks.elements()), {}, {}};
  out.params = validate_1design(out.design);
  for (std::uint32_t j = 0; j < blocks.size(); ++j) out.block_reps.push_back(blocks.transversal(j));
  return out;
}

std::uint64_t perm_char_value(const CosetAction& coset, const Permutation& g) {
  auto img = coset.induced(g);
  if (!img) throw InvalidArgument("element does not act on the cosets");
  return img->fixed_point_count();
}

BigInt perm_char_value_by_class(const PermGroup& G, const PermGroup& M, const Permutation& g) {
  if (g.is_identity()) return G.order() / M.order();
  ConjugacyClass cls(G, g);
  std::size_t meet = 0;
  for (const auto& h : cls.elements())
    if (M.contains(h)) ++meet;
  const BigInt num = (G.order() / BigInt(cls.size())) * meet;
  if (num % M.order() != 0) throw InternalInconsistency("|C_G(g)| |g^G ∩ M| not divisible by |M|");
  return num / M.order();
}

namespace {

std::vector<Permutation> sample_elements(const PermGroup& G, std::size_t samples, std::uint64_t seed) {
  std::vector<Permutation> out = G.generators();
  if (G.generators().empty()) return out;
  ProductReplacement pr(G.generators(), G.degree(), seed);
  for (std::size_t i = 0; i < samples; ++i) out.push_back(pr.next());
  return out;
}

}  // namespace

bool faithfulness_check(const Method2Design& D, std::size_t samples, std::uint64_t seed) {
  for (const auto& w : sample_elements(D.G, samples, seed)) {
    if (w.is_identity()) continue;
    bool moves = false;
    for (const auto& h : D.cls.elements())
      if (h.conjugate_by(w) != h) {
        moves = true;
        break;
      }
    if (!moves) return false;
  }
  return true;
}

bool faithfulness_check(const Method1Design& D, std::size_t samples, std::uint64_t seed) {
  for (const auto& w : sample_elements(D.group, samples, seed))
    if (!w.is_identity() && !D.design.is_automorphism(w)) return false;
  return true;
}

std::vector<Permutation> g_classes_meeting(const PermGroup& G, const PermGroup& M) {
  std::vector<ConjugacyClass> found;
  for (const auto& r : conjugacy_class_representatives(M)) {
    if (r.is_identity()) continue;
    bool known = false;
    for (const auto& c : found)
      if (c.representative().order() == r.order() && c.index_of(r)) {
        known = true;
        break;
      }
    if (!known) found.emplace_back(G, r);
  }
  std::sort(found.begin(), found.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return std::make_tuple(a.representative().order(), a.size(), a.representative()) <
           std::make_tuple(b.representative().order(), b.size(), b.representative());
  });
  std::vector<Permutation> out;
  for (const auto& c : found) out.push_back(c.representative());
  return out;
}

}  // namespace designforge
