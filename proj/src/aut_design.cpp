#include "designforge/aut_design.hpp"

#include <algorithm>

#include "designforge/errors.hpp"

namespace designforge {

BigInt s_of_i_order(const ReducedStructure& R) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= R.class_size; ++i) f *= i;
  BigInt out = 1;
  for (std::size_t c = 0; c < R.classes.size(); ++c) out *= f;
  return out;
}

std::vector<Permutation> s_of_i_generators(const ReducedStructure& R) {
  const std::size_t v = R.class_of.size();
  std::vector<Permutation> gens;
  for (const auto& cls : R.classes) {
    if (cls.size() < 2) continue;
    gens.push_back(Permutation::from_cycles(v, {{cls[0], cls[1]}}));
    if (cls.size() > 2) gens.push_back(Permutation::from_cycles(v, {cls}));
  }
  return gens;
}

Permutation expand_quotient_map(const ReducedStructure& R, const Permutation& sigma) {
  if (sigma.degree() != R.classes.size())
    throw InvalidArgument("quotient map has degree " + std::to_string(sigma.degree()) + ", expected " +
                          std::to_string(R.classes.size()));
  std::vector<Point> img(R.class_of.size());
  for (std::size_t c = 0; c < R.classes.size(); ++c) {
    const auto& from = R.classes[c];
    const auto& to = R.classes[sigma[static_cast<Point>(c)]];
    for (std::size_t i = 0; i < from.size(); ++i) img[from[i]] = to[i];
  }
  return Permutation(std::move(img));
}

bool QuotientTheoremReport::pass() const {
  return complete && order_identity && quotient_generators_lift && s_of_i_generators_fix_blocks &&
         block_kernel_is_s_of_i.value_or(true);
}

namespace {

bool fixes_every_block(const IncidenceStructure& D, const Permutation& g) {
  for (const auto& B : D.blocks())
    if (image_of_set(B, g) != B) return false;
  return true;
}

}  // namespace

QuotientTheoremReport verify_quotient_theorem(const IncidenceStructure& D, const ReducedStructure& R,
                                              std::uint64_t node_budget, std::size_t max_kernel_degree) {
  QuotientTheoremReport rep;
  const AutResult full = aut_group(D, node_budget);
  const AutResult quot = aut_group(R.quotient, node_budget);
  rep.complete = full.complete && quot.complete;
  rep.aut_order = full.order;
  rep.quotient_aut_order = quot.order;
  rep.s_of_i = s_of_i_order(R);
  rep.order_identity = rep.aut_order == rep.s_of_i * rep.quotient_aut_order;

  rep.quotient_generators_lift = true;
  for (const auto& sigma : quot.point_generators)
    if (!D.is_automorphism(expand_quotient_map(R, sigma))) rep.quotient_generators_lift = false;

  rep.s_of_i_generators_fix_blocks = true;
  for (const auto& s : s_of_i_generators(R))
    if (!fixes_every_block(D, s)) rep.s_of_i_generators_fix_blocks = false;

  const std::size_t nb = D.block_multiplicities().size();
  if (full.complete && D.v() + nb <= max_kernel_degree && !full.generators.empty()) {
    const std::size_t deg = full.generators.front().degree();
    std::vector<Point> block_vertices;
    for (std::size_t j = D.v(); j < deg; ++j) block_vertices.push_back(static_cast<Point>(j));
    const PermGroup both(deg, full.generators);
    rep.block_kernel_is_s_of_i = both.pointwise_stabilizer(block_vertices).order() == rep.s_of_i;
  }
  return rep;
}

bool normalizing_map_check(const PermGroup& G, const Permutation& phi) {
  if (phi.degree() != G.degree()) return false;
  for (const auto& s : G.generators())
    if (!G.contains(s.conjugate_by(phi))) return false;
  return true;
}

namespace {

bool is_block(const IncidenceStructure& D, const Block& B) {
  // Blocks are sorted, so compare against the blocks through B's least point.
  if (B.empty()) return std::any_of(D.blocks().begin(), D.blocks().end(), [](const Block& X) { return X.empty(); });
  for (auto j : D.blocks_through(B.front()))
    if (D.block(j) == B) return true;
  return false;
}

void finish(LiftResult& r, const IncidenceStructure& design, const Block& base) {
  if (!r.point_map) return;
  r.maps_blocks = is_block(design, image_of_set(base, *r.point_map));
  r.automorphism = design.is_automorphism(*r.point_map);
}

}  // namespace

LiftResult lift_test_method1(const Method1Design& D, const Permutation& phi) {
  LiftResult r;
  r.normalizes = normalizing_map_check(D.group, phi);
  r.preserves_points = phi.degree() == D.design.v();
  if (r.preserves_points) r.point_map = phi;
  finish(r, D.design, D.delta);
  return r;
}

LiftResult lift_test_method1(const Method1Design& D, const PermGroup& G, const CosetAction& coset,
                             const Permutation& phi) {
  if (coset.degree() != D.design.v())
    throw InvalidArgument("coset action degree differs from the design's point count");
  LiftResult r;
  r.normalizes = normalizing_map_check(G, phi);
  if (!r.normalizes) return r;
  r.point_map = coset.induced(phi);
  r.preserves_points = r.point_map.has_value();
  finish(r, D.design, D.delta);
  return r;
}

std::optional<Permutation> induced_point_map(const Method2Design& D, const Permutation& phi) {
  if (phi.degree() != D.G.degree()) return std::nullopt;
  std::vector<Point> img(D.cls.size());
  for (std::size_t i = 0; i < D.cls.size(); ++i) {
    auto j = D.cls.index_of(D.cls[i].conjugate_by(phi));
    if (!j) return std::nullopt;
    img[i] = *j;
  }
  return Permutation(std::move(img));
}

LiftResult lift_test_method2(const Method2Design& D, const Permutation& phi) {
  LiftResult r;
  r.normalizes = normalizing_map_check(D.G, phi);
  if (!r.normalizes) return r;
  r.preserves_points = D.cls.index_of(D.cls.representative().conjugate_by(phi)).has_value();
  if (!r.preserves_points) return r;
  r.point_map = induced_point_map(D, phi);
  if (!r.point_map) throw InternalInconsistency("normalizing map sends part of the class outside it");
  Block base(D.base_block.begin(), D.base_block.end());
  std::sort(base.begin(), base.end());
  finish(r, D.design, base);
  return r;
}

bool SIntersectionReport::pass() const {
  return std::all_of(moved_block.begin(), moved_block.end(), [](const auto& m) { return m.has_value(); });
}

SIntersectionReport verify_s_i_intersection(const IncidenceStructure& D,
                                            const std::vector<Permutation>& lifted_maps) {
  SIntersectionReport rep;
  for (const auto& g : lifted_maps) {
    std::optional<std::size_t> moved;
    for (std::size_t j = 0; j < D.b() && !moved; ++j)
      if (image_of_set(D.block(j), g) != D.block(j)) moved = j;
    rep.moved_block.push_back(moved);
  }
  return rep;
}

}  // namespace designforge
