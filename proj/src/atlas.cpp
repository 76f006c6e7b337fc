#include "designforge/atlas.hpp"

#include <numeric>

#include "designforge/conjugacy.hpp"
#include "designforge/generator_io.hpp"

namespace designforge {

Point ProjectiveLine::point_of(const FieldElem& a, const FieldElem& b) const {
  if (field_.is_zero(b)) {
    if (field_.is_zero(a)) throw InvalidArgument("(0:0) is not a projective point");
    return infinity();
  }
  return field_.index(field_.div(a, b));
}

std::pair<FieldElem, FieldElem> ProjectiveLine::coordinates(Point p) const {
  if (p == infinity()) return {field_.one(), field_.zero()};
  return {field_.element(p), field_.one()};
}

FieldElem ProjectiveLine::det(const Mat2& m) const {
  return field_.sub(field_.mul(m.a, m.d), field_.mul(m.b, m.c));
}

Permutation ProjectiveLine::mobius(const Mat2& m) const {
  if (field_.is_zero(det(m))) throw InvalidArgument("singular matrix");
  std::vector<Point> img(size());
  for (Point p = 0; p < size(); ++p) {
    auto [x, y] = coordinates(p);
    img[p] = point_of(field_.add(field_.mul(m.a, x), field_.mul(m.b, y)),
                      field_.add(field_.mul(m.c, x), field_.mul(m.d, y)));
  }
  return Permutation(std::move(img));
}

Permutation ProjectiveLine::frobenius(std::uint32_t i) const {
  std::vector<Point> img(size());
  for (Point p = 0; p < size(); ++p) {
    auto [x, y] = coordinates(p);
    img[p] = point_of(field_.frobenius(x, i), field_.frobenius(y, i));
  }
  return Permutation(std::move(img));
}

std::optional<Mat2> ProjectiveLine::matrix_of(const Permutation& g) const {
  if (g.degree() != size()) return std::nullopt;
  const Field& F = field_;
  auto [u1, u2] = coordinates(g[infinity()]);
  auto [w1, w2] = coordinates(g[0]);
  auto [z1, z2] = coordinates(g[F.index(F.one())]);
  const FieldElem d = F.sub(F.mul(u1, w2), F.mul(u2, w1));
  if (F.is_zero(d)) return std::nullopt;
  const FieldElem lam = F.div(F.sub(F.mul(z1, w2), F.mul(z2, w1)), d);
  const FieldElem mu = F.div(F.sub(F.mul(u1, z2), F.mul(u2, z1)), d);
  Mat2 m{F.mul(lam, u1), F.mul(mu, w1), F.mul(lam, u2), F.mul(mu, w2)};
  if (F.is_zero(det(m)) || mobius(m) != g) return std::nullopt;
  return m;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  std::uint64_t p = 2;
  while (q % p) ++p;
  std::uint32_t e = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), e};
}

PermGroup build_psl2(std::uint64_t q) {
  auto [p, e] = prime_power(q);
  ProjectiveLine line(Field::make(p, e));
  const Field& F = line.field();
  const FieldElem w = F.primitive_element();
  std::vector<Permutation> gens{
      line.mobius({F.one(), F.one(), F.zero(), F.one()}),
      line.mobius({w, F.zero(), F.zero(), F.inv(w)}),
      line.mobius({F.zero(), F.neg(F.one()), F.one(), F.zero()}),
  };
  return PermGroup(line.size(), std::move(gens));
}

namespace {

// Generators of PGL(2,q) with entries in the subfield GF(q) of GF(q^2).
std::vector<Permutation> pgl2_subfield_generators(const ProjectiveLine& line, std::uint64_t q) {
  const Field& F = line.field();
  const FieldElem mu = F.pow(F.primitive_element(), q + 1);
  return {
      line.mobius({F.one(), F.one(), F.zero(), F.one()}),
      line.mobius({mu, F.zero(), F.zero(), F.one()}),
      line.mobius({F.zero(), F.one(), F.one(), F.zero()}),
  };
}

}  // namespace

PermGroup embed_pgl2(std::uint64_t q, UnipotentClass variant) {
  auto [p, e] = prime_power(q);
  if (p == 2) throw InvalidArgument("q must be odd");
  ProjectiveLine line(Field::make(p, 2 * e));
  auto gens = pgl2_subfield_generators(line, q);
  if (variant == UnipotentClass::NonSquared) {
    const Field& F = line.field();
    const Permutation delta = line.mobius({F.primitive_element(), F.zero(), F.zero(), F.one()});
    for (auto& g : gens) g = g.conjugate_by(delta);
  }
  return PermGroup(line.size(), std::move(gens));
}

std::optional<UnipotentClass> classify_unipotent(const ProjectiveLine& line, const Permutation& g) {
  if (g.is_identity()) return std::nullopt;
  auto m = line.matrix_of(g);
  if (!m) return std::nullopt;
  const Field& F = line.field();
  FieldElem root;
  if (!F.sqrt(line.det(*m), root)) return std::nullopt;  // in PGL but not PSL
  const FieldElem s = F.inv(root);
  Mat2 a{F.mul(m->a, s), F.mul(m->b, s), F.mul(m->c, s), F.mul(m->d, s)};
  FieldElem tr = F.add(a.a, a.d);
  if (tr == F.scalar(-2)) {
    a = {F.neg(a.a), F.neg(a.b), F.neg(a.c), F.neg(a.d)};
    tr = F.scalar(2);
  }
  if (tr != F.scalar(2)) return std::nullopt;
  // A = [[1, t], [0, 1]] conjugated in SL(2) keeps t modulo squares in the
  // upper-right entry and -t modulo squares in the lower-left one.
  const FieldElem t = !F.is_zero(a.b) ? a.b : F.neg(a.c);
  return F.is_square(t) ? UnipotentClass::Squared : UnipotentClass::NonSquared;
}

PermGroup build_pgammal2(std::uint64_t q) {
  auto [p, e] = prime_power(q);
  ProjectiveLine line(Field::make(p, e));
  const Field& F = line.field();
  const FieldElem w = F.primitive_element();
  std::vector<Permutation> gens{
      line.mobius({F.one(), F.one(), F.zero(), F.one()}),
      line.mobius({w, F.zero(), F.zero(), F.one()}),
      line.mobius({F.zero(), F.one(), F.one(), F.zero()}),
  };
  if (e > 1) gens.push_back(line.frobenius(1));
  return PermGroup(line.size(), std::move(gens));
}

PermGroup build_alternating(std::size_t n) {
  if (n < 3) throw InvalidArgument("alternating group needs n >= 3");
  std::vector<Point> long_cycle;
  for (Point i = (n % 2 == 1 ? 0 : 1); i < n; ++i) long_cycle.push_back(i);
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) gens.push_back(Permutation::from_cycles(n, {long_cycle}));
  return PermGroup(n, std::move(gens));
}

PermGroup build_symmetric(std::size_t n) {
  if (n < 1) throw InvalidArgument("symmetric group needs n >= 1");
  if (n == 1) return PermGroup(1);
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {all})});
}

PermGroup point_stabilizer_subgroup(const PermGroup& G, Point pt) {
  if (pt >= G.degree()) throw InvalidArgument("point out of range");
  return G.point_stabilizer(pt);
}

Permutation frobenius_on_projline(std::uint64_t Q, std::uint32_t i) {
  auto [p, e] = prime_power(Q);
  return ProjectiveLine(Field::make(p, e)).frobenius(i);
}

Permutation diagonal_outer_on_projline(std::uint64_t Q) {
  auto [p, e] = prime_power(Q);
  ProjectiveLine line(Field::make(p, e));
  const Field& F = line.field();
  return line.mobius({F.primitive_element(), F.zero(), F.zero(), F.one()});
}

nlohmann::json GroupRecipe::to_json() const {
  return {{"name", name}, {"kind", kind}, {"params", params}};
}

GroupRecipe GroupRecipe::from_json(const nlohmann::json& j) {
  return GroupRecipe{j.at("name").get<std::string>(), j.at("kind").get<std::string>(),
                     j.value("params", nlohmann::json::object())};
}

PermGroup build_group(const GroupRecipe& r, const std::filesystem::path& data_dir) {
  const auto& P = r.params;
  try {
    if (r.kind == "alternating") return build_alternating(P.at("n").get<std::size_t>());
    if (r.kind == "symmetric") return build_symmetric(P.at("n").get<std::size_t>());
    if (r.kind == "psl2") return build_psl2(P.at("q").get<std::uint64_t>());
    if (r.kind == "pgammal2") return build_pgammal2(P.at("q").get<std::uint64_t>());
    if (r.kind == "pgl2-in-psl2sq") {
      const auto v = P.at("variant").get<std::string>();
      if (v != "squared" && v != "non-squared") throw InvalidArgument("unknown variant " + v);
      return embed_pgl2(P.at("q").get<std::uint64_t>(),
                        v == "squared" ? UnipotentClass::Squared : UnipotentClass::NonSquared);
    }
    if (r.kind == "from-file") {
      std::filesystem::path path = P.at("path").get<std::string>();
      if (path.is_relative()) path = data_dir / path;
      return load_group(path);
    }
    if (r.kind == "point-stabilizer") {
      const PermGroup parent = build_group(GroupRecipe::from_json(P.at("parent")), data_dir);
      return point_stabilizer_subgroup(parent, P.at("point").get<Point>());
    }
    if (r.kind == "normalizer-of-cyclic") {
      const PermGroup parent = build_group(GroupRecipe::from_json(P.at("parent")), data_dir);
      const Permutation g = element_of_order(parent, P.at("order").get<std::uint64_t>(), {},
                                             P.value("seed", kDefaultSeed));
      return normalizer_of_cyclic(parent, g);
    }
    if (r.kind == "generators") {
      const auto degree = P.at("degree").get<std::size_t>();
      std::vector<Permutation> gens;
      for (const auto& c : P.at("cycles")) gens.push_back(parse_permutation(c.get<std::string>(), degree));
      return PermGroup(degree, std::move(gens));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("malformed recipe '" + r.name + "': " + e.what());
  }
  throw InvalidArgument("unknown recipe kind '" + r.kind + "'");
}

namespace recipes {

GroupRecipe alternating(std::size_t n) { return {"A" + std::to_string(n), "alternating", {{"n", n}}}; }
GroupRecipe symmetric(std::size_t n) { return {"S" + std::to_string(n), "symmetric", {{"n", n}}}; }
GroupRecipe psl2(std::uint64_t q) { return {"PSL(2," + std::to_string(q) + ")", "psl2", {{"q", q}}}; }

GroupRecipe pgl2_in_psl2sq(std::uint64_t q, UnipotentClass variant) {
  const std::string v = variant == UnipotentClass::Squared ? "squared" : "non-squared";
  return {"PGL(2," + std::to_string(q) + ")[" + v + "]", "pgl2-in-psl2sq", {{"q", q}, {"variant", v}}};
}

GroupRecipe pgammal2(std::uint64_t q) {
  return {"PGammaL(2," + std::to_string(q) + ")", "pgammal2", {{"q", q}}};
}

GroupRecipe mathieu(int n) {
  return {"M" + std::to_string(n), "from-file", {{"path", "m" + std::to_string(n) + ".gens"}}};
}

GroupRecipe point_stabilizer(const GroupRecipe& parent, Point pt) {
  return {parent.name + "_" + std::to_string(pt), "point-stabilizer",
          {{"parent", parent.to_json()}, {"point", pt}}};
}

GroupRecipe normalizer_of_cyclic(const GroupRecipe& parent, std::uint64_t order, std::uint64_t seed) {
  return {"N(C" + std::to_string(order) + ")", "normalizer-of-cyclic",
          {{"parent", parent.to_json()}, {"order", order}, {"seed", seed}}};
}

GroupRecipe generators(std::string name, std::size_t degree, std::vector<std::string> cycles) {
  return {std::move(name), "generators", {{"degree", degree}, {"cycles", cycles}}};
}

GroupRecipe a6_s4_second_class() {
  return generators("S4[second class]", 6, {"(1,2,3)(4,5,6)", "(1,4)(3,5)"});
}

}  // namespace recipes

}  // namespace designforge
