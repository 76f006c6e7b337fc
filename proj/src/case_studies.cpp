#include "designforge/case_studies.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "designforge/errors.hpp"

namespace designforge {

using nlohmann::json;

// ---------------------------------------------------------------- claim log

bool ClaimLog::check(std::string id, json expected, json observed) {
  const bool pass = expected == observed;
  return check(std::move(id), std::move(expected), std::move(observed), pass);
}

bool ClaimLog::check(std::string id, json expected, json observed, bool pass) {
  checks_.push_back({std::move(id), std::move(expected), std::move(observed), pass, false});
  return pass;
}

void ClaimLog::note(std::string id, json expected, json observed, bool pass) {
  checks_.push_back({std::move(id), std::move(expected), std::move(observed), pass, true});
}

void ClaimLog::append(const ClaimLog& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.id = prefix + c.id;
    checks_.push_back(std::move(c));
  }
}

bool ClaimLog::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const ClaimCheck& c) { return c.pass || c.informational; });
}

const ClaimCheck& ClaimLog::get(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return c;
  throw NotFound("no claim check named " + id);
}

json ClaimLog::to_json() const {
  json out = json::array();
  for (const auto& c : checks_) {
    json j = {{"id", c.id}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}};
    if (c.informational) j["informational"] = true;
    out.push_back(std::move(j));
  }
  return out;
}

std::string big(const BigInt& n) { return n.str(); }

json params_json(const DesignParams& p) {
  return {{"t", p.t}, {"v", p.v}, {"b", p.b}, {"k", p.k}, {"lambda", p.lambda}};
}

namespace {

json vkl(std::size_t v, std::size_t k, std::size_t lambda) { return {v, k, lambda}; }
json vkl(const DesignParams& p) { return vkl(p.v, p.k, p.lambda); }

template <class T>
json opt_json(const std::optional<T>& x) {
  if (!x) return nullptr;
  if constexpr (std::is_same_v<T, BigInt>)
    return big(*x);
  else
    return *x;
}

// Class index of h, which must be in the class.
std::uint32_t index_in(const ConjugacyClass& cls, const Permutation& h) {
  auto i = cls.index_of(h);
  if (!i) throw InternalInconsistency("conjugate left its class");
  return *i;
}

// Orbit of class index x under conjugation by `gens`, sorted.
std::vector<Point> class_orbit(const ConjugacyClass& cls, std::uint32_t x, const std::vector<Permutation>& gens) {
  std::vector<char> seen(cls.size(), 0);
  std::vector<Point> orbit{x};
  seen[x] = 1;
  for (std::size_t a = 0; a < orbit.size(); ++a)
    for (const auto& s : gens) {
      const std::uint32_t y = index_in(cls, cls[orbit[a]].conjugate_by(s));
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool normalizes(const PermGroup& N, const std::vector<Permutation>& by) {
  for (const auto& s : by)
    for (const auto& h : N.generators())
      if (!N.contains(h.conjugate_by(s))) return false;
  return true;
}

PermGroup group_from_elements(std::size_t degree, const std::vector<Permutation>& elems) {
  SubgroupBuilder B(degree);
  for (const auto& e : elems) {
    if (B.group().order() == elems.size()) break;
    if (!e.is_identity()) B.add(e);
  }
  if (B.group().order() != elems.size())
    throw InternalInconsistency("element set is not closed under multiplication");
  return B.group();
}

auto index_set_action(const ConjugacyClass& cls) {
  return [&cls](const std::vector<Point>& s, std::size_t i) { return image_of_set(s, cls.generator_action(i)); };
}

}  // namespace

// ---------------------------------------------------------------- stabilizers

bool StabReport::pass() const {
  return order_product && orbit_is_i && centralizer_in_s && h_normal && i_is_a_meet_class.value_or(true) &&
         s_normalizes_a.value_or(true) && s_is_normalizer.value_or(true) && normalizer_orbit_is_i.value_or(true) &&
         centralizer_times_a_in_s.value_or(true) && ha_normal.value_or(true);
}

json StabReport::to_json() const {
  return {{"point", point},
          {"i_size", i_size},
          {"centralizer_order", big(centralizer_order)},
          {"s_order", big(s_order)},
          {"order_product", order_product},
          {"orbit_is_i", orbit_is_i},
          {"centralizer_in_s", centralizer_in_s},
          {"a_method", a_method},
          {"a_order", opt_json(a_order)},
          {"i_is_a_meet_class", opt_json(i_is_a_meet_class)},
          {"s_normalizes_a", opt_json(s_normalizes_a)},
          {"normalizer_order", opt_json(normalizer_order)},
          {"s_is_normalizer", opt_json(s_is_normalizer)},
          {"normalizer_orbit_is_i", opt_json(normalizer_orbit_is_i)},
          {"centralizer_times_a_in_s", opt_json(centralizer_times_a_in_s)},
          {"h_order", big(h_order)},
          {"h_normal", h_normal},
          {"ha_normal", opt_json(ha_normal)},
          {"pass", pass()}};
}

StabReport verify_stab_theorem(const Method2Design& D, const ReducedStructure& R, std::uint32_t x,
                               const StabOptions& opt) {
  const PermGroup& G = D.G;
  const ConjugacyClass& cls = D.cls;
  if (x >= cls.size()) throw InvalidArgument("point outside the class");
  StabReport rep;
  rep.point = x;
  const std::vector<Point> I = R.classes[R.class_of[x]];
  rep.i_size = I.size();

  Orbit<std::vector<Point>> orb(G, I, index_set_action(cls), opt.cap);
  if (orb.size() != R.classes.size())
    throw InternalInconsistency("G does not permute the I-classes transitively");
  const PermGroup S = orb.stabilizer();
  rep.s_order = S.order();
  rep.s_generators = S.generators();

  // C_G(x) = C_G(rep)^u where rep^u = x.
  const Permutation u = cls.conjugator(x);
  std::vector<Permutation> cgens;
  for (const auto& c : cls.centralizer().generators()) cgens.push_back(c.conjugate_by(u));
  rep.centralizer_order = cls.centralizer().order();
  rep.order_product = rep.s_order == rep.centralizer_order * rep.i_size;
  rep.orbit_is_i = class_orbit(cls, x, S.generators()) == I;
  rep.centralizer_in_s = std::all_of(cgens.begin(), cgens.end(), [&](const auto& c) { return S.contains(c); });

  // H_x: generated by the centralizers of all members of I_x.
  std::vector<Permutation> hgens;
  for (Point y : I) {
    const Permutation uy = cls.conjugator(y);
    for (const auto& c : cls.centralizer().generators()) hgens.push_back(c.conjugate_by(uy));
  }
  const PermGroup H = subgroup_closure(G, hgens);
  rep.h_order = H.order();
  rep.h_normal = normalizes(H, S.generators());

  std::optional<PermGroup> A;
  const auto& through = D.design.blocks_through(x);
  if (opt.m_fixed_point) {
    std::vector<Point> pts;
    for (auto j : through) pts.push_back(D.block_reps[j][*opt.m_fixed_point]);
    A = G.pointwise_stabilizer(pts);
    rep.a_method = "pointwise-stabilizer";
  } else if (D.M.order() <= opt.max_m_elements) {
    auto base = D.M.elements();
    std::vector<Permutation> meet;
    for (std::size_t n = 0; n < through.size(); ++n) {
      const Permutation& y = D.block_reps[through[n]];
      std::vector<Permutation> conj;
      conj.reserve(base.size());
      for (const auto& m : base) conj.push_back(m.conjugate_by(y));
      std::sort(conj.begin(), conj.end());
      if (n == 0) {
        meet = std::move(conj);
      } else {
        std::vector<Permutation> next;
        std::set_intersection(meet.begin(), meet.end(), conj.begin(), conj.end(), std::back_inserter(next));
        meet = std::move(next);
      }
    }
    A = group_from_elements(G.degree(), meet);
    rep.a_method = "element-intersection";
  }

  if (A) {
    rep.a_order = A->order();
    rep.a_generators = A->generators();
    std::vector<Point> a_meet;
    for (std::uint32_t y = 0; y < cls.size(); ++y)
      if (A->contains(cls[y])) a_meet.push_back(y);
    rep.i_is_a_meet_class = a_meet == I;
    rep.s_normalizes_a = normalizes(*A, S.generators());
    rep.centralizer_times_a_in_s =
        rep.centralizer_in_s &&
        std::all_of(A->generators().begin(), A->generators().end(), [&](const auto& a) { return S.contains(a); });
    std::vector<Permutation> hagens = hgens;
    hagens.insert(hagens.end(), A->generators().begin(), A->generators().end());
    rep.ha_normal = normalizes(subgroup_closure(G, hagens), S.generators());

    if (A->order() <= opt.max_a_elements) {
      auto elems = A->elements();
      std::sort(elems.begin(), elems.end());
      Orbit<std::vector<Permutation>> conj(G, std::move(elems), on_element_sets(G), opt.cap);
      const PermGroup N = conj.stabilizer();
      rep.normalizer_order = N.order();
      rep.s_is_normalizer = *rep.s_normalizes_a && N.order() == S.order();
      rep.normalizer_orbit_is_i = class_orbit(cls, x, N.generators()) == a_meet;
    }
  }
  return rep;
}

// ---------------------------------------------------------------- block systems

std::optional<std::vector<Point>> minimal_block(std::size_t n, const std::vector<Permutation>& gens,
                                                const std::vector<Point>& partners) {
  std::optional<std::vector<Point>> best;
  std::vector<Point> parent(n);
  auto find = [&parent](Point a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (Point beta : partners) {
    if (beta == 0 || beta >= n) continue;
    std::iota(parent.begin(), parent.end(), Point{0});
    std::vector<std::pair<Point, Point>> queue{{0, beta}};
    parent[beta] = 0;
    std::size_t merged = 1;
    for (std::size_t q = 0; q < queue.size() && merged < n - 1; ++q)
      for (const auto& g : gens) {
        const Point a = find(g[queue[q].first]), b = find(g[queue[q].second]);
        if (a == b) continue;
        parent[std::max(a, b)] = std::min(a, b);
        ++merged;
        queue.emplace_back(g[queue[q].first], g[queue[q].second]);
      }
    std::vector<Point> block;
    for (Point p = 0; p < n; ++p)
      if (find(p) == find(0)) block.push_back(p);
    if (block.size() < n && (!best || block.size() < best->size())) best = std::move(block);
  }
  return best;
}

namespace {

// Size of the smallest block system of G on the I-classes found from one
// partner per orbit of S, the stabilizer of classes[0]; nullopt if primitive.
std::optional<std::size_t> class_block_system(const Method2Design& D, const Orbit<std::vector<Point>>& classes,
                                              const PermGroup& S) {
  const std::size_t N = classes.size();
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < D.G.generators().size(); ++i) gens.push_back(classes.generator_action(i));
  std::vector<Permutation> sgens;
  for (const auto& s : S.generators()) {
    std::vector<Point> img(N);
    for (std::uint32_t k = 0; k < N; ++k) {
      std::vector<Point> set;
      for (Point y : classes[k]) set.push_back(index_in(D.cls, D.cls[y].conjugate_by(s)));
      std::sort(set.begin(), set.end());
      auto idx = classes.index_of(set);
      if (!idx) throw InternalInconsistency("class stabilizer does not permute the I-classes");
      img[k] = *idx;
    }
    sgens.push_back(Permutation(std::move(img)));
  }
  std::vector<Point> partners;
  std::vector<char> seen(N, 0);
  seen[0] = 1;
  for (Point start = 1; start < N; ++start) {
    if (seen[start]) continue;
    partners.push_back(start);
    std::vector<Point> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const Point a = stack.back();
      stack.pop_back();
      for (const auto& g : sgens)
        if (!seen[g[a]]) {
          seen[g[a]] = 1;
          stack.push_back(g[a]);
        }
    }
  }
  auto blk = minimal_block(N, gens, partners);
  if (!blk) return std::nullopt;
  return blk->size();
}

}  // namespace

// ---------------------------------------------------------------- mathieu rows

MathieuExpected mathieu_expected(int n, std::uint64_t ord) {
  const BigInt m24 = 244823040, m23 = 10200960, m22_2 = 887040;
  if (n == 24 && ord == 2) return {15, 5, 8, 1, m24, 322560, true};
  if (n == 24 && ord == 3) return {2, 5, 6, 16, m24, 2160, false};
  if (n == 23 && ord == 2) return {15, 4, 7, 1, m23, 40320, true};
  if (n == 23 && ord == 3) return {2, 4, 5, 16, m23, 360, false};
  if (n == 22 && ord == 2) return {15, 3, 6, 1, m22_2, 5760, true};
  if (n == 22 && ord == 3) return {2, 3, 4, 16, m22_2, 72, false};
  throw InvalidArgument("no Mathieu row for n = " + std::to_string(n) + ", order " + std::to_string(ord));
}

json MathieuRow::to_json() const {
  json j = {{"n", n},
            {"ord", ord},
            {"class_size", class_size},
            {"design", params_json(design)},
            {"i_size", i_size},
            {"reduced", params_json(reduced)},
            {"dual", {{"t", t}, {"v", dual_v}, {"b", dual_b}, {"k", dual_k}, {"lambda_t", lambda_t}, {"uniform", t_uniform}}},
            {"aut_order", big(aut_order)},
            {"aut_complete", aut_complete},
            {"point_transitive", point_transitive},
            {"block_transitive", block_transitive},
            {"g_embeds", g_embeds},
            {"aut_divisible_by_g", aut_divisible},
            {"block_stabilizer_order", big(block_stabilizer_order)},
            {"block_kernel_order", big(block_kernel_order)},
            {"block_kernel_normal", block_kernel_normal},
            {"dual_block_system", opt_json(dual_block_system)}};
  if (stab) j["stab"] = stab->to_json();
  return j;
}

MathieuRow run_mathieu_row(int n, std::uint64_t ord, const MathieuOptions& opt) {
  const MathieuExpected want = mathieu_expected(n, ord);
  MathieuRow row;
  row.n = n;
  row.ord = ord;
  const PermGroup G = build_group(recipes::mathieu(n), opt.data_dir);
  const Point alpha = 0;
  const PermGroup M = G.point_stabilizer(alpha);
  const Permutation g = element_of_order(M, ord, {}, opt.seed);
  const Method2Design D = method2_design({G, M, g});
  row.class_size = D.cls.size();
  row.design = D.params;
  const ReducedStructure R = reduce_design(D.design);
  row.i_size = R.class_size;
  row.reduced = validate_1design(R.quotient);
  const IncidenceStructure dual = dual_design(R.quotient);
  row.dual_v = dual.v();
  row.dual_b = dual.b();
  row.dual_k = dual.block(0).size();
  row.t = static_cast<std::size_t>(n - 19);
  const TDesignResult td = t_design_lambda(dual, row.t, opt.tally_budget);
  row.t_uniform = td.uniform;
  row.lambda_t = td.lambda;

  const AutResult aut = aut_group(dual, opt.node_budget);
  row.aut_order = aut.order;
  row.aut_complete = aut.complete;
  row.point_transitive = aut.point_transitive;
  row.block_transitive = aut.block_transitive;
  row.aut_divisible = aut.order % G.order() == 0;

  // G on the blocks of D, which are the points of the dual.
  IndexedSet<Block> block_index;
  for (const auto& B : D.design.blocks()) block_index.insert(B);
  const PermGroup autG = aut.group(dual.v());
  row.g_embeds = true;
  for (std::size_t i = 0; i < G.generators().size(); ++i) {
    std::vector<Point> img(D.design.b());
    for (std::size_t j = 0; j < D.design.b(); ++j) {
      auto k = block_index.find(image_of_set(D.design.block(j), D.cls.generator_action(i)));
      if (!k) throw InternalInconsistency("G does not permute the blocks");
      img[j] = *k;
    }
    const Permutation p(std::move(img));
    if (!dual.is_automorphism(p) || !autG.contains(p)) row.g_embeds = false;
  }

  // Stabilizer of a dual block, that is of an I-class.
  const std::vector<Point>& I0 = R.classes[0];
  Orbit<std::vector<Point>> classes(G, I0, index_set_action(D.cls));
  const PermGroup S = classes.stabilizer(opt.seed);
  row.block_stabilizer_order = S.order();
  std::vector<Point> block_pts;  // points of G behind the blocks through I0
  for (auto j : D.design.blocks_through(I0.front())) block_pts.push_back(D.block_reps[j][alpha]);
  const PermGroup K = S.pointwise_stabilizer(block_pts);
  row.block_kernel_order = K.order();
  row.block_kernel_normal = normalizes(K, S.generators());

  row.dual_block_system = class_block_system(D, classes, S);

  if (opt.with_stab) row.stab = verify_stab_theorem(D, R, 0, {.m_fixed_point = alpha});

  ClaimLog& L = row.claims;
  L.check("design parameters", vkl(row.class_size, row.design.k, row.design.lambda), vkl(row.design));
  L.check("block count equals n", n, row.design.b);
  L.check("I-class size", want.i_size, row.i_size);
  L.check("dual parameters (t, v, k, lambda_t)", json{want.t, n, want.k, want.lambda_t},
          json{row.t, row.dual_v, row.dual_k, row.t_uniform ? json(row.lambda_t) : json("not uniform")});
  L.check("dual aut search complete", true, row.aut_complete);
  L.check("dual aut order", big(want.aut_order), big(row.aut_order));
  L.check("G embeds in dual aut", true, row.g_embeds);
  L.check("dual aut order divisible by |G|", true, row.aut_divisible);
  L.check("dual aut point transitive", true, row.point_transitive);
  L.check("dual aut block transitive", true, row.block_transitive);
  L.check("dual block stabilizer order", big(want.block_stabilizer_order), big(row.block_stabilizer_order));
  L.check("block stabilizer times orbit equals |G|", big(G.order()),
          big(row.block_stabilizer_order * BigInt(classes.size())));
  L.check("kernel on block points is normal in block stabilizer", true, row.block_kernel_normal);
  if (!want.primitive_on_dual_blocks) {
    L.check("G imprimitive on dual blocks", true, row.dual_block_system.has_value());
  } else {
    L.note("G primitive on dual blocks", true, !row.dual_block_system.has_value(),
           !row.dual_block_system.has_value());
  }
  if (row.stab) L.check("stabilizer identities", true, row.stab->pass());
  return row;
}

// ---------------------------------------------------------------- PSL(2,q^2)

std::uint64_t psl_perm_char_formula(std::uint64_t q, std::uint64_t ord, bool identity, bool order_p_meets_m,
                                    bool halved) {
  if (identity) return q * (q * q + 1) / 2;
  const std::uint64_t p = prime_power(q).first;
  if (ord == 2) return q;
  if (ord == p) return order_p_meets_m ? q : 0;
  const std::uint64_t minus = halved ? (q - 1) / 2 : q - 1;
  const std::uint64_t plus = halved ? (q + 1) / 2 : q + 1;
  if (ord > 2 && minus % ord == 0) return (q + 1) / 2;
  if (ord > 2 && plus % ord == 0) return (q - 1) / 2;
  return 0;
}

namespace {

const char* variant_name(UnipotentClass v) { return v == UnipotentClass::Squared ? "squared" : "non-squared"; }

// Seeded samples of G with the generators, identity skipped.
std::vector<Permutation> samples_of(const PermGroup& G, std::size_t count, std::uint64_t seed) {
  std::vector<Permutation> out;
  for (const auto& s : G.generators())
    if (!s.is_identity()) out.push_back(s);
  if (G.generators().empty()) return out;
  ProductReplacement pr(G.generators(), G.degree(), seed);
  while (out.size() < count + G.generators().size()) {
    auto h = pr.next();
    if (!h.is_identity()) out.push_back(std::move(h));
  }
  return out;
}

bool inner_maps_lift(const Method2Design& D, std::size_t count) {
  for (const auto& h : samples_of(D.G, count, kDefaultSeed)) {
    const LiftResult r = lift_test_method2(D, h);
    if (!r.lifts() || !r.automorphism) return false;
  }
  return true;
}

bool inner_maps_lift(const Method1Design& D, std::size_t count) {
  for (const auto& h : samples_of(D.group, count, kDefaultSeed)) {
    const LiftResult r = lift_test_method1(D, h);
    if (!r.lifts() || !r.automorphism) return false;
  }
  return true;
}

}  // namespace

json run_psl2_pgl2(std::uint64_t q, ClaimLog& log, const PslOptions& opt) {
  const auto [p, e] = prime_power(q);
  if (p == 2) throw InvalidArgument("q must be odd");
  (void)e;
  const std::uint64_t Q = q * q;
  const PermGroup G = build_psl2(Q);
  const ProjectiveLine line(Field::make(p, 2 * prime_power(q).second));
  const auto all_reps = conjugacy_class_representatives(G);
  json out = {{"q", q}, {"G_order", big(G.order())}, {"variants", json::array()}};
  const std::string qs = "q=" + std::to_string(q) + " ";

  for (UnipotentClass variant : {UnipotentClass::Squared, UnipotentClass::NonSquared}) {
    const std::string vp = qs + variant_name(variant) + " ";
    const PermGroup M = embed_pgl2(q, variant);
    const CosetAction coset(G, M);
    json vj = {{"variant", variant_name(variant)}, {"M_order", big(M.order())}, {"index", coset.degree()},
               {"classes", json::array()}, {"all_classes", json::array()}};
    log.check(vp + "|G:M|", q * (q * q + 1) / 2, coset.degree());

    for (const auto& g : g_classes_meeting(G, M)) {
      const std::uint64_t ord = g.order();
      std::string kind;
      if (ord == 2)
        kind = "involution";
      else if (ord == p)
        kind = "unipotent";
      else if ((q - 1) % ord == 0)
        kind = "semisimple-split";
      else if ((q + 1) % ord == 0)
        kind = "semisimple-nonsplit";
      else
        kind = "other";
      const std::string cp = vp + kind + " order " + std::to_string(ord) + " ";
      const Method2Design D = method2_design({G, M, g});
      const ReducedStructure R = reduce_design(D.design);
      const DesignParams Rp = validate_1design(R.quotient);
      const std::uint64_t count_value = perm_char_value(coset, g);
      json cj = {{"kind", kind},
                 {"order", ord},
                 {"representative", g.to_cycle_string()},
                 {"design", params_json(D.params)},
                 {"i_size", R.class_size},
                 {"reduced", params_json(Rp)},
                 {"perm_char_fixed_cosets", count_value},
                 {"perm_char_by_class", big(perm_char_value_by_class(G, M, g))}};

      log.check(cp + "replication equals fixed cosets", D.params.lambda, count_value);
      log.check(cp + "replication equals class count", big(BigInt(D.params.lambda)),
                big(perm_char_value_by_class(G, M, g)));
      log.check(cp + "inner maps lift", true, inner_maps_lift(D, 100));

      if (kind == "involution") {
        log.check(cp + "parameters", vkl(Q * (Q + 1) / 2, Q, q), vkl(D.params));
        log.check(cp + "I-class size", q == 3 ? 3 : 1, R.class_size);
      } else if (kind == "unipotent") {
        log.check(cp + "unipotent type matches M", variant_name(variant),
                  classify_unipotent(line, g) ? variant_name(*classify_unipotent(line, g)) : "none");
        log.check(cp + "parameters", vkl((Q * Q - 1) / 2, Q - 1, q), vkl(D.params));
        log.check(cp + "I-class size", q - 1, R.class_size);
        log.check(cp + "reduced parameters", vkl((Q + 1) * (q + 1) / 2, q + 1, q), vkl(Rp));
        // I_x = C_M(x) ∩ g^G for the representative, which lies in M.
        std::vector<Point> cm;
        for (std::uint32_t y = 0; y < D.cls.size(); ++y)
          if (M.contains(D.cls[y]) && D.cls[y] * g == g * D.cls[y]) cm.push_back(y);
        log.check(cp + "I_x equals C_M(x) meet class", json(R.classes[R.class_of[0]]), json(cm));
      } else if (kind == "semisimple-split" || kind == "semisimple-nonsplit") {
        const bool split = kind == "semisimple-split";
        const std::uint64_t k = split ? q * (q + 1) : q * (q - 1), lam = split ? (q + 1) / 2 : (q - 1) / 2;
        log.check(cp + "parameters", vkl(Q * (Q + 1), k, lam), vkl(D.params));
        std::vector<Point> pair{0, index_in(D.cls, g.inverse())};
        std::sort(pair.begin(), pair.end());
        log.check(cp + "I_x is {x, x^-1}", json(pair), json(R.classes[R.class_of[0]]));
        log.check(cp + "reduced parameters", vkl(Q * (Q + 1) / 2, k / 2, lam), vkl(Rp));
      }

      if (opt.with_stab) {
        const StabReport st = verify_stab_theorem(D, R, 0);
        cj["stab"] = st.to_json();
        log.check(cp + "stabilizer identities", true, st.pass());
        if (kind == "unipotent") {
          log.check(cp + "I-class stabilizer order", big(BigInt(Q * (q - 1))), big(st.s_order));
          log.note(cp + "I-class stabilizer has Borel order q^2(q^2-1)/2", big(BigInt(Q * (Q - 1) / 2)),
                   big(st.s_order), st.s_order == BigInt(Q * (Q - 1) / 2));
          Orbit<std::vector<Point>> classes(G, R.classes[0], index_set_action(D.cls));
          const auto sys = class_block_system(D, classes, classes.stabilizer());
          cj["block_system_on_classes"] = opt_json(sys);
          log.note(cp + "G primitive on I-classes", true, !sys.has_value(), !sys.has_value());
        }
      }
      if (opt.with_aut) {
        const QuotientTheoremReport qt = verify_quotient_theorem(D.design, R, opt.node_budget);
        cj["aut_order"] = big(qt.aut_order);
        cj["reduced_aut_order"] = big(qt.quotient_aut_order);
        cj["s_of_i_order"] = big(qt.s_of_i);
        log.check(cp + "quotient theorem", true, qt.pass());
        log.check(cp + "aut order divisible by |G|", true, qt.complete && qt.aut_order % G.order() == 0);
      }
      vj["classes"].push_back(std::move(cj));
    }

    // Every class of G, against the closed formula.
    std::size_t literal_mismatches = 0;
    bool all_match = true;
    for (const auto& g : all_reps) {
      const std::uint64_t ord = g.order();
      bool meets_unipotent = false;
      if (ord == p) {
        auto c = classify_unipotent(line, g);
        meets_unipotent = c && *c == variant;
      }
      const std::uint64_t count_value = perm_char_value(coset, g);
      const std::uint64_t formula = psl_perm_char_formula(q, ord, g.is_identity(), meets_unipotent, false);
      const std::uint64_t literal = psl_perm_char_formula(q, ord, g.is_identity(), true, true);
      if (formula != count_value) all_match = false;
      if (literal != count_value) ++literal_mismatches;
      vj["all_classes"].push_back({{"order", ord},
                                   {"representative", g.to_cycle_string()},
                                   {"fixed_cosets", count_value},
                                   {"formula", formula},
                                   {"formula_halved_divisors", literal}});
    }
    log.check(vp + "permutation character formula on every class", true, all_match);
    log.note(vp + "classes where the formula with halved divisors and unrestricted order-p case fails", 0,
             literal_mismatches, literal_mismatches == 0);
    out["variants"].push_back(std::move(vj));
  }
  return out;
}

// ---------------------------------------------------------------- Method 1 examples

json run_method1_examples(ClaimLog& log, const ExampleOptions& opt) {
  json out;
  {  // PSL(2,27) on the cosets of D26
    const std::string pre = "PSL(2,27)/D26 ";
    const auto recipe = recipes::psl2(27);
    const PermGroup G = build_group(recipe);
    const PermGroup M = build_group(recipes::normalizer_of_cyclic(recipe, 13));
    const CosetAction coset(G, M);
    std::map<std::size_t, std::size_t> census;
    for (const auto& o : stabilizer_orbits(coset.action(), 0)) ++census[o.size()];
    json cj = json::object();
    for (auto [len, c] : census) cj[std::to_string(len)] = c;
    log.check(pre + "coset degree", 378, coset.degree());
    log.check(pre + "stabilizer orbit census", json{{"1", 1}, {"13", 13}, {"26", 8}}, cj);

    const Permutation frob = frobenius_on_projline(27, 1);
    log.check(pre + "Frobenius normalizes G", true, normalizing_map_check(G, frob));
    std::vector<std::size_t> indices = opt.psl27_indices;
    if (indices.empty())
      for (std::size_t i = 0; i < census[13]; ++i) indices.push_back(i);
    json designs = json::array();
    std::map<std::string, std::size_t> dist;
    std::size_t lifting = 0;
    bool lifting_has_big_aut = true, all_complete = true, params_ok = true, inner_ok = true;
    for (std::size_t i : indices) {
      const Method1Design D = method1_design({coset.action(), 0, 13, i});
      const AutResult A = aut_group(D.design, opt.node_budget);
      const LiftResult L = lift_test_method1(D, G, coset, frob);
      params_ok = params_ok && vkl(D.params) == vkl(378, 13, 13);
      inner_ok = inner_ok && inner_maps_lift(D, 100);
      all_complete = all_complete && A.complete;
      ++dist[big(A.order)];
      if (L.lifts()) {
        ++lifting;
        lifting_has_big_aut = lifting_has_big_aut && A.order == BigInt(58968);
      }
      designs.push_back({{"index", i},
                         {"params", params_json(D.params)},
                         {"aut_order", big(A.order)},
                         {"aut_complete", A.complete},
                         {"frobenius_lifts", L.lifts()}});
    }
    log.check(pre + "designs are 1-(378,13,13)", true, params_ok);
    log.check(pre + "inner maps lift", true, inner_ok);
    log.check(pre + "aut searches complete", true, all_complete);
    json dj = json::object();
    for (auto [o, c] : dist) dj[o] = c;
    if (indices.size() == 13) {
      log.check(pre + "aut order distribution", json{{"58968", 1}, {"9828", 12}}, dj);
      log.check(pre + "Frobenius lifts for exactly one design", 1, lifting);
      log.check(pre + "the lifting design has aut order 58968", true, lifting_has_big_aut && lifting == 1);
    } else {
      log.note(pre + "aut order distribution (sampled designs)", "subset of {9828, 58968}", dj,
               std::all_of(dist.begin(), dist.end(),
                           [](const auto& kv) { return kv.first == "9828" || kv.first == "58968"; }));
    }
    out["psl27_d26"] = {{"coset_degree", coset.degree()}, {"census", cj}, {"designs", designs}, {"aut_distribution", dj}};
  }
  {  // A6 on points
    const std::string pre = "A6/A5 ";
    const PermGroup G = build_alternating(6);
    const Method1Design D = method1_design({G, 0, 5, 0});
    const AutResult A = aut_group(D.design, opt.node_budget);
    const LiftResult L = lift_test_method1(D, Permutation::from_cycles(6, {{0, 1}}));
    log.check(pre + "parameters", vkl(6, 5, 5), vkl(D.params));
    log.check(pre + "aut order", "720", big(A.order));
    log.check(pre + "transposition lifts", true, L.lifts() && L.automorphism);
    log.check(pre + "inner maps lift", true, inner_maps_lift(D, 100));
    out["a6_a5"] = {{"params", params_json(D.params)}, {"aut_order", big(A.order)}, {"transposition_lifts", L.lifts()}};
  }
  {  // A6 on the cosets of the second class of S4
    const std::string pre = "A6/S4 ";
    const PermGroup G = build_alternating(6);
    const PermGroup M = build_group(recipes::a6_s4_second_class());
    const CosetAction coset(G, M);
    std::vector<std::size_t> lens;
    for (const auto& o : stabilizer_orbits(coset.action(), 0)) lens.push_back(o.size());
    const Method1Design D = method1_design({coset.action(), 0, 8, 0});
    const AutResult A = aut_group(D.design, opt.node_budget);
    const LiftResult L = lift_test_method1(D, G, coset, Permutation::from_cycles(6, {{0, 1}}));
    // AD(G): G together with the lifted transposition.
    std::vector<Permutation> adgens = coset.action().generators();
    if (L.point_map) adgens.push_back(*L.point_map);
    const PermGroup AD(coset.degree(), adgens);
    log.check(pre + "coset degree", 15, coset.degree());
    log.check(pre + "stabilizer orbit lengths", json{1, 6, 8}, json(lens));
    log.check(pre + "parameters", vkl(15, 8, 8), vkl(D.params));
    log.check(pre + "aut order", "20160", big(A.order));
    log.check(pre + "transposition lifts", true, L.lifts() && L.automorphism);
    log.check(pre + "AD(G) order", "720", big(AD.order()));
    log.check(pre + "inner maps lift", true, inner_maps_lift(D, 100));
    out["a6_s4"] = {{"coset_degree", coset.degree()},
                    {"orbit_lengths", lens},
                    {"params", params_json(D.params)},
                    {"aut_order", big(A.order)},
                    {"ad_order", big(AD.order())}};
  }
  if (opt.with_pgammal) {  // A9 on the cosets of PGammaL(2,8)
    const std::string pre = "A9/PGammaL(2,8) ";
    const PermGroup G = build_alternating(9);
    const PermGroup M = build_pgammal2(8);
    const CosetAction coset(G, M);
    std::vector<std::size_t> lens;
    for (const auto& o : stabilizer_orbits(coset.action(), 0)) lens.push_back(o.size());
    const Method1Design D = method1_design({coset.action(), 0, 56, 0});
    const LiftResult L = lift_test_method1(D, G, coset, Permutation::from_cycles(9, {{0, 1}}));
    const AutResult A = aut_group(D.design, opt.node_budget);
    log.check(pre + "coset degree", 120, coset.degree());
    log.check(pre + "stabilizer orbit lengths", json{1, 56, 63}, json(lens));
    log.check(pre + "parameters", vkl(120, 56, 56), vkl(D.params));
    log.check(pre + "transposition lifts", false, L.lifts());
    log.note(pre + "aut order", "348364800", big(A.order), A.complete && A.order == BigInt(348364800));
    out["a9_pgammal28"] = {{"coset_degree", coset.degree()},
                           {"orbit_lengths", lens},
                           {"params", params_json(D.params)},
                           {"aut_order", big(A.order)},
                           {"aut_complete", A.complete},
                           {"transposition_permutes_cosets", L.preserves_points}};
  }
  return out;
}

// ---------------------------------------------------------------- PSL(2,9) involutions

json run_psl29_involution_example(ClaimLog& log, std::uint64_t node_budget) {
  const std::string pre = "PSL(2,9)/S4 involutions ";
  const PermGroup G = build_psl2(9);
  const PermGroup M = embed_pgl2(3, UnipotentClass::Squared);
  const Permutation g = element_of_order(M, 2);
  const Method2Design D = method2_design({G, M, g});
  const ReducedStructure R = reduce_design(D.design);
  const DesignParams Rp = validate_1design(R.quotient);
  log.check(pre + "parameters", vkl(45, 9, 3), vkl(D.params));
  log.check(pre + "block count", 15, D.params.b);
  log.check(pre + "I-class size", 3, R.class_size);
  log.check(pre + "reduced parameters", json{15, 15, 3, 3}, json{Rp.v, Rp.b, Rp.k, Rp.lambda});

  const QuotientTheoremReport qt = verify_quotient_theorem(D.design, R, node_budget);
  BigInt six15 = 1;
  for (int i = 0; i < 15; ++i) six15 *= 6;
  log.check(pre + "S(I) order", big(six15), big(qt.s_of_i));
  log.check(pre + "reduced aut order", "720", big(qt.quotient_aut_order));
  log.check(pre + "aut order", big(six15 * 720), big(qt.aut_order));
  log.check(pre + "quotient theorem", true, qt.pass());

  const Permutation frob = frobenius_on_projline(9, 1);
  const LiftResult Lf = lift_test_method2(D, frob);
  const LiftResult Ld = lift_test_method2(D, diagonal_outer_on_projline(9));
  log.check(pre + "Frobenius lifts", true, Lf.lifts() && Lf.automorphism);
  log.check(pre + "diagonal map lifts", false, Ld.lifts());
  log.check(pre + "inner maps lift", true, inner_maps_lift(D, 100));

  std::vector<Permutation> adgens = D.cls.generator_actions();
  if (Lf.point_map) adgens.push_back(*Lf.point_map);
  const PermGroup AD(D.cls.size(), adgens);
  log.check(pre + "AD(G) order", "720", big(AD.order()));
  const std::vector<Permutation> ad_samples = samples_of(AD, 100, kDefaultSeed);
  const SIntersectionReport si = verify_s_i_intersection(D.design, ad_samples);
  log.check(pre + "nonidentity members of AD(G) move a block", true, si.pass());

  const StabReport st = verify_stab_theorem(D, R, 0);
  log.check(pre + "I-class stabilizer order", "24", big(st.s_order));
  log.check(pre + "centralizer order", "8", big(st.centralizer_order));
  log.check(pre + "stabilizer identities", true, st.pass());

  return {{"design", params_json(D.params)},
          {"i_size", R.class_size},
          {"reduced", params_json(Rp)},
          {"aut_order", big(qt.aut_order)},
          {"reduced_aut_order", big(qt.quotient_aut_order)},
          {"s_of_i_order", big(qt.s_of_i)},
          {"ad_order", big(AD.order())},
          {"frobenius_lifts", Lf.lifts()},
          {"diagonal_lifts", Ld.lifts()},
          {"stab", st.to_json()}};
}

json make_report(const std::string& command, std::uint64_t seed, json body, const ClaimLog& log) {
  return {{"schema_version", 1},
          {"command", command},
          {"seed", seed},
          {"report", std::move(body)},
          {"claim_checks", log.to_json()},
          {"all_pass", log.all_pass()}};
}

}  // namespace designforge
