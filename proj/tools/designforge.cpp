// designforge command-line front end.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 bad input,
// 3 budget exceeded, 4 internal inconsistency (including construct
// results that contradict their predicted parameters).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "designforge/case_studies.hpp"
#include "designforge/design_io.hpp"
#include "designforge/errors.hpp"

using namespace designforge;
using nlohmann::json;

namespace {

struct Common {
  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t tally_budget = kDefaultTallyBudget;
  std::string report_path;
  std::string format = "json";
  std::string golden_dir;
  bool update_golden = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "random seed (default from DESIGNFORGE_SEED, else built in)")
      ->each([&c](const std::string&) { c.seed_given = true; });
  cmd->add_option("--budget-nodes", c.node_budget, "automorphism search node budget")->check(CLI::PositiveNumber);
  cmd->add_option("--tally-budget", c.tally_budget, "t-subset tally increment budget")->check(CLI::PositiveNumber);
  cmd->add_option("--report", c.report_path, "write the JSON report here instead of stdout");
  cmd->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--golden", c.golden_dir, "compare the report with DIR/<name>.json");
  cmd->add_flag("--update-golden", c.update_golden, "write the report into the --golden directory");
}

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed_given) return c.seed;
  if (const char* env = std::getenv("DESIGNFORGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("DESIGNFORGE_SEED is not an integer: ") + env);
    }
  }
  return c.seed;
}

std::string render_text(const json& report) {
  std::ostringstream out;
  out << report.value("command", "") << " (seed " << report.value("seed", 0) << ")\n";
  for (const auto& c : report.at("claim_checks")) {
    const bool info = c.value("informational", false);
    out << (c.at("pass").get<bool>() ? "  ok    " : info ? "  note  " : "  FAIL  ") << c.at("id").get<std::string>();
    if (!c.at("pass").get<bool>())
      out << ": expected " << c.at("expected").dump() << ", observed " << c.at("observed").dump();
    out << "\n";
  }
  out << (report.at("all_pass").get<bool>() ? "all checks passed\n" : "some checks failed\n");
  return out.str();
}

// Writes the report and compares against the golden copy; returns the exit code.
int emit(const Common& c, const std::string& name, const json& report, const std::string& text_prefix = "") {
  const std::string body = report.dump(2) + "\n";
  if (c.report_path.empty()) {
    if (c.format == "text")
      std::cout << text_prefix << render_text(report);
    else
      std::cout << body;
  } else {
    std::ofstream f(c.report_path);
    if (!f) throw InvalidArgument("cannot write " + c.report_path);
    f << body;
    if (c.format == "text") std::cout << text_prefix << render_text(report);
  }
  int code = report.value("all_pass", true) ? 0 : 1;
  if (!c.golden_dir.empty()) {
    const std::filesystem::path path = std::filesystem::path(c.golden_dir) / (name + ".json");
    if (c.update_golden) {
      std::ofstream f(path);
      if (!f) throw InvalidArgument("cannot write " + path.string());
      f << body;
    } else {
      std::ifstream f(path);
      if (!f) throw InvalidArgument("no golden report at " + path.string());
      std::stringstream want;
      want << f.rdbuf();
      if (want.str() != body) {
        std::cerr << "report differs from " << path.string() << "\n";
        code = code ? code : 1;
      }
    }
  }
  return code;
}

// ------------------------------------------------------------- group choice

struct GroupChoice {
  std::string group;  // a<n>, s<n>, psl2, pgammal2, m22, m23, m24
  std::uint64_t q = 0;
  std::string recipe_file;
  std::string maximal;  // see --maximal help
  std::string maximal_recipe_file;
};

GroupRecipe read_recipe(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot read " + path);
  try {
    return GroupRecipe::from_json(json::parse(f));
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

GroupRecipe group_recipe(const GroupChoice& c) {
  if (!c.recipe_file.empty()) return read_recipe(c.recipe_file);
  const std::string& g = c.group;
  if (g.empty()) throw InvalidArgument("give --group or --recipe");
  auto need_q = [&c] {
    if (c.q == 0) throw InvalidArgument("--q is required for this group");
    return c.q;
  };
  if (g == "psl2") return recipes::psl2(need_q());
  if (g == "pgammal2") return recipes::pgammal2(need_q());
  if (g == "m22" || g == "m23" || g == "m24") return recipes::mathieu(std::stoi(g.substr(1)));
  if (g.size() > 1 && (g[0] == 'a' || g[0] == 's') && std::all_of(g.begin() + 1, g.end(), ::isdigit)) {
    const std::size_t n = std::stoul(g.substr(1));
    return g[0] == 'a' ? recipes::alternating(n) : recipes::symmetric(n);
  }
  throw InvalidArgument("unknown group " + g);
}

std::optional<GroupRecipe> maximal_recipe(const GroupChoice& c, const GroupRecipe& G, std::uint64_t seed) {
  if (!c.maximal_recipe_file.empty()) return read_recipe(c.maximal_recipe_file);
  const std::string& m = c.maximal;
  if (m.empty()) return std::nullopt;
  const auto colon = m.find(':');
  const std::string head = m.substr(0, colon), arg = colon == std::string::npos ? "" : m.substr(colon + 1);
  if (head == "pgl2") {
    if (G.kind != "psl2") throw InvalidArgument("pgl2 subgroups need --group psl2");
    const auto Q = G.params.at("q").get<std::uint64_t>();
    std::uint64_t r = 1;
    while (r * r < Q) ++r;
    if (r * r != Q) throw InvalidArgument("pgl2 subgroups need q to be a square");
    if (arg != "squared" && arg != "non-squared") throw InvalidArgument("use pgl2:squared or pgl2:non-squared");
    return recipes::pgl2_in_psl2sq(r, arg == "squared" ? UnipotentClass::Squared : UnipotentClass::NonSquared);
  }
  if (head == "point-stabilizer") return recipes::point_stabilizer(G, arg.empty() ? 0 : std::stoul(arg));
  if (head == "normalizer") return recipes::normalizer_of_cyclic(G, std::stoull(arg), seed);
  if (head == "s4-second-class") return recipes::a6_s4_second_class();
  if (head == "pgammal2") return recipes::pgammal2(std::stoull(arg));
  throw InvalidArgument("unknown maximal subgroup " + m);
}

void add_group_options(CLI::App* cmd, GroupChoice& g) {
  cmd->add_option("--group", g.group, "a<n>, s<n>, psl2, pgammal2, m22, m23 or m24");
  cmd->add_option("--q", g.q, "field size for psl2 / pgammal2");
  cmd->add_option("--recipe", g.recipe_file, "group recipe JSON file");
  cmd->add_option("--maximal", g.maximal,
                  "subgroup M: pgl2:squared, pgl2:non-squared, point-stabilizer[:P], normalizer:ORD, "
                  "s4-second-class, pgammal2:Q");
  cmd->add_option("--maximal-recipe", g.maximal_recipe_file, "recipe JSON file for M");
}

struct ClassChoice {
  std::uint64_t ord = 0;
  std::optional<std::size_t> fixed_points, class_size;
};

void add_class_options(CLI::App* cmd, ClassChoice& c) {
  cmd->add_option("--ord", c.ord, "order of g")->check(CLI::PositiveNumber);
  cmd->add_option("--fixed-points", c.fixed_points, "number of points g fixes");
  cmd->add_option("--class-size", c.class_size, "size of g^G");
}

std::string design_name(const GroupRecipe& G, const std::optional<GroupRecipe>& M) {
  return M ? G.name + " / " + M->name : G.name;
}

// ------------------------------------------------------------- commands

struct ConstructArgs {
  int method = 2;
  GroupChoice group;
  ClassChoice cls;
  Point point = 0;
  std::size_t orbit_size = 0, orbit_index = 0;
  std::string out;
};

int cmd_construct(const ConstructArgs& a, const Common& c) {
  const std::uint64_t seed = resolve_seed(c);
  const GroupRecipe Gr = group_recipe(a.group);
  const PermGroup G = build_group(Gr);
  const auto Mr = maximal_recipe(a.group, Gr, seed);
  ClaimLog log;
  json body = {{"group", Gr.to_json()}, {"group_order", big(G.order())}, {"method", a.method}};
  if (Mr) body["maximal"] = Mr->to_json();
  DesignFile file{{" " + design_name(Gr, Mr) + ", method " + std::to_string(a.method)}, IncidenceStructure(1, {{0}}), {}};

  if (a.method == 1) {
    if (a.orbit_size == 0) throw InvalidArgument("--orbit-size is required for method 1");
    std::optional<CosetAction> coset;
    PermGroup acting = G;
    if (Mr) {
      coset.emplace(G, build_group(*Mr));
      acting = coset->action();
      body["coset_degree"] = coset->degree();
    }
    const Method1Design D = method1_design({acting, a.point, a.orbit_size, a.orbit_index});
    log.check("v equals b", D.params.v, D.params.b);
    log.check("k and lambda equal the orbit length", json{a.orbit_size, a.orbit_size}, json{D.params.k, D.params.lambda});
    log.check("group acts as automorphisms", true, faithfulness_check(D, 100, seed));
    body["params"] = params_json(D.params);
    body["base_block"] = D.delta;
    file.design = D.design;
  } else if (a.method == 2) {
    if (!Mr) throw InvalidArgument("method 2 needs --maximal or --maximal-recipe");
    if (a.cls.ord == 0) throw InvalidArgument("--ord is required for method 2");
    const PermGroup M = build_group(*Mr);
    const Permutation g = element_of_order(M, a.cls.ord, {a.cls.fixed_points, a.cls.class_size}, seed);
    const Method2Design D = method2_design({G, M, g});
    std::size_t meet = D.base_block.size();
    log.check("parameters (|g^G|, |g^G meet M|, 1_M^G(g))",
              json{D.cls.size(), meet, big(perm_char_value_by_class(G, M, g))},
              json{D.params.v, D.params.k, big(BigInt(D.params.lambda))});
    log.check("block count equals |G:M|", big(G.order() / M.order()), big(BigInt(D.params.b)));
    log.check("G acts faithfully on the points", true, faithfulness_check(D, 100, seed));
    body["representative"] = g.to_cycle_string();
    body["params"] = params_json(D.params);
    file.design = D.design;
  } else {
    throw InvalidArgument("--method must be 1 or 2");
  }
  file.params = DesignFile::Params{1, body["params"]["k"].get<std::size_t>(), body["params"]["lambda"].get<std::uint64_t>()};
  if (!a.out.empty()) write_design(a.out, file);
  else if (!c.report_path.empty()) std::cout << format_design(file);
  const int code = emit(c, "construct", make_report("construct", seed, body, log));
  // A construction that disagrees with its own parameter prediction is a library fault.
  return log.all_pass() ? code : 4;
}

int cmd_reduce(const std::string& in, const std::string& out, const Common& c) {
  const DesignFile f = read_design(in);
  const ReducedStructure R = reduce_design(f.design);
  const DesignParams P = validate_1design(R.quotient);
  ClaimLog log;
  log.check("I-classes partition the points", f.design.v(), R.classes.size() * R.class_size);
  json body = {{"input", params_json(validate_1design(f.design))},
               {"i_size", R.class_size},
               {"classes", R.classes.size()},
               {"reduced", params_json(P)},
               {"s_of_i_order", big(s_of_i_order(R))}};
  if (!out.empty()) write_design(out, {{" reduced from " + in}, R.quotient, DesignFile::Params{1, P.k, P.lambda}});
  return emit(c, "reduce", make_report("reduce", resolve_seed(c), body, log));
}

int cmd_dual(const std::string& in, const std::string& out, const Common& c) {
  const DesignFile f = read_design(in);
  const IncidenceStructure D = dual_design(f.design);
  ClaimLog log;
  log.check("dual of dual is the input", true, dual_design(D) == f.design);
  json body = {{"v", D.v()}, {"b", D.b()}, {"simple", D.is_simple()}};
  if (!out.empty()) write_design(out, {{" dual of " + in}, D, std::nullopt});
  return emit(c, "dual", make_report("dual", resolve_seed(c), body, log));
}

int cmd_aut(const std::string& in, const Common& c) {
  const DesignFile f = read_design(in);
  const AutResult A = aut_group(f.design, c.node_budget);
  ClaimLog log;
  bool preserve = true;
  for (const auto& g : A.point_generators) preserve = preserve && f.design.is_automorphism(g);
  log.check("generators are automorphisms", true, preserve);
  log.check("search complete", true, A.complete);
  json gens = json::array();
  for (const auto& g : A.point_generators) gens.push_back(g.to_cycle_string());
  json body = {{"order", big(A.order)},
               {"repeated_block_factor", big(A.repeated_block_factor)},
               {"complete", A.complete},
               {"point_transitive", A.point_transitive},
               {"block_transitive", A.block_transitive},
               {"nodes", A.nodes},
               {"generators", gens}};
  std::string prefix;
  if (c.format == "text") {
    for (const auto& g : gens) prefix += g.get<std::string>() + "\n";
    prefix += "order " + big(A.order) + (A.complete ? "\n" : " (search incomplete)\n");
  }
  const int code = emit(c, "aut", make_report("aut", resolve_seed(c), body, log), prefix);
  return A.complete ? code : 3;
}

int cmd_tdesign(const std::string& in, std::size_t t, std::size_t max_t, const Common& c) {
  const DesignFile f = read_design(in);
  ClaimLog log;
  json body = {{"v", f.design.v()}, {"b", f.design.b()}};
  if (max_t > 0) {
    body["max_uniform_t"] = max_uniform_t(f.design, max_t, c.tally_budget);
  } else {
    if (t == 0) throw InvalidArgument("give --t or --max-t");
    const TDesignResult r = t_design_lambda(f.design, t, c.tally_budget);
    body["t"] = t;
    body["uniform"] = r.uniform;
    body["lambda"] = r.lambda;
    if (r.witness) {
      body["witness"] = {r.witness->first, r.witness->second};
      body["witness_counts"] = {r.witness_counts->first, r.witness_counts->second};
    }
    log.check("every t-subset on the same number of blocks", true, r.uniform);
    if (f.params && f.params->t == t) log.check("lambda matches the file header", f.params->lambda, r.lambda);
  }
  return emit(c, "tdesign", make_report("tdesign", resolve_seed(c), body, log));
}

std::string mathieu_line(const MathieuRow& r) {
  std::ostringstream s;
  s << "M" << r.n << "  M" << r.n - 1 << "  " << r.ord << "  " << r.i_size << "  " << r.t << "-(" << r.dual_v << ","
    << r.dual_k << "," << r.lambda_t << ")  " << big(r.aut_order) << "  " << big(r.block_stabilizer_order) << "\n";
  return s.str();
}

int cmd_mathieu(int n, std::uint64_t ord, bool all, const Common& c) {
  const std::uint64_t seed = resolve_seed(c);
  std::vector<std::pair<int, std::uint64_t>> rows;
  if (all) {
    for (int m : {24, 23, 22})
      for (std::uint64_t o : {2, 3}) rows.emplace_back(m, o);
  } else {
    rows.emplace_back(n, ord);
  }
  MathieuOptions opt;
  opt.node_budget = c.node_budget;
  opt.tally_budget = c.tally_budget;
  opt.seed = seed;
  ClaimLog log;
  json body = json::array();
  std::string text = "G  M  ord(g)  |I_x|  dual design  |Aut|  |Stab_G(b)|\n";
  for (auto [m, o] : rows) {
    const MathieuRow r = run_mathieu_row(m, o, opt);
    log.append(r.claims, "M" + std::to_string(m) + " order " + std::to_string(o) + " ");
    body.push_back(r.to_json());
    text += mathieu_line(r);
  }
  const std::string name = all ? "mathieu-all" : "mathieu-" + std::to_string(n) + "-" + std::to_string(ord);
  return emit(c, name, make_report("mathieu", seed, body, log), text);
}

int cmd_psl2(const std::vector<std::uint64_t>& qs, bool no_aut, bool no_stab, const Common& c) {
  ClaimLog log;
  PslOptions opt;
  opt.node_budget = c.node_budget;
  opt.with_aut = !no_aut;
  opt.with_stab = !no_stab;
  json body = json::array();
  std::string name = "psl2";
  for (auto q : qs) {
    body.push_back(run_psl2_pgl2(q, log, opt));
    name += "-" + std::to_string(q);
  }
  return emit(c, name, make_report("psl2", resolve_seed(c), body, log));
}

int cmd_method1_examples(const std::vector<std::size_t>& idx, bool no_pgammal, const Common& c) {
  ClaimLog log;
  ExampleOptions opt;
  opt.node_budget = c.node_budget;
  opt.psl27_indices = idx;
  opt.with_pgammal = !no_pgammal;
  const json body = run_method1_examples(log, opt);
  return emit(c, "method1-examples", make_report("method1-examples", resolve_seed(c), body, log));
}

int cmd_psl29(const Common& c) {
  ClaimLog log;
  const json body = run_psl29_involution_example(log, c.node_budget);
  return emit(c, "psl29-involutions", make_report("psl29-involutions", resolve_seed(c), body, log));
}

int cmd_stab(const GroupChoice& gc, const ClassChoice& cc, std::uint32_t x, const Common& c) {
  const std::uint64_t seed = resolve_seed(c);
  const GroupRecipe Gr = group_recipe(gc);
  GroupChoice with_default = gc;
  if (with_default.maximal.empty() && with_default.maximal_recipe_file.empty()) with_default.maximal = "point-stabilizer:0";
  const auto Mr = maximal_recipe(with_default, Gr, seed);
  if (cc.ord == 0) throw InvalidArgument("--ord is required");
  const PermGroup G = build_group(Gr), M = build_group(*Mr);
  const Permutation g = element_of_order(M, cc.ord, {cc.fixed_points, cc.class_size}, seed);
  const Method2Design D = method2_design({G, M, g});
  const ReducedStructure R = reduce_design(D.design);
  StabOptions so;
  if (Mr->kind == "point-stabilizer") so.m_fixed_point = Mr->params.at("point").get<Point>();
  const StabReport st = verify_stab_theorem(D, R, x, so);
  ClaimLog log;
  log.check("|S_x| = |C_G(x)| |I_x|", true, st.order_product);
  log.check("x^{S_x} = I_x", true, st.orbit_is_i);
  log.check("C_G(x) <= S_x", true, st.centralizer_in_s);
  log.check("H_x normal in S_x", true, st.h_normal);
  if (st.i_is_a_meet_class) log.check("I_x = A_x meet g^G", true, *st.i_is_a_meet_class);
  if (st.s_is_normalizer) log.check("S_x = N_G(A_x)", true, *st.s_is_normalizer);
  if (st.normalizer_orbit_is_i) log.check("x^{N_G(A_x)} = A_x meet g^G", true, *st.normalizer_orbit_is_i);
  if (st.ha_normal) log.check("H_x A_x normal in S_x", true, *st.ha_normal);
  json body = {{"group", Gr.to_json()},
               {"maximal", Mr->to_json()},
               {"representative", g.to_cycle_string()},
               {"design", params_json(D.params)},
               {"stab", st.to_json()}};
  return emit(c, "stab", make_report("stab", seed, body, log));
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input: return 2;
    case ErrorKind::Budget: return 3;
    case ErrorKind::Internal: return 4;
  }
  return 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"designforge: 1-designs from finite groups"};
  app.require_subcommand(1);
  Common common;

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a design from a group");
  construct->add_option("--method", ca.method, "1 (stabilizer orbit) or 2 (conjugacy class)");
  add_group_options(construct, ca.group);
  add_class_options(construct, ca.cls);
  construct->add_option("--point", ca.point, "method 1 base point");
  construct->add_option("--orbit-size", ca.orbit_size, "method 1 orbit length");
  construct->add_option("--orbit-index", ca.orbit_index, "which orbit of that length");
  construct->add_option("--out", ca.out, "design file to write");
  add_common(construct, common);

  std::string in, out;
  auto* reduce = app.add_subcommand("reduce", "quotient by the I-classes");
  reduce->add_option("design", in, "design file")->required();
  reduce->add_option("--out", out, "reduced design file");
  add_common(reduce, common);

  auto* dual = app.add_subcommand("dual", "transpose the incidence relation");
  dual->add_option("design", in, "design file")->required();
  dual->add_option("--out", out, "dual design file");
  add_common(dual, common);

  auto* aut = app.add_subcommand("aut", "automorphism group of a design");
  aut->add_option("design", in, "design file")->required();
  add_common(aut, common);

  std::size_t t = 0, max_t = 0;
  auto* tdesign = app.add_subcommand("tdesign", "check the t-design property");
  tdesign->add_option("design", in, "design file")->required();
  tdesign->add_option("--t", t, "t to check");
  tdesign->add_option("--max-t", max_t, "search the largest uniform t up to this");
  add_common(tdesign, common);

  int n = 24;
  std::uint64_t ord = 2;
  bool all_rows = false;
  auto* mathieu = app.add_subcommand("mathieu", "Mathieu group designs and their reduced duals");
  mathieu->add_option("--n", n, "22, 23 or 24")->check(CLI::IsMember({22, 23, 24}));
  mathieu->add_option("--ord", ord, "2 or 3")->check(CLI::IsMember({2, 3}));
  mathieu->add_flag("--all", all_rows, "all six rows");
  add_common(mathieu, common);

  std::vector<std::uint64_t> qs{3, 5};
  bool no_aut = false, no_stab = false;
  auto* psl2 = app.add_subcommand("psl2", "designs of PSL(2,q^2) from its PGL(2,q) subgroups");
  psl2->add_option("--q", qs, "odd q values")->expected(1, -1);
  psl2->add_flag("--no-aut", no_aut, "skip automorphism searches");
  psl2->add_flag("--no-stab", no_stab, "skip stabilizer checks");
  add_common(psl2, common);

  std::vector<std::size_t> psl27;
  bool no_pgammal = false;
  auto* m1 = app.add_subcommand("method1-examples", "PSL(2,27)/D26, A6/A5, A6/S4, A9/PGammaL(2,8)");
  m1->add_option("--psl27-designs", psl27, "which of the thirteen PSL(2,27) designs (default all)");
  m1->add_flag("--no-pgammal", no_pgammal, "skip A9");
  add_common(m1, common);

  auto* p29 = app.add_subcommand("psl29-involutions", "PSL(2,9) on its involutions with M = S4");
  add_common(p29, common);

  GroupChoice sg;
  ClassChoice sc;
  std::uint32_t sx = 0;
  auto* stab = app.add_subcommand("stab", "stabilizer of an I-class and related subgroups");
  add_group_options(stab, sg);
  add_class_options(stab, sc);
  stab->add_option("--point", sx, "class index of x");
  add_common(stab, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*construct) return cmd_construct(ca, common);
    if (*reduce) return cmd_reduce(in, out, common);
    if (*dual) return cmd_dual(in, out, common);
    if (*aut) return cmd_aut(in, common);
    if (*tdesign) return cmd_tdesign(in, t, max_t, common);
    if (*mathieu) return cmd_mathieu(n, ord, all_rows, common);
    if (*psl2) return cmd_psl2(qs, no_aut, no_stab, common);
    if (*m1) return cmd_method1_examples(psl27, no_pgammal, common);
    if (*p29) return cmd_psl29(common);
    if (*stab) return cmd_stab(sg, sc, sx, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
