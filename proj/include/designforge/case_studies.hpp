#pragma once

#include <optional>
#include <string>
#include <vector>

#include "designforge/atlas.hpp"
#include "designforge/aut_design.hpp"
#include "json.hpp"

namespace designforge {

/// One checked claim: an expected value, what was computed, and whether they agree.
struct ClaimCheck {
  std::string id;
  nlohmann::json expected;
  nlohmann::json observed;
  bool pass = false;
  /// Informational checks are reported but do not affect all_pass().
  bool informational = false;
};

class ClaimLog {
 public:
  /// pass = (expected == observed).
  bool check(std::string id, nlohmann::json expected, nlohmann::json observed);
  bool check(std::string id, nlohmann::json expected, nlohmann::json observed, bool pass);
  void note(std::string id, nlohmann::json expected, nlohmann::json observed, bool pass);
  void append(const ClaimLog& other, const std::string& prefix = "");

  const std::vector<ClaimCheck>& checks() const { return checks_; }
  bool all_pass() const;
  /// The check with this id; throws NotFound.
  const ClaimCheck& get(const std::string& id) const;
  nlohmann::json to_json() const;

 private:
  std::vector<ClaimCheck> checks_;
};

/// Big integers go into reports as decimal strings.
std::string big(const BigInt& n);

nlohmann::json params_json(const DesignParams& p);

/// Stabilizer of the I-class of a point of a Method-2 design and the
/// subgroups around it. A_x is the intersection of the subgroups behind the
/// blocks through x, H_x the group generated by the centralizers of I_x.
struct StabReport {
  std::uint32_t point = 0;  // class index of x
  std::size_t i_size = 0;
  BigInt centralizer_order, s_order;
  bool order_product = false;     // |S_x| = |C_G(x)| |I_x|
  bool orbit_is_i = false;        // x^{S_x} = I_x
  bool centralizer_in_s = false;  // C_G(x) <= S_x
  /// "pointwise-stabilizer", "element-intersection" or "not computed".
  std::string a_method = "not computed";
  std::optional<BigInt> a_order;
  std::optional<bool> i_is_a_meet_class;      // I_x = A_x ∩ g^G
  std::optional<bool> s_normalizes_a;         // S_x <= N_G(A_x)
  std::optional<BigInt> normalizer_order;     // |N_G(A_x)| when A_x is small
  std::optional<bool> s_is_normalizer;        // S_x = N_G(A_x)
  std::optional<bool> normalizer_orbit_is_i;  // x^{N_G(A_x)} = A_x ∩ g^G
  std::optional<bool> centralizer_times_a_in_s;  // C_G(x) A_x <= S_x
  BigInt h_order;
  bool h_normal = false;
  std::optional<bool> ha_normal;
  /// Generators of S_x on G's domain.
  std::vector<Permutation> s_generators;
  std::vector<Permutation> a_generators;

  bool pass() const;
  nlohmann::json to_json() const;
};

struct StabOptions {
  /// Set when M is the stabilizer of this point, so A_x is a pointwise stabilizer.
  std::optional<Point> m_fixed_point;
  std::size_t max_m_elements = 10000;  // element intersection limit
  std::size_t max_a_elements = 10000;  // normalizer of A_x limit
  std::size_t cap = kDefaultOrbitCap;
};

StabReport verify_stab_theorem(const Method2Design& D, const ReducedStructure& R, std::uint32_t x = 0,
                               const StabOptions& opt = {});

/// Smallest nontrivial block of imprimitivity containing 0 and some other
/// point, for a transitive group given by generators on n points; the
/// candidates are `partners`. Returns the block, or nullopt if every
/// candidate generates the whole set.
std::optional<std::vector<Point>> minimal_block(std::size_t n, const std::vector<Permutation>& gens,
                                                const std::vector<Point>& partners);

struct MathieuRow {
  int n = 0;
  std::uint64_t ord = 0;
  std::size_t class_size = 0;
  DesignParams design, reduced;
  std::size_t i_size = 0;
  std::size_t dual_v = 0, dual_b = 0, dual_k = 0, t = 0;
  std::uint64_t lambda_t = 0;
  bool t_uniform = false;
  BigInt aut_order;
  bool aut_complete = false;
  bool point_transitive = false, block_transitive = false;
  bool g_embeds = false;
  bool aut_divisible = false;
  BigInt block_stabilizer_order;
  /// Order of the kernel of the block stabilizer on the block's points.
  BigInt block_kernel_order;
  bool block_kernel_normal = false;
  /// Size of a nontrivial block system of G on the dual blocks; nullopt if primitive.
  std::optional<std::size_t> dual_block_system;
  std::optional<StabReport> stab;
  ClaimLog claims;
  nlohmann::json to_json() const;
};

struct MathieuExpected {
  std::size_t i_size, t, k;
  std::uint64_t lambda_t;
  BigInt aut_order, block_stabilizer_order;
  bool primitive_on_dual_blocks;
};

/// Printed values for (n, ord) in {22,23,24} x {2,3}; throws InvalidArgument otherwise.
MathieuExpected mathieu_expected(int n, std::uint64_t ord);

struct MathieuOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t tally_budget = kDefaultTallyBudget;
  std::uint64_t seed = kDefaultSeed;
  bool with_stab = true;
  std::filesystem::path data_dir = DESIGNFORGE_DATA_DIR;
};

MathieuRow run_mathieu_row(int n, std::uint64_t ord, const MathieuOptions& opt = {});

struct PslOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  bool with_stab = true;
  bool with_aut = true;
};

/// Designs of PSL(2,q^2) from its two classes of PGL(2,q) subgroups, for every
/// class of G meeting M, checked against the closed formulas.
nlohmann::json run_psl2_pgl2(std::uint64_t q, ClaimLog& log, const PslOptions& opt = {});

/// Value of 1_M^G(g) predicted by the closed formula for PGL(2,q) in
/// PSL(2,q^2). `order_p_meets_m` says whether g (of order p) is in M's
/// unipotent class. With `halved` the semisimple cases test divisibility of
/// (q-1)/2 and (q+1)/2 instead of q-1 and q+1.
std::uint64_t psl_perm_char_formula(std::uint64_t q, std::uint64_t ord, bool identity, bool order_p_meets_m,
                                    bool halved);

struct ExampleOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Designs of the PSL(2,27) family to run Aut on; all thirteen when empty.
  std::vector<std::size_t> psl27_indices;
  bool with_pgammal = true;
};

/// The four Method-1 examples: PSL(2,27) on the cosets of D26, A6 on points,
/// A6 on the cosets of S4 (second class), A9 on the cosets of PGammaL(2,8).
nlohmann::json run_method1_examples(ClaimLog& log, const ExampleOptions& opt = {});

/// PSL(2,9) with M = S4 (the squared PGL(2,3)) and g an involution.
nlohmann::json run_psl29_involution_example(ClaimLog& log, std::uint64_t node_budget = kDefaultNodeBudget);

/// Report wrapper: schema_version, command, seed, claim_checks and all_pass.
nlohmann::json make_report(const std::string& command, std::uint64_t seed, nlohmann::json body,
                           const ClaimLog& log);

}  // namespace designforge
