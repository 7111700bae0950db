#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pblock/group.hpp"
#include "pblock/group_ring.hpp"
#include "pblock/random.hpp"
#include "pblock/zpk.hpp"

namespace pblock {

/// Outcome of one identity checker. A failed check always carries a
/// counterexample payload that reverify_counterexample() can confirm with
/// plain modular arithmetic.
struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string skip_reason;
  std::uint64_t trials = 0;
  std::uint64_t inconclusive = 0; ///< trials that ran out of search budget
  std::uint64_t seed = 0;
  unsigned precision = 0;
  std::optional<nlohmann::json> counterexample;
  std::string detail;
};

nlohmann::json to_json(const CheckResult &r);
CheckResult check_result_from_json(const nlohmann::json &j);

/// A submodule together with the generating set it was defined by, so that
/// counterexamples can be stated against the definition rather than the
/// canonical basis.
class SpannedModule {
public:
  SpannedModule(const ZpkContext &ctx, std::size_t ambient, std::vector<Vector> generators);
  static SpannedModule from_submodule(const Submodule &s);

  const Submodule &module() const { return module_; }
  const std::vector<Vector> &generators() const { return generators_; }
  bool contains(std::span<const Residue> v) const { return module_.contains(v); }

  friend SpannedModule operator+(const SpannedModule &a, const SpannedModule &b);

private:
  std::vector<Vector> generators_;
  Submodule module_;
};

/// Non-membership payload: a linear functional that vanishes on every
/// generator but not on v. Returns nullopt when v is a member.
std::optional<nlohmann::json> non_membership_witness(const SpannedModule &s, std::span<const Residue> v,
                                                     const std::string &claim);

/// Re-checks a counterexample payload without any normal-form machinery.
bool reverify_counterexample(const nlohmann::json &payload);

/// A pair (c, u) built so that c^2 = u^2 and c^-1 u = 1 + 2f with
/// f in 2RG + R[T2] + R: u = v^-1 c v for v = 1 + 2m, m a combination of
/// <c^2>-class sums of involutions plus 2 * (an element centralizing c^2).
struct HypothesisPair {
  Elem c;
  RingElement u;
  RingElement conjugator;
};
HypothesisPair make_hypothesis_pair(const GroupPtr &g, const ZpkContext &ctx, Rng &rng);
HypothesisPair make_hypothesis_pair(const GroupPtr &g, const ZpkContext &ctx, Elem c, Rng &rng);

CheckResult check_sbor_a(const Subgroup &n, const ZpkContext &ctx);
CheckResult check_sbor_b(const GroupPtr &g, const ZpkContext &ctx);
CheckResult check_formula_11(const GroupPtr &g, const ZpkContext &ctx);
CheckResult check_formula_12(const GroupPtr &g, const ZpkContext &ctx, std::uint64_t trials, std::uint64_t seed);
CheckResult check_formula_13(const GroupPtr &g, const ZpkContext &ctx, unsigned l, unsigned n,
                             std::uint64_t trials, std::uint64_t seed);
/// n == 0 selects the exponent of the p-part of |G| (at least 1).
CheckResult check_formula_14(const GroupPtr &g, const ZpkContext &ctx, std::uint64_t trials,
                             std::uint64_t seed, unsigned n = 0);
CheckResult check_formula_2(const GroupPtr &g, Elem c, const ZpkContext &ctx);
/// Runs check_formula_2 for every c in G.
CheckResult check_formula_2_all(const GroupPtr &g, const ZpkContext &ctx);
CheckResult check_lemma_odd(const GroupPtr &g, const ZpkContext &ctx, std::uint64_t trials, std::uint64_t seed);
CheckResult check_lemma_abc(const GroupPtr &g, Elem c, const RingElement &u, const ZpkContext &ctx);
/// check_lemma_abc over `pairs` constructed hypothesis pairs.
CheckResult check_lemma_abc_pairs(const GroupPtr &g, const ZpkContext &ctx, std::uint64_t pairs,
                                  std::uint64_t seed);
CheckResult check_lemma_l1(const GroupPtr &g, const ZpkContext &ctx, std::uint64_t trials, std::uint64_t seed);
CheckResult check_centralizer_local(const Subgroup &n, unsigned p, std::uint64_t trials = 0,
                                    std::uint64_t seed = 0);

/// One preimage (the smallest index) per involution of G/O_2(G).
std::vector<Elem> involution_lifts(const GroupPtr &g);

} // namespace pblock
