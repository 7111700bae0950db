#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "pblock/group.hpp"
#include "pblock/group_ring.hpp"
#include "pblock/random.hpp"
#include "pblock/zpk.hpp"

namespace pblock {

enum class TorsionKind { GroupElement, ConjugatedElement, ConjugatedSubgroupGenerator };

/// A torsion unit known by construction: realized = conjugator^-1 * base * conjugator.
struct TorsionUnitSpec {
  TorsionKind kind;
  Elem base;
  RingElement conjugator;
  RingElement realized;
};

TorsionUnitSpec make_torsion_spec(TorsionKind kind, const GroupPtr &g, const ZpkContext &ctx, Elem base,
                                  const RingElement &conjugator);

/// witness^-1 * source * witness == target, checked modulo p^precision.
struct ConjugacyCertificate {
  RingElement source;
  RingElement target;
  RingElement witness;
  unsigned precision;
};

/// Direct multiplication: source * witness - witness * target == 0 at the
/// stated precision, and the witness is a unit.
bool verify_certificate(const ConjugacyCertificate &c);
nlohmann::json to_json(const ConjugacyCertificate &c);
ConjugacyCertificate certificate_from_json(const nlohmann::json &j, const GroupPtr &g);

struct WardColemanFactorization {
  RingElement input;
  Elem group_part;
  RingElement centralizing_part;
};

/// u = g * w with g in N_G(H) and w centralizing H.
WardColemanFactorization ward_coleman_factor(const RingElement &u, const Subgroup &h);

/// Unit v = 1 + 2m (normalized to augmentation one) with v^-1 c v = u, from
/// the coboundary equation m - c^-1 m u = f where c^-1 u = 1 + 2f.
ConjugacyCertificate coboundary_conjugator(Elem c, const RingElement &u);

/// Searches {X : X u_i = c_i X for all i} for a unit: basis rows first, then
/// `random_budget` random combinations with coefficients below p. Throws
/// NoUnitIntertwiner when the budget runs out. The certificate pairs c_0 with u_0.
ConjugacyCertificate joint_intertwiner(std::span<const RingElement> sources, std::span<const RingElement> targets,
                                       Rng &rng, unsigned random_budget = 1000);
ConjugacyCertificate intertwiner_conjugator(const RingElement &c, const RingElement &u, Rng &rng,
                                            unsigned random_budget = 1000);

enum class TorsionStyle { ConjugateSylowPart, ConjugateByCentralizingUnit };

struct TorsionSubgroup {
  Subgroup base;                          ///< H with N normal in H, inside a Sylow subgroup
  RingElement conjugator;                 ///< v, Q = v^-1 H v
  std::vector<TorsionUnitSpec> generators; ///< generators of N first, then of H
};

TorsionSubgroup build_torsion_subgroup(const GroupPtr &g, const Subgroup &n, TorsionStyle style,
                                       std::uint64_t seed, const ZpkContext &ctx);

enum class LiftVerdict { Genuine, Spurious };

/// Recomputes the construction at precision k + delta.
LiftVerdict lift_check(const TorsionUnitSpec &spec, unsigned delta = 2);
/// Raw unit: looks for u' = u + p^k Y, Y in the span of `directions` mod
/// p^delta, with u'^(p^a) = 1 mod p^(k+delta), p^a the order of u. Requires
/// delta <= k. Empty `directions` means all of ker(augmentation).
LiftVerdict lift_check(const RingElement &u, unsigned delta = 2, std::span<const RingElement> directions = {});

/// Basis b - |b| * 1 of the augmentation-zero part of the span of class sums
/// (the trivial orbit dropped).
std::vector<RingElement> augmentation_free_basis(const std::vector<RingElement> &class_sums);

/// Every u = 1 + sum c_i d_i (d_i from augmentation_free_basis) with
/// u^(p^cap) = 1 mod p^k, found level by level from mod p. Throws RankTooLarge
/// beyond 14 class sums.
std::vector<RingElement> enumerate_torsion_in_span(const std::vector<RingElement> &class_sums,
                                                   const ZpkContext &low, unsigned cap);
/// u -> x^-1 u x z, permuting coefficients.
RingElement apply_symmetry(const RingElement &u, Elem x, Elem z);

struct TorsionOracleResult {
  std::uint64_t solutions = 0;      ///< all solutions mod p^k in the span
  std::uint64_t checked = 0;        ///< solutions lift-checked (one fiber per orbit)
  std::vector<RingElement> genuine; ///< lift_check survivors, closed under the symmetries
};

/// The enumeration of enumerate_torsion_in_span followed by lift_check with
/// the span as correction directions, visited once per orbit of the level-one
/// solutions under u -> x^-1 u x z (x from `conjugators`, z from `multipliers`).
/// The symmetries must preserve the span and torsion; callers pass x in G and
/// z in the center of the subgroup whose centralizer is enumerated.
TorsionOracleResult torsion_oracle(const std::vector<RingElement> &class_sums, const ZpkContext &low,
                                   unsigned cap, unsigned delta, std::span<const Elem> conjugators,
                                   std::span<const Elem> multipliers);

/// enumerate_torsion_in_span over the N-class sums, for admissible (G, p).
std::vector<RingElement> enumerate_torsion_centralizer(const Subgroup &n, const ZpkContext &low);

constexpr std::size_t max_enumeration_rank = 14;

} // namespace pblock
