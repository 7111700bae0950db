#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "pblock/group.hpp"
#include "pblock/random.hpp"
#include "pblock/zpk.hpp"

namespace pblock {

/// An element of (Z/p^k)[G], stored densely in element-index order.
class RingElement {
public:
  RingElement(GroupPtr group, const ZpkContext &ctx);
  RingElement(GroupPtr group, const ZpkContext &ctx, Vector coeffs);

  static RingElement zero(const GroupPtr &group, const ZpkContext &ctx) { return {group, ctx}; }
  static RingElement one(const GroupPtr &group, const ZpkContext &ctx) { return of(group, ctx, 0); }
  static RingElement of(const GroupPtr &group, const ZpkContext &ctx, Elem g);
  static RingElement scalar(const GroupPtr &group, const ZpkContext &ctx, Residue r);
  /// Sum of the listed group elements.
  static RingElement sum_of(const GroupPtr &group, const ZpkContext &ctx, std::span<const Elem> elems);

  const GroupPtr &group() const { return group_; }
  const ZpkContext &context() const { return ctx_; }
  const Vector &coeffs() const { return coeffs_; }
  Residue coeff(Elem g) const { return coeffs_[g]; }
  /// The 1-coefficient.
  Residue trace() const { return coeffs_[0]; }

  RingElement operator+(const RingElement &o) const;
  RingElement operator-(const RingElement &o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement &o) const;
  RingElement operator*(Residue r) const;
  RingElement &operator+=(const RingElement &o);
  RingElement &operator-=(const RingElement &o);

  friend bool operator==(const RingElement &a, const RingElement &b);

  bool is_zero() const;
  bool is_one() const;
  Residue augmentation() const;
  RingElement pow(std::uint64_t e) const;
  /// x^(p^a)
  RingElement pow_p_power(unsigned a) const;
  bool commutes_with(const RingElement &o) const { return (*this) * o == o * (*this); }

  /// The group element g when this element is exactly g.
  std::optional<Elem> as_group_element() const;

  /// Same integer representatives, read at precision k (reduces when k is
  /// smaller; embeds the representatives when k is larger).
  RingElement with_precision(unsigned k) const;

  /// Divides every coefficient by p, dropping one level of precision. Throws
  /// HypothesisViolated unless all coefficients are divisible by p.
  RingElement divide_by_p() const;

  /// Right multiplication by g (basis permutation).
  RingElement times_group_element(Elem g) const;

private:
  void check_compatible(const RingElement &o) const;

  GroupPtr group_;
  ZpkContext ctx_;
  Vector coeffs_;
};

RingElement operator*(Residue r, const RingElement &x);

/// out = x * y in (Z/p^k)[G]; out must not alias x or y.
void multiply_into(const FiniteGroup &g, const ZpkContext &ctx, std::span<const Residue> x,
                   std::span<const Residue> y, std::span<Residue> out);

/// Inverse when the image in (Z/p)[G] is invertible (then lifted by y <- y(2 - xy)).
std::optional<RingElement> try_invert(const RingElement &x);
/// As try_invert, throwing NotUnit.
RingElement invert(const RingElement &x);
bool is_unit(const RingElement &x);

/// Order of a unit as a power of p, if reached within the exponent cap.
struct UnitOrderResult {
  std::optional<unsigned> exponent; ///< order == p^exponent; nullopt = UnresolvedAtPrecision

  bool resolved() const { return exponent.has_value(); }
};

/// Default cap: p-part exponent of |G| plus 2.
unsigned default_order_cap(const FiniteGroup &g, unsigned p);
UnitOrderResult unit_order(const RingElement &u, unsigned cap);
UnitOrderResult unit_order(const RingElement &u);

/// v^-1 x v
RingElement conjugate(const RingElement &x, const RingElement &v);

/// Matrix M with (y M) == coefficients of y * x (right multiplication by x).
Matrix right_multiplication_matrix(const RingElement &x);
/// Matrix M with (y M) == coefficients of x * y (left multiplication by x).
Matrix left_multiplication_matrix(const RingElement &x);

/// The distinguished submodules of (Z/p^k)[G].
class DistinguishedSubmodules {
public:
  DistinguishedSubmodules(GroupPtr group, const ZpkContext &ctx);

  const GroupPtr &group() const { return group_; }
  const ZpkContext &context() const { return ctx_; }

  /// [RG,RG], spanned by g^h - g.
  Submodule commutator() const;
  /// [RG]^(1-c), spanned by g - g^c.
  Submodule twisted(Elem c) const;
  /// I_R(H)G for normal H, spanned by (h-1)g. Throws NotNormal otherwise.
  Submodule aug_ideal(const Subgroup &h) const;
  /// I_R(H), spanned by h-1 (any subgroup).
  Submodule aug_ideal_of_subring(const Subgroup &h) const;
  /// R[T]
  Submodule span(std::span<const Elem> t) const;
  /// R * 1
  Submodule scalars() const;
  /// m * RG
  Submodule multiple_of_full(Residue m) const;

  /// All |G|^2 generators g^h - g, for brute-force comparisons.
  std::vector<Vector> commutator_generators() const;
  std::vector<Vector> twisted_generators(Elem c) const;

private:
  GroupPtr group_;
  ZpkContext ctx_;
};

/// Sum of the N-orbit of g under conjugation.
RingElement n_class_sum(const Subgroup &n, Elem g, const ZpkContext &ctx);
/// One class sum per N-orbit, ordered by smallest orbit member.
std::vector<RingElement> n_class_sums(const Subgroup &n, const ZpkContext &ctx);
/// C_RG(N) computed as the solution space of x n - n x == 0 over generators n.
Submodule centralizer_in_ring(const Subgroup &n, const ZpkContext &ctx);
/// Kernel of the coefficient collapse RG -> R[G/H] (H normal).
Submodule collapse_kernel(const Subgroup &h, const ZpkContext &ctx);
/// Image of x under RG -> R[G/K].
RingElement project(const RingElement &x, const QuotientMap &q);
/// Kernel of the norm map m -> sum_i m^(c^i) for the conjugation action of <c>.
Submodule norm_kernel(const GroupPtr &g, Elem c, const ZpkContext &ctx);

RingElement random_element(const GroupPtr &g, const ZpkContext &ctx, Rng &rng);
/// Random unit of augmentation one.
RingElement random_unit(const GroupPtr &g, const ZpkContext &ctx, Rng &rng);
/// g * (1 + p r) with r random: always a unit.
RingElement structured_unit(const GroupPtr &g, const ZpkContext &ctx, Elem base, Rng &rng);
/// sum_i c_i b_i with c_i uniform in [0, bound).
RingElement random_combination(std::span<const RingElement> basis, Residue bound, Rng &rng);
/// Random unit of augmentation one in the span of the given basis (which must
/// contain such units, e.g. a centralizer). Throws NotUnit after 1000 draws.
RingElement random_unit_in_span(std::span<const RingElement> basis, Rng &rng);

nlohmann::json to_json(const RingElement &x);
RingElement ring_element_from_json(const nlohmann::json &j, const GroupPtr &g);

} // namespace pblock
