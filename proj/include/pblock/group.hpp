#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace pblock {

using Elem = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

/// A finite group materialized as a full Cayley table. Element 0 is always the
/// identity. Instances are immutable once built and shared through GroupPtr.
class FiniteGroup {
public:
  static constexpr std::size_t default_order_cap = 200;

  /// Validates the table (closure, identity, inverses, associativity) and
  /// relabels so that the identity sits at index 0.
  static FiniteGroup from_table(std::string name, const std::vector<std::vector<Elem>> &table,
                                std::size_t cap = default_order_cap);

  /// Closes the given permutations of {0..degree-1} under composition. The
  /// product a*b applies a first, then b.
  static FiniteGroup from_permutations(std::string name, std::size_t degree,
                                       const std::vector<Permutation> &generators,
                                       std::size_t cap = default_order_cap);

  const std::string &name() const { return name_; }
  std::size_t order() const { return n_; }

  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  /// g^x = x^-1 g x
  Elem conj(Elem g, Elem x) const { return mul(mul(inv_[x], g), x); }
  Elem pow(Elem g, std::int64_t e) const;
  std::size_t element_order(Elem g) const { return orders_[g]; }

  /// Row a of the Cayley table: row(a)[b] == mul(a, b).
  const Elem *row(Elem a) const { return table_.data() + static_cast<std::size_t>(a) * n_; }

  const std::vector<Elem> &generators() const { return generators_; }

  bool is_permutation_group() const { return !perms_.empty(); }
  std::size_t degree() const { return degree_; }
  const Permutation &permutation(Elem g) const { return perms_.at(g); }
  std::optional<Elem> find_permutation(const Permutation &perm) const;

  /// Cycle notation (0-based points) for permutation groups, "g<i>" otherwise.
  std::string label(Elem g) const;

private:
  FiniteGroup() = default;
  void finish(std::size_t cap);

  std::string name_;
  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<std::size_t> orders_;
  std::vector<Elem> generators_;
  std::size_t degree_ = 0;
  std::vector<Permutation> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup stored as the sorted list of its member indices.
class Subgroup {
public:
  /// Members must already form a subgroup; use generated_subgroup() otherwise.
  Subgroup(GroupPtr parent, std::vector<Elem> members);

  const GroupPtr &parent() const { return parent_; }
  const std::vector<Elem> &members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Elem g) const { return mask_[g]; }

  /// A generating set, chosen greedily from the sorted members.
  std::vector<Elem> generators() const;

  friend bool operator==(const Subgroup &a, const Subgroup &b)
  {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

private:
  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

struct QuotientMap {
  GroupPtr parent;
  Subgroup kernel;
  GroupPtr quotient;
  std::vector<Elem> projection; ///< parent element -> quotient element
};

struct Admissibility {
  bool admissible;
  Subgroup normal_subgroup;   ///< O_p(G)
  std::optional<Elem> witness; ///< element of C_G(O_p(G)) outside O_p(G) on failure
};

struct SpecialSets {
  std::vector<Elem> involutions;
  std::vector<Elem> p_prime_elements;
};

/// Builds a group from a group-spec document:
///   {"name", "kind": "perm", "degree", "generators": [[...], ...]}
///   {"name", "kind": "table", "cayley": [[...], ...]}
GroupPtr load_group(const nlohmann::json &spec, std::size_t cap = FiniteGroup::default_order_cap);

Subgroup whole_group(const GroupPtr &g);
Subgroup trivial_subgroup(const GroupPtr &g);
Subgroup generated_subgroup(const GroupPtr &g, std::span<const Elem> elems);

bool is_normal(const Subgroup &h);
bool is_p_group(const Subgroup &h, unsigned p);

Subgroup centralizer(const GroupPtr &g, std::span<const Elem> set);
Subgroup normalizer(const Subgroup &h);
Subgroup center(const GroupPtr &g);
Subgroup intersection(const Subgroup &a, const Subgroup &b);
Subgroup conjugate_subgroup(const Subgroup &h, Elem x);

/// Largest normal p-subgroup.
Subgroup o_p(const GroupPtr &g, unsigned p);
Admissibility is_admissible(const GroupPtr &g, unsigned p);

/// A Sylow p-subgroup containing the p-subgroup `start` (trivial by default).
Subgroup sylow_p(const GroupPtr &g, unsigned p);
Subgroup sylow_containing(const Subgroup &start, unsigned p);

/// {g^x : x in N}, sorted. Throws NotNormal unless N is normal in its parent.
std::vector<Elem> n_class_orbit(const Subgroup &n, Elem g);

SpecialSets special_sets(const GroupPtr &g, unsigned p);

/// Cosets are numbered by their smallest member; the kernel maps to 0.
QuotientMap quotient_by(const Subgroup &k);

} // namespace pblock
