#pragma once

#include "doctest.h"
#include "pblock/catalog.hpp"
#include "pblock/group.hpp"

namespace testing_support {

// Points are 0-based: (1 2) on three points is [1,0,2].
inline pblock::GroupPtr perm_group(const std::string &name, std::size_t degree,
                                   const std::vector<pblock::Permutation> &gens)
{
  return std::make_shared<const pblock::FiniteGroup>(pblock::FiniteGroup::from_permutations(name, degree, gens));
}

inline pblock::GroupPtr cyclic(std::size_t n)
{
  pblock::Permutation c(n);
  for (std::size_t i = 0; i < n; ++i)
    c[i] = static_cast<std::uint32_t>((i + 1) % n);
  return perm_group("C" + std::to_string(n), n, n == 1 ? std::vector<pblock::Permutation>{} : std::vector<pblock::Permutation>{c});
}

inline pblock::GroupPtr s3() { return perm_group("S3", 3, {{1, 0, 2}, {1, 2, 0}}); }
inline pblock::GroupPtr s4() { return perm_group("S4", 4, {{1, 0, 2, 3}, {1, 2, 3, 0}}); }
inline pblock::GroupPtr a4() { return perm_group("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }
inline pblock::GroupPtr d8() { return perm_group("D8", 4, {{1, 2, 3, 0}, {3, 2, 1, 0}}); }

inline pblock::GroupPtr catalog_group(const std::string &name)
{
  return pblock::find_entry(pblock::builtin_catalog(), name).group;
}

inline pblock::Elem elem(const pblock::GroupPtr &g, const pblock::Permutation &perm)
{
  auto e = g->find_permutation(perm);
  REQUIRE(e.has_value());
  return *e;
}

inline std::vector<pblock::Elem> involutions(const pblock::GroupPtr &g)
{
  std::vector<pblock::Elem> out;
  for (pblock::Elem x = 0; x < g->order(); ++x)
    if (g->element_order(x) == 2)
      out.push_back(x);
  return out;
}

} // namespace testing_support
