#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pblock/group.hpp"

namespace pblock {

/// One (group, prime) pair of the catalog. Expected values are claims that
/// validate_entry() re-derives from the group itself.
struct CatalogEntry {
  std::string name;
  nlohmann::json group_spec;
  unsigned p = 2;
  bool expected_admissible = false;
  std::size_t expected_n_order = 1;
  std::string notes;
  GroupPtr group;
};

/// The catalog shipped with the tool, as a JSON array.
const nlohmann::json &builtin_catalog_json();

/// Parses a catalog document (array of entries). Throws InputError.
std::vector<CatalogEntry> load_catalog(const nlohmann::json &doc);
std::vector<CatalogEntry> builtin_catalog();

/// Mismatches between the stated and the derived admissibility / |O_p(G)|;
/// empty when the entry is consistent.
std::vector<std::string> validate_entry(const CatalogEntry &e);

/// Lookup by name and prime. When the name exists only with other primes the
/// group is reused with p and freshly derived expectations. Throws InputError
/// for unknown names.
CatalogEntry find_entry(const std::vector<CatalogEntry> &catalog, const std::string &name, unsigned p);
/// Lookup by name alone; the first admissible entry wins.
CatalogEntry find_entry(const std::vector<CatalogEntry> &catalog, const std::string &name);

nlohmann::json entry_summary(const CatalogEntry &e);

} // namespace pblock
