#include "pblock/catalog.hpp"

#include "pblock/arith.hpp"
#include "pblock/errors.hpp"

namespace pblock {

using nlohmann::json;

namespace {

// Permutations act on 0-based points. SL(2,3) acts on the eight nonzero
// vectors of F_3^2, listed as (0,1),(0,2),(1,0),(1,1),(1,2),(2,0),(2,1),(2,2).
constexpr const char *builtin_text = R"CAT([
  {"group": {"name": "C2", "kind": "perm", "degree": 2, "generators": [[1,0]]},
   "p": 2, "expected_admissible": true, "expected_N_order": 2, "notes": "N = G"},
  {"group": {"name": "C4", "kind": "perm", "degree": 4, "generators": [[1,2,3,0]]},
   "p": 2, "expected_admissible": true, "expected_N_order": 4, "notes": "N = G"},
  {"group": {"name": "D8", "kind": "perm", "degree": 4, "generators": [[1,2,3,0],[3,2,1,0]]},
   "p": 2, "expected_admissible": true, "expected_N_order": 8, "notes": "N = G"},
  {"group": {"name": "Q8", "kind": "perm", "degree": 8,
             "generators": [[2,3,1,0,6,7,5,4],[4,5,7,6,1,0,2,3]]},
   "p": 2, "expected_admissible": true, "expected_N_order": 8, "notes": "regular representation, N = G"},
  {"group": {"name": "S3", "kind": "perm", "degree": 3, "generators": [[1,0,2],[1,2,0]]},
   "p": 3, "expected_admissible": true, "expected_N_order": 3, "notes": "N = C3"},
  {"group": {"name": "C3", "kind": "perm", "degree": 3, "generators": [[1,2,0]]},
   "p": 3, "expected_admissible": true, "expected_N_order": 3, "notes": "N = G"},
  {"group": {"name": "A4", "kind": "perm", "degree": 4, "generators": [[1,2,0,3],[1,0,3,2]]},
   "p": 2, "expected_admissible": true, "expected_N_order": 4, "notes": "N = V4"},
  {"group": {"name": "S4", "kind": "perm", "degree": 4, "generators": [[1,0,2,3],[1,2,3,0]]},
   "p": 2, "expected_admissible": true, "expected_N_order": 4, "notes": "N = V4"},
  {"group": {"name": "SL(2,3)", "kind": "perm", "degree": 8,
             "generators": [[3,7,2,6,1,5,0,4],[5,2,0,6,3,1,7,4]]},
   "p": 2, "expected_admissible": true, "expected_N_order": 8, "notes": "N = Q8"},
  {"group": {"name": "S3", "kind": "perm", "degree": 3, "generators": [[1,0,2],[1,2,0]]},
   "p": 2, "expected_admissible": false, "expected_N_order": 1, "notes": "negative: O_2 trivial"},
  {"group": {"name": "C6", "kind": "perm", "degree": 6, "generators": [[1,2,3,4,5,0]]},
   "p": 5, "expected_admissible": false, "expected_N_order": 1, "notes": "negative: 5 does not divide |G|"}
])CAT";

CatalogEntry parse_entry(const json &j)
{
  if (!j.is_object() || !j.contains("group") || !j.contains("p"))
    throw Error(ErrorKind::InputError, "catalog entry needs \"group\" and \"p\"");
  CatalogEntry e;
  e.group_spec = j.at("group");
  e.group = load_group(e.group_spec);
  e.name = e.group->name();
  if (!j.at("p").is_number_unsigned() || !is_prime(j.at("p").get<unsigned>()))
    throw Error(ErrorKind::InputError, "catalog entry " + e.name + ": p must be a prime");
  e.p = j.at("p").get<unsigned>();
  e.expected_admissible = j.value("expected_admissible", false);
  e.expected_n_order = j.value("expected_N_order", std::size_t{1});
  e.notes = j.value("notes", std::string{});
  return e;
}

CatalogEntry derived_entry(const CatalogEntry &base, unsigned p)
{
  CatalogEntry e = base;
  e.p = p;
  auto adm = is_admissible(e.group, p);
  e.expected_admissible = adm.admissible;
  e.expected_n_order = adm.normal_subgroup.order();
  e.notes = "derived for p = " + std::to_string(p);
  return e;
}

} // namespace

const json &builtin_catalog_json()
{
  static const json doc = json::parse(builtin_text);
  return doc;
}

std::vector<CatalogEntry> load_catalog(const json &doc)
{
  if (!doc.is_array())
    throw Error(ErrorKind::InputError, "catalog must be a JSON array");
  std::vector<CatalogEntry> out;
  for (const auto &j : doc)
    out.push_back(parse_entry(j));
  return out;
}

std::vector<CatalogEntry> builtin_catalog() { return load_catalog(builtin_catalog_json()); }

std::vector<std::string> validate_entry(const CatalogEntry &e)
{
  std::vector<std::string> problems;
  auto adm = is_admissible(e.group, e.p);
  if (adm.admissible != e.expected_admissible)
    problems.push_back(e.name + " (p = " + std::to_string(e.p) + "): admissible is " +
                       (adm.admissible ? "true" : "false"));
  if (adm.normal_subgroup.order() != e.expected_n_order)
    problems.push_back(e.name + " (p = " + std::to_string(e.p) + "): |O_p(G)| is " +
                       std::to_string(adm.normal_subgroup.order()) + ", expected " +
                       std::to_string(e.expected_n_order));
  return problems;
}

CatalogEntry find_entry(const std::vector<CatalogEntry> &catalog, const std::string &name, unsigned p)
{
  if (!is_prime(p))
    throw Error(ErrorKind::InputError, std::to_string(p) + " is not a prime");
  const CatalogEntry *any = nullptr;
  for (const auto &e : catalog) {
    if (e.name != name)
      continue;
    if (e.p == p)
      return e;
    any = &e;
  }
  if (!any)
    throw Error(ErrorKind::InputError, "unknown group '" + name + "'");
  return derived_entry(*any, p);
}

CatalogEntry find_entry(const std::vector<CatalogEntry> &catalog, const std::string &name)
{
  const CatalogEntry *first = nullptr;
  for (const auto &e : catalog) {
    if (e.name != name)
      continue;
    if (e.expected_admissible)
      return e;
    if (!first)
      first = &e;
  }
  if (!first)
    throw Error(ErrorKind::InputError, "unknown group '" + name + "'");
  return *first;
}

json entry_summary(const CatalogEntry &e)
{
  return json{{"name", e.name},
              {"order", e.group->order()},
              {"p", e.p},
              {"expected_admissible", e.expected_admissible},
              {"expected_N_order", e.expected_n_order},
              {"notes", e.notes}};
}

} // namespace pblock
