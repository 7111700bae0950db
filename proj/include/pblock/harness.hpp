#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "pblock/catalog.hpp"
#include "pblock/identities.hpp"

namespace pblock {

enum class Verdict { Pass, Counterexample, Inconclusive };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string &s);

inline constexpr const char *report_schema = "pblock-report/1";

struct CampaignReport {
  std::string campaign;
  CatalogEntry entry;
  unsigned precision = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::vector<CheckResult> checks;
  Verdict verdict = Verdict::Pass;
  double wall_time_seconds = 0.0;
};

/// COUNTEREXAMPLE when any check failed, else INCONCLUSIVE when any trial ran
/// out of budget, else PASS. Skipped checks do not count.
Verdict aggregate_verdict(const std::vector<CheckResult> &checks);

/// Sample sizes of the fixed-budget lemma checks.
struct SuiteBudgets {
  std::uint64_t abc_pairs = 50;
  std::uint64_t l1_samples = 300;
  std::uint64_t odd_samples = 100000;
};

unsigned default_precision(unsigned p);

CampaignReport run_identity_suite(const CatalogEntry &entry, unsigned k, std::uint64_t trials, std::uint64_t seed,
                                  const SuiteBudgets &budgets = {});
CampaignReport run_theorem_b_campaign(const CatalogEntry &entry, unsigned k, std::uint64_t trials,
                                      std::uint64_t seed);
CampaignReport run_theorem_a_campaign(const CatalogEntry &entry, unsigned k, std::uint64_t trials,
                                      std::uint64_t seed);

/// Deterministic JSON; `with_timing` false drops the wall-time field.
nlohmann::json report_to_json(const CampaignReport &r, bool with_timing = true);
std::string render_text(const nlohmann::json &report);

/// 0 PASS, 1 COUNTEREXAMPLE, 3 INCONCLUSIVE.
int exit_code(Verdict v);
inline constexpr int input_error_exit = 2;

/// Payload kind "torsion_unit": u^e == 1 and u is none of the listed group
/// elements, checked with the embedded Cayley table.
nlohmann::json torsion_unit_payload(const RingElement &u, std::uint64_t exponent, const std::vector<Elem> &allowed,
                                    const std::string &claim);

/// reverify_counterexample extended with the payload kinds produced here.
bool reverify_payload(const nlohmann::json &payload);

} // namespace pblock
