#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "pblock/arith.hpp"
#include "pblock/catalog.hpp"
#include "pblock/errors.hpp"
#include "pblock/harness.hpp"
#include "pblock/identities.hpp"

using namespace pblock;
using nlohmann::json;

namespace {

struct Options {
  std::string catalog_file;
  std::string group;
  unsigned p = 0;
  unsigned k = 0;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
  bool no_timing = false;
};

std::vector<CatalogEntry> load_selected_catalog(const Options &o)
{
  if (o.catalog_file.empty())
    return builtin_catalog();
  std::ifstream in(o.catalog_file);
  if (!in)
    throw Error(ErrorKind::InputError, "cannot open catalog " + o.catalog_file);
  try {
    return load_catalog(json::parse(in));
  } catch (const json::exception &e) {
    throw Error(ErrorKind::InputError, std::string("malformed catalog: ") + e.what());
  }
}

CatalogEntry select_entry(const Options &o)
{
  auto catalog = load_selected_catalog(o);
  return o.p == 0 ? find_entry(catalog, o.group) : find_entry(catalog, o.group, o.p);
}

void emit(const json &report, const Options &o)
{
  std::string text = o.format == "text" ? render_text(report) : report.dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out)
    throw Error(ErrorKind::InputError, "cannot write " + o.output);
  out << text;
}

CheckResult run_checker(const std::string &name, const CatalogEntry &e, const ZpkContext &ctx, const Options &o)
{
  const auto &g = e.group;
  Subgroup n = o_p(g, e.p);
  if (name == "sbor-a")
    return check_sbor_a(n, ctx);
  if (name == "sbor-b")
    return check_sbor_b(g, ctx);
  if (name == "formula-11")
    return check_formula_11(g, ctx);
  if (name == "formula-12")
    return check_formula_12(g, ctx, o.trials, o.seed);
  if (name == "formula-13")
    return check_formula_13(g, ctx, 3, 1, o.trials, o.seed);
  if (name == "formula-14")
    return check_formula_14(g, ctx, o.trials, o.seed);
  if (name == "formula-2")
    return check_formula_2_all(g, ctx);
  if (name == "lemma-odd")
    return check_lemma_odd(g, ctx, o.trials, o.seed);
  if (name == "lemma-abc")
    return check_lemma_abc_pairs(g, ctx, o.trials, o.seed);
  if (name == "lemma-l1")
    return check_lemma_l1(g, ctx, o.trials, o.seed);
  if (name == "centralizer-local")
    return check_centralizer_local(n, e.p, o.trials, o.seed);
  throw Error(ErrorKind::InputError, "unknown checker '" + name + "'");
}

void add_common(CLI::App *cmd, Options &o)
{
  cmd->add_option("--group", o.group, "catalog group name")->required();
  cmd->add_option("-p", o.p, "prime (default: the catalog entry's)");
  cmd->add_option("-k", o.k, "precision exponent (default 8 for p = 2, 5 otherwise)");
  cmd->add_option("--trials", o.trials, "random trials")->capture_default_str();
  cmd->add_option("--seed", o.seed, "base seed")->capture_default_str();
  cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--output", o.output, "write the report to a file");
  cmd->add_flag("--no-timing", o.no_timing, "omit the wall-time field");
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"pblock: verification toolkit for p-adic group rings"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--catalog", o.catalog_file, "catalog JSON file replacing the built-in one");

  auto *catalog = app.add_subcommand("catalog", "inspect the group catalog");
  auto *catalog_list = catalog->add_subcommand("list", "list entries");
  auto *catalog_validate = catalog->add_subcommand("validate", "re-derive and cross-check every entry");
  catalog->require_subcommand(1);

  auto *check = app.add_subcommand("check", "run one identity checker");
  std::string checker;
  check->add_option("checker", checker, "checker name")->required();
  add_common(check, o);

  auto *campaign = app.add_subcommand("campaign", "run a campaign");
  std::string campaign_name;
  campaign->add_option("name", campaign_name, "identity, theorem-a or theorem-b")
    ->required()
    ->check(CLI::IsMember({"identity", "theorem-a", "theorem-b"}));
  add_common(campaign, o);

  auto *report = app.add_subcommand("report", "render a saved report");
  std::string report_file;
  report->add_option("file", report_file, "report JSON")->required();
  report->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : input_error_exit;
  }

  try {
    if (catalog_list->parsed()) {
      for (const auto &e : load_selected_catalog(o))
        std::cout << e.name << "  |G| = " << e.group->order() << "  p = " << e.p
                  << "  admissible = " << (e.expected_admissible ? "yes" : "no")
                  << "  |N| = " << e.expected_n_order << "  " << e.notes << "\n";
      return 0;
    }
    if (catalog_validate->parsed()) {
      int bad = 0;
      for (const auto &e : load_selected_catalog(o)) {
        auto problems = validate_entry(e);
        for (const auto &msg : problems)
          std::cout << "MISMATCH " << msg << "\n";
        if (problems.empty())
          std::cout << "ok " << e.name << " (p = " << e.p << ")\n";
        bad += !problems.empty();
      }
      return bad == 0 ? 0 : 1;
    }
    if (report->parsed()) {
      std::ifstream in(report_file);
      if (!in)
        throw Error(ErrorKind::InputError, "cannot open " + report_file);
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::exception &e) {
        throw Error(ErrorKind::InputError, std::string("malformed report: ") + e.what());
      }
      if (doc.value("schema", std::string{}) != report_schema)
        throw Error(ErrorKind::InputError, "not a " + std::string(report_schema) + " document");
      emit(doc, o);
      return exit_code(verdict_from_string(doc.at("verdict").get<std::string>()));
    }

    CatalogEntry entry = select_entry(o);
    unsigned k = o.k == 0 ? default_precision(entry.p) : o.k;
    ZpkContext ctx(entry.p, k);

    CampaignReport r;
    if (check->parsed()) {
      auto t0 = std::chrono::steady_clock::now();
      CheckResult c;
      try {
        c = run_checker(checker, entry, ctx, o);
      } catch (const Error &e) {
        if (e.kind() != ErrorKind::HypothesisViolated)
          throw;
        std::cerr << "not applicable: " << e.what() << "\n";
        return input_error_exit;
      }
      c.name = checker;
      r = CampaignReport{"check", entry, k, o.seed, o.trials, {c}, aggregate_verdict({c}), 0.0};
      r.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } else if (campaign_name == "identity") {
      r = run_identity_suite(entry, k, o.trials, o.seed);
    } else if (campaign_name == "theorem-a") {
      r = run_theorem_a_campaign(entry, k, o.trials, o.seed);
    } else {
      r = run_theorem_b_campaign(entry, k, o.trials, o.seed);
    }
    emit(report_to_json(r, !o.no_timing), o);
    return exit_code(r.verdict);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error_exit;
  } catch (const json::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error_exit;
  }
}
