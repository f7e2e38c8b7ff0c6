// hnp: decide the Hasse-norm-principle criterion for transitive permutation
// groups by finite group computations. Subcommands: analyze, table,
// verify-catalog, multiplier.

#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "hnp/cli.hpp"

namespace {

hnp::RunOptions make_options(long long budget_h2, bool no_direct_h2,
                             const std::string& sha, const std::string& format,
                             bool timings, int jobs) {
  hnp::RunOptions opt;
  opt.verdict.caps.h2_var_cap = budget_h2;
  opt.verdict.direct_h2 = !no_direct_h2;
  if (sha == "always")
    opt.verdict.sha = hnp::ShaPolicy::Always;
  else if (sha == "never")
    opt.verdict.sha = hnp::ShaPolicy::Never;
  else
    opt.verdict.sha = hnp::ShaPolicy::Auto;
  opt.format = format;
  opt.timings = timings;
  opt.jobs = jobs;
  return opt;
}

int cmd_analyze(const std::string& spec_text, const hnp::RunOptions& opt, bool facts) {
  hnp::GroupSpec spec = hnp::parse_group_spec(spec_text);
  hnp::ReportRow row = hnp::analyze_spec(spec, opt);
  std::cout << hnp::render_rows({row}, opt.format);
  if (facts) {
    hnp::VerdictOptions vo = opt.verdict;
    vo.family_mg = hnp::expected_multiplier(spec);
    hnp::PermGroup g = hnp::build_group(spec, vo.caps);
    hnp::Verdict v = hnp::hnp_verdict(g, vo);
    for (const auto& [claim, evidence] : v.facts)
      std::cout << "# " << claim << ": " << evidence << "\n";
  }
  return row.inconclusive ? 2 : 0;
}

int cmd_table(const std::string& catalog_path, int deg_lo, int deg_hi,
              const hnp::TableFilter& filter, const hnp::RunOptions& opt) {
  auto catalog = hnp::load_catalog(catalog_path);
  auto rows = hnp::run_table(catalog, deg_lo, deg_hi, filter, opt);
  std::cout << hnp::render_rows(rows, opt.format);
  return 0;
}

int cmd_verify_catalog(const std::string& catalog_path) {
  auto catalog = hnp::load_catalog(catalog_path);
  std::map<int, int> by_degree;
  for (const auto& r : catalog) ++by_degree[r.degree];
  std::cout << "catalog OK: " << catalog.size() << " records\n";
  for (auto& [deg, cnt] : by_degree)
    std::cout << "  degree " << deg << ": " << cnt << " group(s)\n";
  return 0;
}

int cmd_multiplier(const std::string& spec_text, const hnp::RunOptions& opt) {
  hnp::GroupSpec spec = hnp::parse_group_spec(spec_text);
  hnp::PermGroup g = hnp::build_group(spec, opt.verdict.caps);
  std::cout << "group: " << spec.to_string() << "  |G| = " << g.order() << "\n";
  auto family = hnp::expected_multiplier(spec);
  std::cout << "family closed form:  " << (family ? family->to_string() : "n/a") << "\n";
  std::optional<hnp::AbInvariants> uct;
  try {
    uct = hnp::schur_multiplier_uct(g, opt.verdict.caps);
    std::cout << "cocycle engine:      " << uct->to_string() << "\n";
  } catch (const hnp::BudgetError& e) {
    std::cout << "cocycle engine:      skipped (" << e.what() << ")\n";
  }
  auto sylow = hnp::schur_multiplier_sylow_bound(g, opt.verdict.caps);
  std::cout << "sylow bound:         "
            << (sylow ? sylow->to_string() : "inconclusive") << "\n";
  if (family && uct && *family != *uct) {
    std::cout << "DISAGREEMENT between engines\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hasse norm principle criteria for transitive permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();

  long long budget_h2 = hnp::default_caps().h2_var_cap;
  bool no_direct_h2 = false;
  std::string sha = "auto", format = "tsv", catalog = "data/transitive_2_10.txt";
  bool timings = false, facts = false;
  int jobs = 0;
  app.add_option("--budget-h2", budget_h2, "variable cap for direct H^2 (|G|^2 * rank)");
  app.add_flag("--no-direct-h2", no_direct_h2, "never run the direct cocycle engine");
  app.add_option("--sha-omega", sha, "compute Sha^2_omega: auto, always, never")
      ->check(CLI::IsMember({"auto", "always", "never"}));
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--catalog", catalog, "catalog file path");
  app.add_flag("--timings", timings, "emit per-row timing (breaks byte determinism)");
  app.add_option("--jobs", jobs, "worker threads for table runs (0 = all cores)");

  std::string spec_text;
  auto* analyze = app.add_subcommand("analyze", "analyze one group spec");
  analyze->add_option("spec", spec_text, "group spec, e.g. D:4 or G0:8,2,3,8|H=b")
      ->required();
  analyze->add_flag("--facts", facts, "print the verdict evidence chain");

  int deg_lo = 2, deg_hi = 10, table_no = 0;
  std::string f_meta = "", f_mg = "", f_mh = "", f_cond0 = "";
  auto* table = app.add_subcommand("table", "run a catalog sweep");
  table->add_option("--degrees-from", deg_lo, "lowest degree");
  table->add_option("--degrees-to", deg_hi, "highest degree");
  table->add_option("--table", table_no, "row filter preset 1..4 (see README)")
      ->check(CLI::Range(1, 4));
  table->add_option("--metacyclic", f_meta, "filter: yes or no")
      ->check(CLI::IsMember({"yes", "no", ""}));
  table->add_option("--mg", f_mg, "filter: trivial or nontrivial")
      ->check(CLI::IsMember({"trivial", "nontrivial", ""}));
  table->add_option("--mh", f_mh, "filter: trivial or nontrivial")
      ->check(CLI::IsMember({"trivial", "nontrivial", ""}));
  table->add_option("--cond0", f_cond0, "filter: yes or no")
      ->check(CLI::IsMember({"yes", "no", ""}));

  auto* verify = app.add_subcommand("verify-catalog", "load and validate a catalog");

  std::string mult_spec;
  auto* mult = app.add_subcommand("multiplier", "print M(G) from each engine");
  mult->add_option("spec", mult_spec, "group spec")->required();

  CLI11_PARSE(app, argc, argv);

  hnp::RunOptions opt = make_options(budget_h2, no_direct_h2, sha, format, timings, jobs);
  try {
    if (analyze->parsed()) return cmd_analyze(spec_text, opt, facts);
    if (table->parsed()) {
      hnp::TableFilter filter;
      if (table_no) filter = hnp::TableFilter::preset(table_no);
      if (f_meta == "yes") filter.metacyclic = true;
      if (f_meta == "no") filter.metacyclic = false;
      if (f_mg == "trivial") filter.mg_trivial = true;
      if (f_mg == "nontrivial") filter.mg_trivial = false;
      if (f_mh == "trivial") filter.mh_trivial = true;
      if (f_mh == "nontrivial") filter.mh_trivial = false;
      if (f_cond0 == "yes") filter.cond0 = true;
      if (f_cond0 == "no") filter.cond0 = false;
      return cmd_table(catalog, deg_lo, deg_hi, filter, opt);
    }
    if (verify->parsed()) return cmd_verify_catalog(catalog);
    if (mult->parsed()) return cmd_multiplier(mult_spec, opt);
  } catch (const hnp::ParseError& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
