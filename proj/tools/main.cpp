#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kronhecke/cli/commands.hpp"
#include "kronhecke/error.hpp"

namespace {

using kronhecke::cli::RunConfig;

struct Flags {
  std::string family, params, format = "json";
  std::vector<std::string> expect;
};

void add_group_flags(CLI::App* app, RunConfig& cfg, Flags& f) {
  app->add_option("--family", f.family, "Group family name");
  app->add_option("--params", f.params, "Comma separated family parameters");
  app->add_option("--group-file", cfg.group_file, "Cayley table file");
  app->add_option("--table-file", cfg.table_file, "Character table in exchange format");
  app->add_option("--order-cap", cfg.order_cap, "Largest group order to build")->check(CLI::PositiveNumber);
  app->add_option("--format", f.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("--out", cfg.out, "Write the report here instead of stdout");
  app->add_flag("--timings", cfg.timings, "Include wall time per phase");
}

void add_check_flags(CLI::App* app, RunConfig& cfg, Flags& f) {
  app->add_option("--d", cfg.d, "Tuple lengths")->delimiter(',');
  app->add_option("--orbit-cap", cfg.orbit_cap, "Largest |G|^d enumerated by the orbit oracle")
      ->check(CLI::PositiveNumber);
  app->add_option("--expect", f.expect, "Expected classification, key:value")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Kronecker and Hecke counting for finite groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", KRONHECKE_VERSION);

  RunConfig cfg;
  Flags f;

  auto* build = app.add_subcommand("build", "Build a group and print its Cayley table or summary");
  add_group_flags(build, cfg, f);

  auto* chartab = app.add_subcommand("chartab", "Compute a character table");
  add_group_flags(chartab, cfg, f);

  auto* kron = app.add_subcommand("kron", "Kronecker coefficients");
  add_group_flags(kron, cfg, f);
  kron->add_option("--d", cfg.d, "Tuple lengths minus one")->delimiter(',');
  kron->add_option("--irreps", cfg.irreps, "One tuple of irrep indices")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Check counting identities against each other and the oracles");
  add_group_flags(verify, cfg, f);
  add_check_flags(verify, cfg, f);
  verify->add_option("--subgroup", cfg.subgroup,
                     "Subgroup preset: trivial, whole, center, point_stabilizer, borel, diagonal");
  verify->add_option("--subgroup-gens", cfg.subgroup_gens, "Subgroup generators as element indices")
      ->delimiter(',');
  verify->add_option("--formula", cfg.formulas, "Only report these formulas")->delimiter(',');

  auto* classify = app.add_subcommand("classify", "Real, MFTP and doubly-real classification");
  add_group_flags(classify, cfg, f);
  add_check_flags(classify, cfg, f);

  auto* scan = app.add_subcommand("scan", "Run verify and classify over a battery manifest");
  scan->add_option("--battery", cfg.battery, "Manifest file")->default_val(KRONHECKE_BATTERY);
  scan->add_option("--d", cfg.d, "Tuple lengths")->delimiter(',');
  scan->add_option("--orbit-cap", cfg.orbit_cap, "Largest |G|^d enumerated by the orbit oracle")
      ->check(CLI::PositiveNumber);
  scan->add_option("--order-cap", cfg.order_cap, "Largest group order to build")->check(CLI::PositiveNumber);
  scan->add_option("--format", f.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  scan->add_option("--out", cfg.out, "Write the report here instead of stdout");
  scan->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_flag("--timings", cfg.timings, "Include wall time per entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    if (!f.family.empty()) cfg.family = kronhecke::zoo::parse_family(f.family, f.params);
    else if (!f.params.empty()) throw kronhecke::Error("--params needs --family");
    cfg.format = kronhecke::cli::parse_format(f.format);
    for (const auto& kv : f.expect) {
      const auto colon = kv.find(':');
      if (colon == std::string::npos) throw kronhecke::Error("--expect wants key:value, got '" + kv + "'");
      cfg.expect[kv.substr(0, colon)] = kv.substr(colon + 1);
    }
    const int sources = !f.family.empty() + !cfg.group_file.empty() + !cfg.table_file.empty();
    if (cfg.command != "scan" && sources != 1) {
      throw kronhecke::Error("give exactly one of --family, --group-file, --table-file");
    }

    auto outcome = kronhecke::cli::run(cfg);
    const std::string text = outcome.raw.empty() ? kronhecke::cli::render(outcome.report, cfg.format) : outcome.raw;
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.out);
      if (!out) throw kronhecke::Error("cannot write '" + cfg.out + "'");
      out << text;
    }
    return outcome.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "kronhecke: " << e.what() << "\n";
    return 1;
  }
}
