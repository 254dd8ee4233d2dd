#include "cli_impl.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "cosk/report.hpp"
#include "cosk/specparse.hpp"
#include "cosk/version.hpp"

namespace cosk::cli {
namespace {

// returns false when the JSON file cannot be written
bool emit(const nlohmann::json& report, const std::string& json_path, std::ostream& out,
          std::ostream& err) {
  if (!json_path.empty()) {
    std::ofstream f(json_path, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << json_path << " for writing\n";
      return false;
    }
    f << dump_json(report);
  }
  out << render_text(report);
  return true;
}

std::vector<double> parse_k_list(const std::string& csv) {
  std::vector<double> ks;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    ks.push_back(std::stod(csv.substr(pos, next - pos)));
    pos = next + 1;
  }
  return ks;
}

std::vector<int> parse_p_list(const std::string& csv) {
  std::vector<int> ps;
  for (double k : parse_k_list(csv)) ps.push_back(static_cast<int>(k));
  return ps;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"curvature operators of the second kind: spectra, Bochner forms, holonomy"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze one space spec");
  std::string spec_text, k_csv, forms_csv, json_path;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> lie_paths;
  analyze_cmd->add_option("spec", spec_text, "space spec, e.g. product[sphere(3,1);flat(1)]")
      ->required();
  analyze_cmd->add_option("--k", k_csv, "comma-separated k values for the k-nonnegativity report");
  analyze_cmd->add_option("--forms", forms_csv, "degrees for random-form cross-oracle checks");
  analyze_cmd->add_option("--json", json_path, "write the JSON report to this path");
  analyze_cmd->add_option("--seed", seed, "seed for all randomized probes");
  analyze_cmd->add_option("--lie", lie_paths, "JSON file with a named Lie dataset for sym(...)");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "batch scans");
  scan_cmd->require_subcommand(1);

  auto* integ = scan_cmd->add_subcommand("integrality", "dimensions with integer Einstein threshold");
  long long max_n = 10000;
  std::string integ_json;
  integ->add_option("--max", max_n, "scan n in [1, max]")->required();
  integ->add_option("--json", integ_json, "write the JSON report to this path");

  auto* wp = scan_cmd->add_subcommand("weight-principle", "Monte-Carlo weight-principle search");
  long long trials = 100000;
  std::uint64_t wp_seed = kDefaultSeed;
  std::string wp_json;
  wp->add_option("--trials", trials, "number of random spectra")->required();
  wp->add_option("--seed", wp_seed, "generator seed");
  wp->add_option("--json", wp_json, "write the JSON report to this path");

  auto* sweep = scan_cmd->add_subcommand("catalog-sweep", "verify all invariants over the catalog");
  std::uint64_t sweep_seed = kDefaultSeed;
  std::string sweep_json;
  sweep->add_option("--seed", sweep_seed, "generator seed");
  sweep->add_option("--json", sweep_json, "write the JSON report to this path");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help / --version
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (analyze_cmd->parsed()) {
      AnalyzeOptions options;
      options.seed = seed;
      if (!k_csv.empty()) options.k_values = parse_k_list(k_csv);
      if (!forms_csv.empty()) options.form_degrees = parse_p_list(forms_csv);
      for (const std::string& path : lie_paths) {
        std::ifstream f(path);
        if (!f) {
          err << "error: cannot read " << path << "\n";
          return 1;
        }
        options.extra_datasets.push_back(load_lie_json(nlohmann::json::parse(f)));
      }
      const SpaceSpec spec = parse_spec(spec_text);
      const RunResult res = analyze(spec, options);
      if (!emit(res.report, json_path, out, err)) return 1;
      return res.exit_code;
    }
    if (integ->parsed()) {
      return emit(scan_integrality(max_n), integ_json, out, err) ? 0 : 1;
    }
    if (wp->parsed()) {
      const RunResult res = scan_weight_principle(trials, wp_seed);
      if (!emit(res.report, wp_json, out, err)) return 1;
      return res.exit_code;
    }
    if (sweep->parsed()) {
      const RunResult res = scan_catalog_sweep(sweep_seed);
      if (!emit(res.report, sweep_json, out, err)) return 1;
      return res.exit_code;
    }
  } catch (const SpecParseError& e) {
    err << "spec error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace cosk::cli
