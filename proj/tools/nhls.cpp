#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nhls/nhls.h"

namespace {

int report(nhls_status st) {
  std::cerr << "error: " << nhls_status_name(st) << ": " << nhls_last_error() << "\n";
  return 2;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  nhls_string_free(s);
  return out;
}

bool split_kv(const std::string& item, std::vector<std::pair<std::string, std::string>>& out) {
  std::stringstream ss(item);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) return false;
    out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
  }
  return true;
}

bool parse_params(const std::string& text, nhls_params& p, std::string& err) {
  std::vector<std::pair<std::string, std::string>> kv;
  if (!split_kv(text, kv)) {
    err = "--params: expected J=..,delta=..,gamma=..";
    return false;
  }
  for (const auto& [k, v] : kv) {
    double x = 0.0;
    try {
      std::size_t used = 0;
      x = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::exception&) {
      err = "--params." + k + ": not a number ('" + v + "')";
      return false;
    }
    if (k == "J") p.J = x;
    else if (k == "delta") p.delta = x;
    else if (k == "gamma") p.gamma = x;
    else {
      err = "--params." + k + ": unknown (accepted: J, delta, gamma)";
      return false;
    }
  }
  return true;
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wave-packet dynamics on Hermitian and non-Hermitian tight-binding chains"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(nhls_version()));

  auto* run = app.add_subcommand("run", "Run one scenario");
  std::string scenario, out_dir;
  std::vector<std::string> sets;
  run->add_option("scenario", scenario, "Scenario id (see `nhls list`)")->required();
  run->add_option("--set", sets, "Override key=value (repeatable, comma-separated)");
  run->add_option("--out", out_dir, "Output directory");

  auto* suite = app.add_subcommand("suite", "Run the scenario suite");
  std::string filter, suite_out;
  std::size_t workers = 1;
  suite->add_option("--filter", filter, "Comma-separated scenario ids");
  suite->add_option("--workers", workers, "Concurrent scenarios")->check(CLI::PositiveNumber);
  suite->add_option("--out", suite_out, "Output directory for artifacts, report.xml and metrics.csv");

  std::string params_text = "J=1,delta=0.5,gamma=0.5", curve_out;
  int band = 1;
  std::size_t samples = 201;
  bool approx = false;
  auto* disp = app.add_subcommand("dispersion", "Tabulate the SSH dispersion over [-pi, pi]");
  disp->add_option("--params", params_text, "J=..,delta=..,gamma=..");
  disp->add_option("--band", band, "+1 or -1")->check(CLI::IsMember({1, -1}));
  disp->add_option("--samples", samples, "Number of k samples")->check(CLI::Range(2, 1000000));
  disp->add_option("--out", curve_out, "CSV path (stdout if omitted)");
  auto* ovl = app.add_subcommand("overlap", "Tabulate the band overlap O_k over [-pi, pi]");
  ovl->add_option("--params", params_text, "J=..,delta=..,gamma=..");
  ovl->add_option("--samples", samples, "Number of k samples")->check(CLI::Range(2, 1000000));
  ovl->add_flag("--approx", approx, "Use the small-k approximation");
  ovl->add_option("--out", curve_out, "CSV path (stdout if omitted)");

  auto* spec = app.add_subcommand("spec", "Lattice document tools");
  spec->require_subcommand(1);
  auto* validate = spec->add_subcommand("validate", "Validate a lattice JSON document");
  std::string spec_file;
  validate->add_option("file", spec_file, "Lattice JSON file")->required()->check(CLI::ExistingFile);

  auto* list = app.add_subcommand("list", "List scenarios");
  std::string defaults_for;
  list->add_option("--defaults", defaults_for, "Print defaults of one scenario as JSON");

  CLI11_PARSE(app, argc, argv);

  if (*run) {
    std::vector<std::pair<std::string, std::string>> kv;
    for (const auto& s : sets)
      if (!split_kv(s, kv)) {
        std::cerr << "error: --set expects key=value, got '" << s << "'\n";
        return 2;
      }
    std::vector<const char*> keys, values;
    for (const auto& [k, v] : kv) {
      keys.push_back(k.c_str());
      values.push_back(v.c_str());
    }
    int pass = 0;
    char* summary = nullptr;
    const nhls_status st = nhls_run_scenario(scenario.c_str(), keys.data(), values.data(), kv.size(),
                                             out_dir.empty() ? nullptr : out_dir.c_str(), &pass, &summary);
    if (st != NHLS_OK) return report(st);
    std::cout << take(summary);
    std::cout << scenario << ": " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
  }

  if (*suite) {
    int pass = 0;
    char* xml = nullptr;
    const nhls_status st =
        nhls_run_suite(filter.c_str(), workers, suite_out.empty() ? nullptr : suite_out.c_str(), &pass, &xml);
    if (st != NHLS_OK) return report(st);
    std::cout << take(xml);
    return pass ? 0 : 1;
  }

  if (*disp || *ovl) {
    nhls_params p{1.0, 0.0, 0.0};
    std::string err;
    if (!parse_params(params_text, p, err)) {
      std::cerr << "error: " << err << "\n";
      return 2;
    }
    char* csv = nullptr;
    const nhls_status st = nhls_curve_csv(*disp ? "dispersion" : "overlap", p, band, samples, approx ? 1 : 0, &csv);
    if (st != NHLS_OK) return report(st);
    return emit(take(csv), curve_out);
  }

  if (*validate) {
    std::ifstream f(spec_file, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    char* diag = nullptr;
    const nhls_status st = nhls_spec_validate(ss.str().c_str(), &diag);
    const std::string text = take(diag);
    if (st == NHLS_OK) {
      std::cout << spec_file << ": valid\n";
      return 0;
    }
    if (st != NHLS_ERR_PARSE || text.empty()) return report(st);
    std::cerr << text;
    return 1;
  }

  if (*list) {
    char* out = nullptr;
    const nhls_status st =
        defaults_for.empty() ? nhls_list_scenarios(&out) : nhls_scenario_defaults(defaults_for.c_str(), &out);
    if (st != NHLS_OK) return report(st);
    std::cout << take(out);
    if (!defaults_for.empty()) std::cout << "\n";
    return 0;
  }
  return 0;
}
