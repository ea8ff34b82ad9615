#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace nhls {

struct ScenarioConfig {
  std::string scenario_id;
  std::map<std::string, std::string> overrides;
  std::string output_dir;  // empty: no artifacts written
};

struct Check {
  enum class Op { Info, GE, LE, GT, LT, Range };
  Op op = Op::Info;
  double a = 0.0;
  double b = 0.0;

  static Check info() { return {}; }
  static Check ge(double v) { return {Op::GE, v, 0.0}; }
  static Check le(double v) { return {Op::LE, v, 0.0}; }
  static Check gt(double v) { return {Op::GT, v, 0.0}; }
  static Check lt(double v) { return {Op::LT, v, 0.0}; }
  static Check range(double lo, double hi) { return {Op::Range, lo, hi}; }
  bool eval(double v) const;
  std::string describe() const;
};

struct Metric {
  std::string name;
  double value = 0.0;
  Check check;
  bool pass() const { return check.eval(value); }
};

struct ScenarioResult {
  std::string id;
  std::vector<Metric> metrics;
  std::vector<std::string> artifacts;
  nlohmann::json meta;
  bool pass = false;
  std::string error;  // set when the run aborted
  double seconds = 0.0;

  const Metric* find(const std::string& name) const;
};

// The 14 built-in scenarios followed by "custom".
std::vector<std::string> scenario_ids();
bool is_scenario(const std::string& id);
// Default parameters of a scenario, as written in meta.json.
std::map<std::string, std::string> scenario_defaults(const std::string& id);

// Numbers, "pi", "-pi/2", "3*pi/4".
double parse_number(const std::string& text);
// "a=1,b=2" or repeated "a=1" tokens.
std::map<std::string, std::string> parse_assignments(const std::vector<std::string>& items);

// Throws Error on config or budget problems; threshold failures only clear `pass`.
ScenarioResult run_scenario(const ScenarioConfig& cfg);

struct SuiteResult {
  std::vector<ScenarioResult> results;
  bool pass = false;
};

// Empty filter runs every built-in scenario. Each scenario writes into out_dir/<id>/.
SuiteResult run_suite(const std::vector<std::string>& filter, std::size_t workers, const std::string& out_dir);

std::string junit_report(const SuiteResult& s);
std::string metrics_csv(const std::vector<ScenarioResult>& results);
std::string summary_csv(const ScenarioResult& r);

}  // namespace nhls
