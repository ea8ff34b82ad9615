#include "experiment.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>
#include <thread>

#include "csv.hpp"
#include "error.hpp"
#include "scenario_impl.hpp"

namespace nhls {

using detail::Ctx;
using detail::ScenarioDef;
using detail::scenario_table;

bool Check::eval(double v) const {
  if (std::isnan(v)) return op == Op::Info;
  switch (op) {
    case Op::Info: return true;
    case Op::GE: return v >= a;
    case Op::LE: return v <= a;
    case Op::GT: return v > a;
    case Op::LT: return v < a;
    case Op::Range: return v >= a && v <= b;
  }
  return false;
}

std::string Check::describe() const {
  switch (op) {
    case Op::Info: return "info";
    case Op::GE: return ">=" + fmt(a);
    case Op::LE: return "<=" + fmt(a);
    case Op::GT: return ">" + fmt(a);
    case Op::LT: return "<" + fmt(a);
    case Op::Range: return "[" + fmt(a) + ";" + fmt(b) + "]";
  }
  return "info";
}

const Metric* ScenarioResult::find(const std::string& name) const {
  for (const auto& m : metrics)
    if (m.name == name) return &m;
  return nullptr;
}

namespace detail {

double Ctx::num(const std::string& key) const {
  auto it = num_.find(key);
  if (it == num_.end()) fail(ErrorCode::InvalidArgument, id_ + ": no numeric parameter '" + key + "'");
  return it->second;
}

std::size_t Ctx::count(const std::string& key) const {
  const double v = num(key);
  if (!(v >= 0) || v != std::floor(v) || v > 1e9)
    fail(ErrorCode::InvalidArgument, "overrides." + key + ": expected a non-negative integer (got " + fmt(v) + ")");
  return static_cast<std::size_t>(v);
}

const std::string& Ctx::str(const std::string& key) const {
  auto it = str_.find(key);
  if (it == str_.end()) fail(ErrorCode::InvalidArgument, id_ + ": no parameter '" + key + "'");
  return it->second;
}

void Ctx::metric(const std::string& name, double value, Check check) { res_.metrics.push_back({name, value, check}); }

void Ctx::write(const std::string& file, const std::string& contents) {
  if (out_.empty()) return;
  const std::string path = (std::filesystem::path(out_) / file).string();
  write_text_file(path, contents);
  res_.artifacts.push_back(path);
}

}  // namespace detail

namespace {

const ScenarioDef& find_def(const std::string& id) {
  for (const auto& d : scenario_table())
    if (d.id == id) return d;
  std::string known;
  for (const auto& d : scenario_table()) known += (known.empty() ? "" : ", ") + d.id;
  fail(ErrorCode::InvalidArgument, "scenario_id: unknown '" + id + "' (known: " + known + ")");
}

bool is_string_key(const ScenarioDef& d, const std::string& k) {
  for (const auto& s : d.string_keys)
    if (s == k) return true;
  return false;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

bool parse_plain(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto res = std::from_chars(first, s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

std::string xml_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    switch (c) {
      case '&': o += "&amp;"; break;
      case '<': o += "&lt;"; break;
      case '>': o += "&gt;"; break;
      case '"': o += "&quot;"; break;
      default: o += c;
    }
  }
  return o;
}

std::string failure_text(const ScenarioResult& r) {
  if (!r.error.empty()) return r.error;
  std::string msg;
  for (const auto& m : r.metrics)
    if (!m.pass()) msg += (msg.empty() ? "" : "; ") + m.name + "=" + fmt(m.value) + " (needs " + m.check.describe() + ")";
  return msg;
}

}  // namespace

std::vector<std::string> scenario_ids() {
  std::vector<std::string> ids;
  for (const auto& d : scenario_table()) ids.push_back(d.id);
  return ids;
}

bool is_scenario(const std::string& id) {
  for (const auto& d : scenario_table())
    if (d.id == id) return true;
  return false;
}

std::map<std::string, std::string> scenario_defaults(const std::string& id) {
  const ScenarioDef& d = find_def(id);
  return {d.defaults.begin(), d.defaults.end()};
}

double parse_number(const std::string& text) {
  std::string s = trim(text);
  double v = 0.0;
  if (parse_plain(s, v)) return v;
  double sign = 1.0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    if (s[0] == '-') sign = -1.0;
    s = s.substr(1);
  }
  const auto pos = s.find("pi");
  if (pos == std::string::npos) fail(ErrorCode::InvalidArgument, "not a number: '" + text + "'");
  double mul = 1.0, div = 1.0;
  std::string pre = s.substr(0, pos), post = s.substr(pos + 2);
  if (!pre.empty()) {
    if (pre.back() != '*' || !parse_plain(pre.substr(0, pre.size() - 1), mul))
      fail(ErrorCode::InvalidArgument, "not a number: '" + text + "'");
  }
  if (!post.empty()) {
    if (post[0] != '/' || !parse_plain(post.substr(1), div) || div == 0.0)
      fail(ErrorCode::InvalidArgument, "not a number: '" + text + "'");
  }
  return sign * mul * std::numbers::pi / div;
}

std::map<std::string, std::string> parse_assignments(const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok = trim(tok);
      if (tok.empty()) continue;
      const auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0)
        fail(ErrorCode::InvalidArgument, "expected key=value, got '" + tok + "'");
      out[trim(tok.substr(0, eq))] = trim(tok.substr(eq + 1));
    }
  }
  return out;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  const ScenarioDef& def = find_def(cfg.scenario_id);
  std::map<std::string, std::string> resolved(def.defaults.begin(), def.defaults.end());
  for (const auto& [k, v] : cfg.overrides) {
    if (!resolved.count(k)) {
      std::string keys;
      for (const auto& [dk, _] : def.defaults) keys += (keys.empty() ? "" : ", ") + dk;
      fail(ErrorCode::InvalidArgument, "overrides." + k + ": unknown parameter for " + def.id + " (accepted: " + keys + ")");
    }
    resolved[k] = v;
  }
  std::map<std::string, double> num;
  std::map<std::string, std::string> str;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : resolved) {
    if (is_string_key(def, k)) {
      str[k] = v;
      params[k] = v;
      continue;
    }
    double x = 0.0;
    try {
      x = parse_number(v);
    } catch (const Error&) {
      fail(ErrorCode::InvalidArgument, "overrides." + k + ": not a number ('" + v + "')");
    }
    if (!std::isfinite(x)) fail(ErrorCode::InvalidArgument, "overrides." + k + ": must be finite");
    num[k] = x;
    params[k] = x;
  }

  if (!cfg.output_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    if (ec) fail(ErrorCode::IoError, "cannot create output directory " + cfg.output_dir + ": " + ec.message());
  }

  ScenarioResult res;
  res.id = def.id;
  res.meta = nlohmann::json{{"scenario", def.id}, {"description", def.description}, {"parameters", params}};
  Ctx ctx(def.id, std::move(num), std::move(str), cfg.output_dir, res);
  const auto t0 = std::chrono::steady_clock::now();
  def.run(ctx);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.pass = true;
  for (const auto& m : res.metrics) res.pass = res.pass && m.pass();
  ctx.write("summary.csv", summary_csv(res));
  ctx.write("meta.json", res.meta.dump(2) + "\n");
  return res;
}

SuiteResult run_suite(const std::vector<std::string>& filter, std::size_t workers, const std::string& out_dir) {
  std::vector<std::string> ids;
  if (filter.empty()) {
    for (const auto& d : scenario_table())
      if (d.id != "custom") ids.push_back(d.id);
  } else {
    for (const auto& id : filter) ids.push_back(find_def(id).id);
  }
  SuiteResult suite;
  suite.results.resize(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      ScenarioConfig cfg{ids[i], {}, out_dir.empty() ? "" : (std::filesystem::path(out_dir) / ids[i]).string()};
      try {
        suite.results[i] = run_scenario(cfg);
      } catch (const std::exception& e) {
        suite.results[i].id = ids[i];
        suite.results[i].pass = false;
        suite.results[i].error = e.what();
      }
    }
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(workers, ids.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < n; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  suite.pass = !ids.empty();
  for (const auto& r : suite.results) suite.pass = suite.pass && r.pass;
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_text_file((std::filesystem::path(out_dir) / "report.xml").string(), junit_report(suite));
    write_text_file((std::filesystem::path(out_dir) / "metrics.csv").string(), metrics_csv(suite.results));
  }
  return suite;
}

std::string junit_report(const SuiteResult& s) {
  std::size_t failures = 0;
  double total = 0.0;
  for (const auto& r : s.results) {
    if (!r.pass) ++failures;
    total += r.seconds;
  }
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<testsuite name=\"nhls\" tests=\"" << s.results.size() << "\" failures=\"" << failures << "\" time=\""
     << fmt(total) << "\">\n";
  for (const auto& r : s.results) {
    os << "  <testcase classname=\"nhls.scenario\" name=\"" << xml_escape(r.id) << "\" time=\"" << fmt(r.seconds) << "\"";
    if (r.pass) {
      os << "/>\n";
      continue;
    }
    os << ">\n    <failure message=\"" << xml_escape(failure_text(r)) << "\"/>\n  </testcase>\n";
  }
  os << "</testsuite>\n";
  return os.str();
}

std::string metrics_csv(const std::vector<ScenarioResult>& results) {
  std::ostringstream os;
  os << "run_id,metric,value\n";
  for (const auto& r : results)
    for (const auto& m : r.metrics) os << r.id << ',' << m.name << ',' << fmt(m.value) << '\n';
  return os.str();
}

std::string summary_csv(const ScenarioResult& r) {
  std::ostringstream os;
  os << "metric,value,threshold,pass\n";
  for (const auto& m : r.metrics)
    os << m.name << ',' << fmt(m.value) << ',' << m.check.describe() << ',' << (m.pass() ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace nhls
