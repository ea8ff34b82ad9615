#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "csv.hpp"
#include "error.hpp"
#include "experiment.hpp"

using namespace nhls;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("nhls_test_" + name);
  fs::remove_all(p);
  return p;
}

ErrorCode code_of(const ScenarioConfig& cfg) {
  try {
    run_scenario(cfg);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::NumericalFailure;
}

}  // namespace

TEST_CASE("numbers accept pi expressions") {
  CHECK(parse_number("0.25") == 0.25);
  CHECK(parse_number("-300") == -300);
  CHECK(parse_number("pi") == std::numbers::pi);
  CHECK(parse_number("-pi/2") == -std::numbers::pi / 2);
  CHECK(parse_number("3*pi/4") == 3 * std::numbers::pi / 4);
  CHECK(parse_number(" +1e-3 ") == 1e-3);
  CHECK_THROWS_AS(parse_number("pie"), Error);
  CHECK_THROWS_AS(parse_number("2pi"), Error);
  CHECK_THROWS_AS(parse_number(""), Error);
}

TEST_CASE("assignments split on commas and repeat") {
  const auto m = parse_assignments({"gamma=0.5,alpha=0.04", "t_max = 10"});
  CHECK(m.at("gamma") == "0.5");
  CHECK(m.at("alpha") == "0.04");
  CHECK(m.at("t_max") == "10");
  CHECK_THROWS_AS(parse_assignments({"gamma"}), Error);
  CHECK_THROWS_AS(parse_assignments({"=3"}), Error);
}

TEST_CASE("checks evaluate and describe themselves") {
  CHECK(Check::ge(0.98).eval(0.98));
  CHECK_FALSE(Check::gt(1.5).eval(1.5));
  CHECK(Check::range(0.98, 1.02).eval(1.0));
  CHECK_FALSE(Check::range(0.98, 1.02).eval(1.03));
  CHECK_FALSE(Check::le(0.01).eval(std::nan("")));
  CHECK(Check::info().eval(std::nan("")));
  CHECK(Check::range(0.98, 1.02).describe() == "[0.98;1.02]");
  CHECK(Check::lt(1e-8).describe() == "<1e-08");
}

TEST_CASE("shortest round-trip number formatting") {
  CHECK(fmt(0.1) == "0.1");
  CHECK(fmt(-0.0) == "0");
  CHECK(fmt(std::nan("")) == "nan");
  CHECK(std::stod(fmt(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("scenario list and defaults carry their default parameters") {
  const auto ids = scenario_ids();
  CHECK(ids.size() == 15);
  CHECK(ids.back() == "custom");
  const auto d = scenario_defaults("fig3b");
  CHECK(parse_number(d.at("alpha")) == 0.04);
  CHECK(parse_number(d.at("n_c")) == -300);
  CHECK(parse_number(d.at("k_c")) == -std::numbers::pi / 2);
  CHECK(parse_number(d.at("gamma")) == 0.5);
  CHECK(parse_number(d.at("delta")) == 0.5);
  CHECK(parse_number(scenario_defaults("fig3c").at("gamma")) == -0.5);
  CHECK(parse_number(scenario_defaults("fig4a").at("segment")) == 150);
  CHECK(parse_number(scenario_defaults("fig4b").at("n_c")) == 200);
  CHECK(parse_number(scenario_defaults("fig4c").at("segment")) == 50);
  CHECK(parse_number(scenario_defaults("fig4c").at("n_segments")) == 3);
  CHECK(parse_number(scenario_defaults("fig6a").at("segment")) == 400);
  CHECK(parse_number(scenario_defaults("fig6a").at("n_c")) == -400);
  CHECK(parse_number(scenario_defaults("fig6b").at("segment")) == 60);
  CHECK(parse_number(scenario_defaults("fig6c").at("segment")) == 30);
  CHECK_THROWS_AS(scenario_defaults("fig9"), Error);
}

TEST_CASE("config errors name the offending field") {
  try {
    run_scenario({"fig3a", {{"gamm", "0.5"}}, ""});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
    CHECK(std::string(e.what()).rfind("overrides.gamm: unknown parameter for fig3a", 0) == 0);
  }
  try {
    run_scenario({"fig3a", {{"alpha", "fast"}}, ""});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "overrides.alpha: not a number ('fast')");
  }
  CHECK(code_of({"fig9", {}, ""}) == ErrorCode::InvalidArgument);
  CHECK(code_of({"fig3a", {{"lead", "600.5"}}, ""}) == ErrorCode::InvalidArgument);
}

TEST_CASE("lead too short for t_max is a budget violation") {
  CHECK(code_of({"fig3a", {{"t_max", "400"}}, ""}) == ErrorCode::BudgetViolation);
  CHECK(code_of({"fig6a", {{"lead", "800"}}, ""}) == ErrorCode::BudgetViolation);
}

TEST_CASE("fig3a reproduces perfect reflection and writes its artifacts") {
  const auto dir = scratch("fig3a");
  const auto r = run_scenario({"fig3a", {}, dir.string()});
  CHECK(r.pass);
  CHECK(r.find("transmitted")->value <= 0.01);
  for (const char* f : {"density.csv", "norms.csv", "summary.csv", "meta.json"}) CHECK(fs::exists(dir / f));
  CHECK(slurp(dir / "summary.csv").rfind("metric,value,threshold,pass\n", 0) == 0);
  CHECK(slurp(dir / "density.csv").rfind("t,site,re,im,density\n", 0) == 0);
  CHECK(slurp(dir / "norms.csv").rfind("t,dirac_norm,region_", 0) == 0);
  const auto meta = nlohmann::json::parse(slurp(dir / "meta.json"));
  CHECK(meta["scenario"] == "fig3a");
  CHECK(meta["parameters"]["alpha"] == 0.04);
  CHECK(meta["lattice"]["segments"][0]["length"] == 600);
  fs::remove_all(dir);
}

TEST_CASE("re-running a scenario reproduces identical bytes") {
  const auto a = scratch("det_a"), b = scratch("det_b");
  run_scenario({"fig6c", {}, a.string()});
  run_scenario({"fig6c", {}, b.string()});
  for (const char* f : {"density.csv", "norms.csv", "summary.csv"}) CHECK(slurp(a / f) == slurp(b / f));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("a flipped gain orientation breaks fig3b with the reflected fraction reported") {
  const auto r = run_scenario({"fig3b", {{"gamma", "-0.5"}}, ""});
  CHECK_FALSE(r.pass);
  const Metric* refl = r.find("reflected");
  REQUIRE(refl);
  CHECK_FALSE(refl->pass());
  CHECK(refl->value > 0.01);
}

TEST_CASE("suite runs a filter and reports junit and metrics") {
  const auto dir = scratch("suite");
  const auto s = run_suite({"fig3a", "figA2"}, 2, dir.string());
  CHECK(s.pass);
  REQUIRE(s.results.size() == 2);
  CHECK(s.results[0].id == "fig3a");
  const std::string xml = slurp(dir / "report.xml");
  CHECK(xml.find("tests=\"2\" failures=\"0\"") != std::string::npos);
  CHECK(slurp(dir / "metrics.csv").rfind("run_id,metric,value\n", 0) == 0);
  CHECK(fs::exists(dir / "fig3a" / "summary.csv"));
  fs::remove_all(dir);
  CHECK_THROWS_AS(run_suite({"nope"}, 1, ""), Error);
}

TEST_CASE("junit report carries metric deltas of failures") {
  SuiteResult s;
  ScenarioResult r;
  r.id = "fig3b";
  r.metrics.push_back({"reflected", 0.4, Check::le(0.01)});
  s.results.push_back(r);
  const std::string xml = junit_report(s);
  CHECK(xml.find("failures=\"1\"") != std::string::npos);
  CHECK(xml.find("reflected=0.4 (needs &lt;=0.01)") != std::string::npos);
}

TEST_CASE("custom scenario runs a lattice document") {
  const auto dir = scratch("custom");
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "lat.json");
    f << R"({"params": {"J": 1, "delta": 0.5, "gamma": 0.5},
             "segments": [{"kind": "UniformLead", "length": 120}, {"kind": "NhSshSegment", "length": 40}],
             "origin_offset": 120})";
  }
  const auto r = run_scenario({"custom",
                               {{"spec", (dir / "lat.json").string()}, {"alpha", "0.2"}, {"n_c", "-60"},
                                {"t_max", "5"}, {"method", "spectral"}},
                               (dir / "out").string()});
  CHECK(r.error.empty());
  CHECK(fs::exists(dir / "out" / "density.csv"));
  CHECK(code_of({"custom", {{"spec", (dir / "missing.json").string()}}, ""}) == ErrorCode::IoError);
  fs::remove_all(dir);
}
