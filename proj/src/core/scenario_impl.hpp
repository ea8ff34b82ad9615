#pragma once

#include <map>
#include <string>
#include <vector>

#include "experiment.hpp"

namespace nhls::detail {

class Ctx {
 public:
  Ctx(std::string id, std::map<std::string, double> num, std::map<std::string, std::string> str, std::string out,
      ScenarioResult& res)
      : id_(std::move(id)), num_(std::move(num)), str_(std::move(str)), out_(std::move(out)), res_(res) {}

  const std::string& id() const { return id_; }
  double num(const std::string& key) const;
  std::size_t count(const std::string& key) const;  // non-negative integer parameter
  const std::string& str(const std::string& key) const;
  bool writes() const { return !out_.empty(); }

  void metric(const std::string& name, double value, Check check);
  void write(const std::string& file, const std::string& contents);
  nlohmann::json& meta() { return res_.meta; }

 private:
  std::string id_;
  std::map<std::string, double> num_;
  std::map<std::string, std::string> str_;
  std::string out_;
  ScenarioResult& res_;
};

struct ScenarioDef {
  std::string id;
  std::string description;
  std::vector<std::pair<std::string, std::string>> defaults;
  std::vector<std::string> string_keys;
  void (*run)(Ctx&);
};

const std::vector<ScenarioDef>& scenario_table();

}  // namespace nhls::detail
