#include "lattice_json.hpp"

#include <cmath>

#include "error.hpp"

namespace nhls {

using nlohmann::json;

const char* segment_kind_name(SegmentKind k) {
  return k == SegmentKind::UniformLead ? "UniformLead" : "NhSshSegment";
}

json to_json(const ModelParams& p) { return json{{"J", p.J}, {"delta", p.delta}, {"gamma", p.gamma}}; }

json to_json(const LatticeSpec& s) {
  json segs = json::array();
  for (const auto& d : s.segments) {
    json e{{"kind", segment_kind_name(d.kind)}, {"length", d.length}};
    if (d.kind == SegmentKind::NhSshSegment) {
      e["gain_first"] = d.gain_first;
      e["gamma_sign"] = d.gamma_sign;
    }
    segs.push_back(e);
  }
  return json{{"segments", segs},
              {"boundary", s.boundary == Boundary::Ring ? "ring" : "open"},
              {"origin_offset", s.origin_offset}};
}

json to_json(const LatticeDocument& d) {
  json j = to_json(d.spec);
  j["params"] = to_json(d.params);
  return j;
}

namespace {

bool parse_kind(const std::string& s, SegmentKind& out) {
  if (s == "UniformLead" || s == "uniform_lead" || s == "lead") {
    out = SegmentKind::UniformLead;
    return true;
  }
  if (s == "NhSshSegment" || s == "nh_ssh" || s == "ssh") {
    out = SegmentKind::NhSshSegment;
    return true;
  }
  return false;
}

void read_number(const json& obj, const char* key, const std::string& where, double& out,
                 std::vector<std::string>& diag, bool required) {
  if (!obj.contains(key)) {
    if (required) diag.push_back(where + "." + key + ": missing");
    return;
  }
  const auto& v = obj.at(key);
  if (!v.is_number()) {
    diag.push_back(where + "." + key + ": expected a number");
    return;
  }
  out = v.get<double>();
  if (!std::isfinite(out)) diag.push_back(where + "." + key + ": must be finite");
}

LatticeDocument read(const json& j, std::vector<std::string>& diag) {
  LatticeDocument doc;
  if (!j.is_object()) {
    diag.push_back("document: expected a JSON object");
    return doc;
  }
  for (const auto& [key, _] : j.items())
    if (key != "params" && key != "segments" && key != "boundary" && key != "origin_offset")
      diag.push_back(key + ": unknown field");

  if (!j.contains("params") || !j["params"].is_object()) {
    diag.push_back("params: missing or not an object");
  } else {
    const auto& p = j["params"];
    for (const auto& [key, _] : p.items())
      if (key != "J" && key != "delta" && key != "gamma") diag.push_back("params." + key + ": unknown field");
    read_number(p, "J", "params", doc.params.J, diag, true);
    read_number(p, "delta", "params", doc.params.delta, diag, true);
    read_number(p, "gamma", "params", doc.params.gamma, diag, true);
    if (std::isfinite(doc.params.J) && !(doc.params.J > 0)) diag.push_back("params.J: must be > 0");
    if (std::isfinite(doc.params.delta) && !(1.0 + doc.params.delta > 0)) diag.push_back("params.delta: 1+delta must be > 0");
  }

  if (j.contains("boundary")) {
    const auto& b = j["boundary"];
    if (b == "open") doc.spec.boundary = Boundary::Open;
    else if (b == "ring") doc.spec.boundary = Boundary::Ring;
    else diag.push_back("boundary: expected \"open\" or \"ring\"");
  }

  if (!j.contains("segments") || !j["segments"].is_array()) {
    diag.push_back("segments: missing or not an array");
    return doc;
  }
  const auto& segs = j["segments"];
  if (segs.empty()) diag.push_back("segments: must not be empty");
  for (std::size_t s = 0; s < segs.size(); ++s) {
    const std::string where = "segments[" + std::to_string(s) + "]";
    const auto& e = segs[s];
    if (!e.is_object()) {
      diag.push_back(where + ": expected an object");
      continue;
    }
    SegmentDescriptor d;
    if (!e.contains("kind") || !e["kind"].is_string() || !parse_kind(e["kind"].get<std::string>(), d.kind))
      diag.push_back(where + ".kind: expected \"UniformLead\" or \"NhSshSegment\"");
    if (!e.contains("length") || !e["length"].is_number_integer() || e["length"].get<long long>() <= 0) {
      diag.push_back(where + ".length: expected a positive integer");
    } else {
      d.length = e["length"].get<std::size_t>();
      if (d.kind == SegmentKind::NhSshSegment && d.length % 2 != 0)
        diag.push_back(where + ".length: NhSshSegment length must be even (got " + std::to_string(d.length) + ")");
    }
    if (e.contains("gain_first")) {
      if (!e["gain_first"].is_boolean()) diag.push_back(where + ".gain_first: expected a boolean");
      else d.gain_first = e["gain_first"].get<bool>();
    }
    if (e.contains("gamma_sign")) {
      if (!e["gamma_sign"].is_number_integer() || (e["gamma_sign"] != 1 && e["gamma_sign"] != -1))
        diag.push_back(where + ".gamma_sign: expected +1 or -1");
      else d.gamma_sign = e["gamma_sign"].get<int>();
    }
    for (const auto& [key, _] : e.items())
      if (key != "kind" && key != "length" && key != "gain_first" && key != "gamma_sign")
        diag.push_back(where + "." + key + ": unknown field");
    doc.spec.segments.push_back(d);
  }

  if (j.contains("origin_offset")) {
    if (!j["origin_offset"].is_number_integer()) diag.push_back("origin_offset: expected an integer");
    else doc.spec.origin_offset = j["origin_offset"].get<long>();
  }

  if (diag.empty()) {
    try {
      doc.spec.validate();
    } catch (const Error& e) {
      diag.push_back(e.what());
    }
  }
  return doc;
}

}  // namespace

std::vector<std::string> validate_lattice_document(const json& j) {
  std::vector<std::string> diag;
  read(j, diag);
  return diag;
}

LatticeDocument parse_lattice_document(const json& j) {
  std::vector<std::string> diag;
  LatticeDocument doc = read(j, diag);
  if (!diag.empty()) {
    std::string msg;
    for (const auto& d : diag) msg += (msg.empty() ? "" : "; ") + d;
    fail(ErrorCode::ParseError, msg);
  }
  return doc;
}

LatticeDocument parse_lattice_document(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::ParseError, "document: not valid JSON");
  return parse_lattice_document(j);
}

}  // namespace nhls
