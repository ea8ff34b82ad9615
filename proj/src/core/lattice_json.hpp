#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lattice.hpp"

namespace nhls {

struct LatticeDocument {
  ModelParams params;
  LatticeSpec spec;
};

nlohmann::json to_json(const ModelParams& p);
nlohmann::json to_json(const LatticeSpec& s);
nlohmann::json to_json(const LatticeDocument& d);

const char* segment_kind_name(SegmentKind k);

// Field diagnostics like "segments[1].length: ...". Empty means valid.
std::vector<std::string> validate_lattice_document(const nlohmann::json& j);
// Throws ParseError with all diagnostics joined.
LatticeDocument parse_lattice_document(const nlohmann::json& j);
LatticeDocument parse_lattice_document(const std::string& text);

}  // namespace nhls
