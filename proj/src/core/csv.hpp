#pragma once

#include <ostream>
#include <string>

namespace nhls {

// Shortest round-trip decimal form; identical bytes for identical doubles.
std::string fmt(double v);
std::string fmt(long v);
std::string fmt(std::size_t v);

void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace nhls
