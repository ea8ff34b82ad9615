#include "csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace nhls {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt(long v) { return std::to_string(v); }
std::string fmt(std::size_t v) { return std::to_string(v); }

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::IoError, "cannot open " + path + " for writing");
  f << contents;
  if (!f) fail(ErrorCode::IoError, "write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace nhls
