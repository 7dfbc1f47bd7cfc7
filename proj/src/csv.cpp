#include "trigsamp/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace trigsamp {

std::string fmt_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void append_csv(const std::string& path, const std::string& header,
                const std::vector<std::string>& rows) {
  namespace fs = std::filesystem;
  bool need_header = true;
  std::error_code ec;
  if (fs::exists(path, ec) && fs::file_size(path, ec) > 0) need_header = false;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  if (need_header) out << header << "\n";
  for (const std::string& row : rows) out << row << "\n";
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace trigsamp
