#pragma once

#include <string>
#include <vector>

namespace trigsamp {

inline constexpr int kCsvSchemaVersion = 1;

// Deterministic float formatting ("%.12g"); identical values give identical
// bytes, which the repeat-run determinism check relies on.
std::string fmt_double(double x);

// Appends rows, writing the header first when the file is new or empty.
void append_csv(const std::string& path, const std::string& header,
                const std::vector<std::string>& rows);

}  // namespace trigsamp
