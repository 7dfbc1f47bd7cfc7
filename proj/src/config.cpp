#include "trigsamp/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace trigsamp {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

KeyValues KeyValues::parse_text(const std::string& text,
                                const std::string& origin) {
  KeyValues kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw UsageError(origin + ":" + std::to_string(line_no) +
                       ": expected key=value");
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (key.empty())
      throw UsageError(origin + ":" + std::to_string(line_no) + ": empty key");
    if (kv.values_.count(key))
      throw UsageError(origin + ":" + std::to_string(line_no) +
                       ": duplicate key '" + key + "'");
    kv.values_[key] = value;
  }
  return kv;
}

KeyValues KeyValues::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

bool KeyValues::has(const std::string& key) const {
  return values_.count(key) != 0;
}

void KeyValues::set(const std::string& key, const std::string& value) {
  values_[key] = value;
}

std::string KeyValues::take(const std::string& key) {
  auto it = values_.find(key);
  if (it == values_.end()) throw UsageError("missing config key '" + key + "'");
  std::string value = it->second;
  consumed_.insert(key);
  return value;
}

std::string KeyValues::get_string(const std::string& key) { return take(key); }

std::string KeyValues::get_string(const std::string& key,
                                  const std::string& fallback) {
  if (!has(key)) return fallback;
  return take(key);
}

long long KeyValues::get_int(const std::string& key) {
  std::string raw = take(key);
  try {
    std::size_t pos = 0;
    long long value = std::stoll(raw, &pos);
    if (pos != raw.size()) throw std::invalid_argument("trailing");
    return value;
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "': expected integer, got '" + raw +
                     "'");
  }
}

long long KeyValues::get_int(const std::string& key, long long fallback) {
  if (!has(key)) return fallback;
  return get_int(key);
}

std::uint64_t KeyValues::get_u64(const std::string& key,
                                 std::uint64_t fallback) {
  if (!has(key)) return fallback;
  std::string raw = take(key);
  try {
    std::size_t pos = 0;
    unsigned long long value = std::stoull(raw, &pos);
    if (pos != raw.size()) throw std::invalid_argument("trailing");
    return value;
  } catch (const std::exception&) {
    throw UsageError("config key '" + key +
                     "': expected unsigned integer, got '" + raw + "'");
  }
}

double KeyValues::parse_double(const std::string& key, const std::string& raw) {
  if (raw == "inf" || raw == "Inf" || raw == "INF")
    return std::numeric_limits<double>::infinity();
  try {
    std::size_t pos = 0;
    double value = std::stod(raw, &pos);
    if (pos != raw.size()) throw std::invalid_argument("trailing");
    return value;
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "': expected number, got '" + raw +
                     "'");
  }
}

double KeyValues::get_double(const std::string& key) {
  return parse_double(key, take(key));
}

double KeyValues::get_double(const std::string& key, double fallback) {
  if (!has(key)) return fallback;
  return get_double(key);
}

bool KeyValues::get_bool(const std::string& key, bool fallback) {
  if (!has(key)) return fallback;
  std::string raw = take(key);
  if (raw == "true" || raw == "1") return true;
  if (raw == "false" || raw == "0") return false;
  throw UsageError("config key '" + key + "': expected true/false, got '" +
                   raw + "'");
}

std::vector<long long> KeyValues::get_int_list(const std::string& key) {
  std::string raw = take(key);
  std::vector<long long> out;
  std::istringstream in(raw);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw UsageError("config key '" + key + "': empty list element");
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("config key '" + key + "': expected integer list, got '" +
                       raw + "'");
    }
  }
  if (out.empty()) throw UsageError("config key '" + key + "': empty list");
  return out;
}

std::vector<double> KeyValues::get_double_list(const std::string& key) {
  std::string raw = take(key);
  std::vector<double> out;
  std::istringstream in(raw);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw UsageError("config key '" + key + "': empty list element");
    out.push_back(parse_double(key, item));
  }
  if (out.empty()) throw UsageError("config key '" + key + "': empty list");
  return out;
}

void KeyValues::reject_unconsumed() const {
  for (const auto& [key, value] : values_) {
    if (!consumed_.count(key))
      throw UsageError("unknown config key '" + key + "'");
  }
}

}  // namespace trigsamp
