#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigsamp {

// Malformed configs, bad values, and unknown keys; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key=value text. '#' starts a comment, blank lines are skipped,
// whitespace around keys and values is trimmed. Duplicate keys are errors.
class KeyValues {
 public:
  static KeyValues parse_file(const std::string& path);
  static KeyValues parse_text(const std::string& text,
                              const std::string& origin = "<config>");

  bool has(const std::string& key) const;
  void set(const std::string& key, const std::string& value);

  // Typed getters consume the key. The overloads without a fallback treat a
  // missing key as a usage error; the ones with a fallback never fail on a
  // missing key but still validate present values. "inf" parses as infinity.
  std::string get_string(const std::string& key);
  std::string get_string(const std::string& key, const std::string& fallback);
  long long get_int(const std::string& key);
  long long get_int(const std::string& key, long long fallback);
  double get_double(const std::string& key);
  double get_double(const std::string& key, double fallback);
  bool get_bool(const std::string& key, bool fallback);
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback);
  std::vector<long long> get_int_list(const std::string& key);
  std::vector<double> get_double_list(const std::string& key);

  // After a command has consumed its keys, anything left is a typo.
  void reject_unconsumed() const;

 private:
  std::string take(const std::string& key);
  static double parse_double(const std::string& key, const std::string& raw);

  std::map<std::string, std::string> values_;
  std::set<std::string> consumed_;
};

}  // namespace trigsamp
