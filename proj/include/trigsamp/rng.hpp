#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace trigsamp {

// Derives an independent substream seed from a master seed and tags, so that
// trials can run in any order (or concurrently) with identical results.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag1,
                          std::uint64_t tag2);

// Deterministic random stream. mt19937_64 is fully specified by the standard
// and all mappings below are explicit, so identical seeds give identical
// sequences on every platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // [0,1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unbiased integer in [0,n), n >= 1.
  std::uint64_t below(std::uint64_t n);

  std::complex<double> unit_phase();

  // Standard normal via Box-Muller (explicit, unlike std::normal_distribution).
  double normal();

  std::complex<double> complex_normal() { return {normal(), normal()}; }

  // u distinct values from [0,n), ascending. Partial Fisher-Yates.
  std::vector<int> subset(int n, int u);

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace trigsamp
