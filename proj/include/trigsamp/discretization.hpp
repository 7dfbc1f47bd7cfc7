#pragma once

#include <cstdint>
#include <string>

#include "trigsamp/trig.hpp"

namespace trigsamp {

// m i.i.d. uniform points on [0,2pi)^d.
PointSet draw_points(std::size_t m, int d, std::uint64_t seed);

struct GramSpectrum {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

// Spectrum of G_{k,l} = (1/m) sum_j psi_k(xi^j) conj(psi_l(xi^j)) over the
// given frequencies. Hermitian positive semidefinite by construction.
GramSpectrum gram_spectrum(const PointSet& xi, const IndexSet& indices);

enum class UdMode { automatic, exhaustive, sampled };

UdMode ud_mode_from_string(const std::string& s);

struct UdOptions {
  UdMode mode = UdMode::automatic;
  long long trials = 500;              // sampled mode subset count
  long long exhaustive_cap = 1000000;  // automatic switches to sampled above
  std::uint64_t seed = 0;              // sampled mode subset stream
};

struct UdReport {
  long long m = 0;
  int u = 0;
  UdMode mode = UdMode::exhaustive;
  long long subspaces_checked = 0;
  double worst_lower = 0.0;
  double worst_upper = 0.0;
  bool pass = false;
  double lower_bound = 0.5;   // required lambda_min
  double upper_bound = 1.5;   // required lambda_max (inf for one-sided)
  std::uint64_t seed = 0;

  static std::string csv_header();
  std::string csv_row() const;
};

// Two-sided universal discretization check over u-element subsets of the
// dictionary: every subset Gram spectrum must lie in [1/2, 3/2].
UdReport verify_ud(const PointSet& xi, const IndexSet& dictionary, int u,
                   const UdOptions& opts = {});

// One-sided variant: only lambda_min >= 1/D_target^2 is required.
UdReport verify_one_sided(const PointSet& xi, const IndexSet& dictionary,
                          int u, double d_target, const UdOptions& opts = {});

enum class MRule { log4, log3 };

MRule m_rule_from_string(const std::string& s);
std::string to_string(MRule r);

// ceil(c_user * v * (ln 2v)^e), e = 4 for log4 and 3 for log3. Natural log.
long long m_budget(long long v, MRule rule, double c_user);

// C(n,k) clipped at cap+1 to avoid overflow in feasibility checks.
long long binomial_capped(int n, int k, long long cap);

}  // namespace trigsamp
