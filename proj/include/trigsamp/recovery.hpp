#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "trigsamp/discretization.hpp"
#include "trigsamp/function_classes.hpp"
#include "trigsamp/greedy.hpp"

namespace trigsamp {

enum class Algorithm { womp, oracle_bv, layered };

Algorithm algorithm_from_string(const std::string& s);
std::string to_string(Algorithm a);

// How the sample budget m is chosen.
enum class MSpec { log4, log3, explicit_m };

MSpec m_spec_from_string(const std::string& s);
std::string to_string(MSpec m);

struct RecoveryConfig {
  int d = 1;
  double p = 2.0;              // error norm; inf allowed
  int v = 1;
  MSpec m_rule = MSpec::log3;
  long long m = 0;             // used when m_rule = explicit_m
  double c_user = 2.0;
  double t = 1.0;
  Algorithm algorithm = Algorithm::womp;
  std::string dictionary = "auto";  // auto | cross:<n> | cube:<M>
  std::uint64_t seed = 1;
  int iter_mult = 2;           // womp runs iter_mult*v iterations,
                               // ud checks sparsity (1+iter_mult)*v
  bool check_ud = true;
  int ud_trials = 200;
  int max_redraws = 10;
  int oversample = 4;

  // Class parameters, carried into reports by the experiment layer.
  double beta = 1.0;
  double a = 1.0;
  double b = 0.0;
  Profile profile = Profile::saturating_spread;
  int j_max = 0;               // 0 = default_j_max(d)

  long long resolve_m() const;
  IndexSet resolve_dictionary() const;
  int resolved_j_max() const;
  void validate() const;
};

struct RecoveryReport {
  Algorithm algorithm = Algorithm::womp;
  int d = 1;
  double p = 2.0;
  double beta = 1.0, a = 1.0, b = 0.0;
  int v = 1;
  long long m = 0;
  MSpec m_rule = MSpec::log3;
  double t = 1.0;
  std::uint64_t seed = 0;
  bool ud_pass = false;
  int redraws = 0;
  double err_lp = 0.0;        // ||f - approx||_{L_p(mu)} on the grid
  double err_l2_disc = 0.0;   // discrete residual on the sample points
  double sigma_v = std::numeric_limits<double>::quiet_NaN();  // oracle, if feasible
  int iters = 0;
  double ms = 0.0;            // wall time, excluded from determinism checks
  bool grid_warning = false;

  static std::string csv_header();
  std::string csv_row() const;
};

struct RecoveryResult {
  SparseCoefFn approx;
  RecoveryReport report;
};

// Samples f on drawn (or given) points and reconstructs with the configured
// algorithm. Self-drawn points are redrawn (up to max_redraws) while the
// sampled universal-discretization check fails; given points are used as-is
// with the check result recorded.
RecoveryResult recover(const SparseCoefFn& f, const RecoveryConfig& cfg,
                       const PointSet* fixed_points = nullptr);

// Constructive layered approximant: keeps the hyperbolic-cross head S_n with
// n the largest level whose cross fits v_total/2, then per layer j > n keeps
// the v_j largest coefficients and runs the relaxed greedy on the remainder
// with v_j further terms, v_j = floor(2^{n - alpha(j-n)} j^{d-1}) and alpha
// solving alpha*(1/beta - 1/p*) = a/2.
SparseCoefFn layered_approx(const SparseCoefFn& f, int v_total,
                            const ClassParamsW& cls, double p);

struct RhoTable {
  std::vector<RecoveryReport> rows;
  std::vector<std::pair<int, double>> sup_err_by_v;  // (v, max err_lp)
};

// Empirical recovery-error sweep over v for seeded class members. One point
// set per (v, trial) block, shared by the members inside the block; per-trial
// streams are derived from the master seed so trial order never matters.
RhoTable empirical_rho(const ClassParamsW& cls, const RecoveryConfig& base,
                       const std::vector<int>& v_grid, int trials, int members,
                       std::uint64_t seed);

}  // namespace trigsamp
