#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "trigsamp/discretization.hpp"
#include "trigsamp/trig.hpp"

namespace trigsamp {

// A dictionary restricted to a point set: raw column samples plus cached
// discrete L_2 norms. Zero-norm columns are flagged and never selected.
struct DictionaryOnPoints {
  IndexSet indices;
  PointSet xi;
  Eigen::MatrixXcd values;        // m x N
  Eigen::VectorXd norms;          // discrete L_2(mu_m) column norms
  std::vector<std::uint8_t> degenerate;

  long long m() const { return values.rows(); }
  int n_cols() const { return static_cast<int>(values.cols()); }

  static DictionaryOnPoints trig(const IndexSet& indices, const PointSet& xi);
  static DictionaryOnPoints from_values(Eigen::MatrixXcd values,
                                        IndexSet labels, PointSet xi = {});
};

struct WompTrace {
  std::vector<int> picks;               // column ids in pick order
  std::vector<double> residual_norms;   // length iterations_done + 1
  SparseCoefFn coefficients;            // against the unnormalized columns
  double t = 1.0;
  int iterations_done = 0;
  bool singular_projection = false;     // resolved via minimum-norm solve
};

// Weak orthogonal matching pursuit in L_2(mu_m). Selection scans normalized
// columns and takes the largest |<residual, column>| (lexicographic on ties),
// which meets the weakness threshold for every t in (0,1]; t=1 is plain OMP.
// The projection is recomputed from scratch each iteration by least squares,
// minimum-norm when numerically singular. Stops early once the residual is
// at rounding level.
WompTrace womp(const Eigen::VectorXcd& f0, const DictionaryOnPoints& dict,
               double t, int iterations);

struct BestTermResult {
  SparseCoefFn approx;
  std::vector<int> subset;   // chosen column ids
  double error = 0.0;        // discrete L_2 residual norm
};

// Exhaustive best v-term approximation in L_2(mu_m): least squares over every
// v-element column subset. Refuses when C(N,v) exceeds the cap; first subset
// in lexicographic order wins ties.
BestTermResult best_v_term_discrete(const Eigen::VectorXcd& f0,
                                    const DictionaryOnPoints& dict, int v,
                                    double p = 2.0,
                                    long long subset_cap = 200000);

struct ThresholdResult {
  SparseCoefFn kept;
  double tail_l1 = 0.0;
};

// Keeps the v largest coefficients by modulus, lexicographic on ties.
ThresholdResult threshold_v(const SparseCoefFn& f, int v);

// Relaxed incremental greedy for targets with known coefficients, measured in
// L_p on the grid, 1 < p < inf. Atom selection maximizes the norming-functional
// linearization over the unimodular multiples {+1,-1,+i,-i} of candidate
// frequencies; the update g <- (1-lambda)g + z*psi_k optimizes both the shrink
// lambda in [0,1] and the complex atom coefficient z (closed form at p=2,
// convex coordinate search otherwise). The output uses at most v distinct
// frequencies.
SparseCoefFn greedy_a1_lp(const SparseCoefFn& target, const IndexSet& dict,
                          int v, double p, const QuadratureGrid& grid);

struct UpEstimate {
  double u_value = 0.0;
  bool unbounded = false;
  UdMode mode = UdMode::exhaustive;
  long long pairs_checked = 0;
};

// Empirical unconditionality-type constant: over pairs (A, J) of disjoint
// column sets with |A| = u and |A|+|J| <= d_cap, the sup over f in span(A) of
// ||f|| / dist(f, span(J)), all in the discrete L_2. Each pair is evaluated
// exactly through principal angles; +inf (unbounded) when the spans touch.
UpEstimate up_constant(const DictionaryOnPoints& dict, int u, int d_cap,
                       long long pair_cap = 200000, std::uint64_t seed = 0);

// Worst ||f||_p / ||f||_2 over seeded random u-sparse trig polynomials with
// frequencies from the pool, both norms on the grid.
double nikolskii_worst_ratio(const IndexSet& pool, int u, double p, int trials,
                             std::uint64_t seed, const QuadratureGrid& grid);

struct RieszBessel {
  double r1 = 0.0;   // min ||f|| / ||coef||_2 over draws
  double r2 = 0.0;   // max ||f|| / ||coef||_2 over draws
  double k = 0.0;    // max ||coef||_2^2 / ||f||^2 (Bessel-type)
};

// Ratios for the exact system on a grid (expected (1,1,1)).
RieszBessel riesz_bessel_exact(const IndexSet& pool, int trials,
                               std::uint64_t seed, const QuadratureGrid& grid);

// Ratios for raw columns in the discrete L_2.
RieszBessel riesz_bessel_discrete(const DictionaryOnPoints& dict, int trials,
                                  std::uint64_t seed);

}  // namespace trigsamp
