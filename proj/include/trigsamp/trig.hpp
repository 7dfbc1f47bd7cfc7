#pragma once

#include <complex>
#include <map>
#include <vector>

#include "trigsamp/multi_index.hpp"

namespace trigsamp {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Finitely supported coefficient function against the exponentials e^{i(k,x)}.
// The basis is unnormalized and orthonormal in L_2 of the normalized Lebesgue
// measure on [0,2pi)^d, so the l_2 coefficient norm equals the L_2 norm.
class SparseCoefFn {
 public:
  SparseCoefFn() = default;
  explicit SparseCoefFn(int dim);

  int dim() const { return dim_; }
  std::size_t support_size() const { return terms_.size(); }

  void set(const MultiIndex& k, Complex c);
  void add(const MultiIndex& k, Complex c);
  Complex coef(const MultiIndex& k) const;

  const std::map<MultiIndex, Complex>& terms() const { return terms_; }

  int max_abs_frequency() const;

  double l1() const;
  double l2() const;

  SparseCoefFn restricted(const IndexSet& s) const;
  IndexSet support() const;

  void scale(Complex z);

  friend SparseCoefFn operator+(const SparseCoefFn& a, const SparseCoefFn& b);
  friend SparseCoefFn operator-(const SparseCoefFn& a, const SparseCoefFn& b);

 private:
  int dim_ = 0;
  std::map<MultiIndex, Complex> terms_;
};

// m points in [0,2pi)^d, row-major.
struct PointSet {
  int dim = 0;
  std::vector<double> coords;

  std::size_t size() const {
    return dim > 0 ? coords.size() / static_cast<std::size_t>(dim) : 0;
  }
  const double* point(std::size_t j) const {
    return coords.data() + j * static_cast<std::size_t>(dim);
  }
};

// Equispaced product quadrature with nodes 2pi*g/G per axis and equal weights
// G^{-d}. Exact for L_2 of trig polynomials as soon as G >= 2*maxfreq+1.
struct QuadratureGrid {
  int dim = 1;
  int nodes_per_axis = 1;

  long long node_count() const;

  // G = oversample*max_freq + 1, the default headroom for p != 2 norms.
  static QuadratureGrid for_max_frequency(int dim, int max_freq,
                                          int oversample = 4);
};

Complex eval(const SparseCoefFn& f, const double* x);
std::vector<Complex> eval_at_points(const SparseCoefFn& f, const PointSet& xi);
// Row-major over the grid, last axis fastest.
std::vector<Complex> eval_on_grid(const SparseCoefFn& f,
                                  const QuadratureGrid& grid);

struct NormResult {
  double value = 0.0;
  // Set when the grid is too coarse for the exactness guarantee at this p
  // (p=2 needs G >= 2*maxfreq+1, otherwise G >= oversample*maxfreq+1).
  bool grid_warning = false;
};

inline bool is_inf(double p) { return p > 1e300; }

// L_p norm w.r.t. normalized Lebesgue measure, computed on the grid. p in
// [1, inf]; pass std::numeric_limits<double>::infinity() for the sup norm.
NormResult lp_norm_mu(const SparseCoefFn& f, double p, const QuadratureGrid& g,
                      int oversample_required = 4);

// L_p norm w.r.t. the empirical measure (1/m) sum of deltas at the points.
double lp_norm_discrete(const std::vector<Complex>& samples, double p);
double lp_norm_discrete(const SparseCoefFn& f, double p, const PointSet& xi);

// L_p norm w.r.t. the half-and-half mixture of the continuous and empirical
// measures: ((norm_mu^p + norm_discrete^p)/2)^{1/p}, max of the two at p=inf.
NormResult lp_norm_mixed(const SparseCoefFn& f, double p, const PointSet& xi,
                         const QuadratureGrid& g, int oversample_required = 4);

// (1/m) sum u_j * conj(v_j).
Complex inner_product_discrete(const std::vector<Complex>& u,
                               const std::vector<Complex>& v);

}  // namespace trigsamp
