#include "trigsamp/discretization.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "trigsamp/csv.hpp"
#include "trigsamp/rng.hpp"

namespace trigsamp {

namespace {

// Full dictionary Gram (1/m) A^H A; subset spectra are then principal
// submatrix eigenproblems, so the m-point sums happen once.
Eigen::MatrixXcd full_gram(const PointSet& xi, const IndexSet& indices) {
  const std::size_t m = xi.size();
  const std::size_t n = indices.size();
  Eigen::MatrixXcd a(m, n);
  for (std::size_t col = 0; col < n; ++col) {
    const MultiIndex& k = indices[col];
    for (std::size_t j = 0; j < m; ++j) {
      const double* x = xi.point(j);
      double angle = 0.0;
      for (int t = 0; t < xi.dim; ++t) angle += k[t] * x[t];
      a(j, col) = std::polar(1.0, angle);
    }
  }
  return (a.adjoint() * a) / static_cast<double>(m);
}

GramSpectrum spectrum_of(const Eigen::MatrixXcd& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g,
                                                     Eigen::EigenvaluesOnly);
  GramSpectrum s;
  s.lambda_min = es.eigenvalues().minCoeff();
  s.lambda_max = es.eigenvalues().maxCoeff();
  return s;
}

// Lexicographically next k-combination of [0,n); false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

UdReport run_ud(const PointSet& xi, const IndexSet& dictionary, int u,
                double lower, double upper, const UdOptions& opts) {
  if (xi.size() == 0) throw std::invalid_argument("empty point set");
  if (dictionary.empty()) throw std::invalid_argument("empty dictionary");
  if (xi.dim != dictionary.dim())
    throw std::invalid_argument("dimension mismatch");
  const int n = static_cast<int>(dictionary.size());
  if (u < 1 || u > n)
    throw std::invalid_argument("sparsity u out of range");

  UdReport rep;
  rep.m = static_cast<long long>(xi.size());
  rep.u = u;
  rep.lower_bound = lower;
  rep.upper_bound = upper;
  rep.seed = opts.seed;
  rep.worst_lower = std::numeric_limits<double>::infinity();
  rep.worst_upper = 0.0;

  Eigen::MatrixXcd gram = full_gram(xi, dictionary);

  long long combos = binomial_capped(n, u, opts.exhaustive_cap);
  bool exhaustive;
  switch (opts.mode) {
    case UdMode::exhaustive:
      if (combos > opts.exhaustive_cap)
        throw std::invalid_argument(
            "subset count exceeds exhaustive cap; use sampled mode");
      exhaustive = true;
      break;
    case UdMode::sampled:
      exhaustive = false;
      break;
    case UdMode::automatic:
    default:
      exhaustive = combos <= opts.exhaustive_cap;
      break;
  }

  auto account = [&](const std::vector<int>& ids) {
    Eigen::MatrixXcd sub(u, u);
    for (int r = 0; r < u; ++r)
      for (int c = 0; c < u; ++c) sub(r, c) = gram(ids[r], ids[c]);
    GramSpectrum s = spectrum_of(sub);
    rep.worst_lower = std::min(rep.worst_lower, s.lambda_min);
    rep.worst_upper = std::max(rep.worst_upper, s.lambda_max);
    ++rep.subspaces_checked;
  };

  if (exhaustive) {
    rep.mode = UdMode::exhaustive;
    std::vector<int> ids(u);
    for (int i = 0; i < u; ++i) ids[i] = i;
    account(ids);
    while (next_combination(ids, n)) account(ids);
  } else {
    rep.mode = UdMode::sampled;
    if (opts.trials < 1) throw std::invalid_argument("trials must be positive");
    for (long long t = 0; t < opts.trials; ++t) {
      RngStream rng(derive_seed(opts.seed, 0x5D5E7000ULL + t));
      account(rng.subset(n, u));
    }
  }

  // Relative slack so exact-arithmetic boundaries (equispaced grids checked
  // against their theoretical eigenvalue) do not fail to rounding.
  rep.pass = rep.worst_lower >= lower * (1.0 - 1e-9) &&
             rep.worst_upper <= upper * (1.0 + 1e-9);
  return rep;
}

}  // namespace

PointSet draw_points(std::size_t m, int d, std::uint64_t seed) {
  if (m == 0) throw std::invalid_argument("point count must be positive");
  if (d <= 0) throw std::invalid_argument("dimension must be positive");
  RngStream rng(seed);
  PointSet xi;
  xi.dim = d;
  xi.coords.resize(m * static_cast<std::size_t>(d));
  for (double& c : xi.coords) c = rng.uniform01() * kTwoPi;
  return xi;
}

GramSpectrum gram_spectrum(const PointSet& xi, const IndexSet& indices) {
  if (xi.size() == 0) throw std::invalid_argument("empty point set");
  if (indices.empty()) throw std::invalid_argument("empty index set");
  if (xi.dim != indices.dim())
    throw std::invalid_argument("dimension mismatch");
  return spectrum_of(full_gram(xi, indices));
}

UdMode ud_mode_from_string(const std::string& s) {
  if (s == "auto" || s == "automatic") return UdMode::automatic;
  if (s == "exhaustive") return UdMode::exhaustive;
  if (s == "sampled") return UdMode::sampled;
  throw std::invalid_argument("unknown ud mode: " + s);
}

std::string UdReport::csv_header() {
  return "schema_version,m,u,mode,trials,worst_lower,worst_upper,pass,seed";
}

std::string UdReport::csv_row() const {
  std::ostringstream out;
  out << kCsvSchemaVersion << "," << m << "," << u << ","
      << (mode == UdMode::exhaustive ? "exhaustive" : "sampled") << ","
      << subspaces_checked << "," << fmt_double(worst_lower) << ","
      << fmt_double(worst_upper) << "," << (pass ? 1 : 0) << "," << seed;
  return out.str();
}

UdReport verify_ud(const PointSet& xi, const IndexSet& dictionary, int u,
                   const UdOptions& opts) {
  return run_ud(xi, dictionary, u, 0.5, 1.5, opts);
}

UdReport verify_one_sided(const PointSet& xi, const IndexSet& dictionary,
                          int u, double d_target, const UdOptions& opts) {
  if (!(d_target > 0.0)) throw std::invalid_argument("D target must be positive");
  return run_ud(xi, dictionary, u, 1.0 / (d_target * d_target),
                std::numeric_limits<double>::infinity(), opts);
}

MRule m_rule_from_string(const std::string& s) {
  if (s == "log4") return MRule::log4;
  if (s == "log3") return MRule::log3;
  throw std::invalid_argument("unknown m rule: " + s);
}

std::string to_string(MRule r) {
  return r == MRule::log4 ? "log4" : "log3";
}

long long m_budget(long long v, MRule rule, double c_user) {
  if (v < 1) throw std::invalid_argument("v must be positive");
  if (!(c_user > 0.0)) throw std::invalid_argument("c_user must be positive");
  int e = rule == MRule::log4 ? 4 : 3;
  double logs = std::pow(std::log(2.0 * static_cast<double>(v)), e);
  double raw = c_user * static_cast<double>(v) * logs;
  return static_cast<long long>(std::ceil(raw));
}

long long binomial_capped(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (int i = 1; i <= k; ++i) {
    long long mult = n - k + i;
    if (result > std::numeric_limits<long long>::max() / mult) return cap + 1;
    // result * mult is C(n-k+i-1, i-1) * (n-k+i), divisible by i.
    result = result * mult / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

}  // namespace trigsamp
