#include "trigsamp/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "trigsamp/rng.hpp"

namespace trigsamp {

namespace {

double discrete_norm(const Eigen::VectorXcd& x) {
  return x.norm() / std::sqrt(static_cast<double>(x.size()));
}

// Visits grid nodes in row-major order with the phase e^{i(k,x)} of each node.
// Per-axis phase tables plus an odometer keep it at about one complex multiply
// per node.
template <typename Fn>
void for_each_node_phase(const MultiIndex& k, const QuadratureGrid& grid,
                         Fn&& fn) {
  const int d = grid.dim;
  const int g = grid.nodes_per_axis;
  const double step = kTwoPi / g;
  std::vector<std::vector<Complex>> tab(d);
  for (int t = 0; t < d; ++t) {
    tab[t].resize(g);
    Complex w{1.0, 0.0};
    const Complex adv = std::polar(1.0, step * k[t]);
    for (int i = 0; i < g; ++i) {
      tab[t][i] = w;
      w *= adv;
    }
  }
  std::vector<int> digit(d, 0);
  std::vector<Complex> prefix(d + 1);
  prefix[0] = Complex{1.0, 0.0};
  for (int t = 0; t < d; ++t) prefix[t + 1] = prefix[t] * tab[t][0];
  long long total = grid.node_count();
  for (long long node = 0;;) {
    fn(node, prefix[d]);
    if (++node == total) break;
    int t = d - 1;
    while (digit[t] + 1 == g) {
      digit[t] = 0;
      --t;
    }
    ++digit[t];
    for (; t < d; ++t) prefix[t + 1] = prefix[t] * tab[t][digit[t]];
  }
}

std::vector<Complex> column_on_grid(const MultiIndex& k,
                                    const QuadratureGrid& grid) {
  std::vector<Complex> out(static_cast<std::size_t>(grid.node_count()));
  for_each_node_phase(k, grid,
                      [&](long long node, Complex w) { out[node] = w; });
  return out;
}

double grid_lp(const std::vector<Complex>& values, double p, double weight) {
  if (is_inf(p)) {
    double m = 0.0;
    for (const Complex& z : values) m = std::max(m, std::abs(z));
    return m;
  }
  long double acc = 0.0L;
  if (p == 2.0) {
    for (const Complex& z : values) acc += (long double)std::norm(z);
  } else {
    for (const Complex& z : values) acc += (long double)std::pow(std::abs(z), p);
  }
  return std::pow(static_cast<double>(acc) * weight, 1.0 / p);
}

}  // namespace

DictionaryOnPoints DictionaryOnPoints::trig(const IndexSet& indices,
                                            const PointSet& xi) {
  if (indices.empty()) throw std::invalid_argument("empty dictionary");
  if (xi.size() == 0) throw std::invalid_argument("empty point set");
  if (indices.dim() != xi.dim)
    throw std::invalid_argument("dimension mismatch");
  DictionaryOnPoints dict;
  dict.indices = indices;
  dict.xi = xi;
  const std::size_t m = xi.size();
  const std::size_t n = indices.size();
  dict.values.resize(m, n);
  for (std::size_t col = 0; col < n; ++col) {
    const MultiIndex& k = indices[col];
    for (std::size_t j = 0; j < m; ++j) {
      const double* x = xi.point(j);
      double angle = 0.0;
      for (int t = 0; t < xi.dim; ++t) angle += k[t] * x[t];
      dict.values(j, col) = std::polar(1.0, angle);
    }
  }
  dict.norms.resize(n);
  dict.degenerate.assign(n, 0);
  for (std::size_t col = 0; col < n; ++col) {
    dict.norms(col) = discrete_norm(dict.values.col(col));
    if (dict.norms(col) < 1e-14) dict.degenerate[col] = 1;
  }
  return dict;
}

DictionaryOnPoints DictionaryOnPoints::from_values(Eigen::MatrixXcd values,
                                                   IndexSet labels,
                                                   PointSet xi) {
  if (values.cols() == 0 || values.rows() == 0)
    throw std::invalid_argument("empty dictionary values");
  if (static_cast<long long>(labels.size()) != values.cols())
    throw std::invalid_argument("label count mismatch");
  DictionaryOnPoints dict;
  dict.indices = std::move(labels);
  dict.xi = std::move(xi);
  dict.values = std::move(values);
  const int n = dict.n_cols();
  dict.norms.resize(n);
  dict.degenerate.assign(n, 0);
  for (int col = 0; col < n; ++col) {
    dict.norms(col) = discrete_norm(dict.values.col(col));
    if (dict.norms(col) < 1e-14) dict.degenerate[col] = 1;
  }
  return dict;
}

WompTrace womp(const Eigen::VectorXcd& f0, const DictionaryOnPoints& dict,
               double t, int iterations) {
  const long long m = dict.m();
  const int n = dict.n_cols();
  if (f0.size() != m) throw std::invalid_argument("sample length mismatch");
  if (!(t > 0.0 && t <= 1.0))
    throw std::invalid_argument("weakness parameter must lie in (0,1]");
  if (iterations < 1) throw std::invalid_argument("iterations must be positive");
  if (iterations > m || iterations > n)
    throw std::invalid_argument("iterations exceed sample count or dictionary");

  WompTrace trace;
  trace.t = t;
  trace.coefficients = SparseCoefFn(dict.indices.dim());

  Eigen::VectorXcd residual = f0;
  const double f0_norm = discrete_norm(f0);
  trace.residual_norms.push_back(f0_norm);

  std::vector<char> picked(n, 0);
  Eigen::MatrixXcd sub(m, 0);
  Eigen::VectorXcd coef;

  for (int it = 0; it < iterations; ++it) {
    if (trace.residual_norms.back() <= 1e-13 * std::max(f0_norm, 1.0)) break;

    // Largest normalized correlation wins; earlier (lexicographic) column on
    // ties. The argmax meets the weakness threshold t * sup for every t.
    Eigen::VectorXcd corr =
        dict.values.adjoint() * residual / static_cast<double>(m);
    int best = -1;
    double best_val = 0.0;
    for (int c = 0; c < n; ++c) {
      if (picked[c] || dict.degenerate[c]) continue;
      double val = std::abs(corr(c)) / dict.norms(c);
      if (val > best_val) {
        best_val = val;
        best = c;
      }
    }
    if (best < 0) break;
    picked[best] = 1;
    trace.picks.push_back(best);

    sub.conservativeResize(Eigen::NoChange, trace.picks.size());
    sub.col(trace.picks.size() - 1) = dict.values.col(best);

    // Fresh least squares per iteration; rank-revealing so a numerically
    // singular span falls back to the minimum-norm solution.
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(sub);
    if (cod.rank() < static_cast<long long>(trace.picks.size()))
      trace.singular_projection = true;
    coef = cod.solve(f0);
    residual = f0 - sub * coef;
    trace.residual_norms.push_back(discrete_norm(residual));
  }

  trace.iterations_done = static_cast<int>(trace.picks.size());
  for (std::size_t i = 0; i < trace.picks.size(); ++i)
    trace.coefficients.add(dict.indices[trace.picks[i]], coef(i));
  return trace;
}

BestTermResult best_v_term_discrete(const Eigen::VectorXcd& f0,
                                    const DictionaryOnPoints& dict, int v,
                                    double p, long long subset_cap) {
  if (p != 2.0)
    throw std::invalid_argument("only p=2 is supported by the oracle");
  const long long m = dict.m();
  const int n = dict.n_cols();
  if (f0.size() != m) throw std::invalid_argument("sample length mismatch");
  if (v < 1 || v > n) throw std::invalid_argument("v out of range");
  if (binomial_capped(n, v, subset_cap) > subset_cap)
    throw std::invalid_argument("subset count exceeds cap");

  std::vector<int> ids(v);
  for (int i = 0; i < v; ++i) ids[i] = i;

  BestTermResult best;
  best.error = std::numeric_limits<double>::infinity();
  Eigen::MatrixXcd sub(m, v);
  Eigen::VectorXcd coef;

  auto consider = [&](const std::vector<int>& subset) {
    for (int i = 0; i < v; ++i) sub.col(i) = dict.values.col(subset[i]);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(sub);
    coef = cod.solve(f0);
    double err = discrete_norm(Eigen::VectorXcd(f0 - sub * coef));
    if (err < best.error) {
      best.error = err;
      best.subset = subset;
      best.approx = SparseCoefFn(dict.indices.dim());
      for (int i = 0; i < v; ++i)
        best.approx.add(dict.indices[subset[i]], coef(i));
    }
  };

  consider(ids);
  while (true) {
    int k = v;
    bool more = false;
    for (int i = k - 1; i >= 0; --i) {
      if (ids[i] < n - k + i) {
        ++ids[i];
        for (int j = i + 1; j < k; ++j) ids[j] = ids[j - 1] + 1;
        more = true;
        break;
      }
    }
    if (!more) break;
    consider(ids);
  }
  return best;
}

ThresholdResult threshold_v(const SparseCoefFn& f, int v) {
  if (v < 0) throw std::invalid_argument("v must be nonnegative");
  struct Entry {
    double mag;
    const MultiIndex* k;
    Complex c;
  };
  std::vector<Entry> entries;
  entries.reserve(f.support_size());
  for (const auto& [k, c] : f.terms()) entries.push_back({std::abs(c), &k, c});
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.mag != b.mag) return a.mag > b.mag;
    return *a.k < *b.k;
  });
  ThresholdResult res;
  res.kept = SparseCoefFn(f.dim());
  long double tail = 0.0L;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i < static_cast<std::size_t>(v))
      res.kept.set(*entries[i].k, entries[i].c);
    else
      tail += (long double)entries[i].mag;
  }
  res.tail_l1 = static_cast<double>(tail);
  return res;
}

SparseCoefFn greedy_a1_lp(const SparseCoefFn& target, const IndexSet& dict,
                          int v, double p, const QuadratureGrid& grid) {
  if (!(p > 1.0) || is_inf(p))
    throw std::invalid_argument("p must lie in (1, inf)");
  if (v < 1) throw std::invalid_argument("v must be positive");
  if (dict.empty()) throw std::invalid_argument("empty dictionary");
  if (dict.dim() != target.dim() || grid.dim != target.dim())
    throw std::invalid_argument("dimension mismatch");

  const long long total = grid.node_count();
  const double weight = 1.0 / static_cast<double>(total);
  const auto f_grid = eval_on_grid(target, grid);
  std::vector<Complex> g_grid(f_grid.size(), Complex{0.0, 0.0});
  std::vector<Complex> r_grid = f_grid;

  const double f_norm = grid_lp(f_grid, p, weight);
  double r_norm = f_norm;

  std::map<MultiIndex, Complex> coef;
  std::vector<Complex> w(f_grid.size());
  std::vector<Complex> atom;
  const int step_cap = 8 * v + 64;
  int stale = 0;

  for (int step = 0; step < step_cap; ++step) {
    if (r_norm <= 1e-10 * std::max(f_norm, 1.0)) break;

    // Norming-functional weights |r|^{p-2} conj(r); the linearized gain of the
    // atom sigma*psi_k over sigma in {1,-1,i,-i} is max(|Re F|,|Im F|).
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
      double a = std::abs(r_grid[i]);
      w[i] = a > 0.0 ? std::pow(a, p - 2.0) * std::conj(r_grid[i])
                     : Complex{0.0, 0.0};
    }
    const bool budget_full = static_cast<int>(coef.size()) >= v;
    const MultiIndex* pick = nullptr;
    double best_score = 0.0;
    auto score_candidate = [&](const MultiIndex& k) {
      Complex f_k{0.0, 0.0};
      for_each_node_phase(k, grid, [&](long long node, Complex phase) {
        f_k += w[node] * phase;
      });
      double score = std::max(std::abs(f_k.real()), std::abs(f_k.imag()));
      if (score > best_score) {
        best_score = score;
        pick = &k;
      }
    };
    if (budget_full) {
      for (const auto& [k, c] : coef) score_candidate(k);
    } else {
      for (const MultiIndex& k : dict) score_candidate(k);
    }
    if (pick == nullptr) break;

    atom = column_on_grid(*pick, grid);

    double lambda = 0.0;
    Complex z{0.0, 0.0};
    if (p == 2.0) {
      // Exact minimizer of ||r0 + lambda*g - z*atom||_2 over lambda, z.
      auto dot = [&](const std::vector<Complex>& a,
                     const std::vector<Complex>& b) {
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < a.size(); ++i)
          acc += a[i] * std::conj(b[i]);
        return acc * weight;
      };
      Complex aw = dot(atom, atom);
      double aa = aw.real();
      Complex rw = dot(r_grid, atom);
      Complex gw = dot(g_grid, atom);
      Complex rg = dot(r_grid, g_grid);
      double gg = dot(g_grid, g_grid).real();
      // Projections orthogonal to the atom.
      double pg = gg - std::norm(gw) / aa;
      double prg = (rg - rw * std::conj(gw) / aa).real();
      if (pg > 1e-28 * std::max(1.0, gg)) {
        lambda = std::clamp(-prg / pg, 0.0, 1.0);
      }
      z = (rw + lambda * gw) / aa;
    } else {
      auto objective = [&](double lam, Complex zz) {
        long double acc = 0.0L;
        for (std::size_t i = 0; i < r_grid.size(); ++i) {
          Complex diff = r_grid[i] + lam * g_grid[i] - zz * atom[i];
          acc += (long double)std::pow(std::abs(diff), p);
        }
        return static_cast<double>(acc);
      };
      // Cyclic ternary search; the objective is jointly convex in
      // (lambda, Re z, Im z).
      double radius = 2.0 * (r_norm + 1.0);
      for (int round = 0; round < 4; ++round) {
        for (int coord = 0; coord < 3; ++coord) {
          double lo, hi;
          if (coord == 0) {
            lo = 0.0;
            hi = 1.0;
          } else {
            double center = coord == 1 ? z.real() : z.imag();
            lo = center - radius;
            hi = center + radius;
          }
          for (int iter = 0; iter < 60; ++iter) {
            double m1 = lo + (hi - lo) / 3.0;
            double m2 = hi - (hi - lo) / 3.0;
            auto with = [&](double val) {
              if (coord == 0) return objective(val, z);
              Complex zz = z;
              if (coord == 1)
                zz.real(val);
              else
                zz.imag(val);
              return objective(lambda, zz);
            };
            if (with(m1) <= with(m2))
              hi = m2;
            else
              lo = m1;
          }
          double val = 0.5 * (lo + hi);
          if (coord == 0)
            lambda = val;
          else if (coord == 1)
            z.real(val);
          else
            z.imag(val);
        }
        radius *= 0.25;
      }
    }

    // g <- (1-lambda) g + z * atom, mirrored in the coefficient map.
    const double keep = 1.0 - lambda;
    for (std::size_t i = 0; i < g_grid.size(); ++i) {
      g_grid[i] = keep * g_grid[i] + z * atom[i];
      r_grid[i] = f_grid[i] - g_grid[i];
    }
    if (keep != 1.0)
      for (auto& [k, c] : coef) c *= keep;
    coef[*pick] += z;
    if (coef[*pick] == Complex{0.0, 0.0}) coef.erase(*pick);

    double next_norm = grid_lp(r_grid, p, weight);
    if (next_norm >= r_norm - 1e-14 * std::max(r_norm, 1.0)) {
      if (++stale >= 2) {
        r_norm = std::min(r_norm, next_norm);
        break;
      }
    } else {
      stale = 0;
    }
    r_norm = next_norm;
  }

  SparseCoefFn out(target.dim());
  for (const auto& [k, c] : coef) out.set(k, c);
  return out;
}

UpEstimate up_constant(const DictionaryOnPoints& dict, int u, int d_cap,
                       long long pair_cap, std::uint64_t seed) {
  const int n = dict.n_cols();
  if (u < 1 || u > n) throw std::invalid_argument("u out of range");
  if (d_cap < u) throw std::invalid_argument("d_cap must be at least u");
  const int j_size = std::min(d_cap - u, n - u);

  UpEstimate est;
  est.u_value = 1.0;
  if (j_size == 0) return est;

  auto svd_basis = [&](const std::vector<int>& cols) {
    Eigen::MatrixXcd mat(dict.values.rows(), cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i)
      mat.col(i) = dict.values.col(cols[i]);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mat, Eigen::ComputeThinU);
    double tol = 1e-12 * std::max(1.0, svd.singularValues()(0));
    long long rank = 0;
    while (rank < svd.singularValues().size() &&
           svd.singularValues()(rank) > tol)
      ++rank;
    return Eigen::MatrixXcd(svd.matrixU().leftCols(rank));
  };

  auto account = [&](const std::vector<int>& a_cols,
                     const std::vector<int>& j_cols) {
    ++est.pairs_checked;
    Eigen::MatrixXcd qa = svd_basis(a_cols);
    Eigen::MatrixXcd qj = svd_basis(j_cols);
    if (qa.cols() == 0 || qj.cols() == 0) return;
    Eigen::JacobiSVD<Eigen::MatrixXcd> angles(qa.adjoint() * qj);
    double s_max = angles.singularValues()(0);
    if (s_max >= 1.0 - 1e-10) {
      est.unbounded = true;
      est.u_value = std::numeric_limits<double>::infinity();
      return;
    }
    est.u_value =
        std::max(est.u_value, 1.0 / std::sqrt(1.0 - s_max * s_max));
  };

  long long a_count = binomial_capped(n, u, pair_cap);
  long long j_count = binomial_capped(n - u, j_size, pair_cap);
  bool exhaustive = a_count <= pair_cap && j_count <= pair_cap &&
                    a_count * j_count <= pair_cap;

  if (exhaustive) {
    est.mode = UdMode::exhaustive;
    std::vector<int> a_ids(u);
    for (int i = 0; i < u; ++i) a_ids[i] = i;
    bool more_a = true;
    while (more_a) {
      std::vector<int> rest;
      rest.reserve(n - u);
      {
        std::size_t next = 0;
        for (int c = 0; c < n; ++c) {
          if (next < a_ids.size() && a_ids[next] == c) {
            ++next;
            continue;
          }
          rest.push_back(c);
        }
      }
      std::vector<int> j_pos(j_size);
      for (int i = 0; i < j_size; ++i) j_pos[i] = i;
      bool more_j = true;
      while (more_j && !est.unbounded) {
        std::vector<int> j_cols(j_size);
        for (int i = 0; i < j_size; ++i) j_cols[i] = rest[j_pos[i]];
        account(a_ids, j_cols);
        more_j = false;
        for (int i = j_size - 1; i >= 0; --i) {
          if (j_pos[i] < static_cast<int>(rest.size()) - j_size + i) {
            ++j_pos[i];
            for (int q = i + 1; q < j_size; ++q) j_pos[q] = j_pos[q - 1] + 1;
            more_j = true;
            break;
          }
        }
      }
      if (est.unbounded) break;
      more_a = false;
      for (int i = u - 1; i >= 0; --i) {
        if (a_ids[i] < n - u + i) {
          ++a_ids[i];
          for (int q = i + 1; q < u; ++q) a_ids[q] = a_ids[q - 1] + 1;
          more_a = true;
          break;
        }
      }
    }
  } else {
    est.mode = UdMode::sampled;
    for (long long trial = 0; trial < pair_cap && !est.unbounded; ++trial) {
      RngStream rng(derive_seed(seed, 0x0A9E5000ULL + trial));
      auto a_ids = rng.subset(n, u);
      std::vector<int> rest;
      rest.reserve(n - u);
      {
        std::size_t next = 0;
        for (int c = 0; c < n; ++c) {
          if (next < a_ids.size() && a_ids[next] == c) {
            ++next;
            continue;
          }
          rest.push_back(c);
        }
      }
      auto pos = rng.subset(static_cast<int>(rest.size()), j_size);
      std::vector<int> j_cols(j_size);
      for (int i = 0; i < j_size; ++i) j_cols[i] = rest[pos[i]];
      account(a_ids, j_cols);
    }
  }
  return est;
}

double nikolskii_worst_ratio(const IndexSet& pool, int u, double p, int trials,
                             std::uint64_t seed, const QuadratureGrid& grid) {
  if (u < 1 || u > static_cast<int>(pool.size()))
    throw std::invalid_argument("u out of range");
  if (!(p >= 2.0)) throw std::invalid_argument("p must be at least 2");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    RngStream rng(derive_seed(seed, 0x21C0'0000ULL + trial));
    auto ids = rng.subset(static_cast<int>(pool.size()), u);
    SparseCoefFn f(pool.dim());
    for (int i : ids) f.set(pool[i], rng.complex_normal());
    double den = lp_norm_mu(f, 2.0, grid).value;
    if (den <= 0.0) continue;
    double num = lp_norm_mu(f, p, grid).value;
    worst = std::max(worst, num / den);
  }
  return worst;
}

RieszBessel riesz_bessel_exact(const IndexSet& pool, int trials,
                               std::uint64_t seed, const QuadratureGrid& grid) {
  if (pool.empty()) throw std::invalid_argument("empty pool");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  RieszBessel rb;
  rb.r1 = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    RngStream rng(derive_seed(seed, 0x81E5'0000ULL + trial));
    SparseCoefFn f(pool.dim());
    double csq = 0.0;
    for (const auto& k : pool) {
      Complex c = rng.complex_normal();
      f.set(k, c);
      csq += std::norm(c);
    }
    double cn = std::sqrt(csq);
    if (cn <= 0.0) continue;
    double fn = lp_norm_mu(f, 2.0, grid).value;
    double ratio = fn / cn;
    rb.r1 = std::min(rb.r1, ratio);
    rb.r2 = std::max(rb.r2, ratio);
    if (fn > 0.0) rb.k = std::max(rb.k, (cn * cn) / (fn * fn));
  }
  return rb;
}

RieszBessel riesz_bessel_discrete(const DictionaryOnPoints& dict, int trials,
                                  std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  RieszBessel rb;
  rb.r1 = std::numeric_limits<double>::infinity();
  const int n = dict.n_cols();
  for (int trial = 0; trial < trials; ++trial) {
    RngStream rng(derive_seed(seed, 0x81E5'0000ULL + trial));
    Eigen::VectorXcd c(n);
    for (int i = 0; i < n; ++i) c(i) = rng.complex_normal();
    double cn = c.norm();
    if (cn <= 0.0) continue;
    double fn = discrete_norm(Eigen::VectorXcd(dict.values * c));
    double ratio = fn / cn;
    rb.r1 = std::min(rb.r1, ratio);
    rb.r2 = std::max(rb.r2, ratio);
    if (fn > 0.0) rb.k = std::max(rb.k, (cn * cn) / (fn * fn));
  }
  return rb;
}

}  // namespace trigsamp
