#include "trigsamp/recovery.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "trigsamp/csv.hpp"
#include "trigsamp/rng.hpp"

namespace trigsamp {

namespace {

constexpr std::uint64_t kPointTag = 0xD7A3'0000ULL;
constexpr std::uint64_t kUdTag = 0x0D0C'0000ULL;
constexpr std::uint64_t kTrialTag = 0x9100'0000ULL;
constexpr std::uint64_t kMemberTag = 0x3E3B'0000ULL;

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(
             clock::now().time_since_epoch())
      .count();
}

// Evaluation grid for a norm over the union of two supports; keeps the p=2
// exactness bound even when the node cap forces a smaller oversample.
QuadratureGrid error_grid(const SparseCoefFn& a, const SparseCoefFn& b, int d,
                          int oversample) {
  int max_freq = std::max(a.max_abs_frequency(), b.max_abs_frequency());
  constexpr long long kNodeCap = 20'000'000;
  for (int os = oversample; os >= 2; --os) {
    QuadratureGrid g = QuadratureGrid::for_max_frequency(d, max_freq, os);
    if (g.node_count() <= kNodeCap || os == 2) return g;
  }
  return QuadratureGrid::for_max_frequency(d, max_freq, 2);
}

}  // namespace

Algorithm algorithm_from_string(const std::string& s) {
  if (s == "womp") return Algorithm::womp;
  if (s == "oracle_bv") return Algorithm::oracle_bv;
  if (s == "layered") return Algorithm::layered;
  throw std::invalid_argument("unknown algorithm '" + s + "'");
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::womp: return "womp";
    case Algorithm::oracle_bv: return "oracle_bv";
    case Algorithm::layered: return "layered";
  }
  return "?";
}

MSpec m_spec_from_string(const std::string& s) {
  if (s == "log4") return MSpec::log4;
  if (s == "log3") return MSpec::log3;
  if (s == "explicit" || s == "explicit_m") return MSpec::explicit_m;
  throw std::invalid_argument("unknown m rule '" + s + "'");
}

std::string to_string(MSpec m) {
  switch (m) {
    case MSpec::log4: return "log4";
    case MSpec::log3: return "log3";
    case MSpec::explicit_m: return "explicit";
  }
  return "?";
}

long long RecoveryConfig::resolve_m() const {
  switch (m_rule) {
    case MSpec::log4: return m_budget(v, MRule::log4, c_user);
    case MSpec::log3: return m_budget(v, MRule::log3, c_user);
    case MSpec::explicit_m: return m;
  }
  return m;
}

IndexSet RecoveryConfig::resolve_dictionary() const {
  if (dictionary == "auto") {
    // Smallest cross holding at least 4v frequencies.
    int n = 0;
    while (static_cast<long long>(hyperbolic_cross(n, d).size()) <
           4LL * v) {
      ++n;
      if (n > 40) throw std::invalid_argument("dictionary resolution overflow");
    }
    return hyperbolic_cross(n, d);
  }
  auto colon = dictionary.find(':');
  if (colon != std::string::npos) {
    std::string kind = dictionary.substr(0, colon);
    int arg = 0;
    try {
      std::size_t pos = 0;
      std::string raw = dictionary.substr(colon + 1);
      arg = std::stoi(raw, &pos);
      if (pos != raw.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad dictionary spec '" + dictionary + "'");
    }
    if (kind == "cross") return hyperbolic_cross(arg, d);
    if (kind == "cube") return full_cube(arg, d);
  }
  throw std::invalid_argument("bad dictionary spec '" + dictionary + "'");
}

int RecoveryConfig::resolved_j_max() const {
  return j_max > 0 ? j_max : default_j_max(d);
}

void RecoveryConfig::validate() const {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (!(p >= 2.0)) throw std::invalid_argument("p must be at least 2");
  if (v < 1) throw std::invalid_argument("v must be positive");
  if (!(t > 0.0 && t <= 1.0))
    throw std::invalid_argument("t must lie in (0,1]");
  if (!(c_user > 0.0)) throw std::invalid_argument("c_user must be positive");
  if (m_rule == MSpec::explicit_m && m < 1)
    throw std::invalid_argument("explicit m must be positive");
  if (iter_mult < 1) throw std::invalid_argument("iter_mult must be positive");
  if (max_redraws < 0)
    throw std::invalid_argument("max_redraws must be nonnegative");
  if (ud_trials < 1) throw std::invalid_argument("ud_trials must be positive");
  if (oversample < 2)
    throw std::invalid_argument("oversample must be at least 2");
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("beta must lie in (0,1]");
  if (!(a > 0.0)) throw std::invalid_argument("a must be positive");
  if (j_max < 0) throw std::invalid_argument("j_max must be nonnegative");
}

std::string RecoveryReport::csv_header() {
  return "schema_version,algorithm,d,p,beta,a,b,v,m,m_rule,t,seed,ud_pass,"
         "err_lp,err_l2_disc,sigma_v,iters,ms";
}

std::string RecoveryReport::csv_row() const {
  std::ostringstream out;
  out << kCsvSchemaVersion << ',' << to_string(algorithm) << ',' << d << ','
      << fmt_double(p) << ',' << fmt_double(beta) << ',' << fmt_double(a)
      << ',' << fmt_double(b) << ',' << v << ',' << m << ','
      << to_string(m_rule) << ',' << fmt_double(t) << ',' << seed << ','
      << (ud_pass ? 1 : 0) << ',' << fmt_double(err_lp) << ','
      << fmt_double(err_l2_disc) << ',' << fmt_double(sigma_v) << ',' << iters
      << ',' << fmt_double(ms);
  return out.str();
}

RecoveryResult recover(const SparseCoefFn& f, const RecoveryConfig& cfg,
                       const PointSet* fixed_points) {
  cfg.validate();
  if (f.dim() != cfg.d) throw std::invalid_argument("dimension mismatch");
  const double start = now_ms();

  IndexSet dict_set = cfg.resolve_dictionary();
  const long long m = cfg.resolve_m();
  if (m < 1) throw std::invalid_argument("resolved m must be positive");
  const int n_cols = static_cast<int>(dict_set.size());
  const int u =
      std::min((1 + cfg.iter_mult) * cfg.v, n_cols);

  RecoveryResult result;
  RecoveryReport& rep = result.report;
  rep.algorithm = cfg.algorithm;
  rep.d = cfg.d;
  rep.p = cfg.p;
  rep.beta = cfg.beta;
  rep.a = cfg.a;
  rep.b = cfg.b;
  rep.v = cfg.v;
  rep.m = m;
  rep.m_rule = cfg.m_rule;
  rep.t = cfg.t;
  rep.seed = cfg.seed;

  PointSet xi;
  if (fixed_points != nullptr) {
    if (fixed_points->dim != cfg.d)
      throw std::invalid_argument("point set dimension mismatch");
    if (fixed_points->size() == 0)
      throw std::invalid_argument("empty point set");
    xi = *fixed_points;
    rep.m = static_cast<long long>(xi.size());
    if (cfg.check_ud) {
      UdOptions opts;
      opts.mode = UdMode::sampled;
      opts.trials = cfg.ud_trials;
      opts.seed = derive_seed(cfg.seed, kUdTag);
      rep.ud_pass = verify_ud(xi, dict_set, u, opts).pass;
    }
  } else {
    for (int attempt = 0;; ++attempt) {
      xi = draw_points(static_cast<std::size_t>(m), cfg.d,
                       derive_seed(cfg.seed, kPointTag + attempt));
      if (!cfg.check_ud) {
        rep.ud_pass = false;
        break;
      }
      UdOptions opts;
      opts.mode = UdMode::sampled;
      opts.trials = cfg.ud_trials;
      opts.seed = derive_seed(cfg.seed, kUdTag + attempt);
      rep.ud_pass = verify_ud(xi, dict_set, u, opts).pass;
      if (rep.ud_pass || attempt == cfg.max_redraws) break;
      ++rep.redraws;
    }
  }

  auto samples_vec = eval_at_points(f, xi);
  Eigen::VectorXcd y(samples_vec.size());
  for (std::size_t i = 0; i < samples_vec.size(); ++i) y(i) = samples_vec[i];

  switch (cfg.algorithm) {
    case Algorithm::womp: {
      DictionaryOnPoints dict = DictionaryOnPoints::trig(dict_set, xi);
      int iterations = std::min<long long>(
          {static_cast<long long>(cfg.iter_mult) * cfg.v, rep.m,
           static_cast<long long>(n_cols)});
      WompTrace trace = womp(y, dict, cfg.t, std::max(iterations, 1));
      result.approx = trace.coefficients;
      rep.iters = trace.iterations_done;
      rep.err_l2_disc = trace.residual_norms.back();
      break;
    }
    case Algorithm::oracle_bv: {
      DictionaryOnPoints dict = DictionaryOnPoints::trig(dict_set, xi);
      BestTermResult best = best_v_term_discrete(y, dict, cfg.v);
      result.approx = best.approx;
      rep.iters = cfg.v;
      rep.err_l2_disc = best.error;
      rep.sigma_v = best.error;
      break;
    }
    case Algorithm::layered: {
      ClassParamsW cls{cfg.a, cfg.b, cfg.beta};
      result.approx = layered_approx(f, cfg.v, cls, cfg.p);
      rep.iters = static_cast<int>(result.approx.support_size());
      auto approx_vals = eval_at_points(result.approx, xi);
      long double acc = 0.0L;
      for (std::size_t i = 0; i < approx_vals.size(); ++i)
        acc += (long double)std::norm(samples_vec[i] - approx_vals[i]);
      rep.err_l2_disc = std::sqrt(
          static_cast<double>(acc) / static_cast<double>(approx_vals.size()));
      break;
    }
  }

  QuadratureGrid grid =
      error_grid(f, result.approx, cfg.d, cfg.oversample);
  NormResult nr = lp_norm_mu(f - result.approx, cfg.p, grid, cfg.oversample);
  rep.err_lp = nr.value;
  rep.grid_warning = nr.grid_warning;
  rep.ms = now_ms() - start;
  return result;
}

SparseCoefFn layered_approx(const SparseCoefFn& f, int v_total,
                            const ClassParamsW& cls, double p) {
  if (v_total < 1) throw std::invalid_argument("v_total must be positive");
  if (!(p >= 1.0)) throw std::invalid_argument("p must be at least 1");
  if (!(cls.beta > 0.0 && cls.beta <= 1.0))
    throw std::invalid_argument("beta must lie in (0,1]");
  if (!(cls.a > 0.0)) throw std::invalid_argument("a must be positive");
  const int d = f.dim();

  // Degenerate budget: no cross head fits, fall back to plain thresholding.
  if (v_total < 2) return threshold_v(f, v_total).kept;

  int n = 0;
  while (static_cast<long long>(hyperbolic_cross(n + 1, d).size()) <=
         v_total / 2)
    ++n;

  const double p_star = std::min(p, 2.0);
  const double denom = 1.0 / cls.beta - 1.0 / p_star;
  const double alpha = denom > 0.0 ? cls.a / (2.0 * denom) : 0.0;

  IndexSet head = hyperbolic_cross(n, d);
  SparseCoefFn approx = f.restricted(head);
  long long remaining = v_total - static_cast<long long>(approx.support_size());

  int max_layer = 0;
  for (const auto& [k, c] : f.terms())
    max_layer = std::max(max_layer, layer_of(k));

  for (int j = n + 1; j <= max_layer && remaining > 0; ++j) {
    SparseCoefFn part = layer_part(f, j);
    if (part.support_size() == 0) continue;
    long long v_j = static_cast<long long>(std::floor(
        std::pow(2.0, n - alpha * (j - n)) *
        std::pow(static_cast<double>(j), d - 1)));
    if (denom <= 0.0) v_j = remaining;  // no decay rule applies; spend freely
    if (v_j < 1) continue;

    int thr = static_cast<int>(std::min<long long>(v_j, remaining));
    ThresholdResult kept = threshold_v(part, thr);
    approx = approx + kept.kept;
    remaining -= static_cast<long long>(kept.kept.support_size());
    if (remaining <= 0) break;

    SparseCoefFn rest = part - kept.kept;
    if (rest.support_size() == 0) continue;
    int greedy_budget = static_cast<int>(std::min<long long>(v_j, remaining));
    if (greedy_budget < 1) continue;
    IndexSet rest_support = rest.support();
    QuadratureGrid grid = QuadratureGrid::for_max_frequency(
        d, rest.max_abs_frequency(),
        d == 1 ? 4 : 2);
    // The relaxed greedy needs a finite p strictly above 1; a large surrogate
    // stands in for the sup norm at desk scale.
    const double greedy_p = is_inf(p) ? 16.0 : std::max(p, 1.5);
    SparseCoefFn h =
        greedy_a1_lp(rest, rest_support, greedy_budget, greedy_p, grid);
    approx = approx + h;
    remaining -= static_cast<long long>(h.support_size());
  }
  return approx;
}

RhoTable empirical_rho(const ClassParamsW& cls, const RecoveryConfig& base,
                       const std::vector<int>& v_grid, int trials, int members,
                       std::uint64_t seed) {
  if (v_grid.empty()) throw std::invalid_argument("empty v grid");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  if (members < 1) throw std::invalid_argument("members must be positive");

  RhoTable table;
  for (int v : v_grid) {
    RecoveryConfig cfg = base;
    cfg.v = v;
    cfg.a = cls.a;
    cfg.b = cls.b;
    cfg.beta = cls.beta;
    cfg.validate();
    const long long m = cfg.resolve_m();
    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      // One point set per (v, trial) block, shared by the block's members.
      std::uint64_t block_seed =
          derive_seed(seed, kTrialTag + trial, static_cast<std::uint64_t>(v));
      PointSet xi =
          draw_points(static_cast<std::size_t>(m), cfg.d, block_seed);
      for (int member = 0; member < members; ++member) {
        // Member streams do not depend on v, so sweeps are paired across v.
        std::uint64_t f_seed = derive_seed(seed, kMemberTag + trial,
                                           static_cast<std::uint64_t>(member));
        SparseCoefFn f = generate_W(cls, cfg.d, cfg.resolved_j_max(), f_seed,
                                    cfg.profile);
        cfg.seed = block_seed;
        RecoveryResult res = recover(f, cfg, &xi);
        res.report.seed = f_seed;
        worst = std::max(worst, res.report.err_lp);
        table.rows.push_back(res.report);
      }
    }
    table.sup_err_by_v.emplace_back(v, worst);
  }
  return table;
}

}  // namespace trigsamp
