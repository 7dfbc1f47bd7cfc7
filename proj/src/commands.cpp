#include "trigsamp/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "trigsamp/csv.hpp"
#include "trigsamp/rate_fit.hpp"
#include "trigsamp/recovery.hpp"
#include "trigsamp/rng.hpp"

namespace trigsamp {

namespace {

// Keys shared with RecoveryConfig; every command that recovers goes through
// this so config files mean the same thing everywhere.
RecoveryConfig parse_recovery_config(KeyValues& kv, const CommandIo& io) {
  RecoveryConfig cfg;
  cfg.d = static_cast<int>(kv.get_int("d", cfg.d));
  cfg.p = kv.get_double("p", cfg.p);
  cfg.v = static_cast<int>(kv.get_int("v", cfg.v));
  cfg.m_rule = m_spec_from_string(kv.get_string("m_rule", "log3"));
  cfg.m = kv.get_int("m", cfg.m);
  cfg.c_user = kv.get_double("c_user", cfg.c_user);
  cfg.t = kv.get_double("t", cfg.t);
  cfg.algorithm = algorithm_from_string(kv.get_string("algorithm", "womp"));
  cfg.dictionary = kv.get_string("dictionary", cfg.dictionary);
  cfg.seed = kv.get_u64("seed", cfg.seed);
  cfg.iter_mult = static_cast<int>(kv.get_int("iter_mult", cfg.iter_mult));
  cfg.check_ud = kv.get_bool("check_ud", cfg.check_ud);
  cfg.ud_trials = static_cast<int>(kv.get_int("ud_trials", cfg.ud_trials));
  cfg.max_redraws =
      static_cast<int>(kv.get_int("max_redraws", cfg.max_redraws));
  cfg.oversample = static_cast<int>(kv.get_int("oversample", cfg.oversample));
  cfg.beta = kv.get_double("beta", cfg.beta);
  cfg.a = kv.get_double("a", cfg.a);
  cfg.b = kv.get_double("b", cfg.b);
  cfg.profile =
      profile_from_string(kv.get_string("profile", "saturating_spread"));
  cfg.j_max = static_cast<int>(kv.get_int("j_max", cfg.j_max));
  if (io.seed_override) cfg.seed = *io.seed_override;
  return cfg;
}

IndexSet parse_index_set(const std::string& spec, int d) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw UsageError("bad index set spec '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  std::string raw = spec.substr(colon + 1);
  auto as_int = [&](const std::string& s) {
    try {
      std::size_t pos = 0;
      int value = std::stoi(s, &pos);
      if (pos != s.size()) throw std::invalid_argument("trailing");
      return value;
    } catch (const std::exception&) {
      throw UsageError("bad index set spec '" + spec + "'");
    }
  };
  if (kind == "cross") return hyperbolic_cross(as_int(raw), d);
  if (kind == "cube") return full_cube(as_int(raw), d);
  if (kind == "layer") return layer(as_int(raw), d);
  if (kind == "block") {
    DyadicVector s;
    std::istringstream in(raw);
    std::string item;
    while (std::getline(in, item, ',')) s.push_back(as_int(item));
    if (static_cast<int>(s.size()) != d)
      throw UsageError("block spec needs " + std::to_string(d) +
                       " components");
    return dyadic_block(s);
  }
  throw UsageError("bad index set spec '" + spec + "'");
}

PointSet equispaced_points(long long m, int d) {
  if (d != 1)
    throw UsageError("equispaced points are only defined for d=1 here");
  PointSet xi;
  xi.dim = 1;
  xi.coords.resize(m);
  for (long long j = 0; j < m; ++j)
    xi.coords[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
  return xi;
}

}  // namespace

int cmd_discretize_check(KeyValues cfg, const CommandIo& io) {
  const int d = static_cast<int>(cfg.get_int("d", 1));
  IndexSet dict = parse_index_set(cfg.get_string("dictionary"), d);
  std::vector<long long> u_list = cfg.get_int_list("u_list");
  const bool have_m_list = cfg.has("m_list");
  std::vector<long long> m_list;
  if (have_m_list) m_list = cfg.get_int_list("m_list");
  MRule rule = m_rule_from_string(cfg.get_string("m_rule", "log3"));
  const double c_user = cfg.get_double("c_user", 2.0);
  UdOptions opts;
  opts.mode = ud_mode_from_string(cfg.get_string("mode", "auto"));
  opts.trials = cfg.get_int("ud_trials", 500);
  std::uint64_t seed0 = cfg.get_u64("seed", 1);
  if (io.seed_override) seed0 = *io.seed_override;
  const int seeds = static_cast<int>(cfg.get_int("seeds", 1));
  const double min_pass_rate = cfg.get_double("min_pass_rate", 1.0);
  const std::string points = cfg.get_string("points", "random");
  if (points != "random" && points != "equispaced")
    throw UsageError("points must be random or equispaced");
  cfg.reject_unconsumed();
  if (seeds < 1) throw UsageError("seeds must be positive");

  std::vector<std::string> rows;
  long long cells = 0, passed = 0;
  for (long long u : u_list) {
    std::vector<long long> ms = m_list;
    if (!have_m_list) ms = {m_budget(u, rule, c_user)};
    for (long long m : ms) {
      for (int s = 0; s < seeds; ++s) {
        std::uint64_t seed = seed0 + static_cast<std::uint64_t>(s);
        PointSet xi = points == "equispaced"
                          ? equispaced_points(m, d)
                          : draw_points(static_cast<std::size_t>(m), d,
                                        derive_seed(seed, 0xD15C'0000ULL));
        UdOptions run = opts;
        run.seed = derive_seed(seed, 0x0D0C'0000ULL);
        UdReport rep = verify_ud(xi, dict, static_cast<int>(u), run);
        rep.seed = seed;
        rows.push_back(rep.csv_row());
        ++cells;
        if (rep.pass) ++passed;
      }
    }
  }
  if (!io.csv_path.empty())
    append_csv(io.csv_path, UdReport::csv_header(), rows);
  const double rate =
      cells > 0 ? static_cast<double>(passed) / static_cast<double>(cells) : 0.0;
  if (io.out)
    *io.out << "discretize-check: cells=" << cells << " passed=" << passed
            << " rate=" << fmt_double(rate)
            << " required=" << fmt_double(min_pass_rate) << "\n";
  return rate >= min_pass_rate ? kExitOk : kExitExpectationFailed;
}

int cmd_recover(KeyValues cfg, const CommandIo& io) {
  RecoveryConfig rc = parse_recovery_config(cfg, io);
  const std::uint64_t f_seed = cfg.get_u64("f_seed", derive_seed(rc.seed, 1));
  const double max_err = cfg.get_double("max_err",
                                        std::numeric_limits<double>::infinity());
  cfg.reject_unconsumed();
  rc.validate();

  ClassParamsW cls{rc.a, rc.b, rc.beta};
  SparseCoefFn f = generate_W(cls, rc.d, rc.resolved_j_max(), f_seed,
                              rc.profile);
  RecoveryResult res = recover(f, rc);
  if (!io.csv_path.empty())
    append_csv(io.csv_path, RecoveryReport::csv_header(),
               {res.report.csv_row()});
  if (io.out)
    *io.out << "recover: algorithm=" << to_string(rc.algorithm)
            << " v=" << rc.v << " m=" << res.report.m
            << " ud_pass=" << (res.report.ud_pass ? 1 : 0)
            << " err_lp=" << fmt_double(res.report.err_lp)
            << " err_l2_disc=" << fmt_double(res.report.err_l2_disc) << "\n";
  return res.report.err_lp <= max_err ? kExitOk : kExitExpectationFailed;
}

int cmd_rate_sweep(KeyValues cfg, const CommandIo& io) {
  RecoveryConfig rc = parse_recovery_config(cfg, io);
  std::vector<long long> v_raw =
      cfg.has("v_list") ? cfg.get_int_list("v_list")
                        : std::vector<long long>{4, 8, 16, 32, 64};
  const int trials = static_cast<int>(cfg.get_int("trials", 1));
  const int members = static_cast<int>(cfg.get_int("members", 1));
  bool strip_log = cfg.get_bool("strip_log", false);
  if (io.strip_log_override) strip_log = *io.strip_log_override;
  const bool have_slope_band = cfg.has("slope_min") || cfg.has("slope_max");
  const double slope_min = cfg.get_double("slope_min", -1e9);
  const double slope_max = cfg.get_double("slope_max", 1e9);
  cfg.reject_unconsumed();

  std::vector<int> v_grid;
  for (long long v : v_raw) v_grid.push_back(static_cast<int>(v));
  ClassParamsW cls{rc.a, rc.b, rc.beta};
  RhoTable table = empirical_rho(cls, rc, v_grid, trials, members, rc.seed);

  if (!io.csv_path.empty()) {
    std::vector<std::string> rows;
    rows.reserve(table.rows.size());
    for (const auto& rep : table.rows) rows.push_back(rep.csv_row());
    append_csv(io.csv_path, RecoveryReport::csv_header(), rows);
  }

  const double strip_power =
      strip_log ? (rc.d - 1) * (rc.a + rc.b) : 0.0;
  std::vector<std::pair<double, double>> points;
  for (const auto& [v, err] : table.sup_err_by_v)
    points.emplace_back(static_cast<double>(v), err);
  RateFit fit;
  try {
    fit = fit_rate(points, strip_power);
  } catch (const std::invalid_argument& e) {
    if (io.out) *io.out << "rate-sweep: fit failed: " << e.what() << "\n";
    return kExitExpectationFailed;
  }
  if (io.out)
    *io.out << "rate-sweep: slope=" << fmt_double(fit.slope)
            << " intercept=" << fmt_double(fit.intercept)
            << " r2=" << fmt_double(fit.r_squared)
            << " points=" << fit.points_used
            << " strip=" << fmt_double(fit.strip_power) << "\n";
  if (have_slope_band && (fit.slope < slope_min || fit.slope > slope_max))
    return kExitExpectationFailed;
  return kExitOk;
}

int cmd_lebesgue_test(KeyValues cfg, const CommandIo& io) {
  const int n_cols = static_cast<int>(cfg.get_int("N", 10));
  std::vector<long long> v_list = cfg.has("v_list")
                                      ? cfg.get_int_list("v_list")
                                      : std::vector<long long>{1, 2, 3};
  std::vector<double> t_list = cfg.has("t_list")
                                   ? cfg.get_double_list("t_list")
                                   : std::vector<double>{0.5, 1.0};
  const int instances = static_cast<int>(cfg.get_int("instances", 50));
  const int c_mult = static_cast<int>(cfg.get_int("c", 2));
  const double declared_c = cfg.get_double("max_ratio", 5.0);
  std::uint64_t seed = cfg.get_u64("seed", 1);
  if (io.seed_override) seed = *io.seed_override;
  cfg.reject_unconsumed();
  if (n_cols < 2) throw UsageError("N must be at least 2");
  if (instances < 1) throw UsageError("instances must be positive");
  if (c_mult < 1) throw UsageError("c must be positive");

  // One-sided frequency fan 0..N-1 on an exact equispaced grid.
  std::vector<MultiIndex> freqs;
  for (int k = 0; k < n_cols; ++k) freqs.push_back({k});
  IndexSet dict_set = IndexSet::from_members(1, freqs, "fan");
  const long long m = 2LL * (n_cols - 1) + 1;
  PointSet xi = equispaced_points(m, 1);
  DictionaryOnPoints dict = DictionaryOnPoints::trig(dict_set, xi);

  std::vector<std::string> rows;
  double worst_ratio = 0.0;
  bool exactness_failed = false;
  for (long long v : v_list) {
    if (v < 1 || v >= n_cols) throw UsageError("v out of range for N");
    const int iters = std::min<long long>(c_mult * v, m);
    for (double t : t_list) {
      if (!(t > 0.0 && t <= 1.0)) throw UsageError("t must lie in (0,1]");
      for (int inst = 0; inst < instances; ++inst) {
        RngStream rng(derive_seed(seed, 0x1EB5'0000ULL + inst,
                                  static_cast<std::uint64_t>(v)));
        Eigen::VectorXcd f0(m);
        for (long long i = 0; i < m; ++i) f0(i) = rng.complex_normal();

        WompTrace trace = womp(f0, dict, t, iters);
        const double err = trace.residual_norms.back();
        BestTermResult best =
            best_v_term_discrete(f0, dict, static_cast<int>(v));
        double ratio;
        if (best.error <= 1e-12) {
          // sigma_v ~ 0: the meaningful check is exact recovery.
          ratio = err <= 1e-8 ? 1.0 : std::numeric_limits<double>::infinity();
          if (err > 1e-8) exactness_failed = true;
        } else {
          ratio = err / best.error;
        }
        worst_ratio = std::max(worst_ratio, ratio);
        std::ostringstream row;
        row << kCsvSchemaVersion << ',' << inst << ',' << v << ','
            << fmt_double(t) << ',' << fmt_double(err) << ','
            << fmt_double(best.error) << ',' << fmt_double(ratio);
        rows.push_back(row.str());
      }
    }
  }
  if (!io.csv_path.empty())
    append_csv(io.csv_path,
               "schema_version,instance,v,t,err_womp,sigma_v,ratio", rows);
  if (io.out)
    *io.out << "lebesgue-test: max_ratio=" << fmt_double(worst_ratio)
            << " declared_C=" << fmt_double(declared_c) << "\n";
  return (!exactness_failed && worst_ratio <= declared_c)
             ? kExitOk
             : kExitExpectationFailed;
}

int cmd_dump_index_set(KeyValues cfg, const CommandIo& io) {
  const int d = static_cast<int>(cfg.get_int("d", 1));
  IndexSet set = parse_index_set(cfg.get_string("set"), d);
  cfg.reject_unconsumed();
  std::ostringstream text;
  text << "# " << set.label() << " d=" << d << " size=" << set.size() << "\n";
  text << to_text(set);
  if (!io.csv_path.empty()) {
    std::ofstream file(io.csv_path);
    if (!file) throw UsageError("cannot open output file '" + io.csv_path + "'");
    file << text.str();
  } else if (io.out) {
    *io.out << text.str();
  }
  return kExitOk;
}

}  // namespace trigsamp
