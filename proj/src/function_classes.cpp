#include "trigsamp/function_classes.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "trigsamp/rng.hpp"

namespace trigsamp {

namespace {

void check_params_w(const ClassParamsW& p) {
  if (!(p.a > 0.0)) throw std::invalid_argument("a must be positive");
  if (!(p.beta > 0.0 && p.beta <= 1.0))
    throw std::invalid_argument("beta must lie in (0,1]");
}

void check_params_a(const ClassParamsA& p) {
  if (!(p.r > 0.0)) throw std::invalid_argument("r must be positive");
  if (!(p.beta > 0.0 && p.beta <= 1.0))
    throw std::invalid_argument("beta must lie in (0,1]");
}

double layer_bound_w(const ClassParamsW& p, int j, int d) {
  double jbar = std::max(j, 1);
  return std::pow(2.0, -p.a * j) *
         std::pow(jbar, (d - 1) * p.b);
}

double shell_bound_a(const ClassParamsA& p, int j) {
  return std::pow(2.0, -p.r * j);
}

// Per-layer (or per-shell) quasi-norms of f, keyed by the group index.
std::map<int, double> grouped_norms(const SparseCoefFn& f, double beta,
                                    bool by_shell) {
  std::map<int, long double> acc;
  for (const auto& [k, c] : f.terms()) {
    int j = by_shell ? shell_of(k) : layer_of(k);
    acc[j] += (long double)std::pow(std::abs(c), beta);
  }
  std::map<int, double> out;
  for (const auto& [j, s] : acc)
    out[j] = std::pow(static_cast<double>(s), 1.0 / beta);
  return out;
}

MembershipReport check_grouped(const std::map<int, double>& norms,
                               const std::function<double(int)>& bound,
                               double rel_tol) {
  MembershipReport rep;
  for (const auto& [j, norm] : norms) {
    double b = bound(j);
    double excess = b > 0.0 ? norm / b
                            : (norm > 0.0
                                   ? std::numeric_limits<double>::infinity()
                                   : 0.0);
    rep.worst_excess = std::max(rep.worst_excess, excess);
    if (excess > 1.0 + rel_tol && rep.first_violation < 0) {
      rep.member = false;
      rep.first_violation = j;
    }
  }
  return rep;
}

// Distributes |coefficient| mass over the chosen indices so the group's
// A_beta quasi-norm equals target exactly (up to rounding); phases are
// independent unimodular draws.
void fill_group(SparseCoefFn& f, const std::vector<MultiIndex>& chosen,
                double target, double beta, RngStream& rng) {
  if (chosen.empty() || target <= 0.0) return;
  double mag = target / std::pow(static_cast<double>(chosen.size()), 1.0 / beta);
  for (const auto& k : chosen) f.add(k, mag * rng.unit_phase());
}

SparseCoefFn generate_grouped(int d, int j_max, std::uint64_t seed,
                              Profile profile, double beta,
                              const std::function<double(int)>& bound,
                              const std::function<IndexSet(int)>& group) {
  if (j_max < 0) throw std::invalid_argument("j_max must be nonnegative");
  SparseCoefFn f(d);
  for (int j = 0; j <= j_max; ++j) {
    IndexSet g = group(j);
    if (g.empty()) continue;
    RngStream rng(derive_seed(seed, 0x57A9E000ULL + j));
    double target = bound(j);
    switch (profile) {
      case Profile::saturating_spiky: {
        std::size_t pick = rng.below(g.size());
        fill_group(f, {g[pick]}, target, beta, rng);
        break;
      }
      case Profile::saturating_spread:
        fill_group(f, g.members(), target, beta, rng);
        break;
      case Profile::random_sparse: {
        // Random sub-support; the bound is scaled by a U(0,1] factor so the
        // member sits strictly inside the class.
        int n = 1 + static_cast<int>(rng.below(g.size()));
        auto ids = rng.subset(static_cast<int>(g.size()), n);
        std::vector<MultiIndex> chosen;
        chosen.reserve(ids.size());
        for (int i : ids) chosen.push_back(g[i]);
        double theta = 1.0 - rng.uniform01();  // (0,1]
        fill_group(f, chosen, target * theta, beta, rng);
        break;
      }
    }
  }
  return f;
}

}  // namespace

SparseCoefFn delta_s(const SparseCoefFn& f, const DyadicVector& s) {
  if (static_cast<int>(s.size()) != f.dim())
    throw std::invalid_argument("level vector dimension mismatch");
  SparseCoefFn out(f.dim());
  for (const auto& [k, c] : f.terms())
    if (dyadic_levels(k) == s) out.set(k, c);
  return out;
}

SparseCoefFn layer_part(const SparseCoefFn& f, int j) {
  if (j < 0) throw std::invalid_argument("layer index must be nonnegative");
  SparseCoefFn out(f.dim());
  for (const auto& [k, c] : f.terms())
    if (layer_of(k) == j) out.set(k, c);
  return out;
}

SparseCoefFn shell_part(const SparseCoefFn& f, int j) {
  if (j < 0) throw std::invalid_argument("shell index must be nonnegative");
  SparseCoefFn out(f.dim());
  for (const auto& [k, c] : f.terms())
    if (shell_of(k) == j) out.set(k, c);
  return out;
}

double a_beta_norm(const SparseCoefFn& f, double beta) {
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("beta must lie in (0,1]");
  long double acc = 0.0L;
  for (const auto& [k, c] : f.terms())
    acc += (long double)std::pow(std::abs(c), beta);
  return std::pow(static_cast<double>(acc), 1.0 / beta);
}

MembershipReport membership_W(const SparseCoefFn& f, const ClassParamsW& p,
                              double rel_tol) {
  check_params_w(p);
  auto norms = grouped_norms(f, p.beta, false);
  int d = f.dim();
  return check_grouped(
      norms, [&](int j) { return layer_bound_w(p, j, d); }, rel_tol);
}

MembershipReport membership_A(const SparseCoefFn& f, const ClassParamsA& p,
                              double rel_tol) {
  check_params_a(p);
  auto norms = grouped_norms(f, p.beta, true);
  return check_grouped(
      norms, [&](int j) { return shell_bound_a(p, j); }, rel_tol);
}

Profile profile_from_string(const std::string& s) {
  if (s == "saturating_spiky") return Profile::saturating_spiky;
  if (s == "saturating_spread") return Profile::saturating_spread;
  if (s == "random_sparse") return Profile::random_sparse;
  throw std::invalid_argument("unknown profile: " + s);
}

std::string to_string(Profile p) {
  switch (p) {
    case Profile::saturating_spiky: return "saturating_spiky";
    case Profile::saturating_spread: return "saturating_spread";
    case Profile::random_sparse: return "random_sparse";
  }
  return "?";
}

int default_j_max(int d) {
  if (d <= 1) return 12;
  if (d == 2) return 8;
  return 5;
}

SparseCoefFn generate_W(const ClassParamsW& p, int d, int j_max,
                        std::uint64_t seed, Profile profile) {
  check_params_w(p);
  return generate_grouped(
      d, j_max, seed, profile, p.beta,
      [&](int j) { return layer_bound_w(p, j, d); },
      [&](int j) { return layer(j, d); });
}

SparseCoefFn generate_A(const ClassParamsA& p, int d, int j_max,
                        std::uint64_t seed, Profile profile) {
  check_params_a(p);
  return generate_grouped(
      d, j_max, seed, profile, p.beta,
      [&](int j) { return shell_bound_a(p, j); },
      [&](int j) {
        // l_inf shell j: the cube of radius 2^j - 1 minus the previous one.
        IndexSet outer = full_cube((1 << j) - 1, d);
        if (j == 0) return outer;
        IndexSet inner = full_cube((1 << (j - 1)) - 1, d);
        return set_difference(outer, inner);
      });
}

}  // namespace trigsamp
