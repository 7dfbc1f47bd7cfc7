#include "trigsamp/rate_fit.hpp"

#include <cmath>
#include <stdexcept>

namespace trigsamp {

RateFit fit_rate(const std::vector<std::pair<double, double>>& v_err,
                 double strip_power) {
  RateFit fit;
  fit.strip_power = strip_power;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < v_err.size(); ++i) {
    const auto& [v, err] = v_err[i];
    if (!(v > 0.0)) throw std::invalid_argument("v must be positive");
    double y = err;
    if (strip_power != 0.0) y /= std::pow(std::log(2.0 * v), strip_power);
    if (!(y > 0.0) || !std::isfinite(y)) {
      fit.dropped.push_back(static_cast<int>(i));
      continue;
    }
    xs.push_back(std::log(v));
    ys.push_back(std::log(y));
  }
  fit.points_used = static_cast<int>(xs.size());
  if (fit.points_used < 4)
    throw std::invalid_argument("need at least 4 usable points for a rate fit");

  double n = fit.points_used;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (int i = 0; i < fit.points_used; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom <= 0.0) throw std::invalid_argument("degenerate abscissae");
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss_tot = syy - sy * sy / n;
  double ss_res = 0.0;
  for (int i = 0; i < fit.points_used; ++i) {
    double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += r * r;
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace trigsamp
