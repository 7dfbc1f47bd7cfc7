#pragma once

#include <utility>
#include <vector>

namespace trigsamp {

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
  int points_used = 0;
  double strip_power = 0.0;
  std::vector<int> dropped;   // positions of nonpositive errors
};

// Ordinary least squares on (ln v, ln err'), err' = err / (ln 2v)^strip_power.
// Nonpositive errors are dropped with a record; fewer than 4 surviving points
// is an error.
RateFit fit_rate(const std::vector<std::pair<double, double>>& v_err,
                 double strip_power = 0.0);

}  // namespace trigsamp
