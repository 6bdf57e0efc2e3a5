#pragma once

#include <span>
#include <vector>

namespace effindex {

/// One (scale, fluctuation) pair of a log-log scaling curve: box size with
/// F^2(s), window with F^2(lambda), lag with K2(tau), harmonic index with
/// I(omega_j), or dyadic scale 2^j with the level-j detail variance.
struct ScalingPoint {
  double scale = 0.0;
  double fluctuation = 0.0;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

// Plain OLS of y on x. Requires >= 2 points and nonzero x variance.
LinearFit ols_fit(std::span<const double> x, std::span<const double> y);

// Log-log OLS shared by the scaling estimators: regresses ln(fluctuation)
// on ln(scale). Requires >= 3 points, all fluctuations > 0.
LinearFit fit_power_law(std::span<const ScalingPoint> points);

}  // namespace effindex
