#include "effindex/scaling.hpp"

#include <cmath>
#include <string>

#include "effindex/error.hpp"

namespace effindex {

LinearFit ols_fit(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n)
    throw InsufficientDataError("ols_fit: need >= 2 matching points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx <= 0.0)
    throw DegenerateDataError("ols_fit: zero variance in x");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  // Constant y is fit perfectly by the constant line.
  fit.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

LinearFit fit_power_law(std::span<const ScalingPoint> points) {
  if (points.size() < 3)
    throw InsufficientDataError("fit_power_law: need >= 3 points, got " +
                                std::to_string(points.size()));
  std::vector<double> lx(points.size()), ly(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].fluctuation > 0.0))
      throw DegenerateDataError(
          "fit_power_law: zero fluctuation at scale " +
          std::to_string(points[i].scale));
    lx[i] = std::log(points[i].scale);
    ly[i] = std::log(points[i].fluctuation);
  }
  return ols_fit(lx, ly);
}

}  // namespace effindex
