#include "effindex/stats.hpp"

#include <cmath>

#include "effindex/error.hpp"

namespace effindex {

Acf1Result acf1(const ReturnSeries& returns) {
  const std::size_t t = returns.t();
  if (t < 3)
    throw InsufficientDataError("acf1: need T >= 3, got " + std::to_string(t));
  double mean = 0.0;
  for (double v : returns.values) mean += v;
  mean /= static_cast<double>(t);

  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < t; ++i) {
    const double d = returns.values[i] - mean;
    den += d * d;
    if (i + 1 < t) num += d * (returns.values[i + 1] - mean);
  }
  if (den <= 0.0)
    throw DegenerateDataError("acf1: zero variance");
  return Acf1Result{num / den};
}

KpssVerdict kpss_verdict(double statistic) {
  if (statistic > kKpssCritical1) return KpssVerdict::PBelow1;
  if (statistic > kKpssCritical5) return KpssVerdict::PBetween1And5;
  return KpssVerdict::PAbove5;
}

std::string to_string(KpssVerdict verdict) {
  switch (verdict) {
    case KpssVerdict::PAbove5: return "p>0.05";
    case KpssVerdict::PBetween1And5: return "0.01<p<0.05";
    case KpssVerdict::PBelow1: return "p<0.01";
  }
  return "?";
}

KpssResult kpss(const ReturnSeries& returns, const KpssParams& params) {
  const std::size_t t = returns.t();
  if (t < 50)
    throw InsufficientDataError("kpss: need T >= 50, got " + std::to_string(t));
  if (params.bandwidth < 0)
    throw ParameterError("kpss: bandwidth must be >= 0");
  const double n = static_cast<double>(t);
  const int q = params.bandwidth > 0
                    ? params.bandwidth
                    : static_cast<int>(std::floor(4.0 * std::pow(n / 100.0, 0.25)));

  double mean = 0.0;
  for (double v : returns.values) mean += v;
  mean /= n;

  // Partial-sum numerator and lag-0 autocovariance in one pass.
  double cum = 0.0, ssq = 0.0, gamma0 = 0.0;
  for (double v : returns.values) {
    const double e = v - mean;
    cum += e;
    ssq += cum * cum;
    gamma0 += e * e;
  }
  gamma0 /= n;
  if (gamma0 <= 0.0)
    throw DegenerateDataError("kpss: zero variance");

  // Bartlett-kernel long-run variance.
  double lrv = gamma0;
  for (int j = 1; j <= q; ++j) {
    double gj = 0.0;
    for (std::size_t i = static_cast<std::size_t>(j); i < t; ++i)
      gj += (returns.values[i] - mean) * (returns.values[i - j] - mean);
    gj /= n;
    lrv += 2.0 * (1.0 - static_cast<double>(j) / (q + 1.0)) * gj;
  }

  KpssResult res;
  res.statistic = ssq / (n * n * lrv);
  res.bandwidth = q;
  res.verdict = kpss_verdict(res.statistic);
  return res;
}

}  // namespace effindex
