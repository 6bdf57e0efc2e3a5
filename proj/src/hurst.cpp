#include "effindex/hurst.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "effindex/error.hpp"

namespace effindex {

namespace {

double clamp01(double h) { return std::min(1.0, std::max(0.0, h)); }

// Constant returns demean to a profile of pure accumulation roundoff;
// reject them up front instead of fitting that dust.
void reject_constant(const ReturnSeries& returns, const char* method) {
  const double first = returns.values.empty() ? 0.0 : returns.values.front();
  for (double v : returns.values)
    if (v != first) return;
  throw DegenerateDataError(std::string(method) +
                            ": zero-variance returns; H undefined");
}

std::vector<ScalingPoint> to_points(std::span<const int> scales,
                                    std::span<const double> fluctuations) {
  std::vector<ScalingPoint> pts(scales.size());
  for (std::size_t i = 0; i < scales.size(); ++i)
    pts[i] = {static_cast<double>(scales[i]), fluctuations[i]};
  return pts;
}

}  // namespace

std::vector<int> dfa_scale_grid(std::size_t t, const DfaParams& params) {
  if (params.min_scale < 4)
    throw ParameterError("dfa: min_scale must be >= 4");
  if (params.max_scale_divisor < 2)
    throw ParameterError("dfa: max_scale_divisor must be >= 2");
  if (params.num_scales < 5)
    throw ParameterError("dfa: num_scales must be >= 5");
  const int s_min = params.min_scale;
  const int s_max = static_cast<int>(t) / params.max_scale_divisor;
  std::vector<int> scales;
  if (s_max >= s_min) {
    const double l0 = std::log(static_cast<double>(s_min));
    const double l1 = std::log(static_cast<double>(s_max));
    for (int i = 0; i < params.num_scales; ++i) {
      const double f = params.num_scales == 1
                           ? 0.0
                           : static_cast<double>(i) /
                                 static_cast<double>(params.num_scales - 1);
      const int s = static_cast<int>(std::lround(std::exp(l0 + f * (l1 - l0))));
      if (scales.empty() || s > scales.back()) scales.push_back(s);
    }
  }
  if (scales.size() < 5)
    throw InsufficientDataError(
        "dfa: fewer than 5 distinct scales between " + std::to_string(s_min) +
        " and T/" + std::to_string(params.max_scale_divisor) +
        " (T=" + std::to_string(t) + ")");
  return scales;
}

HurstEstimate dfa_path(const Profile& path, int order, const DfaParams& params,
                       kernels::Exec exec) {
  if (order != 1 && order != 2)
    throw ParameterError("dfa: order must be 1 or 2, got " + std::to_string(order));
  const std::vector<int> scales = dfa_scale_grid(path.size(), params);
  const std::vector<double> f2 =
      kernels::dfa_fluctuations(path.values, scales, order, exec);

  HurstEstimate est;
  est.method = HurstMethod::Dfa;
  est.points = to_points(scales, f2);
  try {
    est.h_raw = fit_power_law(est.points).slope / 2.0;
  } catch (const DegenerateDataError&) {
    throw DegenerateDataError(
        "dfa: zero fluctuation (profile removed exactly by the order-" +
        std::to_string(order) + " fit); H undefined");
  }
  est.h_clamped = clamp01(est.h_raw);
  est.sub_estimates = {est.h_raw};
  return est;
}

HurstEstimate dfa(const ReturnSeries& returns, int order,
                  const DfaParams& params, kernels::Exec exec) {
  if (returns.t() < kMinSamplesHard)
    throw InsufficientDataError("dfa: need T >= " +
                                std::to_string(kMinSamplesHard) + ", got " +
                                std::to_string(returns.t()));
  reject_constant(returns, "dfa");
  return dfa_path(profile(returns), order, params, exec);
}

HurstEstimate dma_path(const Profile& path, const DmaParams& params,
                       kernels::Exec exec) {
  if (params.min_window < 3 || params.min_window % 2 == 0)
    throw ParameterError("dma: min_window must be odd and >= 3");
  if (params.max_window < params.min_window || params.max_window % 2 == 0)
    throw ParameterError("dma: max_window must be odd and >= min_window");
  if (params.window_step < 2 || params.window_step % 2 != 0)
    throw ParameterError("dma: window_step must be even and >= 2");
  if (path.size() < kMinSamplesWarn)
    throw InsufficientDataError("dma: need T >= " +
                                std::to_string(kMinSamplesWarn) + ", got " +
                                std::to_string(path.size()));
  if (static_cast<std::size_t>(params.max_window) > path.size())
    throw InsufficientDataError("dma: max_window exceeds series length");
  std::vector<int> windows;
  for (int w = params.min_window; w <= params.max_window; w += params.window_step)
    windows.push_back(w);
  if (windows.size() < 3)
    throw ParameterError("dma: need >= 3 windows");
  const std::vector<double> f2 =
      kernels::dma_fluctuations(path.values, windows, exec);

  HurstEstimate est;
  est.method = HurstMethod::Dma;
  est.points = to_points(windows, f2);
  try {
    est.h_raw = fit_power_law(est.points).slope / 2.0;
  } catch (const DegenerateDataError&) {
    throw DegenerateDataError("dma: zero fluctuation (constant profile); H undefined");
  }
  est.h_clamped = clamp01(est.h_raw);
  est.sub_estimates = {est.h_raw};
  return est;
}

HurstEstimate dma(const ReturnSeries& returns, const DmaParams& params,
                  kernels::Exec exec) {
  if (returns.t() < kMinSamplesWarn)
    throw InsufficientDataError("dma: need T >= " +
                                std::to_string(kMinSamplesWarn) + ", got " +
                                std::to_string(returns.t()));
  reject_constant(returns, "dma");
  return dma_path(profile(returns), params, exec);
}

HurstEstimate hhca_path(const Profile& path, const HhcaParams& params,
                        kernels::Exec exec) {
  if (params.tau_max_lo < 3)
    throw ParameterError("hhca: tau_max_lo must be >= 3");
  if (params.tau_max_hi < params.tau_max_lo)
    throw ParameterError("hhca: tau_max_hi must be >= tau_max_lo");
  if (path.size() < kMinSamplesWarn)
    throw InsufficientDataError("hhca: need T >= " +
                                std::to_string(kMinSamplesWarn) + ", got " +
                                std::to_string(path.size()));
  if (static_cast<std::size_t>(params.tau_max_hi) >= path.size())
    throw InsufficientDataError("hhca: tau_max_hi exceeds series length");

  HurstEstimate est;
  est.method = HurstMethod::Hhca;
  const int hi = params.tau_max_hi;

  const std::vector<double> k2_dense =
      kernels::hhca_k2(path.values, hi, kernels::IncrementSampling::Dense, exec);
  const std::vector<double> k2_coarse =
      kernels::hhca_k2(path.values, hi, kernels::IncrementSampling::Coarse, exec);

  std::vector<int> taus(hi);
  for (int tau = 1; tau <= hi; ++tau) taus[tau - 1] = tau;
  est.points = to_points(taus, k2_dense);
  est.coarse_points = to_points(taus, k2_coarse);

  // Jackknife: one slope per tau_max, per sampling variant; h_raw is the
  // mean of the two variant means.
  double variant_mean_sum = 0.0;
  for (const auto* pts : {&est.points, &est.coarse_points}) {
    double sum = 0.0;
    int n = 0;
    for (int tau_max = params.tau_max_lo; tau_max <= hi; ++tau_max) {
      std::span<const ScalingPoint> head(pts->data(),
                                         static_cast<std::size_t>(tau_max));
      double h;
      try {
        h = fit_power_law(head).slope / 2.0;
      } catch (const DegenerateDataError&) {
        throw DegenerateDataError("hhca: zero K2 (constant profile); H undefined");
      }
      est.sub_estimates.push_back(h);
      sum += h;
      ++n;
    }
    variant_mean_sum += sum / static_cast<double>(n);
  }
  est.h_raw = variant_mean_sum / 2.0;
  est.h_clamped = clamp01(est.h_raw);
  return est;
}

HurstEstimate hhca(const ReturnSeries& returns, const HhcaParams& params,
                   kernels::Exec exec) {
  if (returns.t() < kMinSamplesWarn)
    throw InsufficientDataError("hhca: need T >= " +
                                std::to_string(kMinSamplesWarn) + ", got " +
                                std::to_string(returns.t()));
  reject_constant(returns, "hhca");
  return hhca_path(profile(returns), params, exec);
}

}  // namespace effindex
