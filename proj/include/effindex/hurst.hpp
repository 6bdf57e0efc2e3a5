#pragma once

#include <vector>

#include "effindex/kernels.hpp"
#include "effindex/scaling.hpp"
#include "effindex/series.hpp"

namespace effindex {

enum class HurstMethod { Dfa, Dma, Hhca };

struct DfaParams {
  int min_scale = 5;
  int max_scale_divisor = 5;  // s_max = T / max_scale_divisor
  int num_scales = 20;        // log-spaced, rounded to unique integers
};

struct DmaParams {
  int min_window = 3;
  int max_window = 21;
  int window_step = 2;  // odd windows only (centered moving average)
};

struct HhcaParams {
  int tau_max_lo = 5;
  int tau_max_hi = 20;  // jackknife over tau_max = lo..hi, tau_min fixed at 1
};

/// One Hurst-exponent estimate with its scaling curve behind it.
///
/// sub_estimates holds the members whose mean is h_raw: a single value for
/// DFA and DMA, and for HHCA the 16 jackknife slopes of the dense variant
/// followed by the 16 of the coarse variant (h_raw is the mean of the two
/// variant means, which equals the mean of all 32). For HHCA, points holds
/// the dense K2 curve and coarse_points the coarse one; both are kept so
/// every sub-estimate can be recomputed from stored points.
struct HurstEstimate {
  HurstMethod method = HurstMethod::Dfa;
  double h_raw = 0.0;
  double h_clamped = 0.0;  // h_raw clamped to [0, 1]
  std::vector<ScalingPoint> points;
  std::vector<ScalingPoint> coarse_points;
  std::vector<double> sub_estimates;
};

// Detrended fluctuation analysis with polynomial order 1 or 2 on the profile
// of the returns. H = slope/2 of the log-log fit of F^2(s) on s over a
// log-spaced grid of box sizes in [min_scale, T/max_scale_divisor].
HurstEstimate dfa(const ReturnSeries& returns, int order,
                  const DfaParams& params = {},
                  kernels::Exec exec = kernels::Exec::Parallel);

// Detrending moving average on the profile: F^2(lambda) is the mean squared
// deviation from the centered moving average, lambda odd in
// [min_window, max_window]. H = slope/2 of the log-log fit.
HurstEstimate dma(const ReturnSeries& returns, const DmaParams& params = {},
                  kernels::Exec exec = kernels::Exec::Parallel);

// Height-height correlation analysis (generalized Hurst exponent, q = 2) on
// the profile. For each tau_max in [tau_max_lo, tau_max_hi], H(tau_max) =
// slope/2 of the log-log fit of K2(tau) over tau = 1..tau_max; dense and
// coarse increment sampling are jackknifed separately and averaged.
HurstEstimate hhca(const ReturnSeries& returns, const HhcaParams& params = {},
                   kernels::Exec exec = kernels::Exec::Parallel);

// Same estimators applied to an arbitrary path (no demeaning/integration).
HurstEstimate dfa_path(const Profile& path, int order,
                       const DfaParams& params = {},
                       kernels::Exec exec = kernels::Exec::Parallel);
HurstEstimate dma_path(const Profile& path, const DmaParams& params = {},
                       kernels::Exec exec = kernels::Exec::Parallel);
HurstEstimate hhca_path(const Profile& path, const HhcaParams& params = {},
                        kernels::Exec exec = kernels::Exec::Parallel);

// The log-spaced integer scale grid used by dfa(); exposed for plot export.
std::vector<int> dfa_scale_grid(std::size_t t, const DfaParams& params = {});

}  // namespace effindex
