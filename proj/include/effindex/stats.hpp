#pragma once

#include <string>

#include "effindex/series.hpp"

namespace effindex {

struct Acf1Result {
  double rho1 = 0.0;  // in [-1, 1]
};

enum class KpssVerdict {
  PAbove5,       // statistic <= 0.463
  PBetween1And5, // 0.463 < statistic <= 0.739
  PBelow1,       // statistic > 0.739
};

// Level-stationarity critical values (intercept-only case).
inline constexpr double kKpssCritical5 = 0.463;
inline constexpr double kKpssCritical1 = 0.739;

struct KpssParams {
  int bandwidth = 0;  // 0 = automatic rule floor(4 * (T/100)^(1/4))
};

struct KpssResult {
  double statistic = 0.0;
  int bandwidth = 0;
  KpssVerdict verdict = KpssVerdict::PAbove5;
};

// First-order sample autocorrelation
//   rho(1) = sum_{t<T} (x_t - m)(x_{t+1} - m) / sum_t (x_t - m)^2.
Acf1Result acf1(const ReturnSeries& returns);

// KPSS level-stationarity statistic: T^-2 sum S_t^2 / lrv, with partial sums
// S_t of the demeaned series and Bartlett-kernel long-run variance lrv.
KpssResult kpss(const ReturnSeries& returns, const KpssParams& params = {});

KpssVerdict kpss_verdict(double statistic);
std::string to_string(KpssVerdict verdict);

}  // namespace effindex
