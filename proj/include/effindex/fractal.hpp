#pragma once

#include <span>
#include <vector>

#include "effindex/kernels.hpp"
#include "effindex/scaling.hpp"
#include "effindex/series.hpp"

namespace effindex {

enum class FractalMethod { Periodogram, Wavelet, Genton, HallWood };

struct PeriodogramParams {
  double cutoff_exponent = 2.0 / 3.0;  // regress over j = 1..floor(T^e)
};

struct WaveletParams {
  int min_coeffs = 8;  // levels with fewer detail coefficients are excluded
};

/// One fractal-dimension estimate of a path, with the points behind the fit.
/// Scale meaning per method: lag l for Hall-Wood and Genton, harmonic index
/// j for the periodogram, dyadic scale 2^j for the wavelet estimator.
struct FractalEstimate {
  FractalMethod method = FractalMethod::HallWood;
  double d_raw = 0.0;
  double d_clamped = 0.0;  // d_raw clamped to [1, 2]
  std::vector<ScalingPoint> points;
};

// Box-increment estimator: A(l) = (l/T) * sum |Y(il) - Y((i-1)l)| over
// l in {1, 2}; D = 2 - slope of ln A(l) on ln l.
FractalEstimate fd_hall_wood(const Profile& path);

// Robust variogram estimator: V(l) = Qn(lag-l increments)^2 / 2 over
// l in {1, 2}; D = 2 - slope/2 of ln V(l) on ln l.
FractalEstimate fd_genton(const Profile& path);

// Low-frequency log-periodogram slope: D = (5 + beta)/2 where beta is the
// slope of ln I(omega_j) on ln omega_j over j = 1..floor(T^cutoff_exponent).
FractalEstimate fd_periodogram(const Profile& path,
                               const PeriodogramParams& params = {},
                               kernels::Exec exec = kernels::Exec::Parallel);

// Dyadic detail-variance slope from a Daubechies 4-tap DWT with periodic
// boundary: beta = slope of ln nu2_j on ln 2^j, H = (beta - 1)/2, D = 2 - H.
FractalEstimate fd_wavelet(const Profile& path, const WaveletParams& params = {});

// Rousseeuw-Croux Qn robust scale: 2.2219 times the k-th smallest pairwise
// absolute difference, k = C(h, 2), h = floor(n/2) + 1. Exact order
// statistic, selected without materializing the n*(n-1)/2 differences.
double qn_scale(std::span<const double> values);

}  // namespace effindex
