#include "effindex/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "effindex/error.hpp"

namespace effindex {

namespace {

constexpr double kQnConsistency = 2.2219;  // Gaussian consistency factor

double clamp12(double d) { return std::min(2.0, std::max(1.0, d)); }

void check_path(const Profile& path, const char* method) {
  if (path.size() < kMinSamplesWarn)
    throw InsufficientDataError(std::string(method) + ": need T >= " +
                                std::to_string(kMinSamplesWarn) + ", got " +
                                std::to_string(path.size()));
  const double first = path.values.front();
  for (double v : path.values)
    if (v != first) return;
  throw DegenerateDataError(std::string(method) + ": zero-variance path");
}

// Two-point log-log slope; Hall-Wood and Genton regress over lags {1, 2}.
double two_point_slope(const ScalingPoint& a, const ScalingPoint& b,
                       const char* method) {
  if (!(a.fluctuation > 0.0) || !(b.fluctuation > 0.0))
    throw DegenerateDataError(std::string(method) + ": zero fluctuation");
  return (std::log(b.fluctuation) - std::log(a.fluctuation)) /
         (std::log(b.scale) - std::log(a.scale));
}

std::vector<double> lag_increments(const Profile& path, int lag) {
  const std::size_t t = path.size();
  std::vector<double> inc(t - static_cast<std::size_t>(lag));
  for (std::size_t i = 0; i + lag < t; ++i)
    inc[i] = path.values[i + lag] - path.values[i];
  return inc;
}

}  // namespace

double qn_scale(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) throw InsufficientDataError("qn_scale: need >= 2 values");
  std::vector<double> xs(values.begin(), values.end());
  std::sort(xs.begin(), xs.end());

  const long long h = static_cast<long long>(n) / 2 + 1;
  const long long k = h * (h - 1) / 2;

  // Pairs (i < j) with xs[j] - xs[i] <= bound, counted by a two-pointer
  // sweep; xs is sorted so the window start is monotone.
  auto count_le = [&](double bound) {
    long long count = 0;
    std::size_t i = 0;
    for (std::size_t j = 0; j < n; ++j) {
      while (xs[j] - xs[i] > bound) ++i;
      count += static_cast<long long>(j - i);
    }
    return count;
  };

  double lo = 0.0;
  double hi = xs[n - 1] - xs[0];
  if (!(hi > 0.0)) return 0.0;
  if (count_le(0.0) >= k) return 0.0;  // k-th gap is a tie at zero

  // Bisect on the gap value until lo and hi are adjacent doubles. The k-th
  // smallest gap is then exactly hi: every gap in (lo, hi] equals hi, and
  // the invariant count_le(lo) < k <= count_le(hi) pins it there.
  while (true) {
    const double mid = lo + (hi - lo) / 2.0;
    if (!(mid > lo) || !(mid < hi)) break;
    if (count_le(mid) >= k)
      hi = mid;
    else
      lo = mid;
  }
  return kQnConsistency * hi;
}

FractalEstimate fd_hall_wood(const Profile& path) {
  check_path(path, "hall-wood");
  const std::size_t t = path.size();
  FractalEstimate est;
  est.method = FractalMethod::HallWood;
  for (int l : {1, 2}) {
    const std::size_t blocks = (t - 1) / static_cast<std::size_t>(l);
    double sum = 0.0;
    for (std::size_t i = 1; i <= blocks; ++i)
      sum += std::abs(path.values[i * l] - path.values[(i - 1) * l]);
    est.points.push_back({static_cast<double>(l),
                          static_cast<double>(l) / static_cast<double>(t) * sum});
  }
  const double slope = two_point_slope(est.points[0], est.points[1], "hall-wood");
  est.d_raw = 2.0 - slope;
  est.d_clamped = clamp12(est.d_raw);
  return est;
}

FractalEstimate fd_genton(const Profile& path) {
  check_path(path, "genton");
  FractalEstimate est;
  est.method = FractalMethod::Genton;
  for (int l : {1, 2}) {
    const std::vector<double> inc = lag_increments(path, l);
    const double qn = qn_scale(inc);
    est.points.push_back({static_cast<double>(l), 0.5 * qn * qn});
  }
  const double slope = two_point_slope(est.points[0], est.points[1], "genton");
  est.d_raw = 2.0 - slope / 2.0;
  est.d_clamped = clamp12(est.d_raw);
  return est;
}

FractalEstimate fd_periodogram(const Profile& path,
                               const PeriodogramParams& params,
                               kernels::Exec exec) {
  check_path(path, "periodogram");
  if (!(params.cutoff_exponent > 0.0) || !(params.cutoff_exponent < 1.0))
    throw ParameterError("periodogram: cutoff_exponent must be in (0, 1)");
  const std::size_t t = path.size();
  const int m = static_cast<int>(
      std::floor(std::pow(static_cast<double>(t), params.cutoff_exponent)));
  if (m < 3)
    throw InsufficientDataError("periodogram: fewer than 3 Fourier frequencies");

  const std::vector<double> ordinates =
      kernels::periodogram(path.values, m, exec);
  FractalEstimate est;
  est.method = FractalMethod::Periodogram;
  est.points.resize(m);
  for (int j = 1; j <= m; ++j)
    est.points[j - 1] = {static_cast<double>(j), ordinates[j - 1]};

  // ln I on ln omega_j; omega_j = 2*pi*j/T differs from j by a constant
  // factor, so regressing on the stored harmonic index gives the same slope.
  double slope;
  try {
    slope = fit_power_law(est.points).slope;
  } catch (const DegenerateDataError&) {
    throw DegenerateDataError("periodogram: zero ordinate; D undefined");
  }
  est.d_raw = (5.0 + slope) / 2.0;
  est.d_clamped = clamp12(est.d_raw);
  return est;
}

FractalEstimate fd_wavelet(const Profile& path, const WaveletParams& params) {
  check_path(path, "wavelet");
  if (params.min_coeffs < 2)
    throw ParameterError("wavelet: min_coeffs must be >= 2");
  const std::size_t t = path.size();
  const int max_level =
      static_cast<int>(std::floor(std::log2(static_cast<double>(t)))) - 3;

  // Daubechies 4-tap filters; the wavelet filter is the alternating-flip of
  // the scaling filter and has two vanishing moments.
  const double s3 = std::sqrt(3.0);
  const double norm = 4.0 * std::sqrt(2.0);
  const double h[4] = {(1.0 + s3) / norm, (3.0 + s3) / norm, (3.0 - s3) / norm,
                       (1.0 - s3) / norm};
  const double g[4] = {h[3], -h[2], h[1], -h[0]};

  FractalEstimate est;
  est.method = FractalMethod::Wavelet;
  std::vector<double> approx = path.values;
  for (int level = 1; level <= max_level; ++level) {
    std::size_t n = approx.size();
    if (n % 2 == 1) {
      approx.pop_back();  // periodic DWT needs even length
      --n;
    }
    const std::size_t half = n / 2;
    if (half < static_cast<std::size_t>(params.min_coeffs)) break;
    std::vector<double> next(half);
    double detail_var = 0.0;
    for (std::size_t i = 0; i < half; ++i) {
      double a = 0.0, d = 0.0;
      for (int tap = 0; tap < 4; ++tap) {
        const double v = approx[(2 * i + static_cast<std::size_t>(tap)) % n];
        a += h[tap] * v;
        d += g[tap] * v;
      }
      next[i] = a;
      detail_var += d * d;
    }
    detail_var /= static_cast<double>(half);
    est.points.push_back({std::pow(2.0, level), detail_var});
    approx = std::move(next);
  }
  if (est.points.size() < 3)
    throw InsufficientDataError("wavelet: fewer than 3 usable levels");

  double beta;
  try {
    beta = fit_power_law(est.points).slope;
  } catch (const DegenerateDataError&) {
    throw DegenerateDataError("wavelet: zero detail variance; D undefined");
  }
  const double h_est = (beta - 1.0) / 2.0;
  est.d_raw = 2.0 - h_est;
  est.d_clamped = clamp12(est.d_raw);
  return est;
}

}  // namespace effindex
