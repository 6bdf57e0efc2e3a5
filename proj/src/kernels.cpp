#include "effindex/kernels.hpp"

#include <cmath>
#include <numbers>

#include "effindex/error.hpp"

namespace effindex::kernels {

namespace {

// Fluctuations smaller than this fraction of the path's mean square are
// roundoff left over from an exact fit; flush them to zero so degenerate
// paths surface as zero fluctuation.
constexpr double kZeroFloor = 1e-24;

double mean_square(std::span<const double> path) {
  double acc = 0.0;
  for (double v : path) acc += v * v;
  return path.empty() ? 0.0 : acc / static_cast<double>(path.size());
}

// Residual mean square of one order-1 or order-2 fit on path[start..start+s),
// using the centered coordinate u = i - (s-1)/2 whose odd power sums vanish.
// s2/s4 are the precomputed sums of u^2 and u^4.
double box_fit_mse(const double* seg, int s, int order, double s2, double s4) {
  const double half = 0.5 * static_cast<double>(s - 1);
  double b0 = 0.0, b1 = 0.0, b2 = 0.0;
  for (int i = 0; i < s; ++i) {
    const double u = static_cast<double>(i) - half;
    b0 += seg[i];
    b1 += seg[i] * u;
    if (order == 2) b2 += seg[i] * u * u;
  }
  double c0, c1, c2 = 0.0;
  c1 = b1 / s2;
  if (order == 1) {
    c0 = b0 / static_cast<double>(s);
  } else {
    const double det = static_cast<double>(s) * s4 - s2 * s2;
    c0 = (s4 * b0 - s2 * b2) / det;
    c2 = (static_cast<double>(s) * b2 - s2 * b0) / det;
  }
  double ssr = 0.0;
  for (int i = 0; i < s; ++i) {
    const double u = static_cast<double>(i) - half;
    const double r = seg[i] - (c0 + c1 * u + c2 * u * u);
    ssr += r * r;
  }
  return ssr / static_cast<double>(s);
}

// Mean box MSE at one scale; boxes cover the path from the front and the
// back so no sample is discarded when s does not divide T.
double dfa_f2_at_scale(std::span<const double> path, int s, int order) {
  const int t = static_cast<int>(path.size());
  const int boxes = t / s;
  const double half = 0.5 * static_cast<double>(s - 1);
  double s2 = 0.0, s4 = 0.0;
  for (int i = 0; i < s; ++i) {
    const double u = static_cast<double>(i) - half;
    s2 += u * u;
    s4 += u * u * u * u;
  }
  double acc = 0.0;
  for (int b = 0; b < boxes; ++b)
    acc += box_fit_mse(path.data() + b * s, s, order, s2, s4);
  for (int b = 0; b < boxes; ++b)
    acc += box_fit_mse(path.data() + (t - (b + 1) * s), s, order, s2, s4);
  return acc / static_cast<double>(2 * boxes);
}

double dma_f2_at_window(std::span<const double> path, int window) {
  const int t = static_cast<int>(path.size());
  const int k = (window - 1) / 2;
  const double w = static_cast<double>(window);
  double acc = 0.0;
  for (int i = k; i < t - k; ++i) {
    double sum = 0.0;
    for (int j = i - k; j <= i + k; ++j) sum += path[j];
    const double dev = path[i] - sum / w;
    acc += dev * dev;
  }
  return acc / static_cast<double>(t - 2 * k);
}

double k2_at_lag(std::span<const double> path, int tau,
                 IncrementSampling sampling) {
  const int t = static_cast<int>(path.size());
  const int step = sampling == IncrementSampling::Dense ? 1 : tau;
  double acc = 0.0;
  long long n = 0;
  for (int i = 0; i + tau < t; i += step) {
    const double d = path[i + tau] - path[i];
    acc += d * d;
    ++n;
  }
  return acc / static_cast<double>(n);
}

// One periodogram ordinate by rotation recurrence (one sin/cos pair per
// frequency instead of per sample).
double periodogram_ordinate(std::span<const double> values, int j) {
  const int t = static_cast<int>(values.size());
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(j) /
                       static_cast<double>(t);
  const double wr = std::cos(angle);
  const double wi = std::sin(angle);
  double pr = 1.0, pi = 0.0;
  double cr = 0.0, ci = 0.0;
  for (int i = 0; i < t; ++i) {
    cr += values[i] * pr;
    ci += values[i] * pi;
    const double nr = pr * wr - pi * wi;
    pi = pr * wi + pi * wr;
    pr = nr;
  }
  return (cr * cr + ci * ci) / static_cast<double>(t);
}

void flush_zero_floor(std::vector<double>& f2, double ms) {
  const double floor = kZeroFloor * ms;
  for (double& v : f2)
    if (v < floor) v = 0.0;
}

}  // namespace

std::vector<double> dfa_fluctuations(std::span<const double> path,
                                     std::span<const int> scales, int order,
                                     Exec exec) {
  if (order != 1 && order != 2)
    throw ParameterError("dfa: order must be 1 or 2");
  const int n = static_cast<int>(scales.size());
  std::vector<double> f2(n);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i)
      f2[i] = dfa_f2_at_scale(path, scales[i], order);
  } else {
    for (int i = 0; i < n; ++i)
      f2[i] = dfa_f2_at_scale(path, scales[i], order);
  }
  flush_zero_floor(f2, mean_square(path));
  return f2;
}

std::vector<double> dma_fluctuations(std::span<const double> path,
                                     std::span<const int> windows, Exec exec) {
  const int n = static_cast<int>(windows.size());
  std::vector<double> f2(n);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) f2[i] = dma_f2_at_window(path, windows[i]);
  } else {
    for (int i = 0; i < n; ++i) f2[i] = dma_f2_at_window(path, windows[i]);
  }
  flush_zero_floor(f2, mean_square(path));
  return f2;
}

std::vector<double> hhca_k2(std::span<const double> path, int tau_max,
                            IncrementSampling sampling, Exec exec) {
  std::vector<double> k2(tau_max);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int tau = 1; tau <= tau_max; ++tau)
      k2[tau - 1] = k2_at_lag(path, tau, sampling);
  } else {
    for (int tau = 1; tau <= tau_max; ++tau)
      k2[tau - 1] = k2_at_lag(path, tau, sampling);
  }
  flush_zero_floor(k2, mean_square(path));
  return k2;
}

std::vector<double> periodogram(std::span<const double> values, int num_freqs,
                                Exec exec) {
  std::vector<double> ordinates(num_freqs);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (int j = 1; j <= num_freqs; ++j)
      ordinates[j - 1] = periodogram_ordinate(values, j);
  } else {
    for (int j = 1; j <= num_freqs; ++j)
      ordinates[j - 1] = periodogram_ordinate(values, j);
  }
  return ordinates;
}

}  // namespace effindex::kernels

namespace effindex::ref {

using kernels::IncrementSampling;

namespace {

// Gaussian elimination with partial pivoting on a small dense system.
void solve_small(double a[3][3], double b[3], int n) {
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a[col][c], a[piv][c]);
      std::swap(b[col], b[piv]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    for (int c = r + 1; c < n; ++c) b[r] -= a[r][c] * b[c];
    b[r] /= a[r][r];
  }
}

}  // namespace

std::vector<double> dfa_fluctuations(std::span<const double> path,
                                     std::span<const int> scales, int order) {
  const int t = static_cast<int>(path.size());
  double ms = 0.0;
  for (double v : path) ms += v * v;
  ms /= static_cast<double>(t);

  std::vector<double> f2;
  f2.reserve(scales.size());
  for (int s : scales) {
    const int boxes = t / s;
    std::vector<int> starts;
    for (int b = 0; b < boxes; ++b) starts.push_back(b * s);
    for (int b = 0; b < boxes; ++b) starts.push_back(t - (b + 1) * s);
    double acc = 0.0;
    const double denom = static_cast<double>(s - 1);
    for (int start : starts) {
      // Normal equations in the normalized coordinate x = i/(s-1) in [0, 1],
      // which keeps the small system well conditioned at large scales.
      const int n = order + 1;
      double xtx[3][3] = {};
      double xty[3] = {};
      for (int i = 0; i < s; ++i) {
        const double x = static_cast<double>(i) / denom;
        double xpow[5];
        double pow_r = 1.0;
        for (int p = 0; p < 2 * n - 1; ++p) {
          xpow[p] = pow_r;
          pow_r *= x;
        }
        for (int r = 0; r < n; ++r) {
          for (int c = 0; c < n; ++c) xtx[r][c] += xpow[r + c];
          xty[r] += path[start + i] * xpow[r];
        }
      }
      solve_small(xtx, xty, n);
      double ssr = 0.0;
      for (int i = 0; i < s; ++i) {
        const double x = static_cast<double>(i) / denom;
        double fitted = 0.0, pw = 1.0;
        for (int r = 0; r < n; ++r) {
          fitted += xty[r] * pw;
          pw *= x;
        }
        const double res = path[start + i] - fitted;
        ssr += res * res;
      }
      acc += ssr / static_cast<double>(s);
    }
    double v = acc / static_cast<double>(2 * boxes);
    if (v < 1e-24 * ms) v = 0.0;
    f2.push_back(v);
  }
  return f2;
}

std::vector<double> dma_fluctuations(std::span<const double> path,
                                     std::span<const int> windows) {
  const int t = static_cast<int>(path.size());
  double ms = 0.0;
  for (double v : path) ms += v * v;
  ms /= static_cast<double>(t);

  std::vector<double> f2;
  for (int w : windows) {
    const int k = (w - 1) / 2;
    double acc = 0.0;
    for (int i = k; i < t - k; ++i) {
      double sum = 0.0;
      for (int j = i - k; j <= i + k; ++j) sum += path[j];
      const double dev = path[i] - sum / static_cast<double>(w);
      acc += dev * dev;
    }
    double v = acc / static_cast<double>(t - 2 * k);
    if (v < 1e-24 * ms) v = 0.0;
    f2.push_back(v);
  }
  return f2;
}

std::vector<double> hhca_k2(std::span<const double> path, int tau_max,
                            IncrementSampling sampling) {
  const int t = static_cast<int>(path.size());
  double ms = 0.0;
  for (double v : path) ms += v * v;
  ms /= static_cast<double>(t);

  std::vector<double> k2;
  for (int tau = 1; tau <= tau_max; ++tau) {
    const int step = sampling == IncrementSampling::Dense ? 1 : tau;
    double acc = 0.0;
    long long n = 0;
    for (int i = 0; i + tau < t; i += step) {
      const double d = path[i + tau] - path[i];
      acc += d * d;
      ++n;
    }
    double v = acc / static_cast<double>(n);
    if (v < 1e-24 * ms) v = 0.0;
    k2.push_back(v);
  }
  return k2;
}

std::vector<double> periodogram(std::span<const double> values, int num_freqs) {
  const int t = static_cast<int>(values.size());
  std::vector<double> ordinates;
  for (int j = 1; j <= num_freqs; ++j) {
    const double w = 2.0 * std::numbers::pi * static_cast<double>(j) /
                     static_cast<double>(t);
    double cr = 0.0, ci = 0.0;
    for (int i = 0; i < t; ++i) {
      cr += values[i] * std::cos(w * static_cast<double>(i));
      ci -= values[i] * std::sin(w * static_cast<double>(i));
    }
    ordinates.push_back((cr * cr + ci * ci) / static_cast<double>(t));
  }
  return ordinates;
}

}  // namespace effindex::ref
