#include "effindex/synth.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "effindex/error.hpp"

namespace effindex {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 FFT, sign = -1 forward / +1 inverse (unnormalized).
void fft(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

// Eigenvalues of the circulant embedding of the fGn covariance (length 2t).
std::vector<double> embedding_eigenvalues(int t, double h) {
  const int m = 2 * t;
  std::vector<std::complex<double>> c(m);
  for (int k = 0; k <= t; ++k) c[k] = fgn_autocovariance(k, h);
  for (int k = 1; k < t; ++k) c[m - k] = c[k];
  fft(c, -1);
  std::vector<double> eig(m);
  for (int k = 0; k < m; ++k) eig[k] = c[k].real();
  return eig;
}

void check_fgn_spec(const SynthSpec& spec) {
  if (spec.kind != SynthKind::Fgn)
    throw ParameterError("generate_fgn: spec.kind must be fGn");
  if (!(spec.h > 0.0) || !(spec.h < 1.0))
    throw ParameterError("generate_fgn: h must be in (0, 1)");
  if (spec.t < 256 || !is_power_of_two(spec.t))
    throw ParameterError("generate_fgn: t must be a power of two >= 256");
}

}  // namespace

double GaussianRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double GaussianRng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

double fgn_autocovariance(int lag, double h) {
  const double k = std::abs(static_cast<double>(lag));
  return 0.5 * (std::pow(k + 1.0, 2.0 * h) - 2.0 * std::pow(k, 2.0 * h) +
                std::pow(std::abs(k - 1.0), 2.0 * h));
}

double fgn_embedding_min_eigenvalue(int t, double h) {
  if (t < 2 || !is_power_of_two(t))
    throw ParameterError("fgn_embedding_min_eigenvalue: t must be a power of two");
  const std::vector<double> eig = embedding_eigenvalues(t, h);
  return *std::min_element(eig.begin(), eig.end());
}

ReturnSeries generate_fgn(const SynthSpec& spec) {
  check_fgn_spec(spec);
  const int t = spec.t;
  const int m = 2 * t;
  std::vector<double> eig = embedding_eigenvalues(t, spec.h);

  double max_eig = 0.0;
  for (double e : eig) max_eig = std::max(max_eig, e);
  for (double& e : eig) {
    if (e < -1e-9 * max_eig)
      throw GenerationError(
          "generate_fgn: circulant embedding is not nonnegative definite "
          "(min eigenvalue " + std::to_string(e) + ")");
    e = std::max(e, 0.0);  // flush FFT roundoff
  }

  // Hermitian spectral sample: W_k = sqrt(eig_k / m) z_k with the documented
  // draw order z_0; (a_1, b_1) .. (a_{m/2-1}, b_{m/2-1}); z_{m/2}. The
  // inverse transform is then real with autocovariance gamma up to roundoff.
  GaussianRng rng(spec.seed);
  std::vector<std::complex<double>> w(m);
  w[0] = std::sqrt(eig[0] / m) * rng.gaussian();
  for (int k = 1; k < m / 2; ++k) {
    const double a = rng.gaussian();
    const double b = rng.gaussian();
    const double scale = std::sqrt(eig[k] / (2.0 * m));
    w[k] = std::complex<double>(scale * a, scale * b);
    w[m - k] = std::conj(w[k]);
  }
  w[m / 2] = std::sqrt(eig[m / 2] / m) * rng.gaussian();

  fft(w, +1);
  ReturnSeries out;
  out.ticker = spec.ticker;
  out.values.resize(t);
  for (int i = 0; i < t; ++i) out.values[i] = w[i].real();
  return out;
}

ReturnSeries generate_ar1(const SynthSpec& spec) {
  if (spec.kind != SynthKind::Ar1)
    throw ParameterError("generate_ar1: spec.kind must be AR1");
  if (!(std::abs(spec.phi) < 1.0))
    throw ParameterError("generate_ar1: |phi| must be < 1");
  if (spec.t < 1) throw ParameterError("generate_ar1: t must be >= 1");

  GaussianRng rng(spec.seed);
  ReturnSeries out;
  out.ticker = spec.ticker;
  out.values.resize(spec.t);
  double x = rng.gaussian() / std::sqrt(1.0 - spec.phi * spec.phi);
  out.values[0] = x;
  for (int i = 1; i < spec.t; ++i) {
    x = spec.phi * x + rng.gaussian();
    out.values[i] = x;
  }
  return out;
}

ReturnSeries generate_white_noise(const SynthSpec& spec) {
  if (spec.kind != SynthKind::WhiteNoise)
    throw ParameterError("generate_white_noise: spec.kind must be WhiteNoise");
  if (spec.t < 1) throw ParameterError("generate_white_noise: t must be >= 1");
  GaussianRng rng(spec.seed);
  ReturnSeries out;
  out.ticker = spec.ticker;
  out.values.resize(spec.t);
  for (double& v : out.values) v = rng.gaussian();
  return out;
}

ReturnSeries generate_random_walk(const SynthSpec& spec) {
  if (spec.kind != SynthKind::RandomWalk)
    throw ParameterError("generate_random_walk: spec.kind must be RandomWalk");
  if (spec.t < 1) throw ParameterError("generate_random_walk: t must be >= 1");
  GaussianRng rng(spec.seed);
  ReturnSeries out;
  out.ticker = spec.ticker;
  out.values.resize(spec.t);
  double level = 0.0;
  for (double& v : out.values) {
    level += rng.gaussian();
    v = level;
  }
  return out;
}

ReturnSeries generate(const SynthSpec& spec) {
  switch (spec.kind) {
    case SynthKind::Fgn: return generate_fgn(spec);
    case SynthKind::Ar1: return generate_ar1(spec);
    case SynthKind::WhiteNoise: return generate_white_noise(spec);
    case SynthKind::RandomWalk: return generate_random_walk(spec);
  }
  throw ParameterError("generate: unknown kind");
}

PriceSeries to_prices(const ReturnSeries& returns, Date start_date) {
  std::vector<Observation> obs;
  obs.reserve(returns.t() + 1);
  Date d = start_date;
  double log_price = 0.0;
  obs.push_back({d, 1.0});
  for (double r : returns.values) {
    d = d.next_day();
    log_price += r;
    obs.push_back({d, std::exp(log_price)});
  }
  return PriceSeries(returns.ticker, std::move(obs));
}

}  // namespace effindex
