#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "effindex/series.hpp"

namespace effindex {

enum class SynthKind { Fgn, Ar1, WhiteNoise, RandomWalk };

/// Parameters of a synthetic oracle process. h applies to fGn only, phi to
/// AR(1) only; output is a pure function of this struct.
struct SynthSpec {
  SynthKind kind = SynthKind::Fgn;
  double h = 0.5;
  double phi = 0.0;
  int t = 1024;
  std::uint64_t seed = 0;
  std::string ticker = "SYNTH";
};

/// Deterministic standard-normal stream: mt19937_64 driving an explicit
/// Box-Muller transform (std::normal_distribution is not pinned by the
/// standard, so it is not used). u = (x >> 11) * 2^-53 in [0, 1);
/// z = sqrt(-2 ln(1-u1)) * {cos, sin}(2 pi u2), pairs consumed in order.
class GaussianRng {
public:
  explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double gaussian();

private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Exact fractional Gaussian noise by circulant embedding (Davies-Harte):
// the sample has autocovariance gamma(k) = ((k+1)^2H - 2 k^2H + |k-1|^2H)/2
// exactly. Requires t a power of two >= 256 and h in (0, 1); throws
// GenerationError if the embedding is indefinite.
ReturnSeries generate_fgn(const SynthSpec& spec);

// Stationary AR(1): x_t = phi x_{t-1} + eps_t, x_0 ~ N(0, 1/(1-phi^2)).
ReturnSeries generate_ar1(const SynthSpec& spec);

// I.i.d. standard normals.
ReturnSeries generate_white_noise(const SynthSpec& spec);

// Cumulative sum of standard normals (nonstationary; KPSS power checks).
ReturnSeries generate_random_walk(const SynthSpec& spec);

// Dispatch on spec.kind.
ReturnSeries generate(const SynthSpec& spec);

// Closed-form fGn autocovariance at the given lag.
double fgn_autocovariance(int lag, double h);

// Smallest eigenvalue of the circulant embedding of the length-t fGn
// covariance; the generation validity oracle (negative means indefinite).
double fgn_embedding_min_eigenvalue(int t, double h);

// Price path exp(cumulative returns) starting at 1.0, one observation per
// calendar day from start_date. log_returns(to_prices(r)) recovers r.
PriceSeries to_prices(const ReturnSeries& returns,
                      Date start_date = Date{2000, 1, 3});

}  // namespace effindex
