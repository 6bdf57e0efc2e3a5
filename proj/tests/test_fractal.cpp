#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "effindex/error.hpp"
#include "effindex/fractal.hpp"
#include "effindex/synth.hpp"

using namespace effindex;

namespace {

Profile fbm_path(double h, int t, std::uint64_t seed) {
  SynthSpec s;
  s.kind = SynthKind::Fgn;
  s.h = h;
  s.t = t;
  s.seed = seed;
  return profile(generate_fgn(s));
}

Profile sinusoid(int t) {
  Profile p;
  p.values.resize(t);
  for (int i = 0; i < t; ++i)
    p.values[i] = std::sin(2.0 * std::numbers::pi * 3.0 * i / (t - 1.0));
  return p;
}

double mc_mean(double h, int t, int seeds, std::uint64_t base,
               double (*estimate)(const Profile&)) {
  double sum = 0.0;
  for (int s = 0; s < seeds; ++s) sum += estimate(fbm_path(h, t, base + s));
  return sum / seeds;
}

// Brute-force Qn: materialize all pairwise gaps and select the k-th.
double qn_brute(std::vector<double> x) {
  const std::size_t n = x.size();
  std::vector<double> gaps;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      gaps.push_back(std::abs(x[i] - x[j]));
  const long long h = static_cast<long long>(n) / 2 + 1;
  const long long k = h * (h - 1) / 2;
  std::nth_element(gaps.begin(), gaps.begin() + (k - 1), gaps.end());
  return 2.2219 * gaps[k - 1];
}

}  // namespace

TEST_CASE("qn selection matches the brute-force order statistic") {
  std::mt19937_64 rng(5150);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<int> size(2, 300);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<double> x(size(rng));
    for (double& v : x) v = normal(rng);
    if (rep % 7 == 0) x[0] = x[x.size() / 2];  // inject ties
    CHECK(qn_scale(x) == qn_brute(x));
  }
  SUBCASE("all equal values give zero") {
    std::vector<double> same(50, 3.14);
    CHECK(qn_scale(same) == 0.0);
  }
  SUBCASE("gaussian consistency on a large sample") {
    std::vector<double> x(20'000);
    for (double& v : x) v = normal(rng);
    CHECK(qn_scale(x) == doctest::Approx(1.0).epsilon(0.05));
  }
}

TEST_CASE("guards shared by the four estimators") {
  Profile flat;
  flat.values.assign(500, 1.0);
  CHECK_THROWS_AS(fd_hall_wood(flat), DegenerateDataError);
  CHECK_THROWS_AS(fd_genton(flat), DegenerateDataError);
  CHECK_THROWS_AS(fd_periodogram(flat), DegenerateDataError);
  CHECK_THROWS_AS(fd_wavelet(flat), DegenerateDataError);

  Profile tiny;
  tiny.values.assign(50, 0.0);
  tiny.values[3] = 1.0;
  CHECK_THROWS_AS(fd_hall_wood(tiny), InsufficientDataError);
  CHECK_THROWS_AS(fd_genton(tiny), InsufficientDataError);
  CHECK_THROWS_AS(fd_periodogram(tiny), InsufficientDataError);
  CHECK_THROWS_AS(fd_wavelet(tiny), InsufficientDataError);
}

TEST_CASE("smooth curves have dimension close to 1") {
  const Profile p = sinusoid(10'000);
  CHECK(std::abs(fd_hall_wood(p).d_raw - 1.0) <= 0.05);
  CHECK(std::abs(fd_genton(p).d_raw - 1.0) <= 0.05);
}

TEST_CASE("white-noise path clamps at the rough end for the periodogram") {
  // i.i.d. values treated as a path: flat spectrum, raw D near 2.5.
  SynthSpec s;
  s.kind = SynthKind::WhiteNoise;
  s.t = 4096;
  s.seed = 31;
  Profile p;
  p.values = generate_white_noise(s).values;
  const FractalEstimate est = fd_periodogram(p);
  CHECK(std::abs(est.d_raw - 2.5) <= 0.15);
  CHECK(est.d_clamped == 2.0);
}

TEST_CASE("estimators recover D = 2 - H on synthetic fBm" * doctest::timeout(300)) {
  const int t = 4096;
  const int seeds = 15;
  SUBCASE("brownian path: D = 1.5") {
    CHECK(std::abs(mc_mean(0.5, t, seeds, 100, [](const Profile& p) {
            return fd_hall_wood(p).d_raw;
          }) - 1.5) <= 0.08);
    CHECK(std::abs(mc_mean(0.5, t, seeds, 100, [](const Profile& p) {
            return fd_genton(p).d_raw;
          }) - 1.5) <= 0.08);
    CHECK(std::abs(mc_mean(0.5, t, seeds, 100, [](const Profile& p) {
            return fd_periodogram(p).d_raw;
          }) - 1.5) <= 0.12);
    CHECK(std::abs(mc_mean(0.5, t, seeds, 100, [](const Profile& p) {
            return fd_wavelet(p).d_raw;
          }) - 1.5) <= 0.12);
  }
  SUBCASE("persistent path: D = 1.2") {
    CHECK(std::abs(mc_mean(0.8, t, seeds, 200, [](const Profile& p) {
            return fd_hall_wood(p).d_raw;
          }) - 1.2) <= 0.08);
    CHECK(std::abs(mc_mean(0.8, t, seeds, 200, [](const Profile& p) {
            return fd_genton(p).d_raw;
          }) - 1.2) <= 0.08);
  }
  SUBCASE("anti-persistent path: D = 1.7") {
    CHECK(std::abs(mc_mean(0.3, t, seeds, 300, [](const Profile& p) {
            return fd_periodogram(p).d_raw;
          }) - 1.7) <= 0.12);
    CHECK(std::abs(mc_mean(0.3, t, seeds, 300, [](const Profile& p) {
            return fd_wavelet(p).d_raw;
          }) - 1.7) <= 0.12);
  }
  SUBCASE("persistent path, wavelet and genton: D = 1.3") {
    CHECK(std::abs(mc_mean(0.7, t, seeds, 400, [](const Profile& p) {
            return fd_wavelet(p).d_raw;
          }) - 1.3) <= 0.12);
    CHECK(std::abs(mc_mean(0.7, t, seeds, 400, [](const Profile& p) {
            return fd_genton(p).d_raw;
          }) - 1.3) <= 0.08);
  }
}

TEST_CASE("median D is decreasing in H for every method") {
  const int t = 2048;
  const int seeds = 9;
  auto median_d = [&](double h, double (*est)(const Profile&)) {
    std::vector<double> ds;
    for (int s = 0; s < seeds; ++s) ds.push_back(est(fbm_path(h, t, 700 + s)));
    std::sort(ds.begin(), ds.end());
    return ds[ds.size() / 2];
  };
  double (*methods[])(const Profile&) = {
      [](const Profile& p) { return fd_hall_wood(p).d_raw; },
      [](const Profile& p) { return fd_genton(p).d_raw; },
      [](const Profile& p) { return fd_periodogram(p).d_raw; },
      [](const Profile& p) { return fd_wavelet(p).d_raw; },
  };
  for (auto* method : methods) {
    const double d_low = median_d(0.2, method);
    const double d_mid = median_d(0.5, method);
    const double d_high = median_d(0.8, method);
    CHECK(d_low > d_mid);
    CHECK(d_mid > d_high);
  }
}

TEST_CASE("affine invariance of every estimator") {
  const Profile p = fbm_path(0.6, 1024, 9);
  Profile mapped;
  mapped.values = p.values;
  for (double& v : mapped.values) v = -2.5 * v + 7.0;

  CHECK(fd_hall_wood(mapped).d_raw ==
        doctest::Approx(fd_hall_wood(p).d_raw).epsilon(1e-9));
  CHECK(fd_genton(mapped).d_raw ==
        doctest::Approx(fd_genton(p).d_raw).epsilon(1e-9));
  CHECK(fd_periodogram(mapped).d_raw ==
        doctest::Approx(fd_periodogram(p).d_raw).epsilon(1e-9));
  CHECK(fd_wavelet(mapped).d_raw ==
        doctest::Approx(fd_wavelet(p).d_raw).epsilon(1e-9));
}

TEST_CASE("time reversal") {
  // Odd T keeps the lag-2 Hall-Wood increments aligned under reversal.
  Profile p = fbm_path(0.6, 1024, 13);
  p.values.resize(1023);
  Profile rev;
  rev.values.assign(p.values.rbegin(), p.values.rend());

  CHECK(fd_hall_wood(rev).d_raw ==
        doctest::Approx(fd_hall_wood(p).d_raw).epsilon(1e-12));
  // Genton: the reversed increment multiset is the negation of the original,
  // so the pairwise gaps and thus Qn are identical.
  CHECK(fd_genton(rev).d_raw == fd_genton(p).d_raw);
  CHECK(fd_periodogram(rev).d_raw ==
        doctest::Approx(fd_periodogram(p).d_raw).epsilon(1e-9));
}

TEST_CASE("estimate internal consistency") {
  const Profile p = fbm_path(0.4, 1024, 17);
  SUBCASE("hall-wood") {
    const FractalEstimate est = fd_hall_wood(p);
    REQUIRE(est.points.size() == 2);
    const double slope = (std::log(est.points[1].fluctuation) -
                          std::log(est.points[0].fluctuation)) /
                         std::log(2.0);
    CHECK(est.d_raw == 2.0 - slope);
    CHECK(est.d_clamped == std::clamp(est.d_raw, 1.0, 2.0));
  }
  SUBCASE("genton") {
    const FractalEstimate est = fd_genton(p);
    REQUIRE(est.points.size() == 2);
    const double slope = (std::log(est.points[1].fluctuation) -
                          std::log(est.points[0].fluctuation)) /
                         std::log(2.0);
    CHECK(est.d_raw == 2.0 - slope / 2.0);
  }
  SUBCASE("periodogram") {
    const FractalEstimate est = fd_periodogram(p);
    CHECK(est.points.size() == static_cast<std::size_t>(std::pow(1024.0, 2.0 / 3.0)));
    CHECK(est.d_raw == (5.0 + fit_power_law(est.points).slope) / 2.0);
  }
  SUBCASE("wavelet") {
    const FractalEstimate est = fd_wavelet(p);
    // T = 1024: levels 1..7 (floor(log2 T) - 3), all with >= 8 coefficients
    REQUIRE(est.points.size() == 7);
    CHECK(est.points.front().scale == 2.0);
    CHECK(est.points.back().scale == 128.0);
    CHECK(est.d_raw == 2.0 - (fit_power_law(est.points).slope - 1.0) / 2.0);
  }
}

TEST_CASE("wavelet level policy on non-dyadic lengths") {
  const Profile p = [] {
    Profile q = fbm_path(0.5, 2048, 23);
    q.values.resize(1700);  // odd truncations along the pyramid
    return q;
  }();
  const FractalEstimate est = fd_wavelet(p);
  // floor(log2 1700) - 3 = 7 levels, every kept level needs >= 8 coefficients
  CHECK(est.points.size() >= 3);
  CHECK(est.points.size() <= 7);
  CHECK(std::isfinite(est.d_raw));
}
