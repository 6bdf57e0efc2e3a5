#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "effindex/error.hpp"
#include "effindex/stats.hpp"
#include "effindex/synth.hpp"

using namespace effindex;

namespace {

ReturnSeries series(std::vector<double> v) { return {"TEST", std::move(v)}; }

ReturnSeries synth(SynthKind kind, int t, std::uint64_t seed) {
  SynthSpec s;
  s.kind = kind;
  s.t = t;
  s.seed = seed;
  return generate(s);
}

}  // namespace

TEST_CASE("acf1 closed forms") {
  SUBCASE("alternating sequence") {
    std::vector<double> v(1000);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i % 2 == 0 ? 1.0 : -1.0;
    const double expected = -(1000.0 - 1.0) / 1000.0;
    CHECK(acf1(series(std::move(v))).rho1 ==
          doctest::Approx(expected).epsilon(1e-12));
  }
  SUBCASE("i.i.d. noise stays inside the 3-sigma band") {
    int outside = 0;
    const int t = 10'000;
    for (int s = 0; s < 25; ++s) {
      const double rho = acf1(synth(SynthKind::WhiteNoise, t, 40 + s)).rho1;
      if (std::abs(rho) > 3.0 / std::sqrt(static_cast<double>(t))) ++outside;
    }
    CHECK(outside <= 1);
  }
  SUBCASE("AR(1) recovers phi") {
    SynthSpec s;
    s.kind = SynthKind::Ar1;
    s.phi = 0.5;
    s.t = 10'000;
    s.seed = 17;
    CHECK(std::abs(acf1(generate_ar1(s)).rho1 - 0.5) <= 0.03);
  }
}

TEST_CASE("acf1 guards and invariances") {
  CHECK_THROWS_AS(acf1(series({1.0, 2.0})), InsufficientDataError);
  CHECK_THROWS_AS(acf1(series({1.0, 1.0, 1.0, 1.0})), DegenerateDataError);

  const ReturnSeries base = synth(SynthKind::WhiteNoise, 500, 3);
  const double rho = acf1(base).rho1;
  SUBCASE("positive affine maps leave rho1 unchanged") {
    ReturnSeries mapped = base;
    for (double& v : mapped.values) v = 2.5 * v + 0.1;
    CHECK(acf1(mapped).rho1 == doctest::Approx(rho).epsilon(1e-10));
  }
  SUBCASE("sign flip leaves rho1 unchanged") {
    ReturnSeries flipped = base;
    for (double& v : flipped.values) v = -v;
    CHECK(acf1(flipped).rho1 == doctest::Approx(rho).epsilon(1e-12));
  }
}

TEST_CASE("kpss verdict buckets follow the critical values") {
  CHECK(kpss_verdict(1.2088) == KpssVerdict::PBelow1);
  CHECK(kpss_verdict(0.1084) == KpssVerdict::PAbove5);
  CHECK(kpss_verdict(0.5) == KpssVerdict::PBetween1And5);
  CHECK(kpss_verdict(0.463) == KpssVerdict::PAbove5);
  CHECK(kpss_verdict(0.739) == KpssVerdict::PBetween1And5);
  CHECK(to_string(KpssVerdict::PBelow1) == "p<0.01");
  CHECK(to_string(KpssVerdict::PAbove5) == "p>0.05");
  CHECK(to_string(KpssVerdict::PBetween1And5) == "0.01<p<0.05");
}

TEST_CASE("kpss statistic matches a frozen external reference") {
  // AR(1) draw frozen to 6 decimals; reference statistic computed with
  // statsmodels kpss(regression='c', nlags=3): 0.09731893849062379.
  const std::vector<double> x = {
      0.427770,  -0.314176, 2.465955,  -0.128972, 0.584333,  0.207174,
      -0.230202, 0.928237,  -1.260980, -1.741264, -1.158918, 1.045923,
      0.716601,  1.325649,  -1.067917, -1.879638, -0.158253, -0.723132,
      -0.496874, 0.432744,  -1.945371, -2.368388, -1.514874, -2.455400,
      -2.183836, -1.352717, -1.476751, -1.154830, -0.651833, 0.939096,
      2.142111,  0.890697,  -0.293333, 0.713344,  0.938563,  0.812213,
      -0.420911, 0.392404,  1.107649,  -1.120202, 0.345318,  0.134391,
      -0.662861, -1.974787, -1.526652, -0.977137, -0.961073, -1.781025,
      -2.263952, -0.652971, -0.344065, 0.078170,  0.675972,  1.123204,
      2.409051,  1.374108};
  const KpssResult res = kpss(series(std::vector<double>(x)));
  CHECK(res.bandwidth == 3);  // floor(4 * (56/100)^0.25)
  CHECK(res.statistic == doctest::Approx(0.09731893849062379).epsilon(1e-12));
  CHECK(res.verdict == KpssVerdict::PAbove5);
}

TEST_CASE("kpss guards") {
  CHECK_THROWS_AS(kpss(series(std::vector<double>(30, 0.5))),
                  InsufficientDataError);
  CHECK_THROWS_AS(kpss(series(std::vector<double>(60, 0.5))),
                  DegenerateDataError);
  KpssParams bad;
  bad.bandwidth = -1;
  CHECK_THROWS_AS(kpss(synth(SynthKind::WhiteNoise, 100, 1), bad),
                  ParameterError);
}

TEST_CASE("kpss bandwidth rule") {
  CHECK(kpss(synth(SynthKind::WhiteNoise, 100, 1)).bandwidth == 4);
  CHECK(kpss(synth(SynthKind::WhiteNoise, 2000, 1)).bandwidth == 8);
  KpssParams fixed;
  fixed.bandwidth = 12;
  CHECK(kpss(synth(SynthKind::WhiteNoise, 2000, 1), fixed).bandwidth == 12);
}

TEST_CASE("kpss statistic is affine invariant") {
  const ReturnSeries base = synth(SynthKind::WhiteNoise, 400, 8);
  const double stat = kpss(base).statistic;
  ReturnSeries mapped = base;
  for (double& v : mapped.values) v = -3.0 * v + 2.0;
  CHECK(kpss(mapped).statistic == doctest::Approx(stat).epsilon(1e-10));
}

TEST_CASE("kpss size and power (reduced Monte Carlo)") {
  // Acceptance runs the full 100-seed version at T = 2000.
  const int t = 2000;
  const int seeds = 25;
  int reject_noise = 0, reject_walk = 0;
  for (int s = 0; s < seeds; ++s) {
    if (kpss(synth(SynthKind::WhiteNoise, t, 900 + s)).statistic > kKpssCritical5)
      ++reject_noise;
    if (kpss(synth(SynthKind::RandomWalk, t, 900 + s)).statistic > kKpssCritical5)
      ++reject_walk;
  }
  CHECK(reject_noise <= 3);
  CHECK(reject_walk >= 24);
}
