#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "effindex/kernels.hpp"
#include "effindex/hurst.hpp"
#include "effindex/series.hpp"
#include "effindex/synth.hpp"

using namespace effindex;
using kernels::Exec;
using kernels::IncrementSampling;

namespace {

Profile fbm_path(double h, int t, std::uint64_t seed) {
  SynthSpec s;
  s.kind = SynthKind::Fgn;
  s.h = h;
  s.t = t;
  s.seed = seed;
  return profile(generate_fgn(s));
}

void check_bitwise(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

void check_close(const std::vector<double>& a, const std::vector<double>& b,
                 double rel) {
  REQUIRE(a.size() == b.size());
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(std::abs(a[i] - b[i]) <= rel * scale);
}

}  // namespace

TEST_CASE("parallel kernels are bitwise identical to serial for any thread count") {
  const Profile path = fbm_path(0.6, 4096, 1);
  const std::vector<int> scales = dfa_scale_grid(path.size());
  const std::vector<int> windows = {3, 5, 7, 9, 11, 13, 15, 17, 19, 21};

  const auto dfa_s = kernels::dfa_fluctuations(path.values, scales, 2, Exec::Serial);
  const auto dma_s = kernels::dma_fluctuations(path.values, windows, Exec::Serial);
  const auto k2_s =
      kernels::hhca_k2(path.values, 20, IncrementSampling::Dense, Exec::Serial);
  const auto k2c_s =
      kernels::hhca_k2(path.values, 20, IncrementSampling::Coarse, Exec::Serial);
  const auto per_s = kernels::periodogram(path.values, 256, Exec::Serial);

  for (int threads : {1, 2, 3, 7}) {
#ifdef _OPENMP
    omp_set_num_threads(threads);
#endif
    INFO("threads ", threads);
    check_bitwise(dfa_s, kernels::dfa_fluctuations(path.values, scales, 2,
                                                   Exec::Parallel));
    check_bitwise(dma_s, kernels::dma_fluctuations(path.values, windows,
                                                   Exec::Parallel));
    check_bitwise(k2_s, kernels::hhca_k2(path.values, 20,
                                         IncrementSampling::Dense, Exec::Parallel));
    check_bitwise(k2c_s, kernels::hhca_k2(path.values, 20,
                                          IncrementSampling::Coarse, Exec::Parallel));
    check_bitwise(per_s, kernels::periodogram(path.values, 256, Exec::Parallel));
  }
#ifdef _OPENMP
  omp_set_num_threads(omp_get_num_procs());
#endif
}

TEST_CASE("kernels agree with the scalar reference implementations") {
  for (double h : {0.3, 0.5, 0.7}) {
    const Profile path = fbm_path(h, 2048, 11);
    const std::vector<int> scales = dfa_scale_grid(path.size());
    const std::vector<int> windows = {3, 5, 7, 9, 11, 13, 15, 17, 19, 21};
    INFO("h ", h);

    for (int order : {1, 2})
      check_close(ref::dfa_fluctuations(path.values, scales, order),
                  kernels::dfa_fluctuations(path.values, scales, order,
                                            Exec::Parallel),
                  1e-9);
    check_close(ref::dma_fluctuations(path.values, windows),
                kernels::dma_fluctuations(path.values, windows, Exec::Parallel),
                1e-12);
    check_close(ref::hhca_k2(path.values, 20, IncrementSampling::Dense),
                kernels::hhca_k2(path.values, 20, IncrementSampling::Dense,
                                 Exec::Parallel),
                1e-12);
    check_close(ref::hhca_k2(path.values, 20, IncrementSampling::Coarse),
                kernels::hhca_k2(path.values, 20, IncrementSampling::Coarse,
                                 Exec::Parallel),
                1e-12);
    // rotation recurrence vs direct trig evaluation
    check_close(ref::periodogram(path.values, 160),
                kernels::periodogram(path.values, 160, Exec::Parallel), 1e-9);
  }
}

TEST_CASE("dfa kernel semantics") {
  SUBCASE("two boxes cover front and back when s does not divide T") {
    // T = 10, s = 4: boxes cover [0,4), [4,8) from the front and [6,10),
    // [2,6) from the back. F2 is the mean of the four box MSEs.
    std::vector<double> path = {0, 1, 0, 1, 0, 1, 0, 1, 0, 100};
    const std::vector<int> scales = {4};
    const auto f2 = kernels::dfa_fluctuations(path, scales, 1, Exec::Serial);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0] > 0.0);
  }
  SUBCASE("order-2 fit annihilates a quadratic exactly") {
    std::vector<double> path(64);
    for (int i = 0; i < 64; ++i) path[i] = 0.5 * i * i - 3.0 * i + 2.0;
    const std::vector<int> scales = {4, 8, 16};
    const auto f2 = kernels::dfa_fluctuations(path, scales, 2, Exec::Serial);
    for (double v : f2) CHECK(v == 0.0);
  }
}

TEST_CASE("dma kernel semantics") {
  // Moving average of a linear path equals the path on the interior.
  std::vector<double> path(64);
  for (int i = 0; i < 64; ++i) path[i] = 2.0 * i - 5.0;
  const std::vector<int> windows = {3, 5, 7};
  const auto f2 = kernels::dma_fluctuations(path, windows, Exec::Serial);
  for (double v : f2) CHECK(v == 0.0);
}

TEST_CASE("hhca kernel semantics") {
  SUBCASE("dense counts overlapping increments") {
    const std::vector<double> path = {0.0, 1.0, 0.0, 1.0};
    const auto k2 =
        kernels::hhca_k2(path, 2, IncrementSampling::Dense, Exec::Serial);
    CHECK(k2[0] == 1.0);  // lag 1: (1,1,1)/3
    CHECK(k2[1] == 0.0);  // lag 2: (0,0)/2
  }
  SUBCASE("coarse steps by tau") {
    const std::vector<double> path = {0.0, 1.0, 0.0, 1.0, 0.0};
    const auto k2 =
        kernels::hhca_k2(path, 2, IncrementSampling::Coarse, Exec::Serial);
    CHECK(k2[0] == 1.0);  // t = 0,1,2,3
    CHECK(k2[1] == 0.0);  // t = 0,2
  }
}

TEST_CASE("periodogram kernel matches a closed-form single tone") {
  const int t = 64;
  const int k = 5;
  std::vector<double> tone(t);
  for (int i = 0; i < t; ++i)
    tone[i] = std::cos(2.0 * std::numbers::pi * k * i / static_cast<double>(t));
  const auto ordinates = kernels::periodogram(tone, 10, Exec::Serial);
  // |DFT_j|^2 / t is t/4 at the tone frequency and ~0 elsewhere
  for (int j = 1; j <= 10; ++j) {
    const double expected = j == k ? static_cast<double>(t) / 4.0 : 0.0;
    CHECK(std::abs(ordinates[j - 1] - expected) < 1e-9);
  }
}
