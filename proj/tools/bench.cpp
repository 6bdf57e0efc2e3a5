// Kernel benchmark: OpenMP-parallel estimator loops against the scalar
// reference implementations, on one synthetic fGn path.
//
//   effindex_bench [t] [repeats]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "effindex/hurst.hpp"
#include "effindex/kernels.hpp"
#include "effindex/series.hpp"
#include "effindex/synth.hpp"

using namespace effindex;
using kernels::Exec;
using kernels::IncrementSampling;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double checksum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

struct Row {
  const char* name;
  double ref_ms;
  double par_ms;
  double max_rel_diff;
};

double max_rel_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double scale = std::max({std::abs(a[i]), std::abs(b[i]), 1e-300});
    worst = std::max(worst, std::abs(a[i] - b[i]) / scale);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  const int t = argc > 1 ? std::atoi(argv[1]) : 1 << 16;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

  SynthSpec spec;
  spec.kind = SynthKind::Fgn;
  spec.h = 0.7;
  spec.t = t;
  spec.seed = 7;
  const ReturnSeries returns = generate_fgn(spec);
  const Profile path = profile(returns);

  const std::vector<int> scales = dfa_scale_grid(path.size());
  std::vector<int> windows;
  for (int w = 3; w <= 21; w += 2) windows.push_back(w);
  const int tau_max = 20;
  const int num_freqs =
      static_cast<int>(std::pow(static_cast<double>(t), 2.0 / 3.0));

#ifdef _OPENMP
  std::printf("t=%d repeats=%d threads=%d\n", t, repeats, omp_get_max_threads());
#else
  std::printf("t=%d repeats=%d (OpenMP disabled)\n", t, repeats);
#endif

  std::vector<Row> rows;
  auto bench = [&](const char* name, auto ref_fn, auto par_fn) {
    std::vector<double> ref_out, par_out;
    double ref_ms = 1e300, par_ms = 1e300;
    for (int r = 0; r < repeats; ++r) {
      auto t0 = Clock::now();
      ref_out = ref_fn();
      ref_ms = std::min(ref_ms, ms_since(t0));
      t0 = Clock::now();
      par_out = par_fn();
      par_ms = std::min(par_ms, ms_since(t0));
    }
    rows.push_back({name, ref_ms, par_ms, max_rel_diff(ref_out, par_out)});
    // keep the optimizer honest
    volatile double sink = checksum(ref_out) + checksum(par_out);
    (void)sink;
  };

  bench("dfa order 1",
        [&] { return ref::dfa_fluctuations(path.values, scales, 1); },
        [&] { return kernels::dfa_fluctuations(path.values, scales, 1, Exec::Parallel); });
  bench("dfa order 2",
        [&] { return ref::dfa_fluctuations(path.values, scales, 2); },
        [&] { return kernels::dfa_fluctuations(path.values, scales, 2, Exec::Parallel); });
  bench("dma",
        [&] { return ref::dma_fluctuations(path.values, windows); },
        [&] { return kernels::dma_fluctuations(path.values, windows, Exec::Parallel); });
  bench("hhca k2 dense",
        [&] { return ref::hhca_k2(path.values, tau_max, IncrementSampling::Dense); },
        [&] { return kernels::hhca_k2(path.values, tau_max, IncrementSampling::Dense, Exec::Parallel); });
  bench("periodogram",
        [&] { return ref::periodogram(path.values, num_freqs); },
        [&] { return kernels::periodogram(path.values, num_freqs, Exec::Parallel); });

  std::printf("%-16s %12s %12s %10s %12s\n", "kernel", "ref ms", "omp ms",
              "speedup", "max rel err");
  for (const Row& row : rows)
    std::printf("%-16s %12.2f %12.2f %9.2fx %12.2e\n", row.name, row.ref_ms,
                row.par_ms, row.ref_ms / row.par_ms, row.max_rel_diff);
  return 0;
}
