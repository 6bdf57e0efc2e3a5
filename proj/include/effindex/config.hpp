#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "effindex/efficiency.hpp"
#include "effindex/stats.hpp"
#include "effindex/synth.hpp"

namespace effindex {

/// Everything a run needs. Estimator defaults follow the standard parameter
/// choices baked into the estimator structs (DFA scales 5..T/5, DMA windows
/// 3..21 step 2, HHCA tau_max 5..20); each field maps 1:1 to a config-file
/// key and a CLI flag of the same name.
struct RunConfig {
  std::vector<std::string> inputs;  // CSV files and/or directories
  std::string out_dir = "out";
  int workers = 1;

  int dfa_min_scale = 5;
  int dfa_max_scale_divisor = 5;
  int dfa_num_scales = 20;
  int dma_min_window = 3;
  int dma_max_window = 21;
  int dma_window_step = 2;
  int hhca_tau_max_lo = 5;
  int hhca_tau_max_hi = 20;
  double periodogram_cutoff_exponent = 2.0 / 3.0;
  int wavelet_min_coeffs = 8;
  int kpss_bandwidth = 0;  // 0 = automatic rule

  bool write_json = true;
  bool write_csv = true;

  // synth subcommand
  std::string synth_kind = "fgn";  // fgn | ar1 | whitenoise | randomwalk
  double synth_h = 0.5;
  double synth_phi = 0.0;
  int synth_t = 1024;
  std::uint64_t seed = 42;
  std::string synth_ticker = "SYNTH";

  EstimatorParams estimator_params() const;
  KpssParams kpss_params() const;
  SynthSpec synth_spec() const;  // throws ParameterError on unknown kind
};

// Throws ParameterError when any override is outside its legal range.
void validate(const RunConfig& config);

}  // namespace effindex
