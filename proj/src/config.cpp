#include "effindex/config.hpp"

#include <algorithm>
#include <cctype>

#include "effindex/error.hpp"

namespace effindex {

EstimatorParams RunConfig::estimator_params() const {
  EstimatorParams p;
  p.dfa = {dfa_min_scale, dfa_max_scale_divisor, dfa_num_scales};
  p.dma = {dma_min_window, dma_max_window, dma_window_step};
  p.hhca = {hhca_tau_max_lo, hhca_tau_max_hi};
  p.periodogram = {periodogram_cutoff_exponent};
  p.wavelet = {wavelet_min_coeffs};
  return p;
}

KpssParams RunConfig::kpss_params() const { return {kpss_bandwidth}; }

SynthSpec RunConfig::synth_spec() const {
  SynthSpec spec;
  std::string kind = synth_kind;
  std::transform(kind.begin(), kind.end(), kind.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (kind == "fgn")
    spec.kind = SynthKind::Fgn;
  else if (kind == "ar1")
    spec.kind = SynthKind::Ar1;
  else if (kind == "whitenoise")
    spec.kind = SynthKind::WhiteNoise;
  else if (kind == "randomwalk")
    spec.kind = SynthKind::RandomWalk;
  else
    throw ParameterError("unknown synth kind '" + synth_kind +
                         "' (expected fgn|ar1|whitenoise|randomwalk)");
  spec.h = synth_h;
  spec.phi = synth_phi;
  spec.t = synth_t;
  spec.seed = seed;
  spec.ticker = synth_ticker;
  return spec;
}

void validate(const RunConfig& config) {
  auto require = [](bool ok, const char* msg) {
    if (!ok) throw ParameterError(msg);
  };
  require(config.workers >= 1 && config.workers <= 1024,
          "workers must be in [1, 1024]");
  require(config.dfa_min_scale >= 4, "dfa_min_scale must be >= 4");
  require(config.dfa_max_scale_divisor >= 2, "dfa_max_scale_divisor must be >= 2");
  require(config.dfa_num_scales >= 5, "dfa_num_scales must be >= 5");
  require(config.dma_min_window >= 3 && config.dma_min_window % 2 == 1,
          "dma_min_window must be odd and >= 3");
  require(config.dma_max_window >= config.dma_min_window &&
              config.dma_max_window % 2 == 1,
          "dma_max_window must be odd and >= dma_min_window");
  require(config.dma_window_step >= 2 && config.dma_window_step % 2 == 0,
          "dma_window_step must be even and >= 2");
  require(config.hhca_tau_max_lo >= 3, "hhca_tau_max_lo must be >= 3");
  require(config.hhca_tau_max_hi >= config.hhca_tau_max_lo,
          "hhca_tau_max_hi must be >= hhca_tau_max_lo");
  require(config.periodogram_cutoff_exponent > 0.0 &&
              config.periodogram_cutoff_exponent < 1.0,
          "periodogram_cutoff_exponent must be in (0, 1)");
  require(config.wavelet_min_coeffs >= 2, "wavelet_min_coeffs must be >= 2");
  require(config.kpss_bandwidth >= 0, "kpss_bandwidth must be >= 0");
  require(config.write_json || config.write_csv,
          "at least one of write_json/write_csv must be enabled");
  require(!config.out_dir.empty(), "out directory must not be empty");
  if (config.synth_ticker.empty())
    throw ParameterError("synth ticker must not be empty");
}

}  // namespace effindex
