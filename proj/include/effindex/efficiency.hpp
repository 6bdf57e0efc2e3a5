#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "effindex/fractal.hpp"
#include "effindex/hurst.hpp"
#include "effindex/series.hpp"
#include "effindex/stats.hpp"

namespace effindex {

enum class MeasureName {
  HDfa,
  HDma,
  HHhca,
  DPeriodogram,
  DWavelet,
  DGenton,
  DHallWood,
  Rho1,
};

// Local inefficiency = roughness (fractal dimension) terms; global =
// memory-structure (Hurst, autocorrelation) terms.
enum class MeasureKind { Local, Global };

/// One of the eight bounded efficiency measures: clamped estimate, its
/// efficient-market ideal, the width of its support, and its kind.
struct MeasureEntry {
  MeasureName name = MeasureName::HDfa;
  double estimate = 0.0;
  double ideal = 0.0;
  double range = 1.0;
  MeasureKind kind = MeasureKind::Global;

  double normalized_deviation() const { return (estimate - ideal) / range; }
};

struct MeasureVector {
  std::array<MeasureEntry, 8> entries;
};

/// Everything behind a MeasureVector, kept for audit: per-method raw values,
/// scaling curves, and jackknife members.
struct EstimateDetail {
  HurstEstimate dfa_order1;
  HurstEstimate dfa_order2;
  HurstEstimate dma;
  HurstEstimate hhca;
  FractalEstimate periodogram;
  FractalEstimate wavelet;
  FractalEstimate genton;
  FractalEstimate hall_wood;
  Acf1Result rho1;

  // Raw combined DFA estimate: mean of the order-1 and order-2 fits.
  double h_dfa_raw() const { return 0.5 * (dfa_order1.h_raw + dfa_order2.h_raw); }
};

struct EstimatorParams {
  DfaParams dfa;
  DmaParams dma;
  HhcaParams hhca;
  PeriodogramParams periodogram;
  WaveletParams wavelet;
};

// Runs all eight estimators and assembles the measure vector in the fixed
// order H_DFA, H_DMA, H_HHCA, D_P, D_W, D_G, D_HW, RHO1. Estimator failures
// propagate with the failing method named in the message.
MeasureVector measure_vector(const ReturnSeries& returns,
                             const EstimatorParams& params = {},
                             kernels::Exec exec = kernels::Exec::Parallel);
std::pair<MeasureVector, EstimateDetail> measure_vector_detailed(
    const ReturnSeries& returns, const EstimatorParams& params = {},
    kernels::Exec exec = kernels::Exec::Parallel);

// EI = sqrt(sum_i ((M_i - M_i*)/R_i)^2), in [0, sqrt(8)/2] for 8 measures.
double efficiency_index(const MeasureVector& vector);

struct InefficiencyShares {
  bool fully_efficient = false;  // EI == 0: shares undefined
  double local_share = 0.0;
  double global_share = 0.0;
};

// Splits EI^2 into the local (fractal-dimension) and global (Hurst +
// autocorrelation) sums of normalized squared deviations.
InefficiencyShares decompose(const MeasureVector& vector);

struct EfficiencyReport {
  std::string ticker;
  std::size_t t = 0;
  double ei = 0.0;
  InefficiencyShares shares;
  MeasureVector vector;
  DescriptiveStats stats;
  KpssResult kpss;
  EstimateDetail detail;
};

// Ascending by EI, ties broken lexicographically by ticker.
std::vector<EfficiencyReport> rank(std::vector<EfficiencyReport> reports);

// Cross-sectional OLS of mean fractal dimension (4 methods) on mean Hurst
// exponent (3 methods), using the clamped estimates that feed EI.
LinearFit dh_regression(std::span<const EfficiencyReport> reports);

// Means of the clamped Hurst / fractal-dimension entries of one report.
double mean_hurst(const EfficiencyReport& report);
double mean_fractal(const EfficiencyReport& report);

std::string to_string(MeasureName name);

}  // namespace effindex
