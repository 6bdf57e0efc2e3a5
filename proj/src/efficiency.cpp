#include "effindex/efficiency.hpp"

#include <algorithm>
#include <cmath>

#include "effindex/error.hpp"

namespace effindex {

namespace {

MeasureEntry hurst_entry(MeasureName name, double clamped) {
  return {name, clamped, 0.5, 1.0, MeasureKind::Global};
}

MeasureEntry fractal_entry(MeasureName name, double clamped) {
  return {name, clamped, 1.5, 1.0, MeasureKind::Local};
}

}  // namespace

std::string to_string(MeasureName name) {
  switch (name) {
    case MeasureName::HDfa: return "H_DFA";
    case MeasureName::HDma: return "H_DMA";
    case MeasureName::HHhca: return "H_HHCA";
    case MeasureName::DPeriodogram: return "D_P";
    case MeasureName::DWavelet: return "D_W";
    case MeasureName::DGenton: return "D_G";
    case MeasureName::DHallWood: return "D_HW";
    case MeasureName::Rho1: return "RHO1";
  }
  return "?";
}

std::pair<MeasureVector, EstimateDetail> measure_vector_detailed(
    const ReturnSeries& returns, const EstimatorParams& params,
    kernels::Exec exec) {
  EstimateDetail d;
  d.dfa_order1 = dfa(returns, 1, params.dfa, exec);
  d.dfa_order2 = dfa(returns, 2, params.dfa, exec);
  d.dma = dma(returns, params.dma, exec);
  d.hhca = hhca(returns, params.hhca, exec);

  const Profile path = profile(returns);
  d.periodogram = fd_periodogram(path, params.periodogram, exec);
  d.wavelet = fd_wavelet(path, params.wavelet);
  d.genton = fd_genton(path);
  d.hall_wood = fd_hall_wood(path);
  d.rho1 = acf1(returns);

  const double h_dfa = std::min(1.0, std::max(0.0, d.h_dfa_raw()));
  MeasureVector v;
  v.entries = {
      hurst_entry(MeasureName::HDfa, h_dfa),
      hurst_entry(MeasureName::HDma, d.dma.h_clamped),
      hurst_entry(MeasureName::HHhca, d.hhca.h_clamped),
      fractal_entry(MeasureName::DPeriodogram, d.periodogram.d_clamped),
      fractal_entry(MeasureName::DWavelet, d.wavelet.d_clamped),
      fractal_entry(MeasureName::DGenton, d.genton.d_clamped),
      fractal_entry(MeasureName::DHallWood, d.hall_wood.d_clamped),
      MeasureEntry{MeasureName::Rho1, d.rho1.rho1, 0.0, 2.0, MeasureKind::Global},
  };
  return {v, std::move(d)};
}

MeasureVector measure_vector(const ReturnSeries& returns,
                             const EstimatorParams& params, kernels::Exec exec) {
  return measure_vector_detailed(returns, params, exec).first;
}

double efficiency_index(const MeasureVector& vector) {
  double sum = 0.0;
  for (const MeasureEntry& e : vector.entries) {
    const double dev = e.normalized_deviation();
    sum += dev * dev;
  }
  return std::sqrt(sum);
}

InefficiencyShares decompose(const MeasureVector& vector) {
  double local = 0.0, total = 0.0;
  for (const MeasureEntry& e : vector.entries) {
    const double dev = e.normalized_deviation();
    total += dev * dev;
    if (e.kind == MeasureKind::Local) local += dev * dev;
  }
  InefficiencyShares s;
  if (total <= 0.0) {
    s.fully_efficient = true;
    return s;
  }
  s.local_share = local / total;
  s.global_share = 1.0 - s.local_share;
  return s;
}

std::vector<EfficiencyReport> rank(std::vector<EfficiencyReport> reports) {
  std::sort(reports.begin(), reports.end(),
            [](const EfficiencyReport& a, const EfficiencyReport& b) {
              if (a.ei != b.ei) return a.ei < b.ei;
              return a.ticker < b.ticker;
            });
  return reports;
}

double mean_hurst(const EfficiencyReport& report) {
  double sum = 0.0;
  int n = 0;
  for (const MeasureEntry& e : report.vector.entries)
    if (e.kind == MeasureKind::Global && e.name != MeasureName::Rho1) {
      sum += e.estimate;
      ++n;
    }
  return sum / static_cast<double>(n);
}

double mean_fractal(const EfficiencyReport& report) {
  double sum = 0.0;
  int n = 0;
  for (const MeasureEntry& e : report.vector.entries)
    if (e.kind == MeasureKind::Local) {
      sum += e.estimate;
      ++n;
    }
  return sum / static_cast<double>(n);
}

LinearFit dh_regression(std::span<const EfficiencyReport> reports) {
  if (reports.size() < 3)
    throw InsufficientDataError("dh_regression: need >= 3 reports, got " +
                                std::to_string(reports.size()));
  std::vector<double> hs(reports.size()), ds(reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    hs[i] = mean_hurst(reports[i]);
    ds[i] = mean_fractal(reports[i]);
  }
  const double first = hs[0];
  if (std::all_of(hs.begin(), hs.end(), [&](double h) { return h == first; }))
    throw DegenerateDataError("dh_regression: all mean Hurst estimates equal");
  return ols_fit(hs, ds);
}

}  // namespace effindex
