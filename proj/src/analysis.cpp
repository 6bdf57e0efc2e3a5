#include "effindex/analysis.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "effindex/csv.hpp"
#include "effindex/error.hpp"
#include "effindex/synth.hpp"

namespace effindex {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

EfficiencyReport analyze_returns(const ReturnSeries& returns,
                                 const EstimatorParams& params,
                                 const KpssParams& kpss_params,
                                 kernels::Exec exec) {
  if (returns.t() < kMinSamplesHard)
    throw InsufficientDataError(returns.ticker + ": need T >= " +
                                std::to_string(kMinSamplesHard) + ", got " +
                                std::to_string(returns.t()));
  EfficiencyReport report;
  report.ticker = returns.ticker;
  report.t = returns.t();
  auto [vector, detail] = measure_vector_detailed(returns, params, exec);
  report.vector = vector;
  report.detail = std::move(detail);
  report.ei = efficiency_index(vector);
  report.shares = decompose(vector);
  report.stats = descriptive_stats(returns);
  report.kpss = kpss(returns, kpss_params);
  return report;
}

std::vector<fs::path> collect_inputs(const RunConfig& config) {
  std::vector<fs::path> files;
  for (const std::string& input : config.inputs) {
    const fs::path p(input);
    if (fs::is_directory(p)) {
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.is_regular_file() && entry.path().extension() == ".csv")
          files.push_back(entry.path());
    } else if (fs::is_regular_file(p)) {
      files.push_back(p);
    } else {
      throw ParameterError("input not found: " + input);
    }
  }
  std::sort(files.begin(), files.end());
  files.erase(std::unique(files.begin(), files.end()), files.end());
  if (files.empty())
    throw ParameterError("no input CSV files found");
  // tickers come from file stems; colliding stems would overwrite each
  // other's reports
  std::set<std::string> stems;
  for (const fs::path& f : files)
    if (!stems.insert(f.stem().string()).second)
      throw ParameterError("duplicate ticker '" + f.stem().string() +
                           "' across inputs");
  return files;
}

namespace {

ordered_json points_to_json(const std::vector<ScalingPoint>& points) {
  ordered_json arr = ordered_json::array();
  for (const ScalingPoint& p : points)
    arr.push_back({p.scale, p.fluctuation});
  return arr;
}

ordered_json estimate_to_json(double raw, double clamped) {
  return {{"raw", raw}, {"clamped", clamped}};
}

// The clamped value the vector carries for one named entry.
double vector_clamped(const EfficiencyReport& r, MeasureName name) {
  for (const MeasureEntry& e : r.vector.entries)
    if (e.name == name) return e.estimate;
  throw Error("missing measure entry");
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInputError(path.string() + ": cannot open for writing");
  out << content;
  if (!out) throw InvalidInputError(path.string() + ": write failed");
}

}  // namespace

ordered_json report_to_json(const EfficiencyReport& r) {
  ordered_json j;
  j["ticker"] = r.ticker;
  j["t"] = r.t;
  j["ei"] = r.ei;
  if (r.shares.fully_efficient) {
    j["local_share"] = nullptr;
    j["global_share"] = nullptr;
  } else {
    j["local_share"] = r.shares.local_share;
    j["global_share"] = r.shares.global_share;
  }

  const EstimateDetail& d = r.detail;
  ordered_json est;
  est["H_DFA"] = estimate_to_json(d.h_dfa_raw(), vector_clamped(r, MeasureName::HDfa));
  est["H_DMA"] = estimate_to_json(d.dma.h_raw, d.dma.h_clamped);
  est["H_HHCA"] = estimate_to_json(d.hhca.h_raw, d.hhca.h_clamped);
  est["D_P"] = estimate_to_json(d.periodogram.d_raw, d.periodogram.d_clamped);
  est["D_W"] = estimate_to_json(d.wavelet.d_raw, d.wavelet.d_clamped);
  est["D_G"] = estimate_to_json(d.genton.d_raw, d.genton.d_clamped);
  est["D_HW"] = estimate_to_json(d.hall_wood.d_raw, d.hall_wood.d_clamped);
  est["RHO1"] = estimate_to_json(d.rho1.rho1, d.rho1.rho1);
  j["estimates"] = est;

  ordered_json pts;
  pts["H_DFA_1"] = points_to_json(d.dfa_order1.points);
  pts["H_DFA_2"] = points_to_json(d.dfa_order2.points);
  pts["H_DMA"] = points_to_json(d.dma.points);
  pts["H_HHCA_DENSE"] = points_to_json(d.hhca.points);
  pts["H_HHCA_COARSE"] = points_to_json(d.hhca.coarse_points);
  pts["D_P"] = points_to_json(d.periodogram.points);
  pts["D_W"] = points_to_json(d.wavelet.points);
  pts["D_G"] = points_to_json(d.genton.points);
  pts["D_HW"] = points_to_json(d.hall_wood.points);
  j["scaling_points"] = pts;

  ordered_json stats;
  stats["mean"] = r.stats.mean;
  stats["min"] = r.stats.min;
  stats["max"] = r.stats.max;
  stats["sd"] = r.stats.sd;
  if (r.stats.skewness)
    stats["skewness"] = *r.stats.skewness;
  else
    stats["skewness"] = nullptr;
  if (r.stats.excess_kurtosis)
    stats["excess_kurtosis"] = *r.stats.excess_kurtosis;
  else
    stats["excess_kurtosis"] = nullptr;
  j["stats"] = stats;

  j["kpss"] = {{"statistic", r.kpss.statistic},
               {"bandwidth", r.kpss.bandwidth},
               {"verdict", to_string(r.kpss.verdict)}};
  return j;
}

namespace {

void write_plot_csvs(const fs::path& out_dir,
                     const std::vector<EfficiencyReport>& ranked) {
  std::string ranking = "ticker,ei\n";
  std::string hurst_csv = "ticker,mean_h\n";
  std::string fractal_csv = "ticker,mean_d\n";
  std::string scatter = "ticker,mean_h,mean_d\n";
  std::string shares = "ticker,local_share,global_share\n";
  for (const EfficiencyReport& r : ranked) {
    ranking += r.ticker + "," + format_double(r.ei) + "\n";
    hurst_csv += r.ticker + "," + format_double(mean_hurst(r)) + "\n";
    fractal_csv += r.ticker + "," + format_double(mean_fractal(r)) + "\n";
    scatter += r.ticker + "," + format_double(mean_hurst(r)) + "," +
               format_double(mean_fractal(r)) + "\n";
    if (r.shares.fully_efficient)
      shares += r.ticker + ",,\n";
    else
      shares += r.ticker + "," + format_double(r.shares.local_share) + "," +
                format_double(r.shares.global_share) + "\n";
  }
  write_text_file(out_dir / "ranking.csv", ranking);
  write_text_file(out_dir / "hurst.csv", hurst_csv);
  write_text_file(out_dir / "fractal.csv", fractal_csv);
  write_text_file(out_dir / "dh_scatter.csv", scatter);
  write_text_file(out_dir / "shares.csv", shares);

  std::string fit = "slope,intercept,r2\n";
  if (ranked.size() >= 3) {
    try {
      const LinearFit lf = dh_regression(ranked);
      fit += format_double(lf.slope) + "," + format_double(lf.intercept) +
             "," + format_double(lf.r2) + "\n";
    } catch (const Error& e) {
      std::cerr << "note: dh regression unavailable: " << e.what() << "\n";
    }
  } else {
    std::cerr << "note: dh regression unavailable (need >= 3 tickers)\n";
  }
  write_text_file(out_dir / "dh_fit.csv", fit);
}

}  // namespace

AnalyzeSummary run_analyze(const RunConfig& config) {
  validate(config);
  const std::vector<fs::path> files = collect_inputs(config);
  const fs::path out_dir(config.out_dir);
  fs::create_directories(out_dir);
  if (config.write_json) fs::create_directories(out_dir / "reports");

  const EstimatorParams params = config.estimator_params();
  const KpssParams kpss_params = config.kpss_params();
  const int n = static_cast<int>(files.size());

  // Per-ticker work runs in parallel across workers; each slot is written
  // by exactly one iteration, so results do not depend on the worker count.
  // With more than one worker the kernels run serially inside each ticker.
  std::vector<TickerOutcome> outcomes(n);
  std::vector<EfficiencyReport> reports(n);
  const kernels::Exec exec =
      config.workers > 1 ? kernels::Exec::Serial : kernels::Exec::Parallel;

#pragma omp parallel for schedule(dynamic) num_threads(config.workers) if (config.workers > 1)
  for (int i = 0; i < n; ++i) {
    TickerOutcome& outcome = outcomes[i];
    outcome.input = files[i].string();
    outcome.ticker = files[i].stem().string();
    try {
      const PriceSeries prices = read_price_csv(files[i]);
      const ReturnSeries returns = log_returns(prices);
      outcome.t = returns.t();
      outcome.short_series = returns.t() < kMinSamplesWarn;
      reports[i] = analyze_returns(returns, params, kpss_params, exec);
      outcome.ok = true;
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.error = e.what();
    }
  }

  AnalyzeSummary summary;
  summary.outcomes = outcomes;
  std::vector<EfficiencyReport> ok_reports;
  for (int i = 0; i < n; ++i) {
    if (outcomes[i].short_series)
      std::cerr << "warning: " << outcomes[i].ticker << ": short series (T="
                << outcomes[i].t << " < " << kMinSamplesWarn << ")\n";
    if (outcomes[i].ok) {
      ok_reports.push_back(std::move(reports[i]));
      ++summary.succeeded;
    } else {
      std::cerr << "error: " << outcomes[i].error << "\n";
      ++summary.failed;
    }
  }
  if (ok_reports.empty()) return summary;

  summary.ranked = rank(std::move(ok_reports));
  if (config.write_json) {
    for (const EfficiencyReport& r : summary.ranked)
      write_text_file(out_dir / "reports" / (r.ticker + ".json"),
                      report_to_json(r).dump(2) + "\n");
  }
  if (config.write_csv) write_plot_csvs(out_dir, summary.ranked);
  return summary;
}

std::filesystem::path run_synth(const RunConfig& config) {
  validate(config);
  const SynthSpec spec = config.synth_spec();
  const ReturnSeries returns = generate(spec);
  const PriceSeries prices = to_prices(returns);
  const fs::path out_dir(config.out_dir);
  fs::create_directories(out_dir);
  const fs::path file = out_dir / (spec.ticker + ".csv");
  write_price_csv(file, prices);
  return file;
}

}  // namespace effindex
