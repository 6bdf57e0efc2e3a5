#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "effindex/config.hpp"
#include "effindex/efficiency.hpp"

#include "json.hpp"

namespace effindex {

struct TickerOutcome {
  std::string ticker;
  std::string input;     // source path
  std::size_t t = 0;     // return count, 0 when ingestion failed
  bool short_series = false;  // t below the analysis warning threshold
  bool ok = false;
  std::string error;  // set when !ok
};

struct AnalyzeSummary {
  std::vector<TickerOutcome> outcomes;  // input order
  std::vector<EfficiencyReport> ranked;
  std::size_t succeeded = 0;
  std::size_t failed = 0;
};

// Full per-ticker pipeline: measure vector, EI, decomposition, descriptive
// stats and KPSS.
EfficiencyReport analyze_returns(const ReturnSeries& returns,
                                 const EstimatorParams& params = {},
                                 const KpssParams& kpss_params = {},
                                 kernels::Exec exec = kernels::Exec::Parallel);

// Expands config.inputs into a sorted list of CSV files (directories are
// scanned non-recursively for *.csv). Empty result throws ParameterError.
std::vector<std::filesystem::path> collect_inputs(const RunConfig& config);

// Runs the whole portfolio analysis and writes every artifact under
// config.out_dir: per-ticker report JSON plus the ranking/hurst/fractal/
// dh_scatter/dh_fit/shares plot CSVs. Per-ticker failures are recorded in
// the summary; usage-level problems throw ParameterError.
AnalyzeSummary run_analyze(const RunConfig& config);

// Writes one synthetic price CSV (<out_dir>/<ticker>.csv) and returns its
// path.
std::filesystem::path run_synth(const RunConfig& config);

nlohmann::ordered_json report_to_json(const EfficiencyReport& report);

}  // namespace effindex
