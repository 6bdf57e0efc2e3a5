#include "effindex/cli_app.hpp"

#include <iostream>
#include <memory>

#include "CLI11.hpp"

#include "effindex/analysis.hpp"
#include "effindex/error.hpp"

namespace effindex {

namespace {

// All value options live on the main app with fallthrough enabled, so the
// same names work as config-file keys (flat key=value) and as flags before
// or after the subcommand; flags given on the command line win over the file.
std::unique_ptr<CLI::App> build_app(RunConfig& config, CliCommand& command) {
  auto app = std::make_unique<CLI::App>(
      "Market efficiency analyzer: Hurst exponents, fractal dimensions, "
      "autocorrelation and the combined efficiency index");
  app->name("effindex");
  app->fallthrough(true);
  app->require_subcommand(0, 1);
  app->set_config("--config", "", "Flat key=value config file; flags override");

  app->add_option("--out", config.out_dir, "Output directory");
  app->add_option("--workers", config.workers,
                  "Concurrent per-ticker analyses");
  app->add_option("--dfa_min_scale", config.dfa_min_scale, "Smallest DFA box");
  app->add_option("--dfa_max_scale_divisor", config.dfa_max_scale_divisor,
                  "Largest DFA box is T divided by this");
  app->add_option("--dfa_num_scales", config.dfa_num_scales,
                  "Log-spaced DFA scale count");
  app->add_option("--dma_min_window", config.dma_min_window,
                  "Smallest DMA window (odd)");
  app->add_option("--dma_max_window", config.dma_max_window,
                  "Largest DMA window (odd)");
  app->add_option("--dma_window_step", config.dma_window_step,
                  "DMA window step (even)");
  app->add_option("--hhca_tau_max_lo", config.hhca_tau_max_lo,
                  "Smallest HHCA jackknife tau_max");
  app->add_option("--hhca_tau_max_hi", config.hhca_tau_max_hi,
                  "Largest HHCA jackknife tau_max");
  app->add_option("--periodogram_cutoff_exponent",
                  config.periodogram_cutoff_exponent,
                  "Use Fourier frequencies up to T^e");
  app->add_option("--wavelet_min_coeffs", config.wavelet_min_coeffs,
                  "Exclude wavelet levels with fewer detail coefficients");
  app->add_option("--kpss_bandwidth", config.kpss_bandwidth,
                  "Bartlett lags; 0 = floor(4*(T/100)^0.25)");
  app->add_flag("--write_json,!--no-write_json", config.write_json,
                "Write per-ticker report JSON");
  app->add_flag("--write_csv,!--no-write_csv", config.write_csv,
                "Write plot CSVs");

  app->add_option("--synth_kind", config.synth_kind,
                  "Synthetic kind: fgn|ar1|whitenoise|randomwalk");
  app->add_option("--synth_h", config.synth_h, "fGn Hurst exponent");
  app->add_option("--synth_phi", config.synth_phi, "AR(1) coefficient");
  app->add_option("--synth_t", config.synth_t, "Synthetic series length");
  app->add_option("--seed", config.seed, "Generator seed");
  app->add_option("--synth_ticker", config.synth_ticker,
                  "Synthetic ticker name");

  CLI::App* analyze =
      app->add_subcommand("analyze", "Analyze price CSVs and write reports");
  analyze->add_option("inputs", config.inputs, "CSV files and/or directories");
  analyze->callback([&command] { command = CliCommand::Analyze; });

  CLI::App* synth =
      app->add_subcommand("synth", "Write one synthetic price CSV");
  synth->callback([&command] { command = CliCommand::Synth; });

  return app;
}

}  // namespace

ParsedInvocation parse_cli(int argc, const char* const* argv) {
  ParsedInvocation inv;
  auto app = build_app(inv.config, inv.command);
  try {
    app->parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app->exit(e);
    inv.parse_done = true;
    inv.exit_code = 0;
    return inv;
  } catch (const CLI::ParseError& e) {
    app->exit(e);
    inv.parse_done = true;
    inv.exit_code = 2;
    return inv;
  }
  return inv;
}

int run_cli(int argc, const char* const* argv) {
  ParsedInvocation inv = parse_cli(argc, argv);
  if (inv.parse_done) return inv.exit_code;

  try {
    switch (inv.command) {
      case CliCommand::None:
        std::cerr << "error: expected a subcommand (analyze | synth); "
                     "run with --help for usage\n";
        return 2;
      case CliCommand::Analyze: {
        const AnalyzeSummary summary = run_analyze(inv.config);
        std::cerr << "analyzed " << summary.succeeded << "/"
                  << summary.outcomes.size() << " tickers\n";
        return summary.failed == 0 ? 0 : 1;
      }
      case CliCommand::Synth: {
        const auto file = run_synth(inv.config);
        std::cerr << "wrote " << file.string() << "\n";
        return 0;
      }
    }
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GenerationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace effindex
