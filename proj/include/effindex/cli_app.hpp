#pragma once

#include "effindex/config.hpp"

namespace effindex {

enum class CliCommand { None, Analyze, Synth };

struct ParsedInvocation {
  CliCommand command = CliCommand::None;
  RunConfig config;
  int exit_code = 0;   // meaningful when parse_done is true
  bool parse_done = false;  // true when parsing already handled the run
                            // (help text, usage error)
};

// Parses argv into a RunConfig. A config file given via --config is read
// first (flat key=value lines); command-line flags override it.
ParsedInvocation parse_cli(int argc, const char* const* argv);

// Parse + dispatch. Exit codes: 0 success, 1 per-ticker or generation
// failures, 2 usage/config errors.
int run_cli(int argc, const char* const* argv);

}  // namespace effindex
