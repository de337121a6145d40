#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tancone/groebner.hpp"

namespace tancone {

/// Runtime knobs shared by every subcommand. Flags override the config file
/// (TANCONE_CONFIG or --config), which overrides these defaults.
struct CliConfig {
  Int degree_budget = 4000;
  long pair_budget = 2000000;
  Int dmax_hilbert = 24;
  std::string format = "text";  // text | json | csv
  int jobs = 0;
  unsigned long seed = 20240614;
  double window_factor = 1.0;
  bool quiet = false;

  GroebnerConfig gb() const {
    GroebnerConfig cfg;
    cfg.max_degree = degree_budget;
    cfg.max_pairs = pair_budget;
    return cfg;
  }
};

/// Exit codes: 0 success, 1 math-check failure (conjecture violation or
/// oracle mismatch), 2 usage, 3 budget exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Helper shared with tests: parse a key=value config file into cfg.
void load_config_file(const std::string& path, CliConfig& cfg);

}  // namespace tancone
