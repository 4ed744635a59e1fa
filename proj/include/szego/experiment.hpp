#pragma once

#include <map>

#include "szego/config.hpp"

namespace szego {

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExperimentReport {
  std::vector<Verdict> verdicts;
  std::map<std::string, double> timings;  // seconds per task
  std::vector<std::string> artifacts;     // files written

  bool all_pass() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }
};

/// Runs the configured tasks, writes CSV/report artifacts into the output
/// directory, and returns the verdicts. Deterministic for a fixed config
/// and seed; the worker count changes nothing but the wall clock.
ExperimentReport run_experiment(const ExperimentConfig& cfg,
                                const std::string& out_dir_override = "");

/// Exit code semantics of the CLI: 0 all verdicts pass, 1 verdict failed,
/// 2 config error, 3 numerical rejection.
int run_config_path(const std::string& path,
                    const std::string& out_dir_override = "");

std::string default_output_dir();

}  // namespace szego
