#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "szego/analytic_function.hpp"
#include "szego/contour.hpp"
#include "szego/symbol.hpp"

namespace szego {

/// Flat key/value config with [section] headers; '#' starts a comment.
struct ExperimentConfig {
  // [symbol]
  std::string symbol_name;           // catalog name, or empty when a file is given
  CatalogParams symbol_params;
  std::string symbol_file;
  // [krein]
  std::optional<KreinIndex> krein;
  // [function]
  std::optional<AnalyticFunction> function;
  // [contour]
  std::optional<Contour> contour;
  // [experiment]
  std::vector<std::string> tasks;    // bo | trace | rate | bounds | factorization
  std::vector<int> ns;
  double bo_tol = 1e-8;
  double residual_tol = 1e-8;
  double rate_slack = 0.15;
  // [cutoffs]
  int band = 0;
  int section = 0;
  int grid_log2 = 0;
  // [output]
  std::string output_dir;
  std::uint64_t seed = 0x5eed0f42u;

  FourierSymbol make_symbol() const;
};

ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& origin = "<config>");

}  // namespace szego
