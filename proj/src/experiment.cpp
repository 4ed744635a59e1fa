#include "szego/experiment.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "szego/bounds.hpp"
#include "szego/trace_asymptotics.hpp"

namespace szego {

namespace {

namespace fs = std::filesystem;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::ofstream open_artifact(ExperimentReport& report, const fs::path& dir,
                            const std::string& name) {
  fs::path path = dir / name;
  std::ofstream out(path);
  if (!out) throw NumericalError("cannot write " + path.string());
  report.artifacts.push_back(path.string());
  return out;
}

void task_bo(const ExperimentConfig& cfg, const FourierSymbol& sym,
             ExperimentReport& report, const fs::path& dir) {
  BOCutoffs cutoffs;
  cutoffs.band = cfg.band;
  cutoffs.section = cfg.section;
  cutoffs.grid_log2 = cfg.grid_log2;
  FactorizationOptions fopts;
  fopts.grid_log2 = cfg.grid_log2;
  // Band headroom for the pair: the residue of b c - 1 enters the identity.
  const int band = cfg.band ? cfg.band : std::max(256, 2 * sym.band());
  CanonicalFactorization fact = canonical_factorization(sym, band, fopts);

  std::ofstream csv = open_artifact(report, dir, "bo.csv");
  write_bo_csv_header(csv);
  double worst = 0.0;
  const std::vector<int> ns = cfg.ns.empty()
                                  ? std::vector<int>{0, 1, 2, 4, 8, 16, 32, 64}
                                  : cfg.ns;
  for (int n : ns) {
    BOReport rep = bo_verify(sym, n, cutoffs, &fact);
    append_bo_csv(csv, rep);
    worst = std::max(worst, rep.rel_error);
  }
  report.verdicts.push_back({"bo_rel_error", worst < cfg.bo_tol,
                             "worst relError " + fmt17(worst) + " vs tol " +
                                 fmt17(cfg.bo_tol)});
}

void task_factorization(const ExperimentConfig& cfg, const FourierSymbol& sym,
                        ExperimentReport& report, const fs::path& dir) {
  FactorizationOptions fopts;
  fopts.grid_log2 = cfg.grid_log2;
  const int band = cfg.band ? cfg.band : std::max(256, sym.band());
  CanonicalFactorization fact = canonical_factorization(sym, band, fopts);
  std::ofstream out = open_artifact(report, dir, "factorization.txt");
  write_factorization(fact, out);
  const double worst = std::max(fact.right_residual, fact.left_residual);
  report.verdicts.push_back({"factorization_residual", worst < cfg.residual_tol,
                             "max residual " + fmt17(worst)});
}

ErrorSequence task_trace(const ExperimentConfig& cfg, const FourierSymbol& sym,
                         ExperimentReport& report, const fs::path& dir) {
  if (!cfg.function) throw ConfigError("trace task needs a [function]");
  if (!cfg.contour) throw ConfigError("trace task needs a [contour]");
  if (cfg.ns.empty()) throw ConfigError("trace task needs ns");
  const KreinIndex idx = cfg.krein ? *cfg.krein : KreinIndex(0.5, 0.5);
  ErrorSequenceOptions opts;
  opts.ef.section = cfg.section;
  opts.ef.grid_log2 = cfg.grid_log2;
  opts.ef.band = cfg.band;
  ErrorSequence seq =
      error_sequence(sym, *cfg.function, *cfg.contour, cfg.ns, idx, opts);
  std::ofstream csv = open_artifact(report, dir, "trace.csv");
  write_trace_csv_header(csv);
  for (const auto& p : seq.points) append_trace_csv(csv, p, seq.gf, seq.ef);
  return seq;
}

void task_rate(const ExperimentConfig& cfg, const ErrorSequence& seq,
               ExperimentReport& report, const fs::path& dir) {
  if (!cfg.krein) throw ConfigError("rate task needs [krein]");
  RateFit fit = rate_fit(seq, *cfg.krein);
  std::ofstream out = open_artifact(report, dir, "rate.json");
  write_rate_json(out, fit);
  const bool pass = fit.pass(cfg.rate_slack);
  report.verdicts.push_back(
      {"rate_slope", pass,
       fit.exact_regime
           ? "exact regime (all errors at roundoff floor)"
           : "slope " + fmt17(fit.slope) + " vs target " + fmt17(fit.target) +
                 " + " + fmt17(cfg.rate_slack)});
}

void task_bounds(const ExperimentConfig& cfg, const FourierSymbol& sym,
                 ExperimentReport& report, const fs::path& dir) {
  std::ofstream csv = open_artifact(report, dir, "bounds.csv");
  write_bound_csv_header(csv);
  bool all = true;

  Rng rng(cfg.seed);
  for (int trial = 0; trial < 100; ++trial) {
    Rng trial_rng(rng.next_u64());
    DenseOperator a = random_with_trace_norm(trial_rng, 6, 0.9);
    BoundCheck check = check_logdet_bound(a);
    append_bound_csv(csv, "logdet", check);
    all = all && check.pass;
  }
  for (int trial = 0; trial < 100; ++trial) {
    Rng trial_rng(rng.next_u64());
    const int m = 2 + int(trial_rng.next_u64() % 11);
    const int k = 2 + int(trial_rng.next_u64() % 11);
    const int l = 2 + int(trial_rng.next_u64() % 11);
    BoundCheck check = check_holder(random_matrix(trial_rng, m, k),
                                    random_matrix(trial_rng, k, l));
    append_bound_csv(csv, "holder", check);
    all = all && check.pass;
  }
  if (cfg.krein && sym.dim() == 1) {
    const double alpha = cfg.krein->alpha;
    const double beta = cfg.krein->beta;
    const double gamma = 0.5 - beta;
    for (int n : {8, 16, 32}) {
      BoundCheck minus = hs_bound_check(sym, n, alpha, gamma);
      append_bound_csv(csv, "hs_minus", minus);
      BoundCheck plus = hs_bound_check_plus(sym, n, beta, gamma);
      append_bound_csv(csv, "hs_plus", plus);
      all = all && (minus.pass || minus.skipped) && (plus.pass || plus.skipped);
    }
    if (alpha + beta >= 1.0) {
      FactorizationOptions fopts;
      fopts.grid_log2 = cfg.grid_log2;
      const int band = cfg.band ? cfg.band : std::max(256, sym.band());
      CanonicalFactorization fact = canonical_factorization(sym, band, fopts);
      TcBoundFit fit = tc_bound_fit(fact.b_sym, fact.c_sym, {16, 32, 64}, alpha,
                                    beta);
      for (const auto& check : fit.per_n) append_bound_csv(csv, "tc", check);
      report.verdicts.push_back(
          {"tc_stability", fit.stable && std::isfinite(fit.empirical_L),
           "empirical L " + fmt17(fit.empirical_L)});
    }
  }
  report.verdicts.push_back({"bounds_all_pass", all, all ? "all checks hold"
                                                         : "a check failed"});
}

}  // namespace

std::string default_output_dir() {
  if (const char* env = std::getenv("SZEGO_OUTPUT_DIR")) return env;
  return "szego-out";
}

ExperimentReport run_experiment(const ExperimentConfig& cfg,
                                const std::string& out_dir_override) {
  ExperimentReport report;
  fs::path dir = !out_dir_override.empty()
                     ? fs::path(out_dir_override)
                     : (!cfg.output_dir.empty() ? fs::path(cfg.output_dir)
                                                : fs::path(default_output_dir()));
  fs::create_directories(dir);
  FourierSymbol sym = cfg.make_symbol();

  std::vector<std::string> tasks = cfg.tasks;
  if (tasks.empty()) tasks = {"bo"};

  ErrorSequence seq;
  bool have_seq = false;
  for (const auto& task : tasks) {
    const auto t0 = std::chrono::steady_clock::now();
    if (task == "bo") {
      task_bo(cfg, sym, report, dir);
    } else if (task == "factorization") {
      task_factorization(cfg, sym, report, dir);
    } else if (task == "trace") {
      seq = task_trace(cfg, sym, report, dir);
      have_seq = true;
    } else if (task == "rate") {
      if (!have_seq) {
        seq = task_trace(cfg, sym, report, dir);
        have_seq = true;
      }
      task_rate(cfg, seq, report, dir);
    } else if (task == "bounds") {
      task_bounds(cfg, sym, report, dir);
    } else {
      throw ConfigError("unknown task: " + task);
    }
    report.timings[task] = seconds_since(t0);
  }

  std::ofstream summary = open_artifact(report, dir, "report.json");
  summary << "{\n  \"symbol\": \"" << sym.label() << "\",\n  \"verdicts\": [";
  for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
    const auto& v = report.verdicts[i];
    summary << (i ? ",\n    " : "\n    ") << "{\"name\": \"" << v.name
            << "\", \"pass\": " << (v.pass ? "true" : "false")
            << ", \"detail\": \"" << v.detail << "\"}";
  }
  summary << "\n  ],\n  \"timings\": {";
  std::size_t i = 0;
  for (const auto& [task, secs] : report.timings)
    summary << (i++ ? ", " : "") << "\"" << task << "\": " << fmt17(secs);
  summary << "}\n}\n";
  return report;
}

int run_config_path(const std::string& path, const std::string& out_dir_override) {
  try {
    ExperimentConfig cfg = parse_config_file(path);
    ExperimentReport report = run_experiment(cfg, out_dir_override);
    for (const auto& v : report.verdicts)
      std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << v.name << ": "
                << v.detail << '\n';
    return report.all_pass() ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical rejection: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace szego
