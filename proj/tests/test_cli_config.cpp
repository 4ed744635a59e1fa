#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "szego/experiment.hpp"

using namespace szego;

TEST_CASE("config parsing: sections, lists, errors") {
  const std::string text =
      "# comment\n"
      "[symbol]\n"
      "name = S1\n"
      "r = 0.5\n"
      "[krein]\n"
      "alpha = 0.75\n"
      "beta = 0.75\n"
      "[function]\n"
      "kind = polynomial\n"
      "coeffs = 0 0 1\n"
      "[contour]\n"
      "shape = circle\n"
      "center = 1.25 0\n"
      "radius = 1.1\n"
      "nodes = 64\n"
      "[experiment]\n"
      "tasks = bo\n"
      "ns = 0 1 2 4\n"
      "[output]\n"
      "seed = 7\n";
  ExperimentConfig cfg = parse_config_text(text);
  CHECK(cfg.symbol_name == "S1");
  CHECK(cfg.symbol_params.at("r") == "0.5");
  REQUIRE(cfg.krein.has_value());
  CHECK(cfg.krein->alpha == 0.75);
  REQUIRE(cfg.function.has_value());
  CHECK(cfg.function->poly_coeffs().size() == 3);
  REQUIRE(cfg.contour.has_value());
  CHECK(cfg.contour->node_count() == 64);
  CHECK(cfg.ns == std::vector<int>{0, 1, 2, 4});
  CHECK(cfg.seed == 7);
}

TEST_CASE("config rejects non-increasing ns") {
  const std::string text =
      "[symbol]\nname = S1\n[experiment]\ntasks = bo\nns = 4 2 8\n";
  CHECK_THROWS_WITH_AS(parse_config_text(text),
                       doctest::Contains("strictly increasing"), ConfigError);
}

TEST_CASE("config rejects unknown task and bad krein") {
  CHECK_THROWS_AS(
      parse_config_text("[symbol]\nname = S1\n[experiment]\ntasks = dance\n"),
      ConfigError);
  CHECK_THROWS_AS(
      parse_config_text("[symbol]\nname = S1\n[krein]\nalpha = 1.5\nbeta = 0.5\n"),
      ConfigError);
  CHECK_THROWS_AS(parse_config_text("[symbol]\nfoo = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("key = 1\n"), ConfigError);
}

TEST_CASE("config: missing symbol file is a config error") {
  CHECK_THROWS_AS(
      parse_config_text("[symbol]\nfile = /nonexistent/missing.sym\n"),
      ConfigError);
}

TEST_CASE("run_experiment writes artifacts and verdicts") {
  namespace fs = std::filesystem;
  ExperimentConfig cfg = parse_config_text(
      "[symbol]\nname = S1\n[experiment]\ntasks = bo factorization\nns = 0 1 2\n");
  const fs::path dir = fs::temp_directory_path() / "szego-test-run";
  fs::remove_all(dir);
  ExperimentReport report = run_experiment(cfg, dir.string());
  CHECK(report.all_pass());
  CHECK(fs::exists(dir / "bo.csv"));
  CHECK(fs::exists(dir / "factorization.txt"));
  CHECK(fs::exists(dir / "report.json"));
  CHECK(report.timings.count("bo") == 1);
}

TEST_CASE("run_experiment: symbol from a serialized file") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "szego-test-filesym";
  fs::create_directories(dir);
  save_symbol(catalog("S3"), (dir / "s3.sym").string());
  ExperimentConfig cfg = parse_config_text(
      "[symbol]\nfile = " + (dir / "s3.sym").string() +
      "\n[experiment]\ntasks = bo\nns = 0 1 2\n");
  ExperimentReport report = run_experiment(cfg, (dir / "out").string());
  CHECK(report.all_pass());
}

TEST_CASE("default output dir honors the environment variable") {
  setenv("SZEGO_OUTPUT_DIR", "/tmp/szego-env-dir", 1);
  CHECK(default_output_dir() == "/tmp/szego-env-dir");
  unsetenv("SZEGO_OUTPUT_DIR");
  CHECK(default_output_dir() == "szego-out");
}

TEST_CASE("catalog listing is stable and mentions the S4 membership rule") {
  const auto& entries = catalog_entries();
  std::ostringstream joined;
  for (const auto& e : entries) joined << e.name << ";";
  CHECK(joined.str() == "S1;S2;S3;S4;S5;chi;");
  CHECK(entries[3].membership_note.find("alpha < q - 1/2") != std::string::npos);
}
