#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "szego/acceptance.hpp"
#include "szego/experiment.hpp"
#include "szego/parallel.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Toeplitz determinant and trace asymptotics workbench"};
  app.require_subcommand(1);

  std::string config_path, out_dir, level = "full", golden_dir = "configs/golden";
  int jobs = 0;

  CLI::App* run = app.add_subcommand("run", "run a config-driven experiment");
  run->add_option("--config", config_path, "config file")->required();
  run->add_option("--out", out_dir, "output directory (overrides the config)");
  run->add_option("--jobs", jobs, "worker threads (0 = hardware)");

  CLI::App* cat = app.add_subcommand("catalog", "list the built-in test symbols");

  CLI::App* verify = app.add_subcommand("verify", "run the release checklist");
  verify->add_option("--level", level, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  verify->add_option("--golden", golden_dir, "directory with golden CSVs");

  CLI11_PARSE(app, argc, argv);
  szego::set_max_workers(jobs);

  if (run->parsed()) return szego::run_config_path(config_path, out_dir);

  if (cat->parsed()) {
    for (const auto& entry : szego::catalog_entries()) {
      std::cout << entry.name << "\n  params: " << entry.params_help
                << "\n  membership: " << entry.membership_note << "\n";
    }
    return 0;
  }

  if (verify->parsed()) {
    const auto results = szego::run_acceptance(
        level == "quick" ? szego::VerifyLevel::Quick : szego::VerifyLevel::Full,
        std::cout, golden_dir);
    return szego::acceptance_exit_code(results);
  }
  return 0;
}
