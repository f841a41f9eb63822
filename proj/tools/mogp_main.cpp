#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "mogp/experiment.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Multi-objective GP engine and experiment harness"};
  app.require_subcommand(1);

  unsigned jobs = 0;  // 0 = available parallelism
  app.add_option("-j,--jobs", jobs, "Concurrent runs (0 = hardware parallelism)");

  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "Execute one experiment cell");
  run_cmd->add_option("config", config_path, "Experiment config file")->required();

  std::string grid_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Execute a campaign grid");
  sweep_cmd->add_option("grid", grid_path, "Sweep grid file")->required();

  std::string manifest_path;
  auto* report_cmd = app.add_subcommand("report", "Aggregate a campaign into tables");
  report_cmd->add_option("manifest", manifest_path, "campaign.json from a sweep")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      const auto cfg = mogp::parse_config_file(config_path);
      const auto results = mogp::run_experiment(cfg, jobs);
      std::printf("%s: %zu/%zu runs completed\n", cfg.cell_id().c_str(),
                  results.size(), cfg.runs);
      if (results.size() != cfg.runs) return 1;
    } else if (sweep_cmd->parsed()) {
      const auto grid = mogp::parse_sweep_file(grid_path);
      const auto outcome = mogp::sweep(grid, jobs);
      std::printf("campaign manifest: %s (%zu/%zu runs completed)\n",
                  outcome.manifest_path.c_str(), outcome.completed_runs,
                  outcome.scheduled_runs);
      if (outcome.completed_runs != outcome.scheduled_runs) return 1;
    } else if (report_cmd->parsed()) {
      mogp::report(manifest_path);
      std::printf("report written next to %s\n", manifest_path.c_str());
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
