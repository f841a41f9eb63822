#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mogp/engine.hpp"
#include "mogp/metrics.hpp"

namespace mogp {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One experiment cell: a (dataset, algorithm, method, bounds) combination.
struct ExperimentConfig {
  std::string dataset;         // logical name (manifest key)
  std::string data_path;       // CSV location
  std::string label_column;
  std::string positive_label;
  bool normalize = false;

  Algorithm algorithm = Algorithm::Nsga2;
  Method method = Method::Canonical;
  std::optional<double> lbss;
  double ubss = 0.5;

  std::size_t population = 500;
  std::size_t generations = 50;
  std::size_t runs = 50;
  std::uint64_t base_seed = 1;
  std::string output_dir = "out";

  VariationConfig variation;

  void validate() const;
  /// Stable identifier used for the result directory, e.g.
  /// "ion_nsga2_sdo_L0.1_U0.5" (bounds suffix only for semantic methods).
  std::string cell_id() const;
  EngineConfig engine_config() const;
};

struct RunResult {
  std::string run_id;
  std::uint64_t seed = 0;
  std::vector<double> hv_trace;    // per-generation train-front HV
  FrontSnapshot test_front;        // final front re-evaluated on the test set
  std::vector<std::string> front_programs;  // s-expressions, aligned with points
  double final_hv = 0.0;
  double wall_time_s = 0.0;        // informational only, not persisted
};

/// Key/value config file with [section] headers. Unknown keys are an error.
ExperimentConfig parse_config_file(const std::string& path);

/// Dataset manifest: maps logical dataset names to file path and label
/// conventions (JSON).
struct DatasetEntry {
  std::string path;
  std::string label_column;
  std::string positive_label;
};
std::map<std::string, DatasetEntry> load_dataset_manifest(const std::string& path);

void apply_dataset_entry(ExperimentConfig& cfg, const DatasetEntry& e);

/// Execute one run of a cell (seed = base_seed + run_index).
RunResult execute_run(const ExperimentConfig& cfg, const Dataset& full,
                      std::size_t run_index);

/// Execute all runs of a cell with up to `jobs` worker threads, skipping
/// runs whose result files already exist. Results are persisted one CSV per
/// run under <output_dir>/<cell_id>/.
std::vector<RunResult> run_experiment(const ExperimentConfig& cfg, unsigned jobs);

RunResult load_run_file(const std::filesystem::path& file);
void save_run_file(const std::filesystem::path& file, const ExperimentConfig& cfg,
                   const RunResult& r);

/// Grid description for a sweep campaign.
struct SweepGrid {
  std::string manifest_path;
  std::vector<std::string> datasets;
  std::vector<Algorithm> algorithms;
  std::vector<Method> methods;
  std::vector<std::optional<double>> lbss_values;  // nullopt = absent
  std::vector<double> ubss_values;
  std::size_t population = 500;
  std::size_t generations = 50;
  std::size_t runs = 50;
  std::uint64_t base_seed = 1;
  std::string output_dir = "out";
  bool normalize = false;
  VariationConfig variation;
};

SweepGrid parse_sweep_file(const std::string& path);

/// All cells of a grid: semantic methods get the full lbss x ubss product,
/// canonical a single cell. Duplicate cells raise a ConfigError.
std::vector<ExperimentConfig> enumerate_cells(const SweepGrid& grid);

/// Run every cell and write <output_dir>/campaign.json linking cells to
/// their result files.
struct SweepOutcome {
  std::string manifest_path;
  std::size_t scheduled_runs = 0;
  std::size_t completed_runs = 0;
};
SweepOutcome sweep(const SweepGrid& grid, unsigned jobs);

/// Aggregate a campaign into summary tables (CSV + JSON) under the
/// campaign's output directory: per-cell average HV +- std with
/// significance flags vs the canonical cell, accumulated-PO-front
/// hypervolumes, payoff matrices, and plot-ready front coordinates.
/// Missing result files are listed and the report proceeds flagged partial.
void report(const std::string& campaign_manifest_path);

}  // namespace mogp
