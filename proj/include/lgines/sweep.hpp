#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgines/lgi.hpp"
#include "lgines/thermo.hpp"

namespace lgines {

enum class Task { SteadyState, LgiTrace, Mlgi, Thermo, Validate };

struct AxisSpec {
  std::string param;  // omega1, omega2, omega_bar, theta, lambda, J, T1, T2, T_m, dT, mu1, mu2, mu_m, dmu
  enum class Scale { Linear, Log } scale = Scale::Linear;
  double min = 0.0;
  double max = 0.0;
  int points = 0;
};

struct ModelSpec {
  Statistics statistics = Statistics::Bosonic;
  double omega1 = 1.0, omega2 = 1.0, lambda = 0.9;
  double J = 0.005;
  double T1 = 1.0, T2 = 1.0;
  double mu1 = 0.0, mu2 = 0.0;

  Model build() const;
  void apply(const std::string& param, double value);  // resolves pseudo-axes
};

struct SweepConfig {
  Task task = Task::Mlgi;
  ModelSpec model;
  std::vector<AxisSpec> axes;  // at most 2
  bool secular = false;
  bool compare_secular = false;  // Mlgi only: adds an mlgi_secular column
  double t_max_pi = 4.0;         // MLGI search window, units of pi/Omega
  int grid_points = 512;
  std::string out_path;
  std::string format = "csv";  // csv | json | svg
  int threads = 0;             // 0 -> hardware concurrency
  // Bundled figure recipes run at the lambda = omega_bar reference point, on
  // the conservative-guard boundary; user configs keep the strict guard.
  bool relax_lambda_guard = false;
};

struct Dataset {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> errors;  // one per row, empty = ok
  std::vector<std::string> labels;  // row labels, validate task only
  Task task = Task::Mlgi;

  int column(const std::string& name) const;
  double at(size_t row, const std::string& name) const;
};

// Validates a config without running it; throws ConfigError with a field path.
void validate_config(const SweepConfig& cfg);

// Row-major deterministic sweep; per-row failures land in the error column.
Dataset run_sweep(const SweepConfig& cfg);

// Declarative config (JSON) <-> SweepConfig.
SweepConfig load_config_json(const std::string& text);
SweepConfig load_config_file(const std::string& path);

void write_csv(const Dataset& ds, std::ostream& out);
void write_json(const Dataset& ds, std::ostream& out);
void write_svg(const Dataset& ds, const SweepConfig& cfg, std::ostream& out);
void write_dataset(const Dataset& ds, const SweepConfig& cfg);  // honors out_path/format

// Frozen parameter sets for the bundled reference figures, with qualitative
// shape assertions evaluated on the resulting dataset.
struct FigureAssertion {
  std::string name;
  std::function<bool(const Dataset&, std::string& detail)> check;
};

struct FigureRecipe {
  std::string name;
  std::string description;
  SweepConfig config;
  std::vector<FigureAssertion> assertions;
};

const std::map<std::string, FigureRecipe>& figure_recipes();

struct FigureOutcome {
  Dataset dataset;
  std::vector<std::pair<std::string, bool>> assertion_results;
  std::vector<std::string> details;
  bool all_passed = true;
};

FigureOutcome run_figure(const std::string& name, const SweepConfig* overrides = nullptr);

// End-to-end cross-check suite (generator consistency, steady-state triple
// agreement, currents, INM oracle).
struct ValidateOptions {
  // Test fixture: perturb one closed-form generator entry to prove the
  // consistency check localizes transcription errors.
  std::optional<std::pair<int, int>> corrupt_entry;
  double corrupt_delta = 1e-6;
};

struct ValidateCheck {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct ValidateReport {
  std::vector<ValidateCheck> checks;
  bool all_passed = true;
};

ValidateReport validate(const ValidateOptions& opts = {});

}  // namespace lgines
