#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "lgines/sweep.hpp"

using namespace lgines;

namespace {

struct CliOptions {
  std::string config_path;
  std::string out_path;
  std::string format;
  int threads = 0;
  bool secular = false;
  double t_max = 0.0;
  int grid_points = 0;

  std::string statistics;
  double omega1 = 0.0, omega2 = 0.0, lambda = 0.0, J = 0.0;
  double T1 = 0.0, T2 = 0.0, T = 0.0, mu1 = 0.0, mu2 = 0.0, mu = 0.0;

  CLI::App* sub = nullptr;
};

void add_common_options(CLI::App* sub, CliOptions& opt) {
  sub->add_option("--config", opt.config_path, "declarative run configuration (JSON)");
  sub->add_option("--out", opt.out_path, "output path (stdout when omitted)");
  sub->add_option("--format", opt.format, "csv | json | svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  sub->add_option("--threads", opt.threads, "worker threads (env LGI_NES_THREADS)");
  sub->add_flag("--secular", opt.secular, "secular (Lindblad) generator");
  sub->add_option("--t-max", opt.t_max, "MLGI search window in units of pi/Omega");
  sub->add_option("--grid-points", opt.grid_points, "time-grid points");
}

void add_model_options(CLI::App* sub, CliOptions& opt) {
  sub->add_option("--statistics", opt.statistics, "bosonic | fermionic")
      ->check(CLI::IsMember({"bosonic", "fermionic"}));
  sub->add_option("--omega1", opt.omega1, "first qubit frequency");
  sub->add_option("--omega2", opt.omega2, "second qubit frequency");
  sub->add_option("--lambda", opt.lambda, "inter-qubit coupling");
  sub->add_option("--J", opt.J, "flat bath coupling spectrum");
  sub->add_option("--T1", opt.T1, "bath 1 temperature");
  sub->add_option("--T2", opt.T2, "bath 2 temperature");
  sub->add_option("--T", opt.T, "common temperature");
  sub->add_option("--mu1", opt.mu1, "bath 1 chemical potential");
  sub->add_option("--mu2", opt.mu2, "bath 2 chemical potential");
  sub->add_option("--mu", opt.mu, "common chemical potential");
}

SweepConfig assemble_config(const CliOptions& opt, Task task) {
  SweepConfig cfg;
  if (!opt.config_path.empty()) cfg = load_config_file(opt.config_path);
  cfg.task = task;

  const CLI::App* sub = opt.sub;
  if (sub->count("--statistics"))
    cfg.model.statistics =
        opt.statistics == "fermionic" ? Statistics::Fermionic : Statistics::Bosonic;
  if (sub->count("--omega1")) cfg.model.omega1 = opt.omega1;
  if (sub->count("--omega2")) cfg.model.omega2 = opt.omega2;
  if (sub->count("--lambda")) cfg.model.lambda = opt.lambda;
  if (sub->count("--J")) cfg.model.J = opt.J;
  if (sub->count("--T1")) cfg.model.T1 = opt.T1;
  if (sub->count("--T2")) cfg.model.T2 = opt.T2;
  if (sub->count("--T")) cfg.model.T1 = cfg.model.T2 = opt.T;
  if (sub->count("--mu1")) cfg.model.mu1 = opt.mu1;
  if (sub->count("--mu2")) cfg.model.mu2 = opt.mu2;
  if (sub->count("--mu")) cfg.model.mu1 = cfg.model.mu2 = opt.mu;
  if (sub->count("--out")) cfg.out_path = opt.out_path;
  if (sub->count("--format")) cfg.format = opt.format;
  if (sub->count("--threads")) cfg.threads = opt.threads;
  if (sub->count("--secular")) cfg.secular = opt.secular;
  if (sub->count("--t-max")) cfg.t_max_pi = opt.t_max;
  if (sub->count("--grid-points")) cfg.grid_points = opt.grid_points;
  return cfg;
}

int run_task(const CliOptions& opt, Task task) {
  const SweepConfig cfg = assemble_config(opt, task);
  const Dataset ds = run_sweep(cfg);
  write_dataset(ds, cfg);
  size_t bad = 0;
  for (const std::string& err : ds.errors)
    if (!err.empty()) ++bad;
  if (bad > 0)
    std::cerr << "warning: " << bad << " of " << ds.rows.size()
              << " rows carry an error column entry\n";
  return 0;
}

int run_validate(const CliOptions& opt, const std::string& corrupt) {
  ValidateOptions vopts;
  if (!corrupt.empty()) {
    int r = -1, c = -1;
    if (std::sscanf(corrupt.c_str(), "%d,%d", &r, &c) != 2 || r < 0 || r > 5 || c < 0 ||
        c > 5)
      throw ConfigError("inject-corruption", "expected row,col in 0..5");
    vopts.corrupt_entry = {r, c};
  }
  const ValidateReport rep = validate(vopts);
  for (const ValidateCheck& check : rep.checks) {
    std::printf("%-38s %s  max residual %.3e (tol %.0e)  %s\n", check.name.c_str(),
                check.passed ? "PASS" : "FAIL", check.max_residual, check.tolerance,
                check.detail.c_str());
  }
  std::printf("validate: %s\n", rep.all_passed ? "all checks passed" : "FAILURES present");
  if (!opt.out_path.empty()) {
    SweepConfig cfg = assemble_config(opt, Task::Validate);
    Dataset ds;
    ds.task = Task::Validate;
    ds.columns = {"max_residual", "tolerance", "passed"};
    for (const ValidateCheck& c : rep.checks) {
      ds.labels.push_back(c.name);
      ds.rows.push_back({c.max_residual, c.tolerance, c.passed ? 1.0 : 0.0});
      ds.errors.emplace_back(c.passed ? "" : c.detail);
    }
    write_dataset(ds, cfg);
  }
  return rep.all_passed ? 0 : 2;
}

int run_figure_cmd(const CliOptions& opt, const std::string& name) {
  SweepConfig overrides;
  overrides.out_path = opt.out_path;
  overrides.format = opt.sub->count("--format") ? opt.format : "";
  overrides.threads = opt.threads;
  overrides.grid_points = opt.sub->count("--grid-points") ? opt.grid_points : 0;
  overrides.t_max_pi = opt.sub->count("--t-max") ? opt.t_max : 0.0;
  overrides.secular = opt.secular;

  const FigureOutcome outcome = run_figure(name, &overrides);
  for (size_t k = 0; k < outcome.assertion_results.size(); ++k) {
    const auto& [label, ok] = outcome.assertion_results[k];
    std::printf("%s %-55s %s\n", ok ? "PASS" : "FAIL", label.c_str(),
                outcome.details[k].c_str());
  }
  if (opt.out_path.empty())
    std::printf("figure %s: %zu rows computed (use --out to write the dataset)\n",
                name.c_str(), outcome.dataset.rows.size());
  return outcome.all_passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lgi-nes: temporal correlations, Leggett-Garg inequality violations and\n"
      "steady-state transport for two coupled qubits in bosonic or fermionic\n"
      "environments (Bloch-Redfield dynamics beyond the secular approximation)"};
  app.require_subcommand(1);

  CliOptions opt;
  std::string figure_name;
  std::string corrupt;

  CLI::App* steady = app.add_subcommand("steady", "steady-state density matrix");
  CLI::App* lgi = app.add_subcommand("lgi", "LGI functions on a time grid");
  CLI::App* mlgi_cmd = app.add_subcommand("mlgi", "maximal LGI violation");
  CLI::App* thermo = app.add_subcommand("thermo", "steady-state currents and entropy rate");
  CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep from a config file");
  CLI::App* figure = app.add_subcommand("figure", "run a named figure recipe");
  CLI::App* validate_cmd = app.add_subcommand("validate", "run the cross-check suite");

  for (CLI::App* sub : {steady, lgi, mlgi_cmd, thermo, sweep}) {
    add_common_options(sub, opt);
    add_model_options(sub, opt);
  }
  add_common_options(figure, opt);
  figure->add_option("name", figure_name, "figure name (fig3a .. fig13b)");
  bool list_figures = false;
  figure->add_flag("--list", list_figures, "list available recipes");
  add_common_options(validate_cmd, opt);
  validate_cmd->add_option("--inject-corruption", corrupt,
                           "test fixture: perturb generator entry 'row,col'")
      ->group("");  // hidden

  sweep->require_option();  // a config is the natural way in

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (steady->parsed()) {
      opt.sub = steady;
      return run_task(opt, Task::SteadyState);
    }
    if (lgi->parsed()) {
      opt.sub = lgi;
      return run_task(opt, Task::LgiTrace);
    }
    if (mlgi_cmd->parsed()) {
      opt.sub = mlgi_cmd;
      return run_task(opt, Task::Mlgi);
    }
    if (thermo->parsed()) {
      opt.sub = thermo;
      return run_task(opt, Task::Thermo);
    }
    if (sweep->parsed()) {
      opt.sub = sweep;
      if (opt.config_path.empty())
        throw ConfigError("config", "the sweep subcommand requires --config");
      SweepConfig cfg = load_config_file(opt.config_path);
      opt.sub = sweep;
      // flag overrides
      if (sweep->count("--out")) cfg.out_path = opt.out_path;
      if (sweep->count("--format")) cfg.format = opt.format;
      if (sweep->count("--threads")) cfg.threads = opt.threads;
      if (sweep->count("--secular")) cfg.secular = true;
      if (sweep->count("--t-max")) cfg.t_max_pi = opt.t_max;
      if (sweep->count("--grid-points")) cfg.grid_points = opt.grid_points;
      const Dataset ds = run_sweep(cfg);
      write_dataset(ds, cfg);
      return 0;
    }
    if (figure->parsed()) {
      opt.sub = figure;
      if (list_figures) {
        for (const auto& [name, recipe] : figure_recipes())
          std::printf("%-8s %s\n", name.c_str(), recipe.description.c_str());
        return 0;
      }
      if (figure_name.empty())
        throw ConfigError("figure", "a figure name is required (or use --list)");
      return run_figure_cmd(opt, figure_name);
    }
    if (validate_cmd->parsed()) {
      opt.sub = validate_cmd;
      return run_validate(opt, corrupt);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
