#include "lgines/sweep.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

namespace lgines {

using nlohmann::json;

int Dataset::column(const std::string& name) const {
  for (size_t c = 0; c < columns.size(); ++c)
    if (columns[c] == name) return static_cast<int>(c);
  throw ConfigError("columns", "no column named '" + name + "'");
}

double Dataset::at(size_t row, const std::string& name) const {
  return rows.at(row).at(static_cast<size_t>(column(name)));
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const char* task_name(Task t) {
  switch (t) {
    case Task::SteadyState: return "steady";
    case Task::LgiTrace: return "lgi";
    case Task::Mlgi: return "mlgi";
    case Task::Thermo: return "thermo";
    case Task::Validate: return "validate";
  }
  return "?";
}

const std::vector<std::string> kParamNames = {
    "omega1", "omega2", "omega_bar", "delta_omega", "theta", "lambda",
    "J",      "T1",     "T2",        "T_m",         "dT",    "mu1",
    "mu2",    "mu_m",   "dmu"};

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LGI_NES_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

Model ModelSpec::build() const {
  const SystemParams sys(omega1, omega2, lambda);
  const BathParams bath = statistics == Statistics::Bosonic
                              ? BathParams::bosonic(T1, T2, J)
                              : BathParams::fermionic(T1, T2, mu1, mu2, J);
  return Model::build(sys, bath);
}

void ModelSpec::apply(const std::string& param, double value) {
  if (param == "omega1") {
    omega1 = value;
  } else if (param == "omega2") {
    omega2 = value;
  } else if (param == "omega_bar") {
    const double dw = omega1 - omega2;
    omega1 = value + 0.5 * dw;
    omega2 = value - 0.5 * dw;
  } else if (param == "delta_omega") {
    const double wb = 0.5 * (omega1 + omega2);
    omega1 = wb + 0.5 * value;
    omega2 = wb - 0.5 * value;
  } else if (param == "theta") {
    // delta_omega = lambda / tan(theta) at fixed omega_bar and lambda.
    const double wb = 0.5 * (omega1 + omega2);
    const double dw = lambda / std::tan(value);
    omega1 = wb + 0.5 * dw;
    omega2 = wb - 0.5 * dw;
  } else if (param == "lambda") {
    lambda = value;
  } else if (param == "J") {
    J = value;
  } else if (param == "T1") {
    T1 = value;
  } else if (param == "T2") {
    T2 = value;
  } else if (param == "T_m") {
    const double dt = T2 - T1;
    T1 = value - 0.5 * dt;
    T2 = value + 0.5 * dt;
  } else if (param == "dT") {
    const double tm = 0.5 * (T1 + T2);
    T1 = tm - 0.5 * value;
    T2 = tm + 0.5 * value;
  } else if (param == "mu1") {
    mu1 = value;
  } else if (param == "mu2") {
    mu2 = value;
  } else if (param == "mu_m") {
    const double dm = mu2 - mu1;
    mu1 = value - 0.5 * dm;
    mu2 = value + 0.5 * dm;
  } else if (param == "dmu") {
    const double mm = 0.5 * (mu1 + mu2);
    mu1 = mm - 0.5 * value;
    mu2 = mm + 0.5 * value;
  } else {
    throw ConfigError("axes.param", "unknown parameter '" + param + "'");
  }
}

namespace {

double axis_value(const AxisSpec& ax, int k) {
  if (ax.points <= 1) return ax.min;
  const double f = static_cast<double>(k) / (ax.points - 1);
  if (ax.scale == AxisSpec::Scale::Log)
    return ax.min * std::pow(ax.max / ax.min, f);
  return ax.min + f * (ax.max - ax.min);
}

void preflight_model(const ModelSpec& ms, bool relax_guard, const std::string& where) {
  if (!relax_guard && !(ms.lambda < std::sqrt(ms.omega1 * ms.omega2)))
    throw ConfigError(where,
                      "coupling reaches the lambda >= sqrt(omega1*omega2) boundary "
                      "(quantum-phase-transition guard)");
  try {
    (void)ms.build();
  } catch (const Error& e) {
    throw ConfigError(where, e.what());
  }
}

}  // namespace

void validate_config(const SweepConfig& cfg) {
  if (cfg.axes.size() > 2)
    throw ConfigError("axes", "at most 2 swept axes per run");
  if (cfg.task == Task::LgiTrace && !cfg.axes.empty())
    throw ConfigError("axes", "the lgi trace task does not accept swept axes");
  if (cfg.task == Task::Validate && !cfg.axes.empty())
    throw ConfigError("axes", "the validate task does not accept swept axes");
  for (size_t i = 0; i < cfg.axes.size(); ++i) {
    const AxisSpec& ax = cfg.axes[i];
    const std::string where = "axes[" + std::to_string(i) + "]";
    if (std::find(kParamNames.begin(), kParamNames.end(), ax.param) == kParamNames.end())
      throw ConfigError(where + ".param", "unknown parameter '" + ax.param + "'");
    if (ax.points < 1) throw ConfigError(where + ".points", "need at least 1 point");
    if (!(ax.min <= ax.max)) throw ConfigError(where + ".min", "min must not exceed max");
    if (ax.scale == AxisSpec::Scale::Log && !(ax.min > 0.0))
      throw ConfigError(where + ".min", "log scale requires min > 0");
  }
  if (!(cfg.t_max_pi > 0.0)) throw ConfigError("t_max_pi", "must be positive");
  if (cfg.grid_points < 8) throw ConfigError("grid_points", "need at least 8 points");
  if (cfg.format != "csv" && cfg.format != "json" && cfg.format != "svg")
    throw ConfigError("format", "expected csv, json or svg");
  if (cfg.compare_secular && cfg.task != Task::Mlgi)
    throw ConfigError("compare_secular", "only meaningful for the mlgi task");

  // Dry-run the axis corners; monotone parameter maps make corners sufficient.
  if (cfg.task != Task::Validate) {
    std::vector<std::vector<double>> corner_values;
    for (const AxisSpec& ax : cfg.axes) {
      if (ax.points == 1)
        corner_values.push_back({ax.min});
      else
        corner_values.push_back({ax.min, ax.max});
    }
    if (corner_values.empty()) {
      preflight_model(cfg.model, cfg.relax_lambda_guard, "model");
    } else if (corner_values.size() == 1) {
      for (double v : corner_values[0]) {
        ModelSpec ms = cfg.model;
        ms.apply(cfg.axes[0].param, v);
        preflight_model(ms, cfg.relax_lambda_guard, "axes[0]");
      }
    } else {
      for (double v0 : corner_values[0])
        for (double v1 : corner_values[1]) {
          ModelSpec ms = cfg.model;
          ms.apply(cfg.axes[0].param, v0);
          ms.apply(cfg.axes[1].param, v1);
          preflight_model(ms, cfg.relax_lambda_guard, "axes");
        }
    }
  }
}

namespace {

std::vector<std::string> param_columns() {
  return {"fermionic", "omega1", "omega2", "lambda", "J",
          "T1",        "T2",     "mu1",    "mu2",    "theta",
          "Omega"};
}

void fill_params(std::vector<double>& row, const ModelSpec& ms, const Model* m) {
  row.push_back(ms.statistics == Statistics::Fermionic ? 1.0 : 0.0);
  row.push_back(ms.omega1);
  row.push_back(ms.omega2);
  row.push_back(ms.lambda);
  row.push_back(ms.J);
  row.push_back(ms.T1);
  row.push_back(ms.T2);
  row.push_back(ms.mu1);
  row.push_back(ms.mu2);
  row.push_back(m ? m->eb.theta : kNaN);
  row.push_back(m ? m->eb.Omega : kNaN);
}

// One sweep point for the row-oriented tasks.
void compute_row(const SweepConfig& cfg, const ModelSpec& ms, std::vector<double>& row,
                 std::string& error) {
  row.clear();
  error.clear();
  try {
    const Model m = ms.build();
    fill_params(row, ms, &m);
    const Generator gen = build_block_generator(m, cfg.secular);
    const SteadyState ss = steady_state_closed_form(m);
    const double min_eig = ss.state.min_eigenvalue();

    switch (cfg.task) {
      case Task::SteadyState: {
        row.push_back(ss.state.v[0].real());
        row.push_back(ss.state.v[1].real());
        row.push_back(ss.state.v[2].real());
        row.push_back(ss.state.v[3].real());
        row.push_back(ss.state.v[4].real());
        row.push_back(ss.state.v[4].imag());
        row.push_back(min_eig);
        row.push_back(min_eig < -1e-9 ? 1.0 : 0.0);
        break;
      }
      case Task::Mlgi: {
        const Observable obs = observable_sigma_z1(m.eb);
        MlgiOptions opts;
        opts.t_max = cfg.t_max_pi * M_PI / m.eb.Omega;
        opts.grid = cfg.grid_points;
        const LgiReport rep = mlgi(gen, obs, ss.state, opts);
        row.push_back(rep.mlgi);
        row.push_back(rep.t_star);
        row.push_back(static_cast<double>(rep.argmax_which));
        row.push_back(rep.violated ? 1.0 : 0.0);
        row.push_back(first_order_trust(m, rep.t_star));
        double sigma = kNaN;
        try {
          ThermoReport tr = m.bath.statistics == Statistics::Bosonic
                                ? heat_current(m, ss)
                                : particle_current(m, ss);
          sigma = entropy_production(m, tr);
        } catch (const Error&) {
          // entropy rate undefined for this bath configuration
        }
        row.push_back(sigma);
        if (cfg.compare_secular) {
          const Generator sec = build_block_generator(m, true);
          const SteadyState ss_sec = steady_state_nullspace(sec);
          row.push_back(mlgi(sec, obs, ss_sec.state, opts).mlgi);
        }
        row.push_back((rep.positivity_warning || min_eig < -1e-9) ? 1.0 : 0.0);
        break;
      }
      case Task::Thermo: {
        ThermoReport rep = m.bath.statistics == Statistics::Bosonic
                               ? heat_current(m, ss)
                               : particle_current(m, ss);
        double sigma = kNaN;
        try {
          sigma = entropy_production(m, rep);
        } catch (const Error&) {
        }
        row.push_back(rep.I2);
        row.push_back(rep.I1);
        row.push_back(rep.I2_trace);
        row.push_back(sigma);
        row.push_back(min_eig < -1e-9 ? 1.0 : 0.0);
        break;
      }
      default:
        break;
    }
  } catch (const Error& e) {
    error = e.what();
    if (row.empty()) fill_params(row, ms, nullptr);
  }
}

Dataset run_trace(const SweepConfig& cfg) {
  Dataset ds;
  ds.task = cfg.task;
  ds.columns = param_columns();
  for (const char* c : {"t", "omega_t_over_pi", "c_q", "i2", "iplus", "iminus",
                        "iplus_order0", "iplus_order01", "positivity_flag"})
    ds.columns.push_back(c);

  const Model m = cfg.model.build();
  const Generator gen = build_block_generator(m, cfg.secular);
  const SteadyState ss = steady_state_closed_form(m);
  const Observable obs = observable_sigma_z1(m.eb);
  const double mean_q = (obs.Q.cast<std::complex<double>>() * ss.state.matrix())
                            .trace()
                            .real();

  MlgiOptions opts;
  opts.t_max = cfg.t_max_pi * M_PI / m.eb.Omega;
  opts.grid = cfg.grid_points;
  const LgiReport rep = mlgi(gen, obs, ss.state, opts);

  // Overlay regime, when one applies.
  bool have_overlay = true;
  Regime regime{};
  const bool sym = std::abs(m.sys.delta_omega()) <= 1e-12 * m.sys.omega_bar();
  const bool eq = std::abs(m.bath.dT()) <= 1e-12 * std::max(m.bath.T1, m.bath.T2) &&
                  std::abs(m.bath.dmu()) <= 1e-12 * std::max({std::abs(m.bath.mu1),
                                                              std::abs(m.bath.mu2), 1.0});
  const bool bosonic = m.bath.statistics == Statistics::Bosonic;
  if (eq)
    regime = bosonic ? Regime::BosonicEq : Regime::FermionicEq;
  else if (sym)
    regime = bosonic ? Regime::BosonicNoneq : Regime::FermionicNoneq;
  else
    have_overlay = false;

  for (size_t k = 0; k < rep.t_grid.size(); ++k) {
    std::vector<double> row;
    fill_params(row, cfg.model, &m);
    const double t = rep.t_grid[k];
    row.push_back(t);
    row.push_back(t * m.eb.Omega / M_PI);
    row.push_back(2.0 * mean_q - rep.I2[k]);  // C(t) back from I2
    row.push_back(rep.I2[k]);
    row.push_back(rep.Iplus[k]);
    row.push_back(rep.Iminus[k]);
    if (have_overlay) {
      const LgiZeroth z = lgi_zeroth(t, m.eb.theta, m.eb.Omega, ss.state);
      row.push_back(z.Iplus);
      row.push_back(z.Iplus + lgi_first_order(regime, t, m, ss.state));
    } else {
      row.push_back(kNaN);
      row.push_back(kNaN);
    }
    row.push_back(rep.positivity_flags[k] ? 1.0 : 0.0);
    ds.rows.push_back(std::move(row));
    ds.errors.emplace_back();
  }
  return ds;
}

}  // namespace

Dataset run_sweep(const SweepConfig& cfg) {
  validate_config(cfg);

  if (cfg.task == Task::Validate) {
    const ValidateReport rep = validate();
    Dataset ds;
    ds.task = Task::Validate;
    ds.columns = {"max_residual", "tolerance", "passed"};
    for (const ValidateCheck& c : rep.checks) {
      ds.labels.push_back(c.name);
      ds.rows.push_back({c.max_residual, c.tolerance, c.passed ? 1.0 : 0.0});
      ds.errors.emplace_back(c.passed ? "" : c.detail);
    }
    return ds;
  }

  if (cfg.task == Task::LgiTrace) return run_trace(cfg);

  Dataset ds;
  ds.task = cfg.task;
  ds.columns = param_columns();
  switch (cfg.task) {
    case Task::SteadyState:
      for (const char* c : {"rho11", "rho22", "rho33", "rho44", "re_rho23", "im_rho23",
                            "min_eigenvalue", "positivity_flag"})
        ds.columns.push_back(c);
      break;
    case Task::Mlgi:
      for (const char* c : {"mlgi", "t_star", "argmax_which", "violated", "trust", "sigma"})
        ds.columns.push_back(c);
      if (cfg.compare_secular) ds.columns.push_back("mlgi_secular");
      ds.columns.push_back("positivity_flag");
      break;
    case Task::Thermo:
      for (const char* c : {"current_i2", "current_i1", "current_i2_trace", "sigma",
                            "positivity_flag"})
        ds.columns.push_back(c);
      break;
    default:
      break;
  }

  // Row-major grid over up to two axes.
  const int n0 = cfg.axes.size() > 0 ? cfg.axes[0].points : 1;
  const int n1 = cfg.axes.size() > 1 ? cfg.axes[1].points : 1;
  const int total = n0 * n1;
  ds.rows.resize(total);
  ds.errors.resize(total);

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) {
      ModelSpec ms = cfg.model;
      if (!cfg.axes.empty()) ms.apply(cfg.axes[0].param, axis_value(cfg.axes[0], idx / n1));
      if (cfg.axes.size() > 1) ms.apply(cfg.axes[1].param, axis_value(cfg.axes[1], idx % n1));
      compute_row(cfg, ms, ds.rows[idx], ds.errors[idx]);
      // Pad error rows so every row has the full column count.
      while (ds.rows[idx].size() < ds.columns.size()) ds.rows[idx].push_back(kNaN);
    }
  };

  const int nthreads = std::min(resolve_threads(cfg.threads), total);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return ds;
}

SweepConfig load_config_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
  }

  SweepConfig cfg;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key != "task" && key != "model" && key != "axes" && key != "secular" &&
        key != "compare_secular" && key != "t_max_pi" && key != "grid_points" &&
        key != "output" && key != "threads")
      throw ConfigError(key, "unknown field");
  }

  if (j.contains("task")) {
    const std::string t = j.at("task").get<std::string>();
    if (t == "steady") cfg.task = Task::SteadyState;
    else if (t == "lgi") cfg.task = Task::LgiTrace;
    else if (t == "mlgi") cfg.task = Task::Mlgi;
    else if (t == "thermo") cfg.task = Task::Thermo;
    else if (t == "validate") cfg.task = Task::Validate;
    else throw ConfigError("task", "unknown task '" + t + "'");
  }

  if (j.contains("model")) {
    const json& jm = j.at("model");
    for (auto it = jm.begin(); it != jm.end(); ++it) {
      const std::string& key = it.key();
      if (key == "statistics") {
        const std::string s = it.value().get<std::string>();
        if (s == "bosonic") cfg.model.statistics = Statistics::Bosonic;
        else if (s == "fermionic") cfg.model.statistics = Statistics::Fermionic;
        else throw ConfigError("model.statistics", "expected bosonic or fermionic");
      } else if (key == "omega1" || key == "omega2" || key == "lambda" || key == "J" ||
                 key == "T1" || key == "T2" || key == "mu1" || key == "mu2" ||
                 key == "T" || key == "mu") {
        if (!it.value().is_number())
          throw ConfigError("model." + key, "expected a number");
        const double v = it.value().get<double>();
        if (key == "T") {
          cfg.model.T1 = cfg.model.T2 = v;
        } else if (key == "mu") {
          cfg.model.mu1 = cfg.model.mu2 = v;
        } else {
          cfg.model.apply(key, v);
        }
      } else {
        throw ConfigError("model." + key, "unknown field");
      }
    }
  }

  if (j.contains("axes")) {
    const json& ja = j.at("axes");
    if (!ja.is_array()) throw ConfigError("axes", "expected an array");
    for (size_t i = 0; i < ja.size(); ++i) {
      const json& jx = ja[i];
      const std::string where = "axes[" + std::to_string(i) + "]";
      AxisSpec ax;
      for (auto it = jx.begin(); it != jx.end(); ++it) {
        const std::string& key = it.key();
        if (key == "param") ax.param = it.value().get<std::string>();
        else if (key == "scale") {
          const std::string s = it.value().get<std::string>();
          if (s == "linear") ax.scale = AxisSpec::Scale::Linear;
          else if (s == "log") ax.scale = AxisSpec::Scale::Log;
          else throw ConfigError(where + ".scale", "expected linear or log");
        } else if (key == "min") ax.min = it.value().get<double>();
        else if (key == "max") ax.max = it.value().get<double>();
        else if (key == "points") ax.points = it.value().get<int>();
        else throw ConfigError(where + "." + key, "unknown field");
      }
      if (ax.param.empty()) throw ConfigError(where + ".param", "missing");
      cfg.axes.push_back(ax);
    }
  }

  if (j.contains("secular")) cfg.secular = j.at("secular").get<bool>();
  if (j.contains("compare_secular")) cfg.compare_secular = j.at("compare_secular").get<bool>();
  if (j.contains("t_max_pi")) cfg.t_max_pi = j.at("t_max_pi").get<double>();
  if (j.contains("grid_points")) cfg.grid_points = j.at("grid_points").get<int>();
  if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
  if (j.contains("output")) {
    const json& jo = j.at("output");
    if (jo.contains("path")) cfg.out_path = jo.at("path").get<std::string>();
    if (jo.contains("format")) cfg.format = jo.at("format").get<std::string>();
  }
  return cfg;
}

SweepConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_config_json(buf.str());
}

namespace {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_csv(const Dataset& ds, std::ostream& out) {
  out << "# lgi-nes schema v1\n";
  if (!ds.labels.empty()) out << "check,";
  for (size_t c = 0; c < ds.columns.size(); ++c)
    out << ds.columns[c] << (c + 1 < ds.columns.size() ? "," : "");
  out << ",error\n";
  for (size_t r = 0; r < ds.rows.size(); ++r) {
    if (!ds.labels.empty()) out << ds.labels[r] << ",";
    for (size_t c = 0; c < ds.rows[r].size(); ++c)
      out << format_value(ds.rows[r][c]) << (c + 1 < ds.rows[r].size() ? "," : "");
    std::string err = r < ds.errors.size() ? ds.errors[r] : "";
    for (char& ch : err)
      if (ch == ',' || ch == '\n') ch = ';';
    out << "," << err << "\n";
  }
}

void write_json(const Dataset& ds, std::ostream& out) {
  json j;
  j["schema"] = "lgi-nes schema v1";
  j["task"] = task_name(ds.task);
  j["columns"] = ds.columns;
  if (!ds.labels.empty()) j["checks"] = ds.labels;
  json rows = json::array();
  for (const auto& row : ds.rows) {
    json jr = json::array();
    for (double v : row) {
      if (std::isnan(v))
        jr.push_back(nullptr);
      else
        jr.push_back(v);
    }
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  j["errors"] = ds.errors;
  out << j.dump(1) << "\n";
}

namespace {

int column_index(const Dataset& ds, const std::string& name) {
  for (size_t c = 0; c < ds.columns.size(); ++c)
    if (ds.columns[c] == name) return static_cast<int>(c);
  return -1;
}

struct SvgFrame {

  double x0 = 70, y0 = 20, w = 520, h = 380;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  double px(double x) const { return x0 + (x - xmin) / (xmax - xmin) * w; }
  double py(double y) const { return y0 + h - (y - ymin) / (ymax - ymin) * h; }
};

void svg_axes(std::ostream& out, const SvgFrame& f, const std::string& xlabel,
              const std::string& ylabel) {
  out << "<rect x='" << f.x0 << "' y='" << f.y0 << "' width='" << f.w << "' height='"
      << f.h << "' fill='none' stroke='black'/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double x = f.xmin + k * (f.xmax - f.xmin) / 4.0;
    const double y = f.ymin + k * (f.ymax - f.ymin) / 4.0;
    out << "<text x='" << f.px(x) << "' y='" << f.y0 + f.h + 16
        << "' font-size='11' text-anchor='middle'>" << format_value(x).substr(0, 7)
        << "</text>\n";
    out << "<text x='" << f.x0 - 6 << "' y='" << f.py(y) + 4
        << "' font-size='11' text-anchor='end'>" << format_value(y).substr(0, 7)
        << "</text>\n";
  }
  out << "<text x='" << f.x0 + f.w / 2 << "' y='" << f.y0 + f.h + 34
      << "' font-size='12' text-anchor='middle'>" << xlabel << "</text>\n";
  out << "<text x='16' y='" << f.y0 + f.h / 2
      << "' font-size='12' text-anchor='middle' transform='rotate(-90 16 "
      << f.y0 + f.h / 2 << ")'>" << ylabel << "</text>\n";
}

std::string heat_color(double f) {
  // Dark blue to yellow.
  const int r = static_cast<int>(255 * std::min(1.0, 1.5 * f));
  const int g = static_cast<int>(255 * f * f);
  const int b = static_cast<int>(255 * (1.0 - f) * 0.8 + 40);
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

void write_svg(const Dataset& ds, const SweepConfig& cfg, std::ostream& out) {
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='640' height='460'>\n";
  out << "<!-- lgi-nes schema v1 -->\n";

  const auto headline = [&]() -> std::string {
    switch (ds.task) {
      case Task::Mlgi: return "mlgi";
      case Task::Thermo: return "current_i2";
      case Task::SteadyState: return "rho11";
      default: return "iplus";
    }
  }();

  if (ds.task == Task::LgiTrace) {
    const int xc = column_index(ds, "omega_t_over_pi");
    SvgFrame f;
    f.xmin = 0.0;
    f.xmax = ds.rows.empty() ? 1.0 : ds.rows.back()[xc];
    f.ymin = 1e300;
    f.ymax = -1e300;
    const char* series[3] = {"iplus", "iminus", "i2"};
    for (const char* s : series) {
      const int c = column_index(ds, s);
      for (const auto& row : ds.rows) {
        const double v = std::string(s) == "i2" ? 0.5 * row[c] : row[c];
        f.ymin = std::min(f.ymin, v);
        f.ymax = std::max(f.ymax, v);
      }
    }
    f.ymax = std::max(f.ymax, 1.1);
    svg_axes(out, f, "Omega t / pi", "LGI functions");
    out << "<line x1='" << f.px(f.xmin) << "' y1='" << f.py(1.0) << "' x2='"
        << f.px(f.xmax) << "' y2='" << f.py(1.0)
        << "' stroke='red' stroke-dasharray='4 3'/>\n";
    const char* colors[3] = {"#1f77b4", "#2ca02c", "#9467bd"};
    for (int s = 0; s < 3; ++s) {
      const int c = column_index(ds, series[s]);
      out << "<polyline fill='none' stroke='" << colors[s] << "' points='";
      for (const auto& row : ds.rows) {
        const double v = s == 2 ? 0.5 * row[c] : row[c];
        out << f.px(row[xc]) << "," << f.py(v) << " ";
      }
      out << "'/>\n";
    }
    out << "<text x='560' y='30' font-size='11' fill='#1f77b4'>I+</text>\n";
    out << "<text x='560' y='44' font-size='11' fill='#2ca02c'>I-</text>\n";
    out << "<text x='560' y='58' font-size='11' fill='#9467bd'>I2/2</text>\n";
  } else if (cfg.axes.size() == 2) {
    const int vc = column_index(ds, headline);
    const int n0 = cfg.axes[0].points;
    const int n1 = cfg.axes[1].points;
    double vmin = 1e300, vmax = -1e300;
    for (const auto& row : ds.rows) {
      if (std::isnan(row[vc])) continue;
      vmin = std::min(vmin, row[vc]);
      vmax = std::max(vmax, row[vc]);
    }
    if (!(vmax > vmin)) vmax = vmin + 1.0;
    SvgFrame f;
    f.xmin = cfg.axes[1].min;
    f.xmax = cfg.axes[1].max;
    f.ymin = cfg.axes[0].min;
    f.ymax = cfg.axes[0].max;
    svg_axes(out, f, cfg.axes[1].param, cfg.axes[0].param);
    const double cw = f.w / n1;
    const double ch = f.h / n0;
    for (int i = 0; i < n0; ++i)
      for (int k = 0; k < n1; ++k) {
        const double v = ds.rows[i * n1 + k][vc];
        if (std::isnan(v)) continue;
        out << "<rect x='" << f.x0 + k * cw << "' y='" << f.y0 + f.h - (i + 1) * ch
            << "' width='" << cw + 0.5 << "' height='" << ch + 0.5 << "' fill='"
            << heat_color((v - vmin) / (vmax - vmin)) << "'/>\n";
      }
    out << "<text x='600' y='30' font-size='11'>" << headline << " in ["
        << format_value(vmin).substr(0, 8) << ", " << format_value(vmax).substr(0, 8)
        << "]</text>\n";
  } else {
    const int vc = column_index(ds, headline);
    const int xc = cfg.axes.empty() ? -1 : column_index(ds, cfg.axes[0].param);
    SvgFrame f;
    f.xmin = 1e300;
    f.xmax = -1e300;
    f.ymin = 1e300;
    f.ymax = -1e300;
    for (size_t r = 0; r < ds.rows.size(); ++r) {
      const double x = xc >= 0 ? ds.rows[r][xc] : static_cast<double>(r);
      f.xmin = std::min(f.xmin, x);
      f.xmax = std::max(f.xmax, x);
      if (!std::isnan(ds.rows[r][vc])) {
        f.ymin = std::min(f.ymin, ds.rows[r][vc]);
        f.ymax = std::max(f.ymax, ds.rows[r][vc]);
      }
    }
    if (!(f.xmax > f.xmin)) f.xmax = f.xmin + 1.0;
    if (!(f.ymax > f.ymin)) f.ymax = f.ymin + 1.0;
    svg_axes(out, f, cfg.axes.empty() ? "row" : cfg.axes[0].param, headline);
    out << "<polyline fill='none' stroke='#1f77b4' points='";
    for (size_t r = 0; r < ds.rows.size(); ++r) {
      const double x = xc >= 0 ? ds.rows[r][xc] : static_cast<double>(r);
      if (!std::isnan(ds.rows[r][vc])) out << f.px(x) << "," << f.py(ds.rows[r][vc]) << " ";
    }
    out << "'/>\n";
    const int sc = column_index(ds, "mlgi_secular");
    if (sc >= 0) {
      out << "<polyline fill='none' stroke='#d62728' stroke-dasharray='5 3' points='";
      for (size_t r = 0; r < ds.rows.size(); ++r) {
        const double x = xc >= 0 ? ds.rows[r][xc] : static_cast<double>(r);
        if (!std::isnan(ds.rows[r][sc])) out << f.px(x) << "," << f.py(ds.rows[r][sc]) << " ";
      }
      out << "'/>\n";
      out << "<text x='540' y='30' font-size='11' fill='#d62728'>secular</text>\n";
    }
  }
  out << "</svg>\n";
}

void write_dataset(const Dataset& ds, const SweepConfig& cfg) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) throw ConfigError("output.path", "cannot open '" + cfg.out_path + "'");
    out = &file;
  }
  if (cfg.format == "csv")
    write_csv(ds, *out);
  else if (cfg.format == "json")
    write_json(ds, *out);
  else
    write_svg(ds, cfg, *out);
}

}  // namespace lgines
