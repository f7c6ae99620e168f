#include <cmath>

#include "lgines/sweep.hpp"

namespace lgines {

namespace {

AxisSpec lin(const std::string& param, double min, double max, int points) {
  return AxisSpec{param, AxisSpec::Scale::Linear, min, max, points};
}

AxisSpec logax(const std::string& param, double min, double max, int points) {
  return AxisSpec{param, AxisSpec::Scale::Log, min, max, points};
}

SweepConfig trace_config(Statistics stat) {
  SweepConfig cfg;
  cfg.task = Task::LgiTrace;
  cfg.model.statistics = stat;
  cfg.model.omega1 = cfg.model.omega2 = 1.0;
  cfg.model.lambda = 1.0;
  cfg.model.J = 0.005;
  cfg.model.T1 = cfg.model.T2 = 1.5;
  if (stat == Statistics::Fermionic) cfg.model.mu1 = cfg.model.mu2 = 1.0;
  cfg.t_max_pi = 2.0;
  cfg.grid_points = 512;
  cfg.relax_lambda_guard = true;  // reference point sits at lambda = omega_bar
  return cfg;
}

// Row index in a row-major 2-axis dataset.
size_t rm(const SweepConfig& cfg, int i0, int i1) {
  const int n1 = cfg.axes.size() > 1 ? cfg.axes[1].points : 1;
  return static_cast<size_t>(i0) * n1 + i1;
}

int nearest_index(const AxisSpec& ax, double value) {
  int best = 0;
  double dist = 1e300;
  for (int k = 0; k < ax.points; ++k) {
    const double f = ax.points > 1 ? static_cast<double>(k) / (ax.points - 1) : 0.0;
    const double x = ax.scale == AxisSpec::Scale::Log
                         ? ax.min * std::pow(ax.max / ax.min, f)
                         : ax.min + f * (ax.max - ax.min);
    if (std::abs(x - value) < dist) {
      dist = std::abs(x - value);
      best = k;
    }
  }
  return best;
}

FigureAssertion classical_bound_checks() {
  return {"iplus_violates_early_iminus_i2_stay_classical",
          [](const Dataset& ds, std::string& detail) {
            bool plus_early = false;
            double max_minus = -1e300, max_half_i2 = -1e300;
            for (size_t r = 0; r < ds.rows.size(); ++r) {
              const double x = ds.at(r, "omega_t_over_pi");
              if (x < 0.5 && ds.at(r, "iplus") > 1.0 + 1e-9) plus_early = true;
              if (x <= 2.0 + 1e-12) {
                max_minus = std::max(max_minus, ds.at(r, "iminus"));
                max_half_i2 = std::max(max_half_i2, 0.5 * ds.at(r, "i2"));
              }
            }
            detail = "max I- = " + std::to_string(max_minus) +
                     ", max I2/2 = " + std::to_string(max_half_i2);
            return plus_early && max_minus <= 1.0 + 1e-9 && max_half_i2 <= 1.0 + 1e-9;
          }};
}

FigureAssertion overlay_tracks_exact() {
  return {"first_order_overlay_tracks_exact_within_2_percent",
          [](const Dataset& ds, std::string& detail) {
            double max_err = 0.0, hi = -1e300, lo = 1e300;
            for (size_t r = 0; r < ds.rows.size(); ++r) {
              if (ds.at(r, "omega_t_over_pi") > 1.0 + 1e-12) continue;
              const double exact = ds.at(r, "iplus");
              max_err = std::max(max_err, std::abs(exact - ds.at(r, "iplus_order01")));
              hi = std::max(hi, exact);
              lo = std::min(lo, exact);
            }
            detail = "max deviation " + std::to_string(max_err) + " on range " +
                     std::to_string(hi - lo);
            return max_err < 0.02 * (hi - lo);
          }};
}

}  // namespace

const std::map<std::string, FigureRecipe>& figure_recipes() {
  static const std::map<std::string, FigureRecipe> recipes = [] {
    std::map<std::string, FigureRecipe> out;

    auto add = [&out](FigureRecipe r) { out.emplace(r.name, std::move(r)); };

    // Equilibrium LGI traces, lambda = omega_bar, J = 0.005, T = 1.5.
    {
      FigureRecipe r;
      r.name = "fig3a";
      r.description = "equilibrium bosonic LGI functions vs time";
      r.config = trace_config(Statistics::Bosonic);
      r.assertions = {classical_bound_checks()};
      add(r);
      r.name = "fig3b";
      r.description = "equilibrium fermionic LGI functions vs time (mu = omega_bar)";
      r.config = trace_config(Statistics::Fermionic);
      add(r);
    }

    // Same traces with the perturbative overlays.
    {
      FigureRecipe r;
      r.name = "fig4a";
      r.description = "bosonic I+ against its zeroth/first-order closures";
      r.config = trace_config(Statistics::Bosonic);
      r.assertions = {overlay_tracks_exact()};
      add(r);
      r.name = "fig4b";
      r.description = "fermionic I+ against its zeroth/first-order closures";
      r.config = trace_config(Statistics::Fermionic);
      add(r);
    }

    // Equilibrium MLGI maps over coupling and temperature / chemical potential.
    {
      FigureRecipe r;
      r.name = "fig5a";
      r.description = "MLGI over (J, T), equilibrium bosonic";
      r.config.task = Task::Mlgi;
      r.config.model.lambda = 1.0;
      r.config.model.J = 0.005;
      r.config.relax_lambda_guard = true;
      r.config.axes = {lin("J", 0.002, 0.02, 4), logax("T_m", 0.05, 20.0, 25)};
      r.assertions = {
          {"interior_temperature_maximum_at_weak_coupling",
           [cfg = r.config](const Dataset& ds, std::string& detail) {
             const int n1 = cfg.axes[1].points;
             int best = 0;
             for (int k = 1; k < n1; ++k)
               if (ds.at(rm(cfg, 0, k), "mlgi") > ds.at(rm(cfg, 0, best), "mlgi")) best = k;
             detail = "argmax at T index " + std::to_string(best);
             return best > 0 && best < n1 - 1 &&
                    ds.at(rm(cfg, 0, best), "mlgi") > ds.at(rm(cfg, 0, 0), "mlgi") &&
                    ds.at(rm(cfg, 0, best), "mlgi") > ds.at(rm(cfg, 0, n1 - 1), "mlgi");
           }}};
      add(r);

      r = FigureRecipe{};
      r.name = "fig5b";
      r.description = "MLGI over (J, mu), equilibrium fermionic at T = 0.5";
      r.config.task = Task::Mlgi;
      r.config.model.statistics = Statistics::Fermionic;
      r.config.model.lambda = 1.0;
      r.config.model.T1 = r.config.model.T2 = 0.5;
      r.config.relax_lambda_guard = true;
      r.config.axes = {lin("J", 0.002, 0.02, 4), lin("mu_m", 0.0, 2.5, 26)};
      r.assertions = {
          {"resonant_maximum_near_mu_equals_omega_bar",
           [cfg = r.config](const Dataset& ds, std::string& detail) {
             const int n1 = cfg.axes[1].points;
             int best = 0;
             for (int k = 1; k < n1; ++k)
               if (ds.at(rm(cfg, 0, k), "mlgi") > ds.at(rm(cfg, 0, best), "mlgi")) best = k;
             const double mu_star = ds.at(rm(cfg, 0, best), "mu1");
             detail = "argmax at mu = " + std::to_string(mu_star);
             return best > 0 && best < n1 - 1 && std::abs(mu_star - 1.0) < 0.3;
           }}};
      add(r);
    }

    // Equilibrium MLGI over mean splitting and detuning angle, lambda = 1.
    {
      FigureRecipe r;
      r.name = "fig6a";
      r.description = "MLGI over (omega_bar, theta), bosonic T = 0.1";
      r.config.task = Task::Mlgi;
      r.config.model.lambda = 1.0;
      r.config.model.J = 0.005;
      r.config.model.T1 = r.config.model.T2 = 0.1;
      r.config.relax_lambda_guard = true;
      r.config.axes = {lin("omega_bar", 1.05, 3.0, 9), lin("theta", -2.6, -0.55, 11)};
      r.assertions = {
          {"lower_mean_splitting_enhances_cold_violation",
           [cfg = r.config](const Dataset& ds, std::string& detail) {
             const int sym = nearest_index(cfg.axes[1], -0.5 * M_PI);
             const double low = ds.at(rm(cfg, 0, sym), "mlgi");
             const double high = ds.at(rm(cfg, cfg.axes[0].points - 1, sym), "mlgi");
             detail = "mlgi(low omega_bar) = " + std::to_string(low) +
                      ", mlgi(high omega_bar) = " + std::to_string(high);
             return low > high;
           }}};
      add(r);

      r.name = "fig6b";
      r.description = "MLGI over (omega_bar, theta), bosonic T = 10";
      r.config.model.T1 = r.config.model.T2 = 10.0;
      r.assertions = {
          {"symmetric_point_dominates_and_larger_splitting_helps_when_hot",
           [cfg = r.config](const Dataset& ds, std::string& detail) {
             const int n0 = cfg.axes[0].points;
             const int n1 = cfg.axes[1].points;
             const int sym = nearest_index(cfg.axes[1], -0.5 * M_PI);
             const double mid = ds.at(rm(cfg, n0 - 1, sym), "mlgi");
             const bool dominates = mid >= ds.at(rm(cfg, n0 - 1, 0), "mlgi") &&
                                    mid >= ds.at(rm(cfg, n0 - 1, n1 - 1), "mlgi");
             const bool splitting_helps =
                 ds.at(rm(cfg, n0 - 1, sym), "mlgi") > ds.at(rm(cfg, 0, sym), "mlgi");
             detail = "mlgi at symmetric point " + std::to_string(mid);
             return dominates && splitting_helps;
           }}};
      add(r);
    }

    // Bosonic heat current and entropy production vs thermal bias.
    {
      FigureRecipe r;
      r.name = "fig7a";
      r.description = "heat current vs dT at T1 = 0.1, J = 0.1";
      r.config.task = Task::Thermo;
      r.config.model.J = 0.1;
      r.config.model.T1 = r.config.model.T2 = 0.1;
      r.config.axes = {lin("lambda", 0.4, 1.0, 3), lin("T2", 0.13, 1.6, 50)};
      r.config.relax_lambda_guard = true;
      auto increasing = [](const std::string& column) {
        return [column](const Dataset& ds, std::string& detail) {
          // per lambda block, strictly increasing in the bias
          const size_t block = 50;
          for (size_t b = 0; b * block < ds.rows.size(); ++b)
            for (size_t k = 1; k < block; ++k) {
              const double prev = ds.at(b * block + k - 1, column);
              const double here = ds.at(b * block + k, column);
              if (!(here > prev)) {
                detail = column + " not increasing in block " + std::to_string(b) +
                         " at point " + std::to_string(k);
                return false;
              }
            }
          detail = column + " strictly increasing on every coupling branch";
          return true;
        };
      };
      auto ordered = [](const std::string& column) {
        return [column](const Dataset& ds, std::string& detail) {
          const size_t block = 50;
          double prev = -1e300;
          for (size_t b = 0; b * block < ds.rows.size(); ++b) {
            const double v = ds.at(b * block + block - 1, column);
            if (!(v > prev)) {
              detail = column + " legend ordering broken at block " + std::to_string(b);
              return false;
            }
            prev = v;
          }
          detail = column + " grows with the inter-qubit coupling at the final bias";
          return true;
        };
      };
      r.assertions = {{"current_strictly_increasing_in_bias", increasing("current_i2")},
                      {"larger_coupling_larger_current", ordered("current_i2")}};
      add(r);

      r.name = "fig7b";
      r.description = "entropy production rate vs dT at T1 = 0.1, J = 0.1";
      r.assertions = {{"sigma_strictly_increasing_in_bias", increasing("sigma")},
                      {"larger_coupling_larger_sigma", ordered("sigma")}};
      add(r);

      r.name = "fig8a";
      r.description = "particle current vs dmu at mu1 = 0, T = 0.2, J = 0.1";
      r.config.model.statistics = Statistics::Fermionic;
      r.config.model.T1 = r.config.model.T2 = 0.2;
      r.config.model.mu1 = r.config.model.mu2 = 0.0;
      r.config.axes = {lin("lambda", 0.4, 1.0, 3), lin("mu2", 0.16, 8.0, 50)};
      r.assertions = {
          {"current_increases_and_saturates_below_J",
           [](const Dataset& ds, std::string& detail) {
             const size_t block = 50;
             for (size_t b = 0; b * block < ds.rows.size(); ++b)
               for (size_t k = 0; k < block; ++k) {
                 const double v = ds.at(b * block + k, "current_i2");
                 if (k > 0 && v < ds.at(b * block + k - 1, "current_i2") - 1e-12) {
                   detail = "current decreased inside block " + std::to_string(b);
                   return false;
                 }
                 if (std::abs(v) > 0.1 + 1e-12) {
                   detail = "current exceeded the coupling bound";
                   return false;
                 }
               }
             detail = "current nondecreasing and bounded by J";
             return true;
           }},
          {"larger_coupling_larger_current", ordered("current_i2")}};
      add(r);

      r.name = "fig8b";
      r.description = "entropy production rate vs dmu at mu1 = 0, T = 0.2, J = 0.1";
      r.assertions = {{"sigma_strictly_increasing_in_bias", increasing("sigma")},
                      {"larger_coupling_larger_sigma", ordered("sigma")}};
      add(r);
    }

    // Nonequilibrium MLGI maps.
    {
      FigureRecipe r;
      r.name = "fig9a";
      r.description = "MLGI over (T_m, dT), bosonic, lambda = omega_bar, J = 0.005";
      r.config.task = Task::Mlgi;
      r.config.model.lambda = 1.0;
      r.config.model.J = 0.005;
      r.config.model.T1 = r.config.model.T2 = 0.5;
      r.config.relax_lambda_guard = true;
      r.config.axes = {lin("T_m", 0.3, 1.5, 13), lin("dT", -0.55, 0.55, 11)};
      r.assertions = {
          {"positive_bias_beats_negative_bias",
           [cfg = r.config](const Dataset& ds, std::string& detail) {
             const int tm = nearest_index(cfg.axes[0], 0.5);
             const int n1 = cfg.axes[1].points;
             const double plus = ds.at(rm(cfg, tm, n1 - 1), "mlgi");
             const double minus = ds.at(rm(cfg, tm, 0), "mlgi");
             detail = "mlgi(+dT) = " + std::to_string(plus) +
                      ", mlgi(-dT) = " + std::to_string(minus);
             return plus > minus;
           }}};
      add(r);

      r = FigureRecipe{};
      r.name = "fig9b";
      r.description = "MLGI over (mu_m, dmu), fermionic, T = 0.4";
      r.config.task = Task::Mlgi;
      r.config.model.statistics = Statistics::Fermionic;
      r.config.model.lambda = 1.0;
      r.config.model.J = 0.005;
      r.config.model.T1 = r.config.model.T2 = 0.4;
      r.config.model.mu1 = r.config.model.mu2 = 1.0;
      r.config.relax_lambda_guard = true;
      r.config.axes = {lin("mu_m", 0.2, 1.6, 8), lin("dmu", -1.2, 1.2, 13)};
      r.assertions = {
          {"resonant_row_peaks_at_zero_bias",
           [cfg = r.config](const Dataset& ds, std::string& detail) {
             const int row = nearest_index(cfg.axes[0], 1.0);
             const int n1 = cfg.axes[1].points;
             const int center = nearest_index(cfg.axes[1], 0.0);
             int best = 0;
             for (int k = 1; k < n1; ++k)
               if (ds.at(rm(cfg, row, k), "mlgi") > ds.at(rm(cfg, row, best), "mlgi"))
                 best = k;
             detail = "argmax bias index " + std::to_string(best) + ", center " +
                      std::to_string(center);
             return best == center;
           }},
          {"bias_helps_away_from_resonance",
           [cfg = r.config](const Dataset& ds, std::string& detail) {
             const int row = nearest_index(cfg.axes[0], 0.4);
             const int center = nearest_index(cfg.axes[1], 0.0);
             const int n1 = cfg.axes[1].points;
             const double at0 = ds.at(rm(cfg, row, center), "mlgi");
             const double hi =
                 std::max(ds.at(rm(cfg, row, 0), "mlgi"), ds.at(rm(cfg, row, n1 - 1), "mlgi"));
             detail = "mlgi(|dmu| max) = " + std::to_string(hi) +
                      ", mlgi(0) = " + std::to_string(at0);
             return hi > at0;
           }}};
      add(r);
    }

    // Bloch-Redfield vs secular comparison.
    for (double tm : {0.5, 1.0}) {
      FigureRecipe r;
      r.name = tm == 0.5 ? "fig10a" : "fig10b";
      r.description = std::string("MLGI vs dT under the full and the secular generator, "
                                  "T_m = ") +
                      (tm == 0.5 ? "0.5" : "1.0");
      r.config.task = Task::Mlgi;
      r.config.model.lambda = 1.0;
      r.config.model.J = 0.005;
      r.config.model.T1 = r.config.model.T2 = tm;
      r.config.compare_secular = true;
      r.config.relax_lambda_guard = true;
      r.config.axes = {lin("dT", -0.6, 0.6, 13)};
      r.assertions = {
          {"full_generator_asymmetric_secular_symmetric",
           [](const Dataset& ds, std::string& detail) {
             const size_t n = ds.rows.size();
             const double br_asym =
                 ds.at(n - 1, "mlgi") - ds.at(0, "mlgi");
             double sec_asym = 0.0;
             for (size_t k = 0; k < n / 2; ++k)
               sec_asym = std::max(sec_asym, std::abs(ds.at(k, "mlgi_secular") -
                                                      ds.at(n - 1 - k, "mlgi_secular")));
             const size_t mid = n / 2;
             const double agree0 =
                 std::abs(ds.at(mid, "mlgi") - ds.at(mid, "mlgi_secular"));
             detail = "BR asymmetry " + std::to_string(br_asym) + ", secular asymmetry " +
                      std::to_string(sec_asym) + ", dT=0 gap " + std::to_string(agree0);
             return br_asym > 0.0 && sec_asym <= 1e-9 && agree0 <= 1e-9;
           }}};
      add(r);
    }

    // MLGI against the entropy production rate, bosonic.
    {
      FigureRecipe r;
      r.name = "fig11a";
      r.description = "MLGI vs entropy production, cold fixed T1 = 0.1, J = 0.05";
      r.config.task = Task::Mlgi;
      r.config.model.J = 0.05;
      r.config.model.T1 = r.config.model.T2 = 0.1;
      r.config.relax_lambda_guard = true;
      r.config.axes = {lin("lambda", 0.4, 1.0, 3), lin("T2", 0.1, 2.0, 21)};
      r.assertions = {
          {"nonequilibrium_cost_enhances_violation",
           [cfg = r.config](const Dataset& ds, std::string& detail) {
             const int n1 = cfg.axes[1].points;
             for (int b = 0; b < cfg.axes[0].points; ++b) {
               const double start = ds.at(rm(cfg, b, 0), "mlgi");
               const double end = ds.at(rm(cfg, b, n1 - 1), "mlgi");
               if (!(end > start)) {
                 detail = "no enhancement on coupling branch " + std::to_string(b);
                 return false;
               }
             }
             detail = "driven MLGI exceeds the cold equilibrium value on all branches";
             return true;
           }},
          {"larger_coupling_larger_driven_mlgi",
           [cfg = r.config](const Dataset& ds, std::string& detail) {
             const int n1 = cfg.axes[1].points;
             double prev = -1e300;
             for (int b = 0; b < cfg.axes[0].points; ++b) {
               const double v = ds.at(rm(cfg, b, n1 - 1), "mlgi");
               if (!(v > prev)) {
                 detail = "ordering broken at branch " + std::to_string(b);
                 return false;
               }
               prev = v;
             }
             detail = "final MLGI ordered by coupling strength";
             return true;
           }}};
      add(r);

      r.name = "fig11b";
      r.description = "MLGI vs entropy production, cold fixed T2 = 0.1, J = 0.05";
      r.config.axes = {lin("lambda", 0.4, 1.0, 3), lin("T1", 0.1, 2.0, 21)};
      r.assertions = {
          {"heating_the_measured_qubit_is_less_effective",
           [cfg = r.config](const Dataset& ds, std::string& detail) {
             // Mirror the strongest-bias point; the hot second bath must win.
             const int n1 = cfg.axes[1].points;
             const size_t row = rm(cfg, cfg.axes[0].points - 1, n1 - 1);
             const double here = ds.at(row, "mlgi");
             SweepConfig mirror = cfg;
             mirror.model.lambda = 1.0;
             mirror.model.T1 = 0.1;
             mirror.model.T2 = 2.0;
             mirror.axes.clear();
             const Dataset md = run_sweep(mirror);
             detail = "T1-hot " + std::to_string(here) + " vs T2-hot " +
                      std::to_string(md.at(0, "mlgi"));
             return md.at(0, "mlgi") > here;
           }}};
      add(r);
    }

    // Nonequilibrium MLGI against the detuning angle, bosonic.
    {
      FigureRecipe r;
      r.name = "fig12a";
      r.description = "MLGI over (theta, dT), bosonic, T_m = 0.2, lambda = omega_bar";
      r.config.task = Task::Mlgi;
      r.config.model.lambda = 1.0;
      r.config.model.J = 0.005;
      r.config.model.T1 = r.config.model.T2 = 0.2;
      r.config.relax_lambda_guard = true;
      r.config.axes = {lin("theta", -2.05, -1.09, 13), lin("dT", -0.35, 0.35, 11)};
      r.assertions = {
          {"low_frequency_qubit_prefers_the_hot_bath_when_cold",
           [cfg = r.config](const Dataset& ds, std::string& detail) {
             const int sym = nearest_index(cfg.axes[1], 0.0);
             const int tsym = nearest_index(cfg.axes[0], -0.5 * M_PI);
             const int n0 = cfg.axes[0].points;
             const int n1 = cfg.axes[1].points;
             // theta index 0 has omega1 > omega2 (qubit 2 low), so the hot
             // second bath pairs with it; the mirrored corner pairs the low
             // qubit 1 with the hot first bath. Both beat the cross corners
             // and the symmetric equilibrium point.
             const double low2_hot2 = ds.at(rm(cfg, 0, n1 - 1), "mlgi");
             const double low1_hot1 = ds.at(rm(cfg, n0 - 1, 0), "mlgi");
             const double low2_hot1 = ds.at(rm(cfg, 0, 0), "mlgi");
             const double low1_hot2 = ds.at(rm(cfg, n0 - 1, n1 - 1), "mlgi");
             const double center = ds.at(rm(cfg, tsym, sym), "mlgi");
             detail = "matched corners " + std::to_string(low2_hot2) + "/" +
                      std::to_string(low1_hot1) + ", crossed " +
                      std::to_string(low2_hot1) + "/" + std::to_string(low1_hot2) +
                      ", center " + std::to_string(center);
             return low2_hot2 > low2_hot1 && low2_hot2 > low1_hot2 &&
                    low1_hot1 > low2_hot1 && low1_hot1 > low1_hot2 &&
                    std::max(low2_hot2, low1_hot1) > center;
           }}};
      add(r);

      r.name = "fig12b";
      r.description = "MLGI over (theta, dT), bosonic, T_m = 2, lambda = omega_bar";
      r.config.model.T1 = r.config.model.T2 = 2.0;
      r.config.axes = {lin("theta", -2.05, -1.09, 13), lin("dT", -1.5, 1.5, 11)};
      r.assertions = {
          {"warm_mean_positive_bias_dominates_detuning_does_not_help",
           [cfg = r.config](const Dataset& ds, std::string& detail) {
             const int tsym = nearest_index(cfg.axes[0], -0.5 * M_PI);
             const int n0 = cfg.axes[0].points;
             const int n1 = cfg.axes[1].points;
             const double plus = ds.at(rm(cfg, tsym, n1 - 1), "mlgi");
             const double minus = ds.at(rm(cfg, tsym, 0), "mlgi");
             const bool detuning_no_help =
                 plus >= ds.at(rm(cfg, 0, n1 - 1), "mlgi") &&
                 plus >= ds.at(rm(cfg, n0 - 1, n1 - 1), "mlgi");
             detail = "mlgi(+dT) = " + std::to_string(plus) + ", mlgi(-dT) = " +
                      std::to_string(minus);
             return plus > minus && detuning_no_help;
           }}};
      add(r);
    }

    // MLGI against the entropy production rate, fermionic.
    {
      FigureRecipe r;
      r.name = "fig13a";
      r.description = "fermionic MLGI vs entropy production, mu1 = 0, T = 0.2, J = 0.05";
      r.config.task = Task::Mlgi;
      r.config.model.statistics = Statistics::Fermionic;
      r.config.model.J = 0.05;
      r.config.model.T1 = r.config.model.T2 = 0.2;
      r.config.model.mu1 = r.config.model.mu2 = 0.0;
      r.config.relax_lambda_guard = true;
      r.config.axes = {lin("lambda", 0.4, 1.0, 3), lin("mu2", 0.0, 2.4, 21)};
      r.assertions = {
          {"bias_away_from_resonance_enhances_violation",
           [cfg = r.config](const Dataset& ds, std::string& detail) {
             const int n1 = cfg.axes[1].points;
             for (int b = 0; b < cfg.axes[0].points; ++b) {
               if (!(ds.at(rm(cfg, b, n1 - 1), "mlgi") > ds.at(rm(cfg, b, 0), "mlgi"))) {
                 detail = "no enhancement on branch " + std::to_string(b);
                 return false;
               }
             }
             detail = "driven MLGI exceeds the empty-dot equilibrium value";
             return true;
           }}};
      add(r);

      r.name = "fig13b";
      r.description = "fermionic MLGI vs entropy production, mu1 = omega_bar";
      r.config.model.mu1 = r.config.model.mu2 = 1.0;
      r.config.axes = {lin("lambda", 0.4, 1.0, 3), lin("mu2", 1.0, 3.4, 21)};
      r.assertions = {
          {"bias_at_resonance_does_not_enhance",
           [cfg = r.config](const Dataset& ds, std::string& detail) {
             const int n1 = cfg.axes[1].points;
             for (int b = 0; b < cfg.axes[0].points; ++b) {
               if (ds.at(rm(cfg, b, n1 - 1), "mlgi") > ds.at(rm(cfg, b, 0), "mlgi") + 1e-9) {
                 detail = "unexpected enhancement on branch " + std::to_string(b);
                 return false;
               }
             }
             detail = "biasing away from the resonant equilibrium only degrades MLGI";
             return true;
           }}};
      add(r);
    }

    return out;
  }();
  return recipes;
}

FigureOutcome run_figure(const std::string& name, const SweepConfig* overrides) {
  const auto& recipes = figure_recipes();
  auto it = recipes.find(name);
  if (it == recipes.end()) it = recipes.find(name + "a");
  if (it == recipes.end())
    throw ConfigError("figure", "unknown figure '" + name + "'");

  SweepConfig cfg = it->second.config;
  if (overrides) {
    if (!overrides->out_path.empty()) cfg.out_path = overrides->out_path;
    if (!overrides->format.empty()) cfg.format = overrides->format;
    if (overrides->threads > 0) cfg.threads = overrides->threads;
    if (overrides->grid_points > 0) cfg.grid_points = overrides->grid_points;
    if (overrides->t_max_pi > 0) cfg.t_max_pi = overrides->t_max_pi;
    if (overrides->secular) cfg.secular = true;
  }

  FigureOutcome outcome;
  outcome.dataset = run_sweep(cfg);
  for (const FigureAssertion& a : it->second.assertions) {
    std::string detail;
    const bool ok = a.check(outcome.dataset, detail);
    outcome.assertion_results.emplace_back(a.name, ok);
    outcome.details.push_back(detail);
    outcome.all_passed = outcome.all_passed && ok;
  }
  if (!cfg.out_path.empty()) write_dataset(outcome.dataset, cfg);
  return outcome;
}

}  // namespace lgines
