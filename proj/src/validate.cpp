#include <cmath>
#include <random>

#include "lgines/sweep.hpp"

namespace lgines {

namespace {

SystemParams draw_system(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> freq(0.5, 2.0);
  std::uniform_real_distribution<double> frac(0.05, 0.9);
  const double w1 = freq(rng);
  const double w2 = freq(rng);
  return SystemParams(w1, w2, frac(rng) * std::sqrt(w1 * w2));
}

Model draw_model(std::mt19937_64& rng, Statistics stat, bool equilibrium) {
  std::uniform_real_distribution<double> coupling(0.002, 0.05);
  if (stat == Statistics::Bosonic) {
    std::uniform_real_distribution<double> temp(0.2, 5.0);
    const double t1 = temp(rng);
    const double t2 = equilibrium ? t1 : temp(rng);
    return Model::build(draw_system(rng), BathParams::bosonic(t1, t2, coupling(rng)));
  }
  std::uniform_real_distribution<double> temp(0.1, 3.0);
  std::uniform_real_distribution<double> mu(-1.0, 3.0);
  const double t1 = temp(rng);
  const double m1 = mu(rng);
  const double t2 = equilibrium ? t1 : temp(rng);
  const double m2 = equilibrium ? m1 : mu(rng);
  return Model::build(draw_system(rng), BathParams::fermionic(t1, t2, m1, m2, coupling(rng)));
}

ValidateCheck generator_consistency(const ValidateOptions& opts) {
  ValidateCheck check;
  check.name = "generator_block_vs_operator";
  check.tolerance = 1e-10;
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  int worst_r = -1, worst_c = -1;
  for (int trial = 0; trial < 200; ++trial) {
    const Model m =
        draw_model(rng, trial % 2 ? Statistics::Fermionic : Statistics::Bosonic,
                   trial % 4 == 0);
    Generator gen = build_block_generator(m);
    if (trial == 0 && opts.corrupt_entry) {
      gen.M(opts.corrupt_entry->first, opts.corrupt_entry->second) += opts.corrupt_delta;
    }
    const Matrix6c restricted = restrict_to_sector(build_full_liouvillian(m));
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) {
        const double d = std::abs(gen.M(r, c) - restricted(r, c));
        if (d > worst) {
          worst = d;
          worst_r = r;
          worst_c = c;
        }
      }
  }
  check.max_residual = worst;
  check.passed = worst <= check.tolerance;
  check.detail = "worst entry (" + std::to_string(worst_r) + "," +
                 std::to_string(worst_c) + ") over 200 parameter sets";
  return check;
}

ValidateCheck steady_state_triple() {
  ValidateCheck check;
  check.name = "steady_state_triple_agreement";
  check.tolerance = 1e-9;
  std::mt19937_64 rng(2025);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Model m =
        draw_model(rng, trial % 2 ? Statistics::Fermionic : Statistics::Bosonic,
                   trial % 4 == 0);
    const Generator gen = build_block_generator(m);
    const SteadyState closed = steady_state_closed_form(m);
    const SteadyState popmat = steady_state_population_matrix(m, gen);
    const SteadyState null = steady_state_nullspace(gen);
    worst = std::max(worst, (closed.state.v - null.state.v).cwiseAbs().maxCoeff());
    worst = std::max(worst, (closed.state.v - popmat.state.v).cwiseAbs().maxCoeff());
    worst = std::max(worst, (popmat.state.v - null.state.v).cwiseAbs().maxCoeff());
  }
  check.max_residual = worst;
  check.passed = worst <= check.tolerance;
  check.detail = "closed form vs population matrix vs null space, 200 sets";
  return check;
}

ValidateCheck equilibrium_ensembles() {
  ValidateCheck check;
  check.name = "equilibrium_ensembles";
  check.tolerance = 1e-9;
  std::mt19937_64 rng(2026);
  double worst = 0.0;
  const double particles[4] = {0.0, 1.0, 1.0, 2.0};
  for (int trial = 0; trial < 100; ++trial) {
    const bool bosonic = trial % 2 == 0;
    const Model m =
        draw_model(rng, bosonic ? Statistics::Bosonic : Statistics::Fermionic, true);
    const SteadyState ss = steady_state_closed_form(m);
    double z = 0.0;
    double weights[4];
    for (int j = 0; j < 4; ++j) {
      const double shift = bosonic ? 0.0 : m.bath.mu1 * particles[j];
      weights[j] = std::exp(-(m.eb.energies[j] - shift) / m.bath.T1);
      z += weights[j];
    }
    for (int j = 0; j < 4; ++j)
      worst = std::max(worst, std::abs(ss.state.v[j].real() - weights[j] / z));
  }
  check.max_residual = worst;
  check.passed = worst <= check.tolerance;
  check.detail = "canonical (bosonic) and grand-canonical (fermionic) weights";
  return check;
}

ValidateCheck current_consistency() {
  ValidateCheck check;
  check.name = "currents_closed_form_vs_trace";
  check.tolerance = 1e-9;
  std::mt19937_64 rng(2027);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const bool bosonic = trial % 2 == 0;
    const Model m =
        draw_model(rng, bosonic ? Statistics::Bosonic : Statistics::Fermionic, false);
    const SteadyState ss = steady_state_closed_form(m);
    const ThermoReport rep = bosonic ? heat_current(m, ss) : particle_current(m, ss);
    worst = std::max(worst, std::abs(rep.I2_closed - rep.I2_trace));
    worst = std::max(worst, std::abs(rep.I1 + rep.I2_trace));
  }
  check.max_residual = worst;
  check.passed = worst <= check.tolerance;
  check.detail = "Tr(D_l rho X) against the closed forms and I1 + I2 = 0";
  return check;
}

ValidateCheck fermionic_saturation() {
  ValidateCheck check;
  check.name = "fermionic_current_saturation";
  const double J = 0.1;
  const double lambda = 0.8;
  const Model m = Model::build(SystemParams(1.0, 1.0, lambda),
                               BathParams::fermionic(0.05, 0.05, 0.0, 10.0, J));
  const ThermoReport rep = particle_current(m, steady_state_closed_form(m));
  const double expected = J * (1.0 - 1.0 / (1.0 + std::pow(lambda / (2.0 * J), 2)));
  check.tolerance = 0.02;
  check.max_residual = std::abs(rep.I2 - expected) / expected;
  check.passed = check.max_residual <= check.tolerance;
  check.detail = "saturated current vs J(1 - 1/(1+(lambda/2J)^2))";
  return check;
}

ValidateCheck bias_monotonicity() {
  ValidateCheck check;
  check.name = "bosonic_current_monotonic_in_bias";
  check.tolerance = 0.0;
  double worst = 0.0;
  double prev_i = 0.0, prev_s = 0.0;
  bool ok = true;
  for (int k = 1; k <= 50; ++k) {
    const double dT = 1.5 * k / 50.0;
    const Model m = Model::build(SystemParams(1.0, 1.0, 0.7),
                                 BathParams::bosonic(0.1, 0.1 + dT, 0.1));
    ThermoReport rep = heat_current(m, steady_state_closed_form(m));
    entropy_production(m, rep);
    ok = ok && rep.I2 > prev_i && rep.sigma > prev_s;
    worst = std::min({rep.I2 - prev_i, rep.sigma - prev_s});
    prev_i = rep.I2;
    prev_s = rep.sigma;
  }
  check.max_residual = ok ? 0.0 : worst;
  check.passed = ok;
  check.detail = "50-point dT grid at T1 = 0.1, strictly increasing current and sigma";
  return check;
}

ValidateCheck inm_oracle() {
  ValidateCheck check;
  check.name = "inm_circuit_vs_direct_correlation";
  check.tolerance = 1e-8;
  double worst = 0.0;

  // Coherent circuit against the closed-form correlation.
  std::mt19937_64 rng(2028);
  for (int trial = 0; trial < 10; ++trial) {
    const SystemParams sys = draw_system(rng);
    const Eigenbasis eb = build_eigenbasis(sys);
    const Observable obs = observable_sigma_z1(eb);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Eigen::Vector4d p(u(rng), u(rng), u(rng), u(rng));
    p /= p.sum();
    const LiouvilleState s = LiouvilleState::populations(p[0], p[1], p[2], p[3]);
    for (double f : {0.5, 1.7}) {
      const double t = f / eb.Omega;
      const InmResult r = inm_correlation(obs, InmEvolution(CoherentEvolution{eb.energies}), s, t);
      worst = std::max(worst,
                       std::abs(r.correlation - correlation_c0(t, eb.theta, eb.Omega,
                                                               p[1] + p[2])));
    }
  }

  // Dissipative circuit against the block-generator correlation.
  const SystemParams sys(1.0, 1.0, 1.0);
  for (bool bosonic : {true, false}) {
    const BathParams bath = bosonic ? BathParams::bosonic(1.5, 1.5, 0.005)
                                    : BathParams::fermionic(1.5, 1.5, 1.0, 1.0, 0.005);
    const Model m = Model::build(sys, bath);
    const Generator gen = build_block_generator(m);
    const Observable obs = observable_sigma_z1(m.eb);
    const SteadyState ss = steady_state_closed_form(m);
    const InmEvolution ev = LiouvilleEvolution{build_full_liouvillian(m)};
    for (double f : {0.3, 1.0, 2.0}) {
      const double t = f / m.eb.Omega;
      const InmResult r = inm_correlation(obs, ev, ss.state, t);
      worst = std::max(worst, std::abs(r.correlation - correlation(gen, obs, ss.state, t)));
    }
  }
  check.max_residual = worst;
  check.passed = worst <= check.tolerance;
  check.detail = "two-ancilla circuit, coherent and dissipative evolution";
  return check;
}

}  // namespace

ValidateReport validate(const ValidateOptions& opts) {
  ValidateReport rep;
  rep.checks.push_back(generator_consistency(opts));
  rep.checks.push_back(steady_state_triple());
  rep.checks.push_back(equilibrium_ensembles());
  rep.checks.push_back(current_consistency());
  rep.checks.push_back(fermionic_saturation());
  rep.checks.push_back(bias_monotonicity());
  rep.checks.push_back(inm_oracle());
  for (const ValidateCheck& c : rep.checks) rep.all_passed = rep.all_passed && c.passed;
  return rep;
}

}  // namespace lgines
