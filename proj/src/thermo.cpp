#include "lgines/thermo.hpp"

#include <cmath>

namespace lgines {

namespace {

Eigen::Matrix4cd observable_h(const Model& m) {
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  for (int k = 0; k < 4; ++k) h(k, k) = m.eb.energies[k];
  return h;
}

Eigen::Matrix4cd observable_n() {
  Eigen::Matrix4cd n = Eigen::Matrix4cd::Zero();
  n.diagonal() << 0.0, 1.0, 1.0, 2.0;
  return n;
}

double dissipator_trace(const Model& m, const SteadyState& ss, int bath,
                        const Eigen::Matrix4cd& op) {
  const Eigen::Matrix4cd d = dissipator_apply(bath, ss.state.matrix(), m);
  return (d * op).trace().real();
}

// Closed form written from bath 1's rates as -Tr(D1[rho] X).
// weight[k] multiplies the rate at frequency w'_{k+1}; (w2', w1') for the heat
// current, (1, 1) for the particle current.
double closed_form_current(const Model& m, const SteadyState& ss, double e1, double e2,
                           double w1, double w2) {
  const double c2 = std::pow(std::cos(0.5 * m.eb.theta), 2);
  const double s2 = std::pow(std::sin(0.5 * m.eb.theta), 2);
  const double st = std::sin(m.eb.theta);
  const double a1 = m.rates.alpha[0][0];
  const double a2 = m.rates.alpha[0][1];
  const double b1 = m.rates.beta[0][0];
  const double b2 = m.rates.beta[0][1];
  const double p11 = ss.state.v[0].real();
  const double p22 = ss.state.v[1].real();
  const double p33 = ss.state.v[2].real();
  const double p44 = ss.state.v[3].real();
  const double coh = 2.0 * ss.state.v[4].real();  // rho23 + rho32

  double out = 0.0;
  out += -2.0 * (c2 * a1 * e1 + s2 * a2 * e2) * p11;
  out += 2.0 * (c2 * b1 * e1 - s2 * a2 * e2) * p22;
  out += 2.0 * (s2 * b2 * e2 - c2 * a1 * e1) * p33;
  out += 2.0 * (c2 * b1 * e1 + s2 * b2 * e2) * p44;
  out += -0.5 * st * (b2 + a2) * w1 * coh;
  out += -0.5 * st * (b1 + a1) * w2 * coh;
  return out;
}

}  // namespace

ThermoReport heat_current(const Model& m, const SteadyState& ss) {
  if (m.bath.statistics != Statistics::Bosonic)
    throw StatisticsMismatch("heat current is defined for bosonic baths");
  const double w1 = m.eb.omega1p();
  const double w2 = m.eb.omega2p();
  ThermoReport rep;
  rep.statistics = Statistics::Bosonic;
  rep.I2_closed = closed_form_current(m, ss, w1, w2, w1, w2);
  rep.I1 = dissipator_trace(m, ss, 1, observable_h(m));
  rep.I2_trace = dissipator_trace(m, ss, 2, observable_h(m));
  rep.I2 = rep.I2_closed;
  return rep;
}

ThermoReport particle_current(const Model& m, const SteadyState& ss) {
  if (m.bath.statistics != Statistics::Fermionic)
    throw StatisticsMismatch("particle current is defined for fermionic baths");
  ThermoReport rep;
  rep.statistics = Statistics::Fermionic;
  rep.I2_closed = closed_form_current(m, ss, 1.0, 1.0, 1.0, 1.0);
  rep.I1 = dissipator_trace(m, ss, 1, observable_n());
  rep.I2_trace = dissipator_trace(m, ss, 2, observable_n());
  rep.I2 = rep.I2_closed;
  return rep;
}

double entropy_production(const Model& m, ThermoReport& report) {
  if (m.bath.statistics == Statistics::Bosonic) {
    if (report.statistics != Statistics::Bosonic)
      throw StatisticsMismatch("report does not carry a bosonic current");
    report.sigma = report.I2 * (1.0 / m.bath.T1 - 1.0 / m.bath.T2);
    if (m.bath.T2 >= 10.0 * m.bath.T1 || m.bath.T1 >= 10.0 * m.bath.T2)
      report.note = "far from equilibrium: sigma ~ I2 / min(T1, T2)";
    return report.sigma;
  }
  if (report.statistics != Statistics::Fermionic)
    throw StatisticsMismatch("report does not carry a fermionic current");
  const double tscale = std::max(m.bath.T1, m.bath.T2);
  if (std::abs(m.bath.dT()) > 1e-12 * tscale)
    throw RegimeMismatch("fermionic entropy production assumes T1 = T2");
  report.sigma = m.bath.dmu() / m.bath.T1 * report.I2;
  return report.sigma;
}

}  // namespace lgines
