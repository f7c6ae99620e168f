#include "lgines/dynamics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cstdio>
#include <cmath>

namespace lgines {

Matrix6c propagator(const Generator& gen, double t) {
  if (t < 0.0) throw InvalidParams("propagation requires t >= 0");
  return (gen.M * t).exp();
}

LiouvilleState propagate(const Generator& gen, const LiouvilleState& state, double t) {
  return LiouvilleState::from_vector(propagator(gen, t) * state.v);
}

double correlation_c0(double t, double theta, double Omega, double pop23) {
  const double s2 = std::sin(theta) * std::sin(theta);
  return 1.0 - (1.0 - std::cos(Omega * t)) * s2 * pop23;
}

LgiZeroth lgi_zeroth(double t, double theta, double Omega, const LiouvilleState& steady) {
  const double p11 = steady.v[0].real();
  const double p22 = steady.v[1].real();
  const double p33 = steady.v[2].real();
  const double p44 = steady.v[3].real();
  const double re23 = steady.v[4].real();
  const double s2 = std::sin(theta) * std::sin(theta);
  const double pop = p22 + p33;
  const double ct = std::cos(Omega * t);
  const double c2t = std::cos(2.0 * Omega * t);

  LgiZeroth out;
  out.I2 = 2.0 * (p11 - p44) + 2.0 * std::cos(theta) * (p33 - p22) +
           4.0 * std::sin(theta) * re23 + (1.0 - ct) * s2 * pop - 1.0;
  out.Iplus = 1.0 + (2.0 * ct - c2t - 1.0) * s2 * pop;
  out.Iminus = -3.0 + (3.0 - 2.0 * ct - c2t) * s2 * pop;
  return out;
}

namespace {

constexpr double kRelTol = 1e-12;

bool symmetric_qubits(const Model& m) {
  return std::abs(m.sys.delta_omega()) <= kRelTol * m.sys.omega_bar();
}

bool equilibrium_baths(const Model& m) {
  const double tscale = std::max(m.bath.T1, m.bath.T2);
  const double mscale = std::max({std::abs(m.bath.mu1), std::abs(m.bath.mu2), 1.0});
  return std::abs(m.bath.dT()) <= kRelTol * tscale &&
         std::abs(m.bath.dmu()) <= kRelTol * mscale;
}

void require_statistics(Regime regime, const Model& m) {
  const bool wants_bosonic = regime == Regime::BosonicEq || regime == Regime::BosonicNoneq;
  if (wants_bosonic != (m.bath.statistics == Statistics::Bosonic))
    throw StatisticsMismatch("regime statistics do not match the bath statistics");
}

}  // namespace

double lgi_first_order(Regime regime, double t, const Model& m,
                       const LiouvilleState& steady) {
  require_statistics(regime, m);
  const double J = m.bath.J;
  const double pop = steady.v[1].real() + steady.v[2].real();
  const double s2 = std::sin(m.eb.theta) * std::sin(m.eb.theta);
  const double Om = m.eb.Omega;

  switch (regime) {
    case Regime::BosonicEq: {
      if (!equilibrium_baths(m))
        throw RegimeMismatch("equilibrium closure requires T1 = T2");
      const double nsum = m.occ.n1_w1 + m.occ.n1_w2;
      return 4.0 * t * J * s2 * pop * (nsum + 1.0) *
             (std::cos(2.0 * Om * t) - std::cos(Om * t));
    }
    case Regime::FermionicEq: {
      if (!equilibrium_baths(m))
        throw RegimeMismatch("equilibrium closure requires T1 = T2 and mu1 = mu2");
      return 4.0 * t * J * s2 * pop * (std::cos(2.0 * Om * t) - std::cos(Om * t));
    }
    case Regime::BosonicNoneq: {
      if (!symmetric_qubits(m))
        throw RegimeMismatch("nonequilibrium closure requires omega1 = omega2");
      const double lam = m.sys.lambda;
      const double nsum = m.occ.tilde_n1 + m.occ.tilde_n2;
      const double dsum = m.occ.delta_n1 + m.occ.delta_n2;
      return 4.0 * t * J * pop * (nsum + 1.0) *
                 (std::cos(2.0 * lam * t) - std::cos(lam * t)) +
             (2.0 * J / lam) * dsum *
                 (std::sin(2.0 * lam * t) - 2.0 * std::sin(lam * t));
    }
    case Regime::FermionicNoneq: {
      if (!symmetric_qubits(m))
        throw RegimeMismatch("nonequilibrium closure requires omega1 = omega2");
      const double lam = m.sys.lambda;
      const double dsum = m.occ.delta_n1 + m.occ.delta_n2;
      const double pdiff = steady.v[0].real() - steady.v[3].real();
      return 4.0 * t * J * pop * (std::cos(2.0 * lam * t) - std::cos(lam * t)) +
             (2.0 * J / lam) * dsum * pdiff *
                 (std::sin(2.0 * lam * t) - 2.0 * std::sin(lam * t));
    }
  }
  throw RegimeMismatch("unknown regime");
}

double first_order_trust(const Model& m, double t) {
  const double nmax = std::max({m.occ.n1_w1, m.occ.n1_w2, m.occ.n2_w1, m.occ.n2_w2});
  return t * m.bath.J * nmax;
}

MlgiApprox mlgi_approximation(Regime regime, const Model& m) {
  require_statistics(regime, m);
  const double J = m.bath.J;
  const double Om = m.eb.Omega;
  const double s2 = std::sin(m.eb.theta) * std::sin(m.eb.theta);
  const double wb = m.sys.omega_bar();
  char buf[160];

  switch (regime) {
    case Regime::BosonicEq: {
      if (!equilibrium_baths(m))
        throw RegimeMismatch("equilibrium closure requires T1 = T2");
      const double T = m.bath.T1;
      const double alpha = 2.0 * std::exp(-wb / T) * std::cosh(0.5 * Om / T);
      const double value = alpha * s2 * (0.5 - 4.0 * M_PI * J / (3.0 * Om));
      std::snprintf(buf, sizeof buf, "low-T bosonic equilibrium form; T/omega1' = %.3g",
                    T / m.eb.omega1p());
      return {value, buf};
    }
    case Regime::FermionicEq: {
      if (!equilibrium_baths(m))
        throw RegimeMismatch("equilibrium closure requires T1 = T2 and mu1 = mu2");
      const double pop = m.occ.tilde_n1 * (1.0 - m.occ.tilde_n2) +
                         m.occ.tilde_n2 * (1.0 - m.occ.tilde_n1);
      const double value = (0.5 - 4.0 * M_PI * J / (3.0 * Om)) * s2 * pop;
      std::snprintf(buf, sizeof buf, "fermionic equilibrium form; T/omega1' = %.3g",
                    m.bath.T1 / m.eb.omega1p());
      return {value, buf};
    }
    case Regime::BosonicNoneq: {
      if (!symmetric_qubits(m))
        throw RegimeMismatch("nonequilibrium closure requires omega1 = omega2");
      const double lam = m.sys.lambda;
      const double Tm = m.bath.T_mean();
      const double dT = m.bath.dT();
      if (Tm < wb) {
        const double Teff = 2.0 * Tm * Tm / (2.0 * Tm - std::abs(dT));
        const double alphap =
            std::exp(-m.eb.omega1p() / Teff) + std::exp(-m.eb.omega2p() / Teff);
        const double sgn = dT > 0.0 ? 1.0 : (dT < 0.0 ? -1.0 : 0.0);
        const double value =
            alphap * (0.5 + (J / lam) * (sgn * std::sqrt(3.0) - 4.0 * M_PI / 3.0));
        std::snprintf(buf, sizeof buf,
                      "low-Tm nonequilibrium bosonic form; T_eff = %.6g, Tm/omega_bar = %.3g",
                      Teff, Tm / wb);
        return {value, buf};
      }
      const double winv = 1.0 / m.eb.omega1p() + 1.0 / m.eb.omega2p();
      const double value =
          0.25 + (J / lam) * (winv * (0.5 * std::sqrt(3.0) * dT - 2.0 * M_PI / 3.0 * Tm) -
                              2.0 * M_PI / 3.0);
      std::snprintf(buf, sizeof buf,
                    "high-Tm nonequilibrium bosonic form; Tm/omega_bar = %.3g", Tm / wb);
      return {value, buf};
    }
    case Regime::FermionicNoneq: {
      if (!symmetric_qubits(m))
        throw RegimeMismatch("nonequilibrium closure requires omega1 = omega2");
      const double lam = m.sys.lambda;
      const double n1 = m.occ.tilde_n1;
      const double n2 = m.occ.tilde_n2;
      const double d1 = m.occ.delta_n1;
      const double d2 = m.occ.delta_n2;
      const double k = 1.0 / (1.0 + std::pow(Om / (2.0 * J), 2));
      const double corr = 0.25 * k * (d1 + d2) * (d1 + d2);
      const double pop = n1 * (1.0 - n2) + n2 * (1.0 - n1) + 2.0 * corr;
      const double pdiff = ((1.0 - n1) * (1.0 - n2) - corr) - (n1 * n2 - corr);
      const double value = (0.5 - 4.0 * M_PI * J / (3.0 * lam)) * pop -
                           std::sqrt(3.0) * (J / lam) * (d1 + d2) * pdiff;
      std::snprintf(buf, sizeof buf,
                    "nonequilibrium fermionic form; T/omega_bar = %.3g, dmu/omega_bar = %.3g",
                    m.bath.T1 / wb, m.bath.dmu() / wb);
      return {value, buf};
    }
  }
  throw RegimeMismatch("unknown regime");
}

double fermionic_resonance_population_sum(double lambda, double T, double dmu) {
  const double x = 0.5 * dmu / T;
  const double y = 0.5 * lambda / T;
  const double first = std::cosh(y) / (std::cosh(x) + std::cosh(y));
  const double second = std::pow(std::sinh(x), 2) /
                        (2.0 * (std::cosh(x + y) + 1.0) * (std::cosh(x - y) + 1.0));
  return first + second;
}

}  // namespace lgines
