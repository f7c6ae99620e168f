#include "lgines/model.hpp"

#include <cmath>

namespace lgines {

SystemParams::SystemParams(double w1, double w2, double lam)
    : omega1(w1), omega2(w2), lambda(lam) {
  if (!(omega1 > 0.0) || !(omega2 > 0.0))
    throw InvalidParams("qubit frequencies must be positive");
  if (!(lambda >= 0.0))
    throw InvalidParams("inter-qubit coupling must be non-negative");
  // Spectrum validity: omega1' > 0 and |gg> stays the ground state.
  if (!(lambda < 2.0 * std::sqrt(omega1 * omega2)))
    throw InvalidParams("coupling must satisfy lambda < 2 sqrt(omega1*omega2)");
}

BathParams::BathParams(Statistics s, double t1, double t2, double m1, double m2, double j)
    : statistics(s), T1(t1), T2(t2), mu1(m1), mu2(m2), J(j) {
  if (!(T1 > 0.0) || !(T2 > 0.0)) throw InvalidParams("bath temperatures must be positive");
  if (!(J > 0.0)) throw InvalidParams("coupling spectrum J must be positive");
  if (statistics == Statistics::Bosonic && (mu1 != 0.0 || mu2 != 0.0))
    throw InvalidParams("bosonic baths require mu1 = mu2 = 0");
}

BathParams BathParams::bosonic(double T1, double T2, double J) {
  return BathParams(Statistics::Bosonic, T1, T2, 0.0, 0.0, J);
}

BathParams BathParams::fermionic(double T1, double T2, double mu1, double mu2, double J) {
  return BathParams(Statistics::Fermionic, T1, T2, mu1, mu2, J);
}

Eigen::Matrix4d hamiltonian_local(const SystemParams& sys) {
  Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
  h(1, 1) = sys.omega1;
  h(2, 2) = sys.omega2;
  h(3, 3) = sys.omega1 + sys.omega2;
  h(1, 2) = h(2, 1) = 0.5 * sys.lambda;
  return h;
}

Eigenbasis build_eigenbasis(const SystemParams& sys, DegeneratePolicy policy) {
  const double dw = sys.delta_omega();
  Eigenbasis eb;
  eb.Omega = std::sqrt(dw * dw + sys.lambda * sys.lambda);

  if (sys.lambda == 0.0 && dw == 0.0) {
    if (policy == DegeneratePolicy::Throw)
      throw DegenerateCoupling("lambda = 0 with omega1 = omega2: mixing angle undefined");
    eb.theta = -0.5 * M_PI;  // symmetric limit
    eb.degenerate = true;
  } else {
    // Branch rule arctan(lambda/dw) (- pi if dw > 0) collapses to
    // sin(theta) = -lambda/Omega, cos(theta) = -dw/Omega.
    eb.theta = std::atan2(-sys.lambda, -dw);
  }

  const double wb = sys.omega_bar();
  eb.energies << 0.0, wb - 0.5 * eb.Omega, wb + 0.5 * eb.Omega, sys.omega1 + sys.omega2;

  const double c = std::cos(0.5 * eb.theta);
  const double s = std::sin(0.5 * eb.theta);
  eb.U = Eigen::Matrix4d::Zero();
  eb.U(0, 0) = 1.0;          // |1> = |gg>
  eb.U(1, 1) = c;            // |2> = c|eg> + s|ge>
  eb.U(2, 1) = s;
  eb.U(1, 2) = -s;           // |3> = -s|eg> + c|ge>
  eb.U(2, 2) = c;
  eb.U(3, 3) = 1.0;          // |4> = |ee>
  return eb;
}

double occupation(Statistics stat, double T, double mu, double omega) {
  if (!(T > 0.0)) throw InvalidParams("occupation requires T > 0");
  const double x = (omega - mu) / T;
  if (stat == Statistics::Bosonic) {
    if (!(omega > mu))
      throw DivergentOccupation("bosonic occupation requires omega > mu");
    return 1.0 / std::expm1(x);
  }
  // Fermi-Dirac, stable on both tails.
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (std::exp(x) + 1.0);
}

TransitionOps transition_ops(const Eigenbasis& eb) {
  const double c = std::cos(0.5 * eb.theta);
  const double s = std::sin(0.5 * eb.theta);
  TransitionOps ops;
  ops.eta1 = Eigen::Matrix4d::Zero();
  ops.eta2 = Eigen::Matrix4d::Zero();
  ops.xi1 = Eigen::Matrix4d::Zero();
  ops.xi2 = Eigen::Matrix4d::Zero();
  // sigma_1^- = eta1 + xi1:
  ops.eta1(0, 1) = c;   // |1><2|
  ops.eta1(2, 3) = c;   // |3><4|
  ops.xi1(1, 3) = s;    // |2><4|
  ops.xi1(0, 2) = -s;   // -|1><3|
  // sigma_2^- = eta2 + xi2 (trig weights follow from the same rotation):
  ops.eta2(0, 1) = s;
  ops.eta2(2, 3) = -s;
  ops.xi2(1, 3) = c;
  ops.xi2(0, 2) = c;
  return ops;
}

OccupationSet occupation_set(const BathParams& bath, const Eigenbasis& eb) {
  const double w1p = eb.omega1p();
  const double w2p = eb.omega2p();
  OccupationSet o;
  o.n1_w1 = occupation(bath.statistics, bath.T1, bath.mu1, w1p);
  o.n1_w2 = occupation(bath.statistics, bath.T1, bath.mu1, w2p);
  o.n2_w1 = occupation(bath.statistics, bath.T2, bath.mu2, w1p);
  o.n2_w2 = occupation(bath.statistics, bath.T2, bath.mu2, w2p);
  const double c2 = std::pow(std::cos(0.5 * eb.theta), 2);
  const double s2 = std::pow(std::sin(0.5 * eb.theta), 2);
  const double st = std::sin(eb.theta);
  o.tilde_n1 = c2 * o.n1_w1 + s2 * o.n2_w1;
  o.tilde_n2 = s2 * o.n1_w2 + c2 * o.n2_w2;
  o.delta_n1 = 0.5 * st * (o.n2_w1 - o.n1_w1);
  o.delta_n2 = 0.5 * st * (o.n2_w2 - o.n1_w2);
  return o;
}

RateSet rate_coefficients(const BathParams& bath, const Eigenbasis& eb) {
  const double w[2] = {eb.omega1p(), eb.omega2p()};
  const double T[2] = {bath.T1, bath.T2};
  const double mu[2] = {bath.mu1, bath.mu2};
  const double sign = bath.statistics == Statistics::Bosonic ? 1.0 : -1.0;
  RateSet r;
  for (int l = 0; l < 2; ++l) {
    for (int k = 0; k < 2; ++k) {
      const double n = occupation(bath.statistics, T[l], mu[l], w[k]);
      r.alpha[l][k] = bath.J * n;
      r.beta[l][k] = bath.J * (1.0 + sign * n);
    }
  }
  return r;
}

Model Model::build(const SystemParams& sys, const BathParams& bath, DegeneratePolicy policy) {
  Eigenbasis eb = build_eigenbasis(sys, policy);
  if (bath.statistics == Statistics::Bosonic &&
      !(eb.omega1p() > bath.mu1 && eb.omega1p() > bath.mu2))
    throw DivergentOccupation("bosonic baths require omega1' > mu");
  return Model{sys, bath, eb, transition_ops(eb), occupation_set(bath, eb),
               rate_coefficients(bath, eb)};
}

}  // namespace lgines
