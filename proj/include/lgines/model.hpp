#pragma once

#include <Eigen/Dense>

#include "lgines/errors.hpp"

namespace lgines {

enum class Statistics { Bosonic, Fermionic };

// Two coupled qubits, H = w1|e1><e1| + w2|e2><e2| + (lambda/2)(s1+ s2- + s1- s2+).
// Units: hbar = kB = 1. Construction requires lambda < 2 sqrt(w1 w2), the
// region where |gg> is the ground state and omega1' > 0; declarative run
// configs additionally enforce the conservative lambda < sqrt(w1 w2) guard.
struct SystemParams {
  double omega1;
  double omega2;
  double lambda;

  SystemParams(double w1, double w2, double lam);

  double omega_bar() const { return 0.5 * (omega1 + omega2); }
  double delta_omega() const { return omega1 - omega2; }
};

// Two independent baths with a flat coupling spectrum J1(w) = J2(w) = J.
// Bosonic baths keep mu1 = mu2 = 0.
struct BathParams {
  Statistics statistics;
  double T1;
  double T2;
  double mu1;
  double mu2;
  double J;

  static BathParams bosonic(double T1, double T2, double J);
  static BathParams fermionic(double T1, double T2, double mu1, double mu2, double J);

  double T_mean() const { return 0.5 * (T1 + T2); }
  double dT() const { return T2 - T1; }
  double mu_mean() const { return 0.5 * (mu1 + mu2); }
  double dmu() const { return mu2 - mu1; }

 private:
  BathParams(Statistics s, double T1, double T2, double mu1, double mu2, double J);
};

// Dimer eigenbasis. Local product order is fixed project-wide as
// (|gg>, |eg>, |ge>, |ee>); columns of U are the eigenstates |1>..|4>
// expressed in that order. energies = (0, w1', w2', w1+w2).
struct Eigenbasis {
  double theta = 0.0;  // mixing angle, in [-pi, 0]
  double Omega = 0.0;  // w2' - w1' = sqrt(dw^2 + lambda^2)
  Eigen::Vector4d energies = Eigen::Vector4d::Zero();
  Eigen::Matrix4d U = Eigen::Matrix4d::Identity();
  bool degenerate = false;  // theta fixed to -pi/2 by continuity (lambda = dw = 0)

  double omega1p() const { return energies[1]; }
  double omega2p() const { return energies[2]; }
};

enum class DegeneratePolicy { Continuity, Throw };

Eigenbasis build_eigenbasis(const SystemParams& sys,
                            DegeneratePolicy policy = DegeneratePolicy::Continuity);

// System Hamiltonian in the local product basis (gg, eg, ge, ee).
Eigen::Matrix4d hamiltonian_local(const SystemParams& sys);

// Mean occupation 1/(exp((w-mu)/T) -+ 1); minus bosonic, plus fermionic.
double occupation(Statistics stat, double T, double mu, double omega);

// Transition operators in the energy basis. eta_l lowers by w1', xi_l by w2',
// and sigma_l^- = eta_l + xi_l after the basis rotation.
struct TransitionOps {
  Eigen::Matrix4d eta1, eta2, xi1, xi2;
};

TransitionOps transition_ops(const Eigenbasis& eb);

// Raw occupations n_l(w_k') and the angle-weighted combinations that enter
// the steady state. delta_n vanish identically at equilibrium.
struct OccupationSet {
  double n1_w1, n1_w2;  // bath 1 at w1', w2'
  double n2_w1, n2_w2;  // bath 2 at w1', w2'
  double tilde_n1, tilde_n2;
  double delta_n1, delta_n2;
};

OccupationSet occupation_set(const BathParams& bath, const Eigenbasis& eb);

// alpha_l(w) = J n_l(w), beta_l(w) = J (1 +- n_l(w)); indices [bath][frequency].
struct RateSet {
  double alpha[2][2];
  double beta[2][2];
};

RateSet rate_coefficients(const BathParams& bath, const Eigenbasis& eb);

// Everything downstream modules need, built once. Immutable after construction.
struct Model {
  SystemParams sys;
  BathParams bath;
  Eigenbasis eb;
  TransitionOps ops;
  OccupationSet occ;
  RateSet rates;

  static Model build(const SystemParams& sys, const BathParams& bath,
                     DegeneratePolicy policy = DegeneratePolicy::Continuity);
};

}  // namespace lgines
