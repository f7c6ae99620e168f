#pragma once

#include <string>

#include "lgines/liouvillian.hpp"
#include "lgines/steadystate.hpp"

namespace lgines {

// e^{Mt}, Pade scaling-and-squaring.
Matrix6c propagator(const Generator& gen, double t);

// Exact exponential action on the density vector.
LiouvilleState propagate(const Generator& gen, const LiouvilleState& state, double t);

// Coherent-limit correlation C^0(t) = 1 - (1 - cos(Omega t)) sin^2(theta) (p22+p33).
double correlation_c0(double t, double theta, double Omega, double pop23);

struct LgiZeroth {
  double I2;
  double Iplus;
  double Iminus;
};

// Coherent-limit LGI functions evaluated on an arbitrary 6-sector state.
LgiZeroth lgi_zeroth(double t, double theta, double Omega, const LiouvilleState& steady);

enum class Regime { BosonicEq, FermionicEq, BosonicNoneq, FermionicNoneq };

// First-order (in J) correction to I_+(t). Nonequilibrium closures require
// omega1 = omega2; equilibrium closures require matching bath parameters.
double lgi_first_order(Regime regime, double t, const Model& m, const LiouvilleState& steady);

// Validity indicator of the first-order expansion, t J max_l,k n_l(w_k').
double first_order_trust(const Model& m, double t);

struct MlgiApprox {
  double value;
  std::string validity;  // which closed form was used and its range indicator
};

// Closed-form approximations of max-LGI through first order in J.
MlgiApprox mlgi_approximation(Regime regime, const Model& m);

// Population sum p22 + p33 at the fermionic resonance mu_mean = omega_bar,
// symmetric qubits, as a function of the bias dmu.
double fermionic_resonance_population_sum(double lambda, double T, double dmu);

}  // namespace lgines
