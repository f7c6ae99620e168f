#pragma once

#include <array>
#include <variant>
#include <vector>

#include "lgines/dynamics.hpp"

namespace lgines {

// Dichotomic local observable Q = sigma_z of qubit 1, energy basis, with its
// +-1 eigenprojectors.
struct Observable {
  Eigen::Matrix4d Q;
  Eigen::Matrix4d Pplus;
  Eigen::Matrix4d Pminus;
};

Observable observable_sigma_z1(const Eigenbasis& eb);

// 6-sector projection of sum_n a_n Pi_n rho Pi_n = (1/2){Q, rho}. The result
// is Hermitian and traceful (trace = <Q>), not a normalized state.
LiouvilleState measure_superop(const Observable& obs, const LiouvilleState& state);

// C_q(t) = Re Tr(Q e^{Mt} (1/2){Q, rho0}); imag part of the naive two-point
// function Tr(Q e^{Mt} Q rho0) reported as a noncommutativity diagnostic.
struct CorrelationResult {
  double value;
  double imag_naive;
};

CorrelationResult correlation_full(const Generator& gen, const Observable& obs,
                                   const LiouvilleState& rho0, double t);
double correlation(const Generator& gen, const Observable& obs,
                   const LiouvilleState& rho0, double t);

struct LgiValues {
  double I2;
  double Iplus;
  double Iminus;
};

// Equal-interval LGI functions from the stationary initial state:
// I+- = +-2 C(t) - C(2t), I2 = 2<Q>_ss - C(t).
LgiValues lgi_functions(const Generator& gen, const Observable& obs,
                        const LiouvilleState& steady, double t);

struct MlgiOptions {
  double t_max = 0.0;       // 0 -> 4 pi / Omega
  int grid = 512;           // coarse scan points
  double refine_tol = 0.0;  // 0 -> 1e-8 / Omega
};

struct LgiReport {
  std::vector<double> t_grid;
  std::vector<double> I2, Iplus, Iminus;
  double t_star = 0.0;
  double mlgi = 0.0;
  int argmax_which = 0;  // 0: I+, 1: I-, 2: I2/2
  bool violated = false;
  double trust = 0.0;  // t* J max(n)
  std::vector<bool> positivity_flags;  // per sample, post-measurement branches
  bool positivity_warning = false;
};

// max_t {I+-, I2/2} - 1 by coarse grid scan plus golden-section refinement.
LgiReport mlgi(const Generator& gen, const Observable& obs,
               const LiouvilleState& initial, const MlgiOptions& opts = {});

// INM circuit evolution: either the coherent 4-dim unitary or the full
// vectorized generator extended by an identity channel on the ancillas.
struct CoherentEvolution {
  Eigen::Vector4d energies;  // diagonal H_S, energy basis
};

struct LiouvilleEvolution {
  Matrix16c L;
};

using InmEvolution = std::variant<CoherentEvolution, LiouvilleEvolution>;

struct InmResult {
  double correlation;
  std::array<double, 4> joint;  // P(+,+), P(+,-), P(-,+), P(-,-)
};

// Two-ancilla ideal-negative-measurement circuit: anti-CNOT/CNOT onto ancilla
// 1, open evolution for t, CNOT variants onto ancilla 2, readout. Branches
// with a flipped ancilla are discarded; the four kept joint probabilities
// assemble sum QjQl P(Qj,Ql).
InmResult inm_correlation(const Observable& obs, const InmEvolution& evolution,
                          const LiouvilleState& rho0, double t);

// The 6-dim block cannot evolve system-ancilla correlations.
InmResult inm_correlation(const Observable& obs, const Generator& gen,
                          const LiouvilleState& rho0, double t);

}  // namespace lgines
