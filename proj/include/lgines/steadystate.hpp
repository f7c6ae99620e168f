#pragma once

#include <array>

#include "lgines/liouvillian.hpp"

namespace lgines {

enum class SteadyMethod { ClosedForm, PopulationMatrix, NullSpace };

struct SteadyState {
  LiouvilleState state;
  SteadyMethod method = SteadyMethod::ClosedForm;
  double kappa = 0.0;                        // kappa^b or kappa^f
  std::array<double, 4> s = {0, 0, 0, 0};    // s1..s4, bosonic only
  double norm = 1.0;                         // N^b; 1 for fermionic
};

// Population matrix A = M_pp - M_pc M_cc^-1 M_cp, both from the closed forms
// (statistics-specific) and from numerical elimination of the generator.
// Entries are in units of J, matching the closed forms.
struct PopulationMatrixResult {
  Eigen::Matrix4d closed_form;
  Eigen::Matrix4d eliminated;
};

PopulationMatrixResult population_matrix(const Model& m, const Generator& gen);

// Statistics-appropriate closed-form steady state, coherence included.
SteadyState steady_state_closed_form(const Model& m);

// Kernel of the closed-form population matrix, coherences recovered via
// rho_c = -M_cc^-1 M_cp rho_p.
SteadyState steady_state_population_matrix(const Model& m, const Generator& gen);

// SVD null space of the full 6-dim generator, populations normalized to 1.
SteadyState steady_state_nullspace(const Generator& gen);

}  // namespace lgines
