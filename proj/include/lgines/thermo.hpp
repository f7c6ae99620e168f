#pragma once

#include <string>

#include "lgines/steadystate.hpp"

namespace lgines {

enum class ThermoMethod { ClosedForm, DissipatorTrace };

// Steady-state currents from bath 2's perspective and the entropy production
// rate. Heat for bosonic baths, particles for fermionic ones.
struct ThermoReport {
  Statistics statistics = Statistics::Bosonic;
  double I1 = 0.0;         // Tr(D1[rho] X)
  double I2 = 0.0;         // headline value (closed form)
  double I2_closed = 0.0;  // algebraic closed form
  double I2_trace = 0.0;   // Tr(D2[rho] X) via the operator dissipator
  double sigma = 0.0;      // entropy production rate
  std::string note;
};

ThermoReport heat_current(const Model& m, const SteadyState& ss);
ThermoReport particle_current(const Model& m, const SteadyState& ss);

// sigma^b = I2 (1/T1 - 1/T2); sigma^f = (mu2 - mu1)/T * I2 with T1 = T2.
// Fills report.sigma and returns it.
double entropy_production(const Model& m, ThermoReport& report);

}  // namespace lgines
