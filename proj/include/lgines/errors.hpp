#pragma once

#include <stdexcept>
#include <string>

namespace lgines {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter validation failed at construction time.
struct InvalidParams : Error {
  using Error::Error;
};

// lambda = 0 and omega1 = omega2: the mixing angle is not defined.
struct DegenerateCoupling : Error {
  using Error::Error;
};

// Bose factor requested at omega <= mu.
struct DivergentOccupation : Error {
  using Error::Error;
};

// Coherence block of the generator is numerically singular.
struct SingularCoherenceBlock : Error {
  using Error::Error;
};

// Kernel of the generator is not one-dimensional.
struct NonUniqueSteadyState : Error {
  using Error::Error;
};

// Perturbative closure requested outside its regime of validity.
struct RegimeMismatch : Error {
  using Error::Error;
};

// Bosonic quantity requested for a fermionic model or vice versa.
struct StatisticsMismatch : Error {
  using Error::Error;
};

// INM circuit needs more than the 6-dim block generator.
struct UnsupportedEvolution : Error {
  using Error::Error;
};

// Declarative run configuration did not validate.
struct ConfigError : Error {
  ConfigError(const std::string& field, const std::string& what)
      : Error(field + ": " + what), field_path(field) {}
  std::string field_path;
};

}  // namespace lgines
