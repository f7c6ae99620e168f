#pragma once

#include <random>

#include "lgines/liouvillian.hpp"
#include "lgines/model.hpp"

namespace lgines::testing {

inline SystemParams random_system(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> freq(0.5, 2.0);
  std::uniform_real_distribution<double> frac(0.05, 0.9);
  const double w1 = freq(rng);
  const double w2 = freq(rng);
  return SystemParams(w1, w2, frac(rng) * std::sqrt(w1 * w2));
}

inline BathParams random_bath(std::mt19937_64& rng, Statistics stat, bool equilibrium) {
  if (stat == Statistics::Bosonic) {
    std::uniform_real_distribution<double> temp(0.2, 5.0);
    std::uniform_real_distribution<double> coupling(0.002, 0.05);
    const double t1 = temp(rng);
    const double t2 = equilibrium ? t1 : temp(rng);
    return BathParams::bosonic(t1, t2, coupling(rng));
  }
  std::uniform_real_distribution<double> temp(0.1, 3.0);
  std::uniform_real_distribution<double> mu(-1.0, 3.0);
  std::uniform_real_distribution<double> coupling(0.002, 0.05);
  const double t1 = temp(rng);
  const double m1 = mu(rng);
  const double t2 = equilibrium ? t1 : temp(rng);
  const double m2 = equilibrium ? m1 : mu(rng);
  return BathParams::fermionic(t1, t2, m1, m2, coupling(rng));
}

inline Model random_model(std::mt19937_64& rng, Statistics stat, bool equilibrium) {
  return Model::build(random_system(rng), random_bath(rng, stat, equilibrium));
}

inline Eigen::Matrix4cd random_hermitian(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::Matrix4cd a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = std::complex<double>(u(rng), u(rng));
  return 0.5 * (a + a.adjoint().eval());
}

// Random density matrix supported on the 6-dim sector.
inline LiouvilleState random_sector_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::Matrix4cd a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = std::complex<double>(u(rng), u(rng));
  Eigen::Matrix4cd rho = a * a.adjoint();
  rho /= rho.trace();
  LiouvilleState s = LiouvilleState::from_matrix(rho);  // discards other coherences
  return s;
}

}  // namespace lgines::testing
