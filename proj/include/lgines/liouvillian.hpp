#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>

#include "lgines/model.hpp"

namespace lgines {

using Vector6c = Eigen::Matrix<std::complex<double>, 6, 1>;
using Matrix6c = Eigen::Matrix<std::complex<double>, 6, 6>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;
using Matrix16c = Eigen::Matrix<std::complex<double>, 16, 16>;

// Reduced density vector (rho11, rho22, rho33, rho44, rho23, rho32) in the
// energy basis. The remaining coherences decouple from this sector.
struct LiouvilleState {
  Vector6c v = Vector6c::Zero();

  static LiouvilleState from_vector(const Vector6c& v);
  static LiouvilleState from_matrix(const Eigen::Matrix4cd& rho);
  static LiouvilleState populations(double p1, double p2, double p3, double p4);

  Eigen::Matrix4cd matrix() const;
  std::complex<double> trace() const { return v[0] + v[1] + v[2] + v[3]; }
  double min_eigenvalue() const;  // of the 4x4 matrix view
};

// Bloch-Redfield generator on the 6-dim sector, M = M0 + MJ with MJ = Re M
// the dissipative part and M0 = i Im M the coherent part.
struct Generator {
  Matrix6c M = Matrix6c::Zero();
  Matrix6c M0 = Matrix6c::Zero();
  Matrix6d MJ = Matrix6d::Zero();
  bool secular = false;
  double Omega = 0.0;
  std::optional<Matrix16c> full16;  // vectorized 16-dim generator, filled on demand
};

// D_l[rho] for bath l in {1,2}, including the cross terms (eta rho xi etc.)
// dropped by the secular approximation. Accepts non-Hermitian input; the
// Hermitian-conjugate completion is D[X] = F[X] + (F[X^dag])^dag.
Eigen::Matrix4cd dissipator_apply(int bath_index, const Eigen::Matrix4cd& rho,
                                  const Model& m);

// Full right-hand side W[rho] = i[rho, H_S] + D1[rho] + D2[rho], energy basis.
Eigen::Matrix4cd master_rhs(const Eigen::Matrix4cd& rho, const Model& m);

// 6x6 block generator from the closed-form matrix elements. secular = true
// zeroes every population<->coherence coupling entry.
Generator build_block_generator(const Model& m, bool secular = false);

// 16x16 vectorized generator built by applying W to all matrix units
// (row-major vec, index 4r + c). Used as the independent oracle for the
// 6-dim block and for the INM circuit.
Matrix16c build_full_liouvillian(const Model& m);

// vec indices of (rho11, rho22, rho33, rho44, rho23, rho32) inside the 16-dim space.
inline constexpr int kSectorIndex[6] = {0, 5, 10, 15, 6, 9};

// Restriction of a 16x16 generator to the 6-dim sector.
Matrix6c restrict_to_sector(const Matrix16c& L);

}  // namespace lgines
