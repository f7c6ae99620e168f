#include "lgines/liouvillian.hpp"

#include <Eigen/Eigenvalues>

namespace lgines {

using cd = std::complex<double>;

LiouvilleState LiouvilleState::from_vector(const Vector6c& v) {
  LiouvilleState s;
  s.v = v;
  return s;
}

LiouvilleState LiouvilleState::from_matrix(const Eigen::Matrix4cd& rho) {
  LiouvilleState s;
  s.v << rho(0, 0), rho(1, 1), rho(2, 2), rho(3, 3), rho(1, 2), rho(2, 1);
  return s;
}

LiouvilleState LiouvilleState::populations(double p1, double p2, double p3, double p4) {
  LiouvilleState s;
  s.v << p1, p2, p3, p4, 0.0, 0.0;
  return s;
}

Eigen::Matrix4cd LiouvilleState::matrix() const {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(0, 0) = v[0];
  rho(1, 1) = v[1];
  rho(2, 2) = v[2];
  rho(3, 3) = v[3];
  rho(1, 2) = v[4];
  rho(2, 1) = v[5];
  return rho;
}

double LiouvilleState::min_eigenvalue() const {
  Eigen::Matrix4cd rho = matrix();
  Eigen::Matrix4cd herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(herm);
  return es.eigenvalues().minCoeff();
}

namespace {

// The four dissipator lines before Hermitian completion.
Eigen::Matrix4cd dissipator_base(const Eigen::Matrix4cd& x, const Eigen::Matrix4cd& eta,
                                 const Eigen::Matrix4cd& xi, double a1, double a2,
                                 double b1, double b2) {
  const Eigen::Matrix4cd etad = eta.adjoint();
  const Eigen::Matrix4cd xid = xi.adjoint();
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  out += a1 * (etad * x * eta + etad * x * xi - eta * etad * x - xi * etad * x);
  out += a2 * (xid * x * xi + etad * x * xi - xi * xid * x - eta * xid * x);
  out += b1 * (eta * x * etad + eta * x * xid - etad * eta * x - xid * eta * x);
  out += b2 * (xi * x * xid + eta * x * xid - xid * xi * x - etad * xi * x);
  return out;
}

}  // namespace

Eigen::Matrix4cd dissipator_apply(int bath_index, const Eigen::Matrix4cd& rho,
                                  const Model& m) {
  if (bath_index != 1 && bath_index != 2)
    throw InvalidParams("bath index must be 1 or 2");
  const int l = bath_index - 1;
  const Eigen::Matrix4cd eta =
      (l == 0 ? m.ops.eta1 : m.ops.eta2).cast<cd>();
  const Eigen::Matrix4cd xi = (l == 0 ? m.ops.xi1 : m.ops.xi2).cast<cd>();
  const double a1 = m.rates.alpha[l][0];
  const double a2 = m.rates.alpha[l][1];
  const double b1 = m.rates.beta[l][0];
  const double b2 = m.rates.beta[l][1];
  // Linear extension of "... + H.c." to non-Hermitian arguments; agrees with
  // the printed form on Hermitian rho and satisfies D[X]^dag = D[X^dag].
  const Eigen::Matrix4cd base = dissipator_base(rho, eta, xi, a1, a2, b1, b2);
  const Eigen::Matrix4cd conj =
      dissipator_base(rho.adjoint(), eta, xi, a1, a2, b1, b2).adjoint();
  return base + conj;
}

Eigen::Matrix4cd master_rhs(const Eigen::Matrix4cd& rho, const Model& m) {
  const cd i(0.0, 1.0);
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  for (int k = 0; k < 4; ++k) h(k, k) = m.eb.energies[k];
  Eigen::Matrix4cd out = i * (rho * h - h * rho);
  out += dissipator_apply(1, rho, m);
  out += dissipator_apply(2, rho, m);
  return out;
}

Generator build_block_generator(const Model& m, bool secular) {
  const double c2 = std::pow(std::cos(0.5 * m.eb.theta), 2);
  const double s2 = std::pow(std::sin(0.5 * m.eb.theta), 2);
  const double st = std::sin(m.eb.theta);
  const auto& a = m.rates.alpha;
  const auto& b = m.rates.beta;

  Matrix6c M = Matrix6c::Zero();
  M(0, 0) = -2.0 * (c2 * (a[0][0] + a[1][1]) + s2 * (a[0][1] + a[1][0]));
  M(0, 1) = M(2, 3) = 2.0 * (c2 * b[0][0] + s2 * b[1][0]);
  M(0, 2) = M(1, 3) = 2.0 * (s2 * b[0][1] + c2 * b[1][1]);
  M(1, 0) = M(3, 2) = 2.0 * (c2 * a[0][0] + s2 * a[1][0]);
  M(1, 1) = -2.0 * (c2 * (b[0][0] + a[1][1]) + s2 * (a[0][1] + b[1][0]));
  M(2, 0) = M(3, 1) = 2.0 * (s2 * a[0][1] + c2 * a[1][1]);
  M(2, 2) = -2.0 * (c2 * (a[0][0] + b[1][1]) + s2 * (a[1][0] + b[0][1]));
  M(3, 3) = -2.0 * (c2 * (b[0][0] + b[1][1]) + s2 * (b[0][1] + b[1][0]));

  const double g14 = 0.5 * st * (b[1][0] + b[1][1] - b[0][0] - b[0][1]);
  const double g24 = 0.5 * st * (a[1][0] + b[0][1] - a[0][0] - b[1][1]);
  const double g34 = 0.5 * st * (b[0][0] + a[1][1] - a[0][1] - b[1][0]);
  const double g44 = 0.5 * st * (a[0][0] + a[0][1] - a[1][0] - a[1][1]);
  M(0, 4) = M(0, 5) = g14;
  M(4, 3) = M(5, 3) = -g14;
  M(1, 4) = M(1, 5) = M(4, 2) = M(5, 2) = g24;
  M(2, 4) = M(2, 5) = M(4, 1) = M(5, 1) = g34;
  M(3, 4) = M(3, 5) = g44;
  M(4, 0) = M(5, 0) = -g44;

  const double decay = c2 * (a[0][0] + a[1][1] + b[0][0] + b[1][1]) +
                       s2 * (a[1][0] + a[0][1] + b[1][0] + b[0][1]);
  M(4, 4) = cd(-decay, m.eb.Omega);
  M(5, 5) = cd(-decay, -m.eb.Omega);

  if (secular) {
    for (int p = 0; p < 4; ++p)
      for (int q = 4; q < 6; ++q) {
        M(p, q) = 0.0;
        M(q, p) = 0.0;
      }
  }

  Generator gen;
  gen.M = M;
  gen.MJ = M.real();
  gen.M0 = cd(0.0, 1.0) * M.imag().cast<cd>();
  gen.secular = secular;
  gen.Omega = m.eb.Omega;
  return gen;
}

Matrix16c build_full_liouvillian(const Model& m) {
  Matrix16c L = Matrix16c::Zero();
  for (int k = 0; k < 16; ++k) {
    Eigen::Matrix4cd unit = Eigen::Matrix4cd::Zero();
    unit(k / 4, k % 4) = 1.0;
    const Eigen::Matrix4cd w = master_rhs(unit, m);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) L(4 * r + c, k) = w(r, c);
  }
  return L;
}

Matrix6c restrict_to_sector(const Matrix16c& L) {
  Matrix6c M;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) M(i, j) = L(kSectorIndex[i], kSectorIndex[j]);
  return M;
}

}  // namespace lgines
