#include "lgines/steadystate.hpp"

#include <Eigen/SVD>

namespace lgines {

using cd = std::complex<double>;

namespace {

Eigen::Matrix4d closed_form_population_matrix(const Model& m) {
  const double n1 = m.occ.tilde_n1;
  const double n2 = m.occ.tilde_n2;
  const double d1 = m.occ.delta_n1;
  const double d2 = m.occ.delta_n2;
  const double dp2 = (d1 + d2) * (d1 + d2);
  const double dm2 = (d1 - d2) * (d1 - d2);
  const double dsq = d1 * d1 - d2 * d2;
  const double r = m.eb.Omega / (2.0 * m.bath.J);

  Eigen::Matrix4d A;
  if (m.bath.statistics == Statistics::Bosonic) {
    const double k = (n1 + n2 + 1.0) / ((n1 + n2 + 1.0) * (n1 + n2 + 1.0) + r * r);
    A << -2.0 * (n1 + n2) + k * dp2, 2.0 * (n1 + 1.0) - k * dsq,
        2.0 * (n2 + 1.0) + k * dsq, -k * dp2,
        2.0 * n1 + k * dsq, -2.0 * (n1 + n2 + 1.0) - k * dm2,
        k * dm2, 2.0 * (n2 + 1.0) - k * dsq,
        2.0 * n2 - k * dsq, k * dm2,
        -2.0 * (n1 + n2 + 1.0) - k * dm2, 2.0 * (n1 + 1.0) + k * dsq,
        -k * dp2, 2.0 * n2 + k * dsq,
        2.0 * n1 - k * dsq, -2.0 * (n1 + n2 + 2.0) + k * dp2;
  } else {
    const double k = 1.0 / (1.0 + r * r);
    // The (1,1) correction enters with -k: probability conservation requires
    // every column of A to sum to zero.
    A << -2.0 * (n1 + n2) - k * dp2, 2.0 * (1.0 - n1) - k * dp2,
        2.0 * (1.0 - n2) - k * dp2, -k * dp2,
        2.0 * n1 + k * dp2, 2.0 * (n1 - n2 - 1.0) + k * dp2,
        k * dp2, 2.0 * (1.0 - n2) + k * dp2,
        2.0 * n2 + k * dp2, k * dp2,
        2.0 * (n2 - n1 - 1.0) + k * dp2, 2.0 * (1.0 - n1) + k * dp2,
        -k * dp2, 2.0 * n2 - k * dp2,
        2.0 * n1 - k * dp2, 2.0 * (n1 + n2 - 2.0) - k * dp2;
  }
  return A;
}

// Coherences from the populations, rho_c = -M_cc^-1 M_cp rho_p.
Eigen::Vector2cd eliminate_coherences(const Generator& gen, const Eigen::Vector4d& pops) {
  Eigen::Matrix2cd mcc;
  mcc << gen.M(4, 4), gen.M(4, 5), gen.M(5, 4), gen.M(5, 5);
  const double scale = mcc.norm();
  if (std::abs(mcc.determinant()) < 1e-14 * scale)
    throw SingularCoherenceBlock("coherence block of the generator is singular");
  Eigen::Matrix<cd, 2, 4> mcp;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) mcp(i, j) = gen.M(4 + i, j);
  return -mcc.inverse() * (mcp * pops.cast<cd>());
}

}  // namespace

PopulationMatrixResult population_matrix(const Model& m, const Generator& gen) {
  PopulationMatrixResult res;
  res.closed_form = closed_form_population_matrix(m);

  Eigen::Matrix2cd mcc;
  mcc << gen.M(4, 4), gen.M(4, 5), gen.M(5, 4), gen.M(5, 5);
  const double scale = mcc.norm();
  if (std::abs(mcc.determinant()) < 1e-14 * scale)
    throw SingularCoherenceBlock("coherence block of the generator is singular");
  Eigen::Matrix<cd, 4, 4> mpp = gen.M.topLeftCorner<4, 4>();
  Eigen::Matrix<cd, 4, 2> mpc = gen.M.topRightCorner<4, 2>();
  Eigen::Matrix<cd, 2, 4> mcp = gen.M.bottomLeftCorner<2, 4>();
  Eigen::Matrix<cd, 4, 4> a = mpp - mpc * mcc.inverse() * mcp;
  res.eliminated = a.real() / m.bath.J;
  return res;
}

SteadyState steady_state_closed_form(const Model& m) {
  const double n1 = m.occ.tilde_n1;
  const double n2 = m.occ.tilde_n2;
  const double d1 = m.occ.delta_n1;
  const double d2 = m.occ.delta_n2;
  const double r = m.eb.Omega / m.bath.J;

  SteadyState ss;
  ss.method = SteadyMethod::ClosedForm;
  Eigen::Vector4d p;
  cd coh;

  if (m.bath.statistics == Statistics::Bosonic) {
    const double u = n1 + n2 + 1.0;
    const double kappa = u / (u * u + 0.25 * r * r);
    const double s1 = d2 - d1 * (3.0 + 2.0 * n1 + 2.0 * n2);
    const double s2 = d1 - d2 * (3.0 + 2.0 * n1 + 2.0 * n2);
    const double s3 = d2 + d1 * (1.0 + 2.0 * n1 + 2.0 * n2);
    const double s4 = d1 + d2 * (1.0 + 2.0 * n1 + 2.0 * n2);
    const double norm = (1.0 + 2.0 * n1) * (1.0 + 2.0 * n2) - 4.0 * kappa * d1 * d2 * u;
    p[0] = ((1.0 + n1) * (1.0 + n2) - kappa * s1 * s2 / (4.0 * u)) / norm;
    p[1] = (n1 * (1.0 + n2) + kappa * s2 * s3 / (4.0 * u)) / norm;
    p[2] = (n2 * (1.0 + n1) + kappa * s1 * s4 / (4.0 * u)) / norm;
    p[3] = (n1 * n2 - kappa * s3 * s4 / (4.0 * u)) / norm;
    coh = (d1 * (1.0 + 2.0 * n2) + d2 * (1.0 + 2.0 * n1)) / (cd(2.0 * u, -r) * norm);
    ss.kappa = kappa;
    ss.s = {s1, s2, s3, s4};
    ss.norm = norm;
  } else {
    const double kappa = 1.0 / (1.0 + 0.25 * r * r);
    const double corr = 0.25 * kappa * (d1 + d2) * (d1 + d2);
    p[0] = (1.0 - n1) * (1.0 - n2) - corr;
    p[1] = n1 * (1.0 - n2) + corr;
    p[2] = n2 * (1.0 - n1) + corr;
    p[3] = n1 * n2 - corr;
    coh = (d1 + d2) / cd(2.0, -r);
    ss.kappa = kappa;
    ss.norm = 1.0;  // populations sum to 1 identically
  }

  ss.state.v << p[0], p[1], p[2], p[3], coh, std::conj(coh);
  return ss;
}

SteadyState steady_state_population_matrix(const Model& m, const Generator& gen) {
  const Eigen::Matrix4d a = closed_form_population_matrix(m);
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(a, Eigen::ComputeFullV);
  Eigen::Vector4d p = svd.matrixV().col(3);
  const double total = p.sum();
  if (std::abs(total) < 1e-12)
    throw NonUniqueSteadyState("population kernel vector has zero trace");
  p /= total;

  const Eigen::Vector2cd coh = eliminate_coherences(gen, p);
  SteadyState ss;
  ss.method = SteadyMethod::PopulationMatrix;
  ss.state.v << p[0], p[1], p[2], p[3], coh[0], coh[1];
  return ss;
}

SteadyState steady_state_nullspace(const Generator& gen) {
  Eigen::JacobiSVD<Matrix6c> svd(gen.M, Eigen::ComputeFullV);
  const auto& sing = svd.singularValues();
  const double scale = gen.M.norm();
  if (sing[4] < 1e-10 * scale)
    throw NonUniqueSteadyState("kernel of the generator is not one-dimensional");
  Vector6c v = svd.matrixV().col(5);
  const cd total = v[0] + v[1] + v[2] + v[3];
  if (std::abs(total) < 1e-12)
    throw NonUniqueSteadyState("kernel vector has zero trace");
  v /= total;

  SteadyState ss;
  ss.method = SteadyMethod::NullSpace;
  ss.state.v = v;
  return ss;
}

}  // namespace lgines
