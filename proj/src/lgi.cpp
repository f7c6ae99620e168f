#include "lgines/lgi.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

namespace lgines {

using cd = std::complex<double>;

Observable observable_sigma_z1(const Eigenbasis& eb) {
  Eigen::Matrix4d q_local = Eigen::Matrix4d::Zero();
  q_local.diagonal() << 1.0, -1.0, 1.0, -1.0;  // (gg, eg, ge, ee)
  Observable obs;
  obs.Q = eb.U.transpose() * q_local * eb.U;
  obs.Pplus = 0.5 * (Eigen::Matrix4d::Identity() + obs.Q);
  obs.Pminus = 0.5 * (Eigen::Matrix4d::Identity() - obs.Q);
  return obs;
}

LiouvilleState measure_superop(const Observable& obs, const LiouvilleState& state) {
  const Eigen::Matrix4cd rho = state.matrix();
  const Eigen::Matrix4cd q = obs.Q.cast<cd>();
  return LiouvilleState::from_matrix(0.5 * (q * rho + rho * q));
}

namespace {

double trace_q(const Eigen::Matrix4d& q, const LiouvilleState& s) {
  cd tr = q(0, 0) * s.v[0] + q(1, 1) * s.v[1] + q(2, 2) * s.v[2] + q(3, 3) * s.v[3] +
          q(1, 2) * s.v[5] + q(2, 1) * s.v[4];
  return tr.real();
}

cd trace_q_complex(const Eigen::Matrix4d& q, const Vector6c& v) {
  return q(0, 0) * v[0] + q(1, 1) * v[1] + q(2, 2) * v[2] + q(3, 3) * v[3] +
         q(1, 2) * v[5] + q(2, 1) * v[4];
}

}  // namespace

CorrelationResult correlation_full(const Generator& gen, const Observable& obs,
                                   const LiouvilleState& rho0, double t) {
  const Matrix6c prop = propagator(gen, t);
  const LiouvilleState measured = measure_superop(obs, rho0);
  const Vector6c evolved = prop * measured.v;

  // Naive two-point function Tr(Q e^{Mt} Q rho); its imaginary part measures
  // the noncommutativity of Q(t) with Q(0).
  const Eigen::Matrix4cd qrho = obs.Q.cast<cd>() * rho0.matrix();
  const Vector6c naive = prop * LiouvilleState::from_matrix(qrho).v;

  CorrelationResult out;
  out.value = trace_q_complex(obs.Q, evolved).real();
  out.imag_naive = trace_q_complex(obs.Q, naive).imag();
  return out;
}

double correlation(const Generator& gen, const Observable& obs,
                   const LiouvilleState& rho0, double t) {
  return correlation_full(gen, obs, rho0, t).value;
}

LgiValues lgi_functions(const Generator& gen, const Observable& obs,
                        const LiouvilleState& steady, double t) {
  const double ct = correlation(gen, obs, steady, t);
  const double c2t = correlation(gen, obs, steady, 2.0 * t);
  LgiValues out;
  out.Iplus = 2.0 * ct - c2t;
  out.Iminus = -2.0 * ct - c2t;
  out.I2 = 2.0 * trace_q(obs.Q, steady) - ct;
  return out;
}

namespace {

struct GoldenResult {
  double t;
  double value;
};

// Golden-section maximization on [a, b]; f assumed unimodal on the bracket.
template <typename F>
GoldenResult golden_max(F&& f, double a, double b, double tol) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  const double tm = 0.5 * (a + b);
  return {tm, f(tm)};
}

}  // namespace

LgiReport mlgi(const Generator& gen, const Observable& obs,
               const LiouvilleState& initial, const MlgiOptions& opts) {
  const double omega = gen.Omega > 0.0 ? gen.Omega : 1.0;
  const double t_max = opts.t_max > 0.0 ? opts.t_max : 4.0 * M_PI / omega;
  const int n = std::max(opts.grid, 8);
  const double tol = opts.refine_tol > 0.0 ? opts.refine_tol : 1e-8 / omega;
  const double dt = t_max / n;

  const Eigen::Matrix4cd rho = initial.matrix();
  const Vector6c bplus =
      LiouvilleState::from_matrix(obs.Pplus.cast<cd>() * rho * obs.Pplus.cast<cd>()).v;
  const Vector6c bminus =
      LiouvilleState::from_matrix(obs.Pminus.cast<cd>() * rho * obs.Pminus.cast<cd>()).v;
  const double pplus = (bplus[0] + bplus[1] + bplus[2] + bplus[3]).real();
  const double pminus = (bminus[0] + bminus[1] + bminus[2] + bminus[3]).real();
  const double mean_q = trace_q(obs.Q, initial);

  // One short-step propagator; C(k dt) from iterated branch vectors up to 2 t_max.
  const Matrix6c step = propagator(gen, dt);
  std::vector<double> corr(2 * n + 1);
  std::vector<bool> flags(n + 1, false);
  Vector6c vp = bplus;
  Vector6c vm = bminus;
  corr[0] = trace_q_complex(obs.Q, vp - vm).real();
  for (int k = 1; k <= 2 * n; ++k) {
    vp = step * vp;
    vm = step * vm;
    corr[k] = trace_q_complex(obs.Q, vp - vm).real();
    if (k <= n) {
      // Post-measurement conditional branches are genuine states; monitor them.
      bool warn = false;
      if (pplus > 1e-12)
        warn |= LiouvilleState::from_vector(vp / pplus).min_eigenvalue() < -1e-9;
      if (pminus > 1e-12)
        warn |= LiouvilleState::from_vector(vm / pminus).min_eigenvalue() < -1e-9;
      flags[k] = warn;
    }
  }

  LgiReport rep;
  rep.t_grid.resize(n);
  rep.I2.resize(n);
  rep.Iplus.resize(n);
  rep.Iminus.resize(n);
  rep.positivity_flags.assign(flags.begin() + 1, flags.end());
  for (int k = 1; k <= n; ++k) {
    rep.t_grid[k - 1] = k * dt;
    rep.Iplus[k - 1] = 2.0 * corr[k] - corr[2 * k];
    rep.Iminus[k - 1] = -2.0 * corr[k] - corr[2 * k];
    rep.I2[k - 1] = 2.0 * mean_q - corr[k];
  }
  rep.positivity_warning =
      std::any_of(flags.begin(), flags.end(), [](bool b) { return b; });

  // I+(0) = 1 anchors the maximum; the minimum of the report is 0.
  double best = 1.0;
  double best_t = 0.0;
  int best_which = 0;

  const auto exact = [&](int which, double t) {
    const LgiValues v = lgi_functions(gen, obs, initial, t);
    return which == 0 ? v.Iplus : (which == 1 ? v.Iminus : 0.5 * v.I2);
  };

  // t -> 0 limits: C(0) = Tr(rho) for a normalized state.
  const double f0[3] = {corr[0], -3.0 * corr[0], 0.5 * (2.0 * mean_q - corr[0])};

  for (int which = 0; which < 3; ++which) {
    const std::vector<double>& f =
        which == 0 ? rep.Iplus : (which == 1 ? rep.Iminus : rep.I2);
    const double scale = which == 2 ? 0.5 : 1.0;
    for (int k = 0; k < n; ++k) {
      const double prev = k == 0 ? f0[which] : scale * f[k - 1];
      const double next = k == n - 1 ? -1e300 : scale * f[k + 1];
      const double here = scale * f[k];
      if (here >= prev && here >= next) {
        const double a = k == 0 ? dt * 1e-6 : rep.t_grid[k - 1];
        const double b = k == n - 1 ? rep.t_grid[k] : rep.t_grid[k + 1];
        const GoldenResult g = golden_max([&](double t) { return exact(which, t); }, a, b, tol);
        if (g.value > best) {
          best = g.value;
          best_t = g.t;
          best_which = which;
        }
      }
    }
  }

  rep.mlgi = best - 1.0;
  rep.t_star = best_t;
  rep.argmax_which = best_which;
  rep.violated = rep.mlgi > 1e-9;
  rep.trust = 0.0;  // caller fills via first_order_trust when a Model is at hand
  return rep;
}

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Generator on system (x) one ancilla: W64[E_s (x) E_a] = W16[E_s] (x) E_a.
// Hilbert index h = 2 s + a, vec index 8 r + c.
Eigen::MatrixXcd extend_to_ancilla(const Matrix16c& L) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(64, 64);
  for (int s = 0; s < 4; ++s)
    for (int sp = 0; sp < 4; ++sp)
      for (int a = 0; a < 2; ++a)
        for (int ap = 0; ap < 2; ++ap) {
          const int col = 8 * (2 * s + a) + (2 * sp + ap);
          for (int u = 0; u < 4; ++u)
            for (int up = 0; up < 4; ++up) {
              const cd w = L(4 * u + up, 4 * s + sp);
              if (w != 0.0) out(8 * (2 * u + a) + (2 * up + ap), col) += w;
            }
        }
  return out;
}

Eigen::MatrixXcd vec_to_mat(const Eigen::VectorXcd& v, int dim) {
  Eigen::MatrixXcd m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = v[dim * r + c];
  return m;
}

Eigen::VectorXcd mat_to_vec(const Eigen::MatrixXcd& m) {
  const int dim = static_cast<int>(m.rows());
  Eigen::VectorXcd v(dim * dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) v[dim * r + c] = m(r, c);
  return v;
}

// Controlled flip of the target ancilla when the system lies in the "keep"
// complement: unflipped ancilla <=> outcome q.
Eigen::MatrixXcd measurement_gate(const Observable& obs, int q) {
  const Eigen::Matrix4cd keep = (q > 0 ? obs.Pplus : obs.Pminus).cast<cd>();
  const Eigen::Matrix4cd flip = (q > 0 ? obs.Pminus : obs.Pplus).cast<cd>();
  Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd sx;
  sx << 0.0, 1.0, 1.0, 0.0;
  return kron(keep, id2) + kron(flip, sx);
}

}  // namespace

InmResult inm_correlation(const Observable& obs, const InmEvolution& evolution,
                          const LiouvilleState& rho0, double t) {
  if (t < 0.0) throw InvalidParams("INM circuit requires t >= 0");
  Eigen::Matrix2cd anc0 = Eigen::Matrix2cd::Zero();
  anc0(0, 0) = 1.0;

  // Precompute the evolution map on the system (x) ancilla-1 space.
  Eigen::MatrixXcd prop64;
  Eigen::Matrix4cd u4;
  const bool coherent = std::holds_alternative<CoherentEvolution>(evolution);
  if (coherent) {
    const auto& ev = std::get<CoherentEvolution>(evolution);
    u4 = Eigen::Matrix4cd::Zero();
    for (int k = 0; k < 4; ++k) u4(k, k) = std::exp(cd(0.0, -ev.energies[k] * t));
  } else {
    prop64 = (extend_to_ancilla(std::get<LiouvilleEvolution>(evolution).L) * t).exp();
  }

  InmResult res;
  res.correlation = 0.0;
  const int signs[2] = {+1, -1};
  int slot = 0;
  for (int q0 : signs) {
    // Stage 1: entangle ancilla 1 with the first outcome.
    const Eigen::MatrixXcd g1 = measurement_gate(obs, q0);
    Eigen::MatrixXcd rho8 =
        g1 * kron(rho0.matrix(), anc0) * g1.adjoint();

    // Open evolution of the system factor only.
    if (coherent) {
      const Eigen::MatrixXcd u8 = kron(u4, Eigen::Matrix2cd::Identity());
      rho8 = u8 * rho8 * u8.adjoint();
    } else {
      rho8 = vec_to_mat(prop64 * mat_to_vec(rho8), 8);
    }

    for (int q1 : signs) {
      // Stage 2: fresh ancilla 2, then read both ancillas; flipped branches
      // are discarded, so only (a1, a2) = (0, 0) is kept.
      Eigen::MatrixXcd rho16 = kron(rho8, anc0);
      const Eigen::Matrix4cd keep = (q1 > 0 ? obs.Pplus : obs.Pminus).cast<cd>();
      const Eigen::Matrix4cd flip = (q1 > 0 ? obs.Pminus : obs.Pplus).cast<cd>();
      Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
      Eigen::Matrix2cd sx;
      sx << 0.0, 1.0, 1.0, 0.0;
      const Eigen::MatrixXcd g2 = kron(kron(keep, id2), id2) + kron(kron(flip, id2), sx);
      rho16 = g2 * rho16 * g2.adjoint();

      cd p = 0.0;
      for (int s = 0; s < 4; ++s) {
        const int idx = 4 * s;  // a1 = 0, a2 = 0
        p += rho16(idx, idx);
      }
      res.joint[slot++] = p.real();
      res.correlation += q0 * q1 * p.real();
    }
  }
  return res;
}

InmResult inm_correlation(const Observable&, const Generator&, const LiouvilleState&,
                          double) {
  throw UnsupportedEvolution(
      "the 6-dim block generator cannot evolve system-ancilla correlations; "
      "pass a coherent evolution or the full 16-dim Liouvillian");
}

}  // namespace lgines
