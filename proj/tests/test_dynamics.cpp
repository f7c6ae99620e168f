#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "lgines/lgi.hpp"
#include "test_support.hpp"

using namespace lgines;
using cd = std::complex<double>;

TEST_CASE("propagation basics") {
  std::mt19937_64 rng(101);
  const Model m = testing::random_model(rng, Statistics::Bosonic, false);
  const Generator gen = build_block_generator(m);
  const LiouvilleState s0 = testing::random_sector_state(rng);

  SUBCASE("t = 0 is the identity") {
    const LiouvilleState s = propagate(gen, s0, 0.0);
    CHECK((s.v - s0.v).cwiseAbs().maxCoeff() < 1e-15);
  }

  SUBCASE("steady state is a fixed point") {
    const SteadyState ss = steady_state_nullspace(gen);
    const LiouvilleState st = propagate(gen, ss.state, 10.0 / m.eb.Omega);
    CHECK((st.v - ss.state.v).cwiseAbs().maxCoeff() < 1e-9);
  }

  SUBCASE("negative time rejected") {
    CHECK_THROWS_AS(propagate(gen, s0, -0.1), InvalidParams);
  }
}

TEST_CASE("matrix-exponential propagation matches direct integration") {
  // Independent route: RK4 on the operator-level master equation.
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 6; ++trial) {
    const Model m = testing::random_model(
        rng, trial % 2 ? Statistics::Bosonic : Statistics::Fermionic, trial % 3 == 0);
    const Generator gen = build_block_generator(m);
    const LiouvilleState s0 = testing::random_sector_state(rng);

    Eigen::Matrix4cd rho = s0.matrix();
    const double t_final = 1.5 / m.eb.Omega;
    const int steps = 2000;
    const double h = t_final / steps;
    for (int k = 0; k < steps; ++k) {
      const Eigen::Matrix4cd k1 = master_rhs(rho, m);
      const Eigen::Matrix4cd k2 = master_rhs(rho + 0.5 * h * k1, m);
      const Eigen::Matrix4cd k3 = master_rhs(rho + 0.5 * h * k2, m);
      const Eigen::Matrix4cd k4 = master_rhs(rho + h * k3, m);
      rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    const LiouvilleState expm_route = propagate(gen, s0, t_final);
    const LiouvilleState rk4_route = LiouvilleState::from_matrix(rho);
    CHECK((expm_route.v - rk4_route.v).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("vanishing coupling gives a pure coherence rotation") {
  const SystemParams sys(1.1, 0.9, 0.5);
  const Model m = Model::build(sys, BathParams::bosonic(1.0, 1.0, 1e-12));
  const Generator gen = build_block_generator(m);
  LiouvilleState s0;
  s0.v << 0.3, 0.3, 0.2, 0.2, cd(0.1, -0.05), cd(0.1, 0.05);
  const double t = 2.7;
  const LiouvilleState st = propagate(gen, s0, t);
  for (int j = 0; j < 4; ++j) CHECK(std::abs(st.v[j] - s0.v[j]) < 1e-9);
  const cd expected = s0.v[4] * std::exp(cd(0.0, m.eb.Omega * t));
  CHECK(std::abs(st.v[4] - expected) < 1e-9);
}

TEST_CASE("coherent-limit correlation function") {
  SUBCASE("decoupled qubits stay perfectly correlated") {
    const Eigenbasis eb = build_eigenbasis(SystemParams(1.5, 0.5, 1e-15));
    for (double t : {0.1, 0.7, 3.0, 12.0})
      CHECK(correlation_c0(t, eb.theta, eb.Omega, 0.6) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("full revival at one period") {
    CHECK(correlation_c0(2.0 * M_PI / 0.9, -0.5 * M_PI, 0.9, 0.7) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("half period anti-correlates a fully excited pair") {
    CHECK(correlation_c0(M_PI / 1.3, -0.5 * M_PI, 1.3, 1.0) ==
          doctest::Approx(-1.0).epsilon(1e-12));
  }
  SUBCASE("even in t") {
    for (double t : {0.3, 1.1, 2.9})
      CHECK(correlation_c0(t, -1.2, 0.8, 0.5) ==
            doctest::Approx(correlation_c0(-t, -1.2, 0.8, 0.5)).epsilon(1e-14));
  }
}

TEST_CASE("zeroth-order LGI functions") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 25; ++trial) {
    const Model m = testing::random_model(rng, Statistics::Bosonic, trial % 2 == 0);
    const SteadyState ss = steady_state_closed_form(m);
    const double s2 = std::pow(std::sin(m.eb.theta), 2);
    const double pop = ss.state.v[1].real() + ss.state.v[2].real();
    const double om = m.eb.Omega;

    const LgiZeroth at_first_max = lgi_zeroth(M_PI / (3.0 * om), m.eb.theta, om, ss.state);
    CHECK(at_first_max.Iplus == doctest::Approx(0.5 * s2 * pop + 1.0).epsilon(1e-12));

    // (9/2) sin^2(theta) (p22+p33) - 3; the -3 offset is the one consistent
    // with equality against max I+ at theta = -pi/2, p22+p33 = 1.
    const LgiZeroth at_minus_max =
        lgi_zeroth(2.0 * M_PI / (3.0 * om), m.eb.theta, om, ss.state);
    CHECK(at_minus_max.Iminus == doctest::Approx(4.5 * s2 * pop - 3.0).epsilon(1e-12));
    CHECK(at_minus_max.Iminus <= at_first_max.Iplus + 1e-12);

    // Periodicity of the coherent forms.
    const LgiZeroth a = lgi_zeroth(0.37 / om, m.eb.theta, om, ss.state);
    const LgiZeroth b = lgi_zeroth(0.37 / om + 2.0 * M_PI / om, m.eb.theta, om, ss.state);
    CHECK(a.Iplus == doctest::Approx(b.Iplus).epsilon(1e-9));
    CHECK(a.Iminus == doctest::Approx(b.Iminus).epsilon(1e-9));
  }
}

TEST_CASE("equilibrium two-time function never violates at theta = -pi/2") {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> lam(0.05, 1.2);
  for (int trial = 0; trial < 25; ++trial) {
    const SystemParams sys(1.0, 1.0, lam(rng));
    const BathParams bath =
        testing::random_bath(rng, trial % 2 ? Statistics::Bosonic : Statistics::Fermionic, true);
    const Model m = Model::build(sys, bath);
    const SteadyState ss = steady_state_closed_form(m);
    const double om = m.eb.Omega;
    // Maximum over t sits at t = pi/Omega; equals 1 - 4 rho44 there.
    const LgiZeroth z = lgi_zeroth(M_PI / om, m.eb.theta, om, ss.state);
    CHECK(z.I2 <= 1.0 + 1e-12);
    CHECK(z.I2 == doctest::Approx(1.0 - 4.0 * ss.state.v[3].real()).epsilon(1e-12));
  }
}

TEST_CASE("first-order corrections at the zeroth-order maximum are negative") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    const bool bosonic = trial % 2 == 0;
    const Model m = testing::random_model(
        rng, bosonic ? Statistics::Bosonic : Statistics::Fermionic, true);
    const SteadyState ss = steady_state_closed_form(m);
    const double tstar = M_PI / (3.0 * m.eb.Omega);
    const double corr = lgi_first_order(bosonic ? Regime::BosonicEq : Regime::FermionicEq,
                                        tstar, m, ss.state);
    CHECK(corr < 0.0);
    const double s2 = std::pow(std::sin(m.eb.theta), 2);
    const double pop = ss.state.v[1].real() + ss.state.v[2].real();
    double expected = -(4.0 * M_PI * m.bath.J / (3.0 * m.eb.Omega)) * s2 * pop;
    if (bosonic) expected *= m.occ.n1_w1 + m.occ.n1_w2 + 1.0;
    CHECK(corr == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("first-order closure matches exact dynamics at small coupling") {
  // Equilibrium parameter point: lambda = omega_bar, J = 0.005, T = 1.5.
  const SystemParams sys(1.0, 1.0, 1.0);
  double residual[2] = {0.0, 0.0};
  for (bool bosonic : {true, false}) {
    const BathParams bath = bosonic ? BathParams::bosonic(1.5, 1.5, 0.005)
                                    : BathParams::fermionic(1.5, 1.5, 1.0, 1.0, 0.005);
    const Model m = Model::build(sys, bath);
    const Generator gen = build_block_generator(m);
    const SteadyState ss = steady_state_closed_form(m);
    const Observable obs = observable_sigma_z1(m.eb);
    const Regime regime = bosonic ? Regime::BosonicEq : Regime::FermionicEq;

    double max_err = 0.0;
    double hi = -1e300;
    double lo = 1e300;
    for (int k = 1; k <= 40; ++k) {
      const double t = k * M_PI / (40.0 * m.eb.Omega);
      const LgiValues exact = lgi_functions(gen, obs, ss.state, t);
      const LgiZeroth zeroth = lgi_zeroth(t, m.eb.theta, m.eb.Omega, ss.state);
      const double first = lgi_first_order(regime, t, m, ss.state);
      max_err = std::max(max_err, std::abs(exact.Iplus - zeroth.Iplus - first));
      hi = std::max(hi, exact.Iplus);
      lo = std::min(lo, exact.Iplus);
    }
    CHECK(max_err < 0.02 * (hi - lo));
    residual[bosonic ? 0 : 1] = max_err;
  }
  // Bounded fermionic occupations make the expansion tighter.
  CHECK(residual[1] < residual[0]);
}

TEST_CASE("regime gating") {
  const Model detuned = Model::build(SystemParams(1.3, 0.7, 0.5),
                                     BathParams::bosonic(0.5, 1.5, 0.01));
  const SteadyState ss = steady_state_closed_form(detuned);
  CHECK_THROWS_AS(lgi_first_order(Regime::BosonicNoneq, 0.3, detuned, ss.state),
                  RegimeMismatch);
  CHECK_THROWS_AS(lgi_first_order(Regime::BosonicEq, 0.3, detuned, ss.state),
                  RegimeMismatch);
  CHECK_THROWS_AS(lgi_first_order(Regime::FermionicEq, 0.3, detuned, ss.state),
                  StatisticsMismatch);
  CHECK_THROWS_AS(mlgi_approximation(Regime::FermionicNoneq, detuned), StatisticsMismatch);
}

TEST_CASE("nonequilibrium first-order closure evaluates its printed maximum") {
  const Model m = Model::build(SystemParams(1.0, 1.0, 1.0),
                               BathParams::bosonic(0.4, 1.0, 0.005));
  const SteadyState ss = steady_state_closed_form(m);
  const double lam = m.sys.lambda;
  const double t = M_PI / (3.0 * lam);
  const double value = lgi_first_order(Regime::BosonicNoneq, t, m, ss.state);
  const double pop = ss.state.v[1].real() + ss.state.v[2].real();
  const double expected =
      -(4.0 * M_PI * m.bath.J / (3.0 * lam)) * pop *
          (m.occ.tilde_n1 + m.occ.tilde_n2 + 1.0) -
      std::sqrt(3.0) * m.bath.J / lam * (m.occ.delta_n1 + m.occ.delta_n2);
  CHECK(value == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("first-order closures have the parity of their trigonometric forms") {
  const Model m = Model::build(SystemParams(1.0, 1.0, 0.9),
                               BathParams::bosonic(0.5, 1.4, 0.008));
  const SteadyState ss = steady_state_closed_form(m);
  for (double t : {0.4, 1.3, 2.8}) {
    const double plus = lgi_first_order(Regime::BosonicNoneq, t, m, ss.state);
    const double minus = lgi_first_order(Regime::BosonicNoneq, -t, m, ss.state);
    CHECK(plus == doctest::Approx(-minus).epsilon(1e-12));
  }
}

TEST_CASE("first-order correction vanishes without excited population or bias") {
  const Model m = Model::build(SystemParams(1.0, 1.0, 0.9),
                               BathParams::bosonic(0.5, 0.5, 0.008));
  const LiouvilleState ground = LiouvilleState::populations(1.0, 0.0, 0.0, 0.0);
  CHECK(lgi_first_order(Regime::BosonicEq, 0.7, m, ground) == doctest::Approx(0.0));
}

TEST_CASE("approximate MLGI closed forms") {
  SUBCASE("equilibrium limit of the nonequilibrium form") {
    const SystemParams sys(1.0, 1.0, 1.0);
    const Model eq = Model::build(sys, BathParams::bosonic(0.4, 0.4, 0.005));
    const MlgiApprox noneq = mlgi_approximation(Regime::BosonicNoneq, eq);
    const MlgiApprox plain = mlgi_approximation(Regime::BosonicEq, eq);
    CHECK(noneq.value == doctest::Approx(plain.value).epsilon(1e-12));
  }

  SUBCASE("low mean temperature favors the hotter second bath") {
    const SystemParams sys(1.0, 1.0, 1.0);
    const Model hot2 = Model::build(sys, BathParams::bosonic(0.25, 0.55, 0.005));
    const Model hot1 = Model::build(sys, BathParams::bosonic(0.55, 0.25, 0.005));
    const double plus = mlgi_approximation(Regime::BosonicNoneq, hot2).value;
    const double minus = mlgi_approximation(Regime::BosonicNoneq, hot1).value;
    CHECK(plus > minus);
  }

  SUBCASE("fermionic resonance population sum peaks at zero bias") {
    double best = -1.0;
    double at_zero = 0.0;
    for (int k = -20; k <= 20; ++k) {
      const double dmu = 0.1 * k;
      const double value = fermionic_resonance_population_sum(1.0, 0.4, dmu);
      best = std::max(best, value);
      if (k == 0) at_zero = value;
      if (k > 0)
        CHECK(fermionic_resonance_population_sum(1.0, 0.4, dmu) <
              fermionic_resonance_population_sum(1.0, 0.4, dmu - 0.1) + 1e-12);
    }
    CHECK(best == doctest::Approx(at_zero));
  }

  SUBCASE("resonance formula matches the closed-form populations") {
    // mu_mean = omega_bar, symmetric qubits, small J.
    for (double dmu : {0.0, 0.6, -1.0}) {
      const Model m = Model::build(
          SystemParams(1.0, 1.0, 1.0),
          BathParams::fermionic(0.4, 0.4, 1.0 - 0.5 * dmu, 1.0 + 0.5 * dmu, 1e-4));
      const SteadyState ss = steady_state_closed_form(m);
      const double pop = ss.state.v[1].real() + ss.state.v[2].real();
      CHECK(pop == doctest::Approx(fermionic_resonance_population_sum(1.0, 0.4, dmu))
                       .epsilon(1e-6));
    }
  }
}

TEST_CASE("commuting split truncates to a quadratic Zassenhaus residual") {
  const Model m = Model::build(SystemParams(1.0, 1.0, 1.0),
                               BathParams::bosonic(1.5, 1.5, 0.005));
  const Generator gen = build_block_generator(m);
  const double nmax = std::max({m.occ.n1_w1, m.occ.n1_w2, m.occ.n2_w1, m.occ.n2_w2});

  std::vector<double> xs, rs;
  for (int k = 1; k <= 16; ++k) {
    const double t = k * 2.0 * M_PI / (16.0 * m.eb.Omega);
    const Matrix6c exact = (gen.M * t).exp();
    const Matrix6c first =
        (Matrix6c::Identity() + gen.MJ.cast<cd>() * t) * (gen.M0 * t).exp();
    rs.push_back((exact - first).norm());
    xs.push_back(std::pow(m.bath.J * t * nmax, 2));
  }
  // Least-squares slope of r against (J t n)^2; all samples must follow it.
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    num += rs[i] * xs[i];
    den += xs[i] * xs[i];
  }
  const double c = num / den;
  CHECK(c > 0.0);
  for (size_t i = 0; i < xs.size(); ++i) CHECK(rs[i] <= 2.5 * c * xs[i] + 1e-12);
}

TEST_CASE("trust indicator scales with time, coupling and occupation") {
  const Model m = Model::build(SystemParams(1.0, 1.0, 1.0),
                               BathParams::bosonic(1.5, 1.5, 0.005));
  const double nmax = std::max({m.occ.n1_w1, m.occ.n1_w2, m.occ.n2_w1, m.occ.n2_w2});
  CHECK(first_order_trust(m, 2.0) == doctest::Approx(2.0 * 0.005 * nmax));
}
