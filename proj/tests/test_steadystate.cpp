#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lgines/steadystate.hpp"
#include "test_support.hpp"

using namespace lgines;
using cd = std::complex<double>;

namespace {

double state_distance(const SteadyState& a, const SteadyState& b) {
  return (a.state.v - b.state.v).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("three methods agree on random parameter sets") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const Model m = testing::random_model(
        rng, trial % 2 ? Statistics::Bosonic : Statistics::Fermionic, trial % 4 == 0);
    const Generator gen = build_block_generator(m);
    const SteadyState closed = steady_state_closed_form(m);
    const SteadyState popmat = steady_state_population_matrix(m, gen);
    const SteadyState null = steady_state_nullspace(gen);
    CHECK(state_distance(closed, null) < 1e-9);
    CHECK(state_distance(closed, popmat) < 1e-9);
    CHECK(state_distance(popmat, null) < 1e-9);

    // All three annihilated by the generator.
    for (const SteadyState* ss : {&closed, &popmat, &null})
      CHECK((gen.M * ss->state.v).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("closed-form population matrix equals numerical elimination") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const Model m = testing::random_model(
        rng, trial % 2 ? Statistics::Bosonic : Statistics::Fermionic, trial % 5 == 0);
    const Generator gen = build_block_generator(m);
    const PopulationMatrixResult pm = population_matrix(m, gen);
    CHECK((pm.closed_form - pm.eliminated).cwiseAbs().maxCoeff() < 1e-10);
    // Probability conservation: columns sum to zero.
    for (int c = 0; c < 4; ++c) CHECK(std::abs(pm.closed_form.col(c).sum()) < 1e-12);
  }
}

TEST_CASE("equilibrium population matrix reduces to the bare rate matrix") {
  const Model m = Model::build(SystemParams(1.0, 1.3, 0.7),
                               BathParams::bosonic(0.9, 0.9, 0.01));
  const Generator gen = build_block_generator(m);
  const PopulationMatrixResult pm = population_matrix(m, gen);
  const double n1 = m.occ.tilde_n1;
  const double n2 = m.occ.tilde_n2;
  Eigen::Matrix4d expected;
  expected << -2.0 * (n1 + n2), 2.0 * (n1 + 1.0), 2.0 * (n2 + 1.0), 0.0,
      2.0 * n1, -2.0 * (n1 + n2 + 1.0), 0.0, 2.0 * (n2 + 1.0),
      2.0 * n2, 0.0, -2.0 * (n1 + n2 + 1.0), 2.0 * (n1 + 1.0),
      0.0, 2.0 * n2, 2.0 * n1, -2.0 * (n1 + n2 + 2.0);
  CHECK((pm.closed_form - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("bosonic equilibrium steady state is canonical") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const Model m = testing::random_model(rng, Statistics::Bosonic, true);
    const SteadyState ss = steady_state_closed_form(m);
    CHECK(ss.state.v[4] == cd(0.0));

    double z = 0.0;
    Eigen::Vector4d gibbs;
    for (int j = 0; j < 4; ++j) {
      gibbs[j] = std::exp(-m.eb.energies[j] / m.bath.T1);
      z += gibbs[j];
    }
    gibbs /= z;
    for (int j = 0; j < 4; ++j)
      CHECK(std::abs(ss.state.v[j].real() - gibbs[j]) < 1e-9);
  }
}

TEST_CASE("fermionic equilibrium steady state is grand canonical") {
  std::mt19937_64 rng(73);
  const double particle_number[4] = {0.0, 1.0, 1.0, 2.0};
  for (int trial = 0; trial < 50; ++trial) {
    const Model m = testing::random_model(rng, Statistics::Fermionic, true);
    const SteadyState ss = steady_state_closed_form(m);
    CHECK(ss.state.v[4] == cd(0.0));

    double z = 0.0;
    Eigen::Vector4d weights;
    for (int j = 0; j < 4; ++j) {
      weights[j] =
          std::exp(-(m.eb.energies[j] - m.bath.mu1 * particle_number[j]) / m.bath.T1);
      z += weights[j];
    }
    weights /= z;
    for (int j = 0; j < 4; ++j)
      CHECK(std::abs(ss.state.v[j].real() - weights[j]) < 1e-9);
  }
}

TEST_CASE("temperature limits of the bosonic equilibrium state") {
  const SystemParams sys(1.0, 1.0, 1.0);
  const SteadyState cold =
      steady_state_closed_form(Model::build(sys, BathParams::bosonic(1e-3, 1e-3, 0.005)));
  CHECK(cold.state.v[0].real() >= 1.0 - 1e-6);

  const SteadyState hot =
      steady_state_closed_form(Model::build(sys, BathParams::bosonic(1e3, 1e3, 0.005)));
  for (int j = 0; j < 4; ++j) CHECK(std::abs(hot.state.v[j].real() - 0.25) < 1e-3);
}

TEST_CASE("fermionic high chemical potential fills both dots") {
  const Model m = Model::build(SystemParams(1.0, 1.0, 0.8),
                               BathParams::fermionic(0.05, 0.05, 10.0, 10.0, 0.01));
  const SteadyState ss = steady_state_closed_form(m);
  CHECK(ss.state.v[3].real() > 1.0 - 1e-6);
}

TEST_CASE("nonequilibrium coherence direction and bounds") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 60; ++trial) {
    const Model m = testing::random_model(rng, Statistics::Fermionic, false);
    const SteadyState ss = steady_state_closed_form(m);
    const double dsum = m.occ.delta_n1 + m.occ.delta_n2;
    if (std::abs(dsum) > 1e-12) {
      CHECK(ss.state.v[4].real() * dsum > 0.0);  // Re rho23 aligned with dn1+dn2
    }
    // Populations normalized and Cauchy-Schwarz bounded coherence.
    double sum = 0.0;
    for (int j = 0; j < 4; ++j) {
      const double p = ss.state.v[j].real();
      CHECK(p >= -1e-9);
      CHECK(p <= 1.0 + 1e-9);
      sum += p;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::norm(ss.state.v[4]) <=
          ss.state.v[1].real() * ss.state.v[2].real() + 1e-9);
  }
}

TEST_CASE("bosonic nonequilibrium corrections scale as J^2") {
  const SystemParams sys(1.0, 1.0, 0.9);
  auto populations = [&](double j_coupling) {
    const Model m = Model::build(sys, BathParams::bosonic(0.6, 1.8, j_coupling));
    return steady_state_closed_form(m);
  };
  // kappa -> 0 limit keeps only the occupation products.
  const Model ref = Model::build(sys, BathParams::bosonic(0.6, 1.8, 1e-7));
  const SteadyState limit = steady_state_closed_form(ref);

  const SteadyState full = populations(0.02);
  const SteadyState half = populations(0.01);
  for (int jj = 0; jj < 4; ++jj) {
    const double dev_full = std::abs(full.state.v[jj].real() - limit.state.v[jj].real());
    const double dev_half = std::abs(half.state.v[jj].real() - limit.state.v[jj].real());
    if (dev_full > 1e-10) CHECK(dev_full / dev_half == doctest::Approx(4.0).epsilon(0.1));
  }
}

TEST_CASE("fermionic populations symmetric under chemical potential exchange") {
  const SystemParams sys(1.0, 1.0, 0.6);
  const Model a = Model::build(sys, BathParams::fermionic(0.3, 0.3, 0.2, 1.7, 0.02));
  const Model b = Model::build(sys, BathParams::fermionic(0.3, 0.3, 1.7, 0.2, 0.02));
  const SteadyState sa = steady_state_closed_form(a);
  const SteadyState sb = steady_state_closed_form(b);
  for (int j = 0; j < 4; ++j)
    CHECK(sa.state.v[j].real() == doctest::Approx(sb.state.v[j].real()).epsilon(1e-12));
  // The coherence flips with the bias direction.
  CHECK(sa.state.v[4].real() == doctest::Approx(-sb.state.v[4].real()).epsilon(1e-12));
}

TEST_CASE("mirrored model maps the steady state onto itself") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    const SystemParams sys = testing::random_system(rng);
    const BathParams bath = testing::random_bath(rng, Statistics::Bosonic, false);
    const SystemParams sys_m(sys.omega2, sys.omega1, sys.lambda);
    const BathParams bath_m = BathParams::bosonic(bath.T2, bath.T1, bath.J);
    const SteadyState ss = steady_state_closed_form(Model::build(sys, bath));
    const SteadyState ss_m = steady_state_closed_form(Model::build(sys_m, bath_m));
    for (int j = 0; j < 4; ++j)
      CHECK(ss.state.v[j].real() == doctest::Approx(ss_m.state.v[j].real()).epsilon(1e-10));
    CHECK(ss.state.v[4].real() == doctest::Approx(-ss_m.state.v[4].real()).epsilon(1e-10));
  }
}
