#include <doctest.h>

#include <cmath>
#include <numbers>

#include <loschmidt/errors.hpp>
#include <loschmidt/estimators.hpp>
#include <loschmidt/presets.hpp>
#include <loschmidt/qgrid.hpp>

#include "oracles.hpp"

using namespace loschmidt;
using cd = std::complex<double>;

namespace {

EstimatorConfig config_for(const Scenario& sc, std::size_t n_traj, std::uint64_t seed, std::size_t n_steps) {
  EstimatorConfig c;
  c.n_traj = n_traj;
  c.seed = seed;
  c.tau = sc.tau;
  c.n_steps = n_steps;
  c.hbar = sc.hbar;
  return c;
}

// Largest |f - exact| / (3 stderr + floor) over the series.
double worst_ratio(const FidelitySeries& f, const FidelitySeries& exact, double floor) {
  double w = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    w = std::max(w, std::abs(f.values[n] - exact.values[n]) / (3.0 * f.std_error[n] + floor));
  }
  return w;
}

HamiltonianPair linear_perturbation_pair() {
  const auto h1 = SeparableHamiltonian::one_dim(quadratic_kinetic(), CoordinateFunction(Polynomial{0, -0.5, 0.5, 0.02}));
  const auto h2 = SeparableHamiltonian::one_dim(quadratic_kinetic(), CoordinateFunction(Polynomial{0.1, 0.5, 0.5, 0.02}));
  return make_pair(h1, h2);
}

}  // namespace

TEST_CASE("config validation") {
  EstimatorConfig c;
  CHECK_NOTHROW(c.validate());
  auto bad = [](auto mutate) {
    EstimatorConfig e;
    mutate(e);
    return e;
  };
  CHECK_THROWS_AS(bad([](EstimatorConfig& e) { e.n_traj = 0; }).validate(), PreconditionError);
  CHECK_THROWS_AS(bad([](EstimatorConfig& e) { e.tau = 0.0; }).validate(), PreconditionError);
  CHECK_THROWS_AS(bad([](EstimatorConfig& e) { e.hbar = -1.0; }).validate(), PreconditionError);
  CHECK_THROWS_AS(bad([](EstimatorConfig& e) { e.proposal_width_factor = 0.0; }).validate(), PreconditionError);
  CHECK_THROWS_AS(bad([](EstimatorConfig& e) { e.degenerate_a_threshold = 0.0; }).validate(), PreconditionError);
  CHECK_THROWS_AS(bad([](EstimatorConfig& e) { e.batches = 0; }).validate(), PreconditionError);
  CHECK(parse_f2_sampler("auto") == F2Sampler::automatic);
  CHECK(parse_reference("h_prime") == Reference::h_prime);
  CHECK_THROWS_AS(parse_reference("midpoint"), PreconditionError);
}

TEST_CASE("zero perturbation short-circuits every estimator to one") {
  const auto h = SeparableHamiltonian::one_dim(quadratic_kinetic(), harmonic_potential(1.0));
  const auto pair = make_pair(h, h);
  const auto s = InitialState::gaussian(0.3, 0.1, 1.0);
  EstimatorConfig c;
  c.n_steps = 30;
  for (const auto& f : {f0(s, pair, c), f1_dr(s, pair, c), f2_mc(s, pair, c), f2_gaussian_chain(s, pair, c)}) {
    CAPTURE(f.meta.estimator);
    REQUIRE(f.size() == 31);
    for (std::size_t n = 0; n <= 30; ++n) {
      CHECK(f.values[n] == cd(1.0, 0.0));
      CHECK(f.std_error[n] == 0.0);
    }
  }
}

TEST_CASE("N = 0 gives one exactly") {
  const auto sc = load("ho_diff_k");
  auto c = config_for(sc, 100, 1, 0);
  for (const auto& f : {f0(sc.state, sc.pair, c), f1_dr(sc.state, sc.pair, c), f2_mc(sc.state, sc.pair, c)}) {
    REQUIRE(f.size() == 1);
    CHECK(f.values[0] == cd(1.0, 0.0));
  }
}

TEST_CASE("f0 for dH = q is the Gaussian characteristic function") {
  const auto zero_t = CoordinateFunction(Polynomial{});
  const auto pair = make_pair(SeparableHamiltonian::one_dim(zero_t, CoordinateFunction(Polynomial{0, -0.5})),
                              SeparableHamiltonian::one_dim(zero_t, CoordinateFunction(Polynomial{0, 0.5})));
  const auto s = InitialState::gaussian(0.0, 0.0, 1.0);
  EstimatorConfig c;
  c.n_traj = 100000;
  c.seed = 11;
  c.tau = 0.05;
  c.n_steps = 20;
  const auto f = f0(s, pair, c);
  // exp(-t^2/4) at t = 1, independently by quadrature over rho_W / h.
  const double quad = oracle::simpson(
                          [&](double q) {
                            return std::cos(q) * oracle::simpson(
                                                     [&](double p) { return wigner_density(s, PhaseSpacePoint(q, p)); },
                                                     -10, 10, 400);
                          },
                          -10, 10, 400) /
                      (2.0 * std::numbers::pi);
  CHECK(quad == doctest::Approx(std::exp(-0.25)).epsilon(1e-10));
  CHECK(std::exp(-0.25) == doctest::Approx(0.77880).epsilon(1e-5));
  CHECK(std::abs(f.values[20] - std::exp(-0.25)) < 3.0 * f.std_error[20]);
  CHECK(f.std_error[20] > 0.0);
}

TEST_CASE("f0 is exact on linear_gradient, including a mixed state") {
  auto sc = load("linear_gradient");
  const std::size_t n = static_cast<std::size_t>(std::round(10.0 / sc.tau));
  for (const auto& state : {sc.state, InitialState({{{-1.0}, {0.5}, {0.7}, 0.4}, {{1.5}, {-0.2}, {1.2}, 0.6}})}) {
    const auto exact = fidelity_exact(state, sc.pair, n, sc.tau, GridSpec::uniform(1, -16, 16, 1024));
    const auto f = f0(state, sc.pair, config_for(sc, 10000, 5, n));
    CHECK(worst_ratio(f, exact, 1e-8) <= 1.0);
  }
}

TEST_CASE("f1 is exact on displaced_ho with the average reference, and fails with h_prime") {
  const auto sc = load("displaced_ho");
  const auto exact = fidelity_exact(sc.state, sc.pair, sc.n_steps, sc.tau, sc.grid);
  const auto c = config_for(sc, 10000, 7, sc.n_steps);
  const auto f = f1_dr(sc.state, sc.pair, c);
  CHECK(f.meta.estimator == "f1");
  CHECK(worst_ratio(f, exact, 1e-6) <= 1.0);
  const auto g = f1_dr(sc.state, sc.pair, c, Reference::h_prime);
  CHECK(g.meta.estimator == "f1_h_prime");
  double dev_avg = 0.0, dev_h = 0.0;
  for (std::size_t n = 0; n <= sc.n_steps; ++n) {
    dev_avg = std::max(dev_avg, std::abs(f.values[n] - exact.values[n]));
    dev_h = std::max(dev_h, std::abs(g.values[n] - exact.values[n]));
  }
  CHECK(dev_h > 10.0 * dev_avg);
}

TEST_CASE("f2_mc reduces to f1 path by path for linear dV") {
  const auto pair = linear_perturbation_pair();
  const auto s = InitialState::gaussian(0.2, -0.3, 1.0);
  EstimatorConfig c;
  c.n_traj = 5000;
  c.n_steps = 80;
  const auto a = f1_dr(s, pair, c), b = f2_mc(s, pair, c);
  CHECK(a.values == b.values);
}

TEST_CASE("f2_mc is exact on ho_diff_k where f1 is not") {
  const auto sc = load("ho_diff_k");
  const auto exact = fidelity_exact(sc.state, sc.pair, sc.n_steps, sc.tau, sc.grid);
  const auto f2 = f2_mc(sc.state, sc.pair, config_for(sc, 20000, 3, 100));
  CHECK(f2.meta.variant == "sampler=rotated");
  CHECK(worst_ratio(f2, FidelitySeries(exact), 0.0) <= 1.0);
  const auto f1 = f1_dr(sc.state, sc.pair, config_for(sc, 10000, 3, sc.n_steps));
  const double period = 2.0 * std::numbers::pi / std::sqrt(2.0 * 0.5525);
  bool exceeded = false;
  for (std::size_t n = 0; n <= sc.n_steps; ++n) {
    if (f1.times[n] > period && std::abs(f1.values[n] - exact.values[n]) > 3.0 * f1.std_error[n] + 1e-6) exceeded = true;
  }
  CHECK(exceeded);
}

TEST_CASE("f2_mc is exact on cubic_perturbation") {
  const auto sc = load("cubic_perturbation");
  const auto exact = fidelity_exact(sc.state, sc.pair, 100, sc.tau, sc.grid);
  const auto f2 = f2_mc(sc.state, sc.pair, config_for(sc, 20000, 4, 100));
  CHECK(worst_ratio(f2, exact, 0.0) <= 1.0);
}

TEST_CASE("f2_mc preconditions") {
  const auto two = displaced_ho_product(2);
  EstimatorConfig c;
  CHECK_THROWS_AS(f2_mc(two.state, two.pair, c), PreconditionError);
  const auto p = make_pair(SeparableHamiltonian::one_dim(quadratic_kinetic(1.0), harmonic_potential(1.0)),
                           SeparableHamiltonian::one_dim(quadratic_kinetic(2.0), harmonic_potential(1.0)));
  CHECK_THROWS_AS(f2_mc(InitialState::gaussian(0, 0, 1), p, c), PreconditionError);
  CHECK_THROWS_AS(f1_dr(InitialState::gaussian(0, 0, 1), two.pair, c), PreconditionError);
}

TEST_CASE("f2_mc on the kicked rotor uses the real-axis sampler and reports a collapsed sample size") {
  const auto sc = load("kicked_rotor");
  const auto f = f2_mc(sc.state, sc.pair, config_for(sc, 2000, 1, sc.n_steps));
  CHECK(f.meta.variant == "sampler=real_axis");
  for (const auto& v : f.values) CHECK(std::isfinite(std::abs(v)));
  CHECK(f.meta.effective_sample_size < 0.01 * 2000);
  CHECK_FALSE(f.meta.warnings.empty());
}

TEST_CASE("swapping the pair conjugates f0 and f1 exactly") {
  const auto sc = load("morse_like");
  const auto c = config_for(sc, 2000, 13, 60);
  const auto a0 = f0(sc.state, sc.pair, c), b0 = f0(sc.state, sc.pair.swapped(), c);
  const auto a1 = f1_dr(sc.state, sc.pair, c), b1 = f1_dr(sc.state, sc.pair.swapped(), c);
  for (std::size_t n = 0; n <= 60; ++n) {
    CHECK(b0.values[n] == std::conj(a0.values[n]));
    CHECK(b1.values[n] == std::conj(a1.values[n]));
  }
}

TEST_CASE("first-order estimators stay inside the unit disc up to their error") {
  const InitialState mix({{{-1.0}, {0.0}, {1.0}, 0.5}, {{1.0}, {0.5}, {0.8}, 0.5}});
  const auto sc = load("morse_like");
  const auto c = config_for(sc, 3000, 21, 100);
  for (const auto& f : {f0(mix, sc.pair, c), f1_dr(mix, sc.pair, c)}) {
    for (std::size_t n = 0; n < f.size(); ++n) CHECK(std::abs(f.values[n]) <= 1.0 + f.std_error[n]);
  }
}

TEST_CASE("results do not depend on the thread count") {
  const auto sc = load("cubic_perturbation");
  auto c = config_for(sc, 5000, 8, 50);
  c.threads = 1;
  const auto a1 = f1_dr(sc.state, sc.pair, c), a2 = f2_mc(sc.state, sc.pair, c);
  c.threads = 4;
  const auto b1 = f1_dr(sc.state, sc.pair, c), b2 = f2_mc(sc.state, sc.pair, c);
  CHECK(a1.values == b1.values);
  CHECK(a1.std_error == b1.std_error);
  CHECK(a2.values == b2.values);
  CHECK(a2.std_error == b2.std_error);
}

TEST_CASE("standard error scales as n^-1/2") {
  const auto sc = load("displaced_ho");
  const auto small = f1_dr(sc.state, sc.pair, config_for(sc, 2000, 1, 100));
  const auto large = f1_dr(sc.state, sc.pair, config_for(sc, 32000, 1, 100));
  const double slope = std::log(large.std_error[100] / small.std_error[100]) / std::log(16.0);
  CHECK(slope == doctest::Approx(-0.5).epsilon(0.1));
}

TEST_CASE("mean perturbation from Gaussian moments") {
  const auto sc = load("cubic_perturbation");
  // dV = 0.5 q + 0.1 q^2 + 0.05 q^3 about q0 = 0 with <q^2> = 1/2.
  CHECK(mean_perturbation(sc.state, sc.pair, 1.0) == doctest::Approx(0.05).epsilon(1e-12));
  const auto d = load("displaced_ho");
  CHECK(mean_perturbation(d.state, d.pair, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("short-time slope of the exact oracle converges to -i<dH>/hbar") {
  const auto sc = load("displaced_ho");
  const double target = -mean_perturbation(sc.state, sc.pair, sc.hbar) / sc.hbar;
  auto slope = [&](double tau) {
    const auto f = fidelity_exact(sc.state, sc.pair, 1, tau, sc.grid);
    return (f.values[1] - 1.0) / tau;
  };
  const cd s1 = slope(0.025), s2 = slope(0.0125);
  const cd richardson = 2.0 * s2 - s1;
  CHECK(std::abs(richardson - cd(0.0, target)) < 0.01 * std::abs(target));
}

TEST_CASE("exactness ladder on the presets") {
  for (const auto& name : scenario_names()) {
    CAPTURE(name);
    const auto sc = load(name);
    const std::size_t n = std::min<std::size_t>(sc.n_steps, 100);
    const auto exact = fidelity_exact(sc.state, sc.pair, n, sc.tau, sc.grid);
    const auto c = config_for(sc, 10000, 17, n);
    if (sc.predicted_exact("f0")) CHECK(worst_ratio(f0(sc.state, sc.pair, c), exact, 1e-8) <= 1.0);
    if (sc.predicted_exact("f1")) CHECK(worst_ratio(f1_dr(sc.state, sc.pair, c), exact, 1e-6) <= 1.0);
    if (sc.predicted_exact("f2")) CHECK(worst_ratio(f2_mc(sc.state, sc.pair, c), exact, 1e-6) <= 1.0);
  }
}
