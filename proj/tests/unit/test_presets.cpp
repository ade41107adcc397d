#include <doctest.h>

#include <cmath>
#include <random>

#include <loschmidt/errors.hpp>
#include <loschmidt/estimators.hpp>
#include <loschmidt/presets.hpp>

using namespace loschmidt;

TEST_CASE("preset names") {
  const std::vector<std::string> expected{"linear_gradient", "displaced_ho", "ho_diff_k",
                                          "cubic_perturbation", "kicked_rotor", "morse_like"};
  CHECK(scenario_names() == expected);
  for (const auto& n : expected) CHECK(load(n).name == n);
  CHECK_THROWS_AS(load("harmonic"), PreconditionError);
}

TEST_CASE("preset defaults") {
  for (const auto& name : scenario_names()) {
    CAPTURE(name);
    const auto sc = load(name);
    CHECK(sc.hbar == 1.0);
    if (name == "kicked_rotor") {
      CHECK(sc.tau == 1.0);
      CHECK(sc.n_steps == 50);
      CHECK(sc.grid.periodic_domain);
    } else {
      CHECK(sc.tau == 0.05);
      CHECK(sc.n_steps == 252);
      CHECK(sc.state.components()[0].sigma[0] == 1.0);
    }
    CHECK_NOTHROW(sc.grid.validate());
    CHECK(sc.exactness.size() == 3);
  }
}

TEST_CASE("displaced_ho encodes the displaced oscillators") {
  const auto sc = load("displaced_ho");
  CHECK(sc.pair.delta.potential(0).polynomial() == Polynomial{0.0, 1.0});
  CHECK(sc.pair.average.potential(0).polynomial() == Polynomial{0.125, 0.0, 0.5});
  CHECK(sc.predicted_exact("f1"));
  CHECK_FALSE(sc.predicted_exact("f0"));
}

TEST_CASE("ho_diff_k and cubic_perturbation encode the second-order family") {
  const auto a = load("ho_diff_k");
  CHECK(a.pair.h_prime.potential(0).polynomial().coefficient(2) == doctest::Approx(0.5));
  CHECK(a.pair.h_double_prime.potential(0).polynomial().coefficient(2) == doctest::Approx(0.605));
  CHECK(a.predicted_exact("f2"));
  CHECK_FALSE(a.predicted_exact("f1"));
  const auto b = load("cubic_perturbation");
  CHECK(b.pair.delta.potential(0).polynomial().coefficient(3) == doctest::Approx(0.05));
  CHECK(b.pair.average.potential(0).polynomial().degree() == 2);
  CHECK(b.predicted_exact("f2"));
}

TEST_CASE("kicked_rotor and morse_like are approximate for every order") {
  for (const char* name : {"kicked_rotor", "morse_like"}) {
    const auto sc = load(name);
    for (const char* o : {"f0", "f1", "f2"}) CHECK_FALSE(sc.predicted_exact(o));
  }
  const auto rotor = load("kicked_rotor");
  CHECK(rotor.pair.h_prime.potential(0).cosine().amplitude == doctest::Approx(5.0 - 0.025));
  CHECK(rotor.pair.delta.potential(0).cosine().amplitude == doctest::Approx(0.05));
}

TEST_CASE("predicted exactness agrees with the expansion remainder at random probes") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (const auto& name : scenario_names()) {
    const auto sc = load(name);
    for (int order = 0; order <= 2; ++order) {
      double worst = 0.0;
      for (int i = 0; i < 20; ++i) {
        worst = std::max(worst, std::abs(expansion_remainder(sc.pair, PhaseSpacePoint(u(rng), u(rng)),
                                                             PhaseSpacePoint(u(rng), u(rng)), order)));
      }
      CHECK_MESSAGE((worst < 1e-12) == sc.predicted_exact("f" + std::to_string(order)), name, " order ", order);
    }
  }
}

TEST_CASE("cubic_perturbation trajectories stay bounded over the run") {
  const auto sc = load("cubic_perturbation");
  EstimatorConfig c;
  c.n_traj = 20000;
  c.n_steps = sc.n_steps;
  CHECK_NOTHROW(f1_dr(sc.state, sc.pair, c));
  CHECK_NOTHROW(f2_mc(sc.state, sc.pair, c));
}

TEST_CASE("displaced oscillator products") {
  for (std::size_t d : {1u, 2u, 4u, 8u}) {
    const auto sc = displaced_ho_product(d);
    CHECK(sc.pair.dims() == d);
    CHECK(sc.state.dims() == d);
    CHECK(sc.grid.dims() == (d <= 2 ? d : 0));
  }
  CHECK_THROWS_AS(displaced_ho_product(0), PreconditionError);
}
