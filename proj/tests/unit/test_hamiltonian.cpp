#include <doctest.h>

#include <cmath>
#include <random>

#include <loschmidt/hamiltonian.hpp>
#include <loschmidt/errors.hpp>
#include <loschmidt/presets.hpp>

#include "oracles.hpp"

using namespace loschmidt;

namespace {

SeparableHamiltonian oscillator(double k, double centre = 0.0) {
  return SeparableHamiltonian::one_dim(quadratic_kinetic(1.0), harmonic_potential(k, centre));
}

double relative(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("polynomial coefficients, derivatives and evaluation") {
  const Polynomial p{1.0, -2.0, 0.5, 0.0, 3.0};
  CHECK(p.degree() == 4);
  CHECK(p(2.0) == doctest::Approx(1.0 - 4.0 + 2.0 + 48.0));
  const Polynomial d = p.derivative();
  CHECK(d == Polynomial{-2.0, 1.0, 0.0, 12.0});
  CHECK(p.derivative(2) == Polynomial{1.0, 0.0, 36.0});
  CHECK(p.derivative(5).is_zero());
  CHECK(Polynomial{}.degree() < 0);
  CHECK_THROWS_AS(Polynomial({1, 2, 3, 4, 5, 6}), PreconditionError);
}

TEST_CASE("derivatives agree with central finite differences at random probes") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const CoordinateFunction funcs[] = {
      CoordinateFunction(Polynomial{0.3, -1.0, 0.7, 0.2, -0.05}),
      CoordinateFunction(Polynomial{}, Cosine{5.0, 1.0}),
      CoordinateFunction(Polynomial{0.0, 0.0, 0.5}, Cosine{-0.3, 2.0}),
  };
  for (const auto& f : funcs) {
    for (int i = 0; i < 20; ++i) {
      const double x = u(rng);
      auto v = [&](double y) { return f.value(y); };
      auto d1 = [&](double y) { return f.derivative(y, 1); };
      CHECK(relative(f.derivative(x, 1), oracle::central_difference(v, x, 1e-5, 1)) < 1e-6);
      CHECK(relative(f.derivative(x, 2), oracle::central_difference(d1, x, 1e-5, 1)) < 1e-6);
    }
  }
}

TEST_CASE("separable Hamiltonian is T(p) + V(q) with no cross terms") {
  const auto h = SeparableHamiltonian::product(2, quadratic_kinetic(2.0), harmonic_potential(3.0, 0.5));
  const std::vector<double> q{0.1, -0.4}, p{1.5, 0.2};
  const double t = (1.5 * 1.5 + 0.2 * 0.2) / 4.0;
  const double v = 1.5 * (0.4 * 0.4 + 0.9 * 0.9);
  CHECK(h(q, p) == doctest::Approx(t + v).epsilon(1e-14));
  CHECK(h.kinetic_energy(p) == doctest::Approx(t).epsilon(1e-14));
  CHECK(h.potential_energy(q) == doctest::Approx(v).epsilon(1e-14));
  CHECK(h.dims() == 2);
  CHECK(h.is_polynomial());
  CHECK(h.kinetic_degree() == 2);
}

TEST_CASE("make_pair on displaced oscillators") {
  const auto pair = make_pair(oscillator(1.0, 0.5), oscillator(1.0, -0.5));
  // H' = p^2/2 + (q - 1/2)^2/2 ... centre convention: harmonic_potential(k, centre).
  const auto& avg = pair.average.potential(0).polynomial();
  const auto& dv = pair.delta.potential(0).polynomial();
  CHECK(avg == Polynomial{0.125, 0.0, 0.5});
  CHECK(dv == Polynomial{0.0, 1.0});
  CHECK(pair.delta.kinetic_is_zero());
  CHECK(pair.average.kinetic(0).polynomial() == Polynomial{0.0, 0.0, 0.5});
}

TEST_CASE("make_pair with identical Hamiltonians gives zero perturbation") {
  const auto h = SeparableHamiltonian::one_dim(quadratic_kinetic(1.0),
                                               CoordinateFunction(Polynomial{0, 1, -2, 0.1, 0.3}, Cosine{2.0, 1.0}));
  const auto pair = make_pair(h, h);
  CHECK(pair.delta.is_zero());
  CHECK(pair.average == h);
}

TEST_CASE("make_pair on different force constants") {
  const auto pair = make_pair(oscillator(1.0), oscillator(1.21));
  CHECK(pair.delta.potential(0).polynomial().coefficient(2) == doctest::Approx(0.105).epsilon(1e-14));
  CHECK(pair.average.potential(0).polynomial().coefficient(2) == doctest::Approx(0.5525).epsilon(1e-14));
}

TEST_CASE("make_pair rejects mismatched dimensions and incompatible cosines") {
  const auto a = SeparableHamiltonian::one_dim(quadratic_kinetic(), CoordinateFunction(Polynomial{}, Cosine{1.0, 1.0}));
  const auto b = SeparableHamiltonian::one_dim(quadratic_kinetic(), CoordinateFunction(Polynomial{}, Cosine{1.0, 2.0}));
  CHECK_THROWS_AS(make_pair(a, b), IncompatibleFamilies);
  CHECK_THROWS_AS(make_pair(a, SeparableHamiltonian::product(2, quadratic_kinetic(), harmonic_potential(1.0))),
                  PreconditionError);
}

TEST_CASE("pair decomposition holds pointwise at random probes") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (const auto& name : scenario_names()) {
    const auto pair = load(name).pair;
    for (int i = 0; i < 10; ++i) {
      const PhaseSpacePoint x(u(rng), u(rng));
      const double h1 = pair.h_prime(x), h2 = pair.h_double_prime(x);
      CHECK(relative(pair.average(x), 0.5 * (h1 + h2)) < 1e-12);
      CHECK(relative(pair.delta(x), h2 - h1) < 1e-12);
      const auto sw = pair.swapped();
      CHECK(relative(sw.average(x), pair.average(x)) < 1e-12);
      CHECK(relative(sw.delta(x), -pair.delta(x)) < 1e-12);
    }
  }
}

TEST_CASE("expansion remainder vanishes where the expansion terminates") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const auto displaced = make_pair(oscillator(1.0, 0.5), oscillator(1.0, -0.5));
  const auto diff_k = make_pair(oscillator(1.0), oscillator(1.21));
  for (int i = 0; i < 20; ++i) {
    const PhaseSpacePoint x(u(rng), u(rng)), dx(u(rng), u(rng));
    CHECK(std::abs(expansion_remainder(displaced, x, dx, 1)) < 1e-12);
    CHECK(std::abs(expansion_remainder(diff_k, x, dx, 2)) < 1e-12);
  }
  CHECK(std::abs(expansion_remainder(diff_k, PhaseSpacePoint(1.0, 0.5), PhaseSpacePoint(0.3, 0.2), 1)) > 1e-3);
  CHECK_THROWS_AS(expansion_remainder(diff_k, PhaseSpacePoint(0, 0), PhaseSpacePoint(0, 0), 3), PreconditionError);
  CHECK_THROWS_AS(expansion_remainder(diff_k, PhaseSpacePoint(0, 0), PhaseSpacePoint({0, 0}, {0, 0}), 1),
                  PreconditionError);
}

TEST_CASE("expansion remainder by direct arithmetic: quartic pair") {
  // V' = q^4, V'' = q^4 + q, T = 0. x = (1, 0), dx = (0.2, 0).
  const auto zero_t = CoordinateFunction(Polynomial{});
  const auto pair = make_pair(SeparableHamiltonian::one_dim(zero_t, CoordinateFunction(Polynomial{0, 0, 0, 0, 1})),
                              SeparableHamiltonian::one_dim(zero_t, CoordinateFunction(Polynomial{0, 1, 0, 0, 1})));
  const double lhs = (std::pow(1.1, 4) + 1.1) - std::pow(0.9, 4);
  // average V = q^4 + q/2, dV = q
  const double order1 = 1.0 + (4.0 + 0.5) * 0.2;
  CHECK(expansion_remainder(pair, PhaseSpacePoint(1.0, 0.0), PhaseSpacePoint(0.2, 0.0), 1) ==
        doctest::Approx(lhs - order1).epsilon(1e-12));
  // Leading omitted term (1/24) V''' dq^3 = q dq^3; no higher terms for a quartic.
  CHECK(lhs - order1 == doctest::Approx(0.008).epsilon(1e-9));
}

TEST_CASE("expansion remainder is O(dx^{n+1})") {
  const auto pair = load("morse_like").pair;
  const PhaseSpacePoint x(0.7, -0.4);
  for (int order = 0; order <= 2; ++order) {
    const double e1 = std::abs(expansion_remainder(pair, x, PhaseSpacePoint(1e-3, 1e-3), order));
    const double e2 = std::abs(expansion_remainder(pair, x, PhaseSpacePoint(1e-1, 1e-1), order));
    const double slope = std::log(e2 / e1) / std::log(100.0);
    CHECK(slope >= order + 0.9);
  }
}

TEST_CASE("order-0 remainder vanishes only for constant H and affine dH") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (const auto& name : scenario_names()) {
    const auto pair = load(name).pair;
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      worst = std::max(worst, std::abs(expansion_remainder(pair, PhaseSpacePoint(u(rng), u(rng)),
                                                           PhaseSpacePoint(u(rng), u(rng)), 0)));
    }
    const bool constant_affine = name == "linear_gradient";
    CHECK_MESSAGE((worst < 1e-12) == constant_affine, name);
  }
}
