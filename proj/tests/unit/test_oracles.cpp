#include <doctest.h>

#include <cmath>
#include <cstdio>

#include <loschmidt/loschmidt.hpp>

#include "oracles.hpp"

using namespace loschmidt;

namespace {

// Displaced oscillators: T = p^2/2, V' = (q - 1/2)^2/2, V'' = (q + 1/2)^2/2.
constexpr double kT[3] = {0.0, 0.0, 0.5};
constexpr double kVp[3] = {0.125, -0.5, 0.5};
constexpr double kVpp[3] = {0.125, 0.5, 0.5};

}  // namespace

TEST_CASE("closed-form packet oracle is normalized and unitary") {
  auto g = oracle::packet(0.3, -0.7, 1.3);
  CHECK(std::abs(oracle::overlap(g, g) - 1.0) < 1e-14);
  for (int n = 0; n < 200; ++n) g = oracle::kicked_step(g, kT, kVp, 0.05);
  CHECK(std::abs(oracle::overlap(g, g) - 1.0) < 1e-12);
}

TEST_CASE("closed-form packet oracle: free spreading of the width") {
  // |psi|^2 variance sigma^2/2 (1 + (t hbar / sigma^2)^2) for m = 1.
  const double zero[3] = {0.0, 0.0, 0.0};
  auto g = oracle::packet(0.0, 0.0, 1.0);
  for (int n = 0; n < 20; ++n) g = oracle::kicked_step(g, kT, zero, 0.1);
  const double var = 1.0 / (4.0 * g.a.real());
  CHECK(var == doctest::Approx(0.5 * (1.0 + 4.0)).epsilon(1e-12));
}

TEST_CASE("closed-form packet oracle agrees with a direct quadrature of the overlap") {
  auto a = oracle::packet(0.5, 0.0, 1.0), b = a;
  for (int n = 0; n < 40; ++n) {
    a = oracle::kicked_step(a, kT, kVp, 0.05);
    b = oracle::kicked_step(b, kT, kVpp, 0.05);
  }
  auto re = [&](double q) { return (std::conj(a(q)) * b(q)).real(); };
  auto im = [&](double q) { return (std::conj(a(q)) * b(q)).imag(); };
  const std::complex<double> quad(oracle::simpson(re, -20, 20, 4000), oracle::simpson(im, -20, 20, 4000));
  CHECK(std::abs(quad - oracle::overlap(a, b)) < 1e-12);
}

TEST_CASE("grid propagation matches the closed-form oracle on displaced_ho at every step") {
  const auto sc = load("displaced_ho");
  const auto exact = fidelity_exact(sc.state, sc.pair, sc.n_steps, sc.tau, sc.grid);
  const auto ref = oracle::quadratic_fidelity(0.5, 0.0, 1.0, kT, kVp, kT, kVpp, sc.tau, sc.n_steps);
  double worst = 0.0;
  for (std::size_t n = 0; n <= sc.n_steps; ++n) worst = std::max(worst, std::abs(exact.values[n] - ref[n]));
  CHECK(worst < 1e-10);
}

TEST_CASE("grid propagation matches the closed-form oracle on ho_diff_k") {
  const auto sc = load("ho_diff_k");
  const double v1[3] = {0.0, 0.0, 0.5}, v2[3] = {0.0, 0.0, 0.605};
  const auto exact = fidelity_exact(sc.state, sc.pair, sc.n_steps, sc.tau, sc.grid);
  const auto ref = oracle::quadratic_fidelity(0.0, 0.0, 1.0, kT, v1, kT, v2, sc.tau, sc.n_steps);
  double worst = 0.0;
  for (std::size_t n = 0; n <= sc.n_steps; ++n) worst = std::max(worst, std::abs(exact.values[n] - ref[n]));
  CHECK(worst < 1e-10);
}
