#include "loschmidt/presets.hpp"

#include <cmath>
#include <numbers>

#include "loschmidt/errors.hpp"

namespace loschmidt {

namespace {

// Quartic truncation of D (1 - exp(-alpha (q - shift)))^2 expanded in powers of q.
Polynomial morse_quartic(double depth, double alpha, double shift) {
  // D [x^2 - x^3 + 7/12 x^4], x = alpha (q - shift)
  const double c2 = depth * alpha * alpha;
  const double c3 = -depth * alpha * alpha * alpha;
  const double c4 = depth * 7.0 / 12.0 * std::pow(alpha, 4);
  const double s = shift;
  // Binomial expansion of c2 (q-s)^2 + c3 (q-s)^3 + c4 (q-s)^4.
  return Polynomial{c2 * s * s - c3 * s * s * s + c4 * s * s * s * s,
                    -2.0 * c2 * s + 3.0 * c3 * s * s - 4.0 * c4 * s * s * s,
                    c2 - 3.0 * c3 * s + 6.0 * c4 * s * s,
                    c3 - 4.0 * c4 * s,
                    c4};
}

Scenario linear_gradient() {
  Scenario s;
  s.name = "linear_gradient";
  s.description = "H = const, dH = dbeta q (dbeta = 1), no kinetic term";
  const double dbeta = 1.0;
  const CoordinateFunction none;
  s.pair = make_pair(SeparableHamiltonian::one_dim(none, CoordinateFunction(Polynomial{0.0, -0.5 * dbeta})),
                     SeparableHamiltonian::one_dim(none, CoordinateFunction(Polynomial{0.0, 0.5 * dbeta})));
  s.state = InitialState::gaussian(0.5, 0.0, 1.0);
  s.grid = GridSpec::uniform(1, -16.0, 16.0, 1024);
  s.exactness = {{"f0", Exactness::exact}, {"f1", Exactness::exact}, {"f2", Exactness::exact}};
  return s;
}

Scenario displaced_ho() {
  Scenario s;
  s.name = "displaced_ho";
  s.description = "p^2/2m + k/2 (q -+ a/2)^2 with m = k = a = 1; ground state of H'";
  const double k = 1.0, a = 1.0;
  s.pair = make_pair(SeparableHamiltonian::one_dim(quadratic_kinetic(1.0), harmonic_potential(k, 0.5 * a)),
                     SeparableHamiltonian::one_dim(quadratic_kinetic(1.0), harmonic_potential(k, -0.5 * a)));
  s.state = InitialState::gaussian(0.5 * a, 0.0, 1.0);
  s.grid = GridSpec::uniform(1, -20.0, 20.0, 4096);
  s.exactness = {{"f0", Exactness::approximate}, {"f1", Exactness::exact}, {"f2", Exactness::exact}};
  return s;
}

Scenario ho_diff_k() {
  Scenario s;
  s.name = "ho_diff_k";
  s.description = "p^2/2 + k q^2/2 with k' = 1, k'' = 1.21; ground state of H'";
  s.pair = make_pair(SeparableHamiltonian::one_dim(quadratic_kinetic(1.0), harmonic_potential(1.0)),
                     SeparableHamiltonian::one_dim(quadratic_kinetic(1.0), harmonic_potential(1.21)));
  s.state = InitialState::gaussian(0.0, 0.0, 1.0);
  s.grid = GridSpec::uniform(1, -20.0, 20.0, 1024);
  s.exactness = {{"f0", Exactness::approximate}, {"f1", Exactness::approximate}, {"f2", Exactness::exact}};
  return s;
}

Scenario cubic_perturbation() {
  Scenario s;
  s.name = "cubic_perturbation";
  s.description = "harmonic average, dV = 0.5 q + 0.1 q^2 + 0.05 q^3";
  const Polynomial dv{0.0, 0.5, 0.1, 0.05};
  const Polynomial avg{0.0, 0.0, 0.5};
  s.pair = make_pair(SeparableHamiltonian::one_dim(quadratic_kinetic(1.0), CoordinateFunction(avg - 0.5 * dv)),
                     SeparableHamiltonian::one_dim(quadratic_kinetic(1.0), CoordinateFunction(avg + 0.5 * dv)));
  s.state = InitialState::gaussian(0.0, 0.0, 1.0);
  s.grid = GridSpec::uniform(1, -10.0, 10.0, 1024);
  s.exactness = {{"f0", Exactness::approximate}, {"f1", Exactness::approximate}, {"f2", Exactness::exact}};
  return s;
}

Scenario kicked_rotor() {
  Scenario s;
  s.name = "kicked_rotor";
  s.description = "p^2/2 + K cos q, K = 5 with kick-strength perturbation dK = 0.05";
  const double k = 5.0, dk = 0.01 * k;
  s.pair = make_pair(
      SeparableHamiltonian::one_dim(quadratic_kinetic(1.0), CoordinateFunction(Polynomial{}, Cosine{k - 0.5 * dk, 1.0})),
      SeparableHamiltonian::one_dim(quadratic_kinetic(1.0), CoordinateFunction(Polynomial{}, Cosine{k + 0.5 * dk, 1.0})));
  s.state = InitialState::gaussian(std::numbers::pi, 0.0, 0.5);
  s.tau = 1.0;
  s.n_steps = 50;
  s.grid = GridSpec::uniform(1, 0.0, 2.0 * std::numbers::pi, 1024, true);
  s.exactness = {{"f0", Exactness::approximate}, {"f1", Exactness::approximate}, {"f2", Exactness::approximate}};
  return s;
}

Scenario morse_like() {
  Scenario s;
  s.name = "morse_like";
  s.description = "quartic-truncated Morse wells, D' = 12, D'' = 10, alpha = 0.3, minimum shifted by 0.5";
  s.pair = make_pair(
      SeparableHamiltonian::one_dim(quadratic_kinetic(1.0), CoordinateFunction(morse_quartic(12.0, 0.3, 0.0))),
      SeparableHamiltonian::one_dim(quadratic_kinetic(1.0), CoordinateFunction(morse_quartic(10.0, 0.3, 0.5))));
  s.state = InitialState::gaussian(0.0, 0.0, 1.0);
  s.grid = GridSpec::uniform(1, -15.0, 15.0, 1024);
  s.exactness = {{"f0", Exactness::approximate}, {"f1", Exactness::approximate}, {"f2", Exactness::approximate}};
  return s;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"linear_gradient", "displaced_ho", "ho_diff_k",
                                              "cubic_perturbation", "kicked_rotor", "morse_like"};
  return names;
}

Scenario load(const std::string& name) {
  if (name == "linear_gradient") return linear_gradient();
  if (name == "displaced_ho") return displaced_ho();
  if (name == "ho_diff_k") return ho_diff_k();
  if (name == "cubic_perturbation") return cubic_perturbation();
  if (name == "kicked_rotor") return kicked_rotor();
  if (name == "morse_like") return morse_like();
  throw PreconditionError("unknown scenario '" + name + "'");
}

Scenario displaced_ho_product(std::size_t dims) {
  if (dims == 0) throw PreconditionError("product scenario needs at least one coordinate");
  Scenario one = displaced_ho();
  Scenario s = one;
  s.name = "displaced_ho_x" + std::to_string(dims);
  s.description = std::to_string(dims) + " independent displaced oscillators";
  s.pair = make_pair(SeparableHamiltonian::product(dims, one.pair.h_prime.kinetic(0), one.pair.h_prime.potential(0)),
                     SeparableHamiltonian::product(dims, one.pair.h_double_prime.kinetic(0),
                                                   one.pair.h_double_prime.potential(0)));
  s.state = InitialState::gaussian(dims, 0.5, 0.0, 1.0);
  if (dims <= 2) {
    s.grid = GridSpec::uniform(dims, -20.0, 20.0, dims == 1 ? 4096 : 256);
  } else {
    s.grid = GridSpec{};
  }
  return s;
}

std::string to_string(Exactness e) { return e == Exactness::exact ? "exact" : "approximate"; }

}  // namespace loschmidt
