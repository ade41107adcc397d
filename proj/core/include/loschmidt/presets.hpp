#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "loschmidt/hamiltonian.hpp"
#include "loschmidt/qgrid.hpp"
#include "loschmidt/state.hpp"

namespace loschmidt {

enum class Exactness { exact, approximate };

/// A worked system with its predicted exactness per estimator order
/// ("f0", "f1", "f2").
struct Scenario {
  std::string name;
  std::string description;
  HamiltonianPair pair;
  InitialState state = InitialState::gaussian(0.0, 0.0, 1.0);
  double tau = 0.05;
  std::size_t n_steps = 252;
  double hbar = 1.0;
  GridSpec grid;
  std::map<std::string, Exactness> exactness;

  bool predicted_exact(const std::string& order) const {
    auto it = exactness.find(order);
    return it != exactness.end() && it->second == Exactness::exact;
  }
};

/// Names accepted by load(), in listing order.
const std::vector<std::string>& scenario_names();

/// Throws PreconditionError for an unknown name.
Scenario load(const std::string& name);

/// D independent copies of the displaced oscillator pair with the same
/// single-mode state in each coordinate.
Scenario displaced_ho_product(std::size_t dims);

std::string to_string(Exactness e);

}  // namespace loschmidt
