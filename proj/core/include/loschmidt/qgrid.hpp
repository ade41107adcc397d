#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include "loschmidt/hamiltonian.hpp"
#include "loschmidt/series.hpp"
#include "loschmidt/state.hpp"

namespace loschmidt {

/// Uniform periodic position grid [q_min_d, q_max_d) with `points` nodes per
/// coordinate (power of two). D in {1, 2}.
struct GridSpec {
  std::vector<double> q_min;
  std::vector<double> q_max;
  std::size_t points = 0;
  /// The physical domain itself is periodic (kicked rotor on [0, 2 pi)); the
  /// extent rule and the position-edge leak monitor do not apply.
  bool periodic_domain = false;

  static GridSpec uniform(std::size_t dims, double q_min, double q_max, std::size_t points,
                          bool periodic_domain = false);

  std::size_t dims() const noexcept { return q_min.size(); }
  std::size_t total_points() const noexcept;
  double spacing(std::size_t d) const { return (q_max.at(d) - q_min.at(d)) / static_cast<double>(points); }
  double cell_volume() const;
  double position(std::size_t d, std::size_t i) const { return q_min[d] + static_cast<double>(i) * spacing(d); }
  /// Momentum of FFT bin j in coordinate d.
  double momentum(std::size_t d, std::size_t j, double hbar) const;

  void validate() const;
};

/// Grid spanning every component of `state` by `sigmas` widths on each side.
GridSpec covering_grid(const InitialState& state, std::size_t points, double sigmas = 10.0);

class GridWavefunction {
 public:
  GridWavefunction(GridSpec grid, std::vector<std::complex<double>> values);

  /// Samples one Gaussian component. Throws PreconditionError if the grid
  /// does not cover the component to 8 sigma or the sampled norm is off by
  /// more than 1e-10.
  static GridWavefunction from_component(const GaussianComponent& c, const GridSpec& grid,
                                         double hbar = 1.0);

  const GridSpec& grid() const noexcept { return grid_; }
  const std::vector<std::complex<double>>& values() const noexcept { return values_; }
  std::vector<std::complex<double>>& values() noexcept { return values_; }

  double norm() const;
  /// <this|other> on the grid.
  std::complex<double> overlap(const GridWavefunction& other) const;

 private:
  GridSpec grid_;
  std::vector<std::complex<double>> values_;
};

struct LeakMonitor {
  /// Fraction of the extent (position) or of the momentum range treated as edge.
  double edge_fraction = 0.05;
  /// Largest tolerated probability inside the edge region.
  double max_probability = 1e-8;
  bool enabled = true;
};

/// One step of the kicked map U = exp(-i tau V / hbar) exp(-i tau T / hbar)
/// on a fixed grid, with precomputed phases and FFT plans.
class KickedPropagator {
 public:
  KickedPropagator(const GridSpec& grid, const SeparableHamiltonian& h, double tau,
                   double hbar = 1.0, LeakMonitor monitor = {});
  ~KickedPropagator();
  KickedPropagator(KickedPropagator&&) noexcept;
  KickedPropagator& operator=(KickedPropagator&&) noexcept;
  KickedPropagator(const KickedPropagator&) = delete;
  KickedPropagator& operator=(const KickedPropagator&) = delete;

  /// Advances psi by one map step in place. Throws GridAliasing when the
  /// leak monitor trips.
  void step(GridWavefunction& psi);

  double last_position_edge_probability() const noexcept { return last_position_edge_; }
  double last_momentum_edge_probability() const noexcept { return last_momentum_edge_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  double last_position_edge_ = 0.0;
  double last_momentum_edge_ = 0.0;
};

/// Single map step; builds a throwaway propagator.
GridWavefunction kick_step(const GridWavefunction& psi, const SeparableHamiltonian& h, double tau,
                           double hbar = 1.0);

/// f(n tau) = sum_i w_i <U'^n psi_i | U''^n psi_i> for n = 0..n_steps.
FidelitySeries fidelity_exact(const InitialState& state, const HamiltonianPair& pair,
                              std::size_t n_steps, double tau, const GridSpec& grid,
                              double hbar = 1.0, LeakMonitor monitor = {});

}  // namespace loschmidt
