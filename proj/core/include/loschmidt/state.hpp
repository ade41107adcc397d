#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "loschmidt/phase_space.hpp"

namespace loschmidt {

/// psi(q) = prod_d (pi sigma_d^2)^(-1/4) exp[-(q_d - qc_d)^2 / (2 sigma_d^2)
///                                            + i pc_d (q_d - qc_d) / hbar]
struct GaussianComponent {
  std::vector<double> center_q;
  std::vector<double> center_p;
  std::vector<double> sigma;
  double weight = 1.0;

  std::size_t dims() const noexcept { return center_q.size(); }
};

/// Finite classical mixture of Gaussian wavepackets. Weights sum to one.
class InitialState {
 public:
  explicit InitialState(std::vector<GaussianComponent> components);

  /// Pure one-dimensional Gaussian.
  static InitialState gaussian(double center_q, double center_p, double sigma);
  /// Pure D-dimensional Gaussian with the same centre and width in every coordinate.
  static InitialState gaussian(std::size_t dims, double center_q, double center_p, double sigma);

  const std::vector<GaussianComponent>& components() const noexcept { return components_; }
  std::size_t dims() const noexcept { return components_.front().dims(); }
  bool is_pure() const noexcept { return components_.size() == 1; }

 private:
  std::vector<GaussianComponent> components_;
};

/// Wavefunction of one component at position q.
std::complex<double> wavefunction(const GaussianComponent& c, std::span<const double> q,
                                  double hbar = 1.0);

/// rho_W(x) with the convention rho_W(q,p) = int dxi <q - xi/2|rho|q + xi/2> e^{i p xi/hbar},
/// so that h^{-D} int rho_W d^{2D}x = 1.
double wigner_density(const InitialState& state, const PhaseSpacePoint& x, double hbar = 1.0);

/// Weight-averaged component centres (first moments of rho_W).
PhaseSpacePoint mean_point(const InitialState& state);

/// Draws sample `index` of the seeded sequence into q and p.
void sample_point(const InitialState& state, std::uint64_t seed, std::uint64_t index, double hbar,
                  std::span<double> q, std::span<double> p);

/// n i.i.d. points from h^{-D} rho_W. Deterministic for fixed (state, n, seed, hbar).
std::vector<PhaseSpacePoint> sample(const InitialState& state, std::size_t n, std::uint64_t seed,
                                    double hbar = 1.0);

}  // namespace loschmidt
