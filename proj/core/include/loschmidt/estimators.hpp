#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "loschmidt/hamiltonian.hpp"
#include "loschmidt/series.hpp"
#include "loschmidt/state.hpp"

namespace loschmidt {

/// Dynamics used for the first-order phase. The average Hamiltonian is the
/// exact choice; h_prime exists to show what goes wrong without it.
enum class Reference { average, h_prime };

/// How f2_mc integrates over the smeared momentum update.
///  - rotated: each momentum integral is taken along the complex ray on
///    which the smeared delta is a real normal density; paths carry complex
///    coordinates and a pure phase weight. Exact for polynomial potentials.
///  - real_axis: Gaussian importance proposal on real momenta with complex
///    weights delta~/g. Heavy-tailed; only useful as a smoke test.
///  - automatic: rotated for polynomial potentials, real_axis otherwise.
enum class F2Sampler { automatic, rotated, real_axis };

std::string to_string(Reference r);
std::string to_string(F2Sampler s);
Reference parse_reference(const std::string& s);
F2Sampler parse_f2_sampler(const std::string& s);

struct EstimatorConfig {
  std::size_t n_traj = 10000;
  std::uint64_t seed = 1;
  double tau = 0.05;
  std::size_t n_steps = 252;
  double hbar = 1.0;
  /// f2 real-axis proposal width in units of hbar sqrt(2 pi |a_n|).
  double proposal_width_factor = 2.0;
  /// |a_n| below this switches f2 to the Dirac-delta (classical) momentum update.
  double degenerate_a_threshold = 1e-10;
  /// Batches for the f2 batch-means error.
  std::size_t batches = 32;
  F2Sampler f2_sampler = F2Sampler::automatic;
  /// Worker threads; 0 uses the runtime default. Results do not depend on it.
  int threads = 0;

  void validate() const;
};

/// Zeroth order: <exp(-i t dH(x0) / hbar)> over rho_W; no trajectories.
FidelitySeries f0(const InitialState& state, const HamiltonianPair& pair,
                  const EstimatorConfig& config);

/// First order (dephasing representation) on the kicked map:
/// <exp(-i tau/hbar sum_{j<n} dH(q_{j+1}, p_j))> along reference trajectories.
FidelitySeries f1_dr(const InitialState& state, const HamiltonianPair& pair,
                     const EstimatorConfig& config, Reference reference = Reference::average);

/// Second order with stochastic ("smeared") momentum updates. Requires D = 1
/// and a momentum-independent perturbation.
FidelitySeries f2_mc(const InitialState& state, const HamiltonianPair& pair,
                     const EstimatorConfig& config);

/// Second order, evaluated exactly as a chain of complex Gaussian integrals.
/// Requires D = 1, one Gaussian component, quadratic T and V, quadratic dV.
FidelitySeries f2_gaussian_chain(const InitialState& state, const HamiltonianPair& pair,
                                 const EstimatorConfig& config);

/// Exact phase-space average <dH>_{rho_W} for polynomial dH (Gaussian moments).
double mean_perturbation(const InitialState& state, const HamiltonianPair& pair, double hbar);

}  // namespace loschmidt
