#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace loschmidt {

struct SeriesMeta {
  std::string estimator;
  std::size_t n_traj = 0;
  std::uint64_t seed = 0;
  /// Effective sample size of the final-step weights (importance-weighted runs only).
  double effective_sample_size = 0.0;
  /// Method variant actually used, e.g. "reference=average", "sampler=rotated".
  std::string variant;
  std::vector<std::string> warnings;
};

/// Complex fidelity amplitude f(n tau), n = 0..N, with per-step statistical
/// error (0 for deterministic evaluations). Monte Carlo series reuse one path
/// ensemble for every step, so errors are correlated across steps.
struct FidelitySeries {
  std::vector<double> times;
  std::vector<std::complex<double>> values;
  std::vector<double> std_error;
  SeriesMeta meta;

  FidelitySeries() = default;
  /// Zero-filled series on the grid n * tau, n = 0..n_steps.
  FidelitySeries(std::size_t n_steps, double tau, std::string estimator);

  std::size_t size() const noexcept { return values.size(); }
  std::size_t n_steps() const noexcept { return values.empty() ? 0 : values.size() - 1; }
  double tau() const noexcept { return times.size() > 1 ? times[1] - times[0] : 0.0; }

  /// Throws PreconditionError if the parallel arrays disagree in length or
  /// if a deterministic series does not start at 1 + 0i.
  void validate() const;
};

/// Per-step |a - b| of two series on the same grid.
std::vector<double> deviation(const FidelitySeries& a, const FidelitySeries& b);

}  // namespace loschmidt
