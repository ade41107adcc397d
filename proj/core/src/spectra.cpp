#include "loschmidt/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "loschmidt/errors.hpp"

namespace loschmidt {

Spectrum spectrum(const FidelitySeries& series, double damping_time) {
  if (series.times.size() != series.values.size()) {
    throw PreconditionError("series times and values differ in length");
  }
  if (!(damping_time > 0.0)) throw PreconditionError("damping_time must be positive");
  const std::size_t n_steps = series.n_steps();
  if (n_steps < 8) throw PreconditionError("series too short for a spectrum (need N >= 8)");
  const double tau = series.tau();
  for (std::size_t n = 1; n < series.times.size(); ++n) {
    if (std::abs(series.times[n] - static_cast<double>(n) * tau) > 1e-9 * std::max(1.0, series.times[n])) {
      throw PreconditionError("spectrum requires a uniform time grid starting at 0");
    }
  }

  const double total_time = static_cast<double>(n_steps) * tau;
  const double dw = 2.0 * std::numbers::pi / total_time;
  const long k_max = static_cast<long>(n_steps / 2);

  // Damped, trapezoid-weighted samples.
  std::vector<std::complex<double>> g(n_steps + 1);
  for (std::size_t n = 0; n <= n_steps; ++n) {
    const double end_weight = (n == 0 || n == n_steps) ? 0.5 : 1.0;
    g[n] = end_weight * tau * series.values[n] * std::exp(-series.times[n] / damping_time);
  }

  Spectrum s;
  s.damping_time = damping_time;
  s.frequencies.reserve(static_cast<std::size_t>(2 * k_max + 1));
  s.intensities.reserve(static_cast<std::size_t>(2 * k_max + 1));
  for (long k = -k_max; k <= k_max; ++k) {
    const double w = static_cast<double>(k) * dw;
    std::complex<double> acc = 0.0;
    for (std::size_t n = 0; n <= n_steps; ++n) {
      acc += g[n] * std::polar(1.0, w * series.times[n]);
    }
    s.frequencies.push_back(w);
    s.intensities.push_back(acc.real());
  }
  return s;
}

std::vector<double> find_peaks(const Spectrum& s, double relative_threshold) {
  std::vector<double> peaks;
  if (s.intensities.size() < 3) return peaks;
  const double top = *std::max_element(s.intensities.begin(), s.intensities.end());
  for (std::size_t i = 1; i + 1 < s.intensities.size(); ++i) {
    const double v = s.intensities[i];
    if (v > relative_threshold * top && v > s.intensities[i - 1] && v >= s.intensities[i + 1]) {
      peaks.push_back(s.frequencies[i]);
    }
  }
  return peaks;
}

}  // namespace loschmidt
