#pragma once

#include <cstddef>
#include <vector>

#include "loschmidt/series.hpp"

namespace loschmidt {

struct Spectrum {
  std::vector<double> frequencies;
  std::vector<double> intensities;
  double damping_time = 0.0;

  double bin_width() const noexcept {
    return frequencies.size() > 1 ? frequencies[1] - frequencies[0] : 0.0;
  }
};

/// I(w) = Re int_0^T f(t) e^{i w t} e^{-t/damping_time} dt by the trapezoidal
/// rule on the series grid, for w = k dw, dw = 2 pi / T, |w| up to pi / tau.
/// A pure phase f = exp(-i w0 t) peaks at w = w0.
Spectrum spectrum(const FidelitySeries& series, double damping_time);

/// Frequencies of local maxima whose intensity exceeds `relative_threshold`
/// times the global maximum, in increasing frequency.
std::vector<double> find_peaks(const Spectrum& s, double relative_threshold = 0.01);

}  // namespace loschmidt
