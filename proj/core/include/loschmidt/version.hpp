#pragma once

#include <string>

namespace loschmidt {

/// Library version, e.g. "0.1.0".
std::string version();
/// FFT backend identification string.
std::string fft_backend_version();

}  // namespace loschmidt
