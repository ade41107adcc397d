#include "loschmidt/series.hpp"

#include <cmath>

#include "loschmidt/errors.hpp"

namespace loschmidt {

FidelitySeries::FidelitySeries(std::size_t n_steps, double tau, std::string estimator)
    : times(n_steps + 1), values(n_steps + 1), std_error(n_steps + 1, 0.0) {
  for (std::size_t n = 0; n <= n_steps; ++n) times[n] = static_cast<double>(n) * tau;
  meta.estimator = std::move(estimator);
}

void FidelitySeries::validate() const {
  if (times.size() != values.size() || values.size() != std_error.size()) {
    throw PreconditionError("fidelity series arrays have inconsistent lengths");
  }
  if (values.empty()) throw PreconditionError("fidelity series is empty");
  if (std_error[0] == 0.0 && std::abs(values[0] - std::complex<double>(1.0, 0.0)) > 1e-12) {
    throw PreconditionError("deterministic fidelity series must start at 1 + 0i");
  }
}

std::vector<double> deviation(const FidelitySeries& a, const FidelitySeries& b) {
  if (a.size() != b.size()) throw PreconditionError("series lengths differ");
  std::vector<double> out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) out[n] = std::abs(a.values[n] - b.values[n]);
  return out;
}

}  // namespace loschmidt
