#include "loschmidt/state.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "loschmidt/errors.hpp"
#include "loschmidt/random.hpp"

namespace loschmidt {

InitialState::InitialState(std::vector<GaussianComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw PreconditionError("initial state needs at least one component");
  const std::size_t dims = components_.front().dims();
  if (dims == 0) throw PreconditionError("initial state needs at least one coordinate");
  double total = 0.0;
  for (const auto& c : components_) {
    if (c.center_q.size() != dims || c.center_p.size() != dims || c.sigma.size() != dims) {
      throw PreconditionError("all components must share the same dimension");
    }
    for (double s : c.sigma) {
      if (!(s > 0.0)) throw PreconditionError("component widths must be positive");
    }
    if (!(c.weight > 0.0 && c.weight <= 1.0)) {
      throw PreconditionError("component weights must lie in (0, 1]");
    }
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw PreconditionError("component weights sum to " + std::to_string(total) + ", not 1");
  }
}

InitialState InitialState::gaussian(double center_q, double center_p, double sigma) {
  return gaussian(1, center_q, center_p, sigma);
}

InitialState InitialState::gaussian(std::size_t dims, double center_q, double center_p,
                                    double sigma) {
  GaussianComponent c;
  c.center_q.assign(dims, center_q);
  c.center_p.assign(dims, center_p);
  c.sigma.assign(dims, sigma);
  c.weight = 1.0;
  return InitialState({c});
}

std::complex<double> wavefunction(const GaussianComponent& c, std::span<const double> q,
                                  double hbar) {
  if (q.size() != c.dims()) throw PreconditionError("position dimension mismatch");
  double log_amp = 0.0;
  double phase = 0.0;
  for (std::size_t d = 0; d < q.size(); ++d) {
    const double s = c.sigma[d];
    const double dq = q[d] - c.center_q[d];
    log_amp += -0.25 * std::log(std::numbers::pi * s * s) - dq * dq / (2.0 * s * s);
    phase += c.center_p[d] * dq / hbar;
  }
  return std::polar(std::exp(log_amp), phase);
}

double wigner_density(const InitialState& state, const PhaseSpacePoint& x, double hbar) {
  if (x.q.size() != state.dims() || x.p.size() != state.dims()) {
    throw PreconditionError("phase-space point dimension does not match the state");
  }
  const double prefactor = std::pow(2.0, static_cast<double>(state.dims()));
  double rho = 0.0;
  for (const auto& c : state.components()) {
    double exponent = 0.0;
    for (std::size_t d = 0; d < state.dims(); ++d) {
      const double dq = (x.q[d] - c.center_q[d]) / c.sigma[d];
      const double dp = (x.p[d] - c.center_p[d]) * c.sigma[d] / hbar;
      exponent += dq * dq + dp * dp;
    }
    rho += c.weight * prefactor * std::exp(-exponent);
  }
  return rho;
}

PhaseSpacePoint mean_point(const InitialState& state) {
  PhaseSpacePoint m(std::vector<double>(state.dims(), 0.0), std::vector<double>(state.dims(), 0.0));
  for (const auto& c : state.components()) {
    for (std::size_t d = 0; d < state.dims(); ++d) {
      m.q[d] += c.weight * c.center_q[d];
      m.p[d] += c.weight * c.center_p[d];
    }
  }
  return m;
}

void sample_point(const InitialState& state, std::uint64_t seed, std::uint64_t index, double hbar,
                  std::span<double> q, std::span<double> p) {
  auto engine = sample_engine(seed, index, Stream::initial_condition);
  const auto& comps = state.components();
  std::size_t pick = 0;
  if (comps.size() > 1) {
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(engine);
    double acc = 0.0;
    pick = comps.size() - 1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      acc += comps[i].weight;
      if (u < acc) {
        pick = i;
        break;
      }
    }
  }
  const auto& c = comps[pick];
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t d = 0; d < state.dims(); ++d) {
    q[d] = c.center_q[d] + c.sigma[d] / std::numbers::sqrt2 * normal(engine);
    p[d] = c.center_p[d] + hbar / (c.sigma[d] * std::numbers::sqrt2) * normal(engine);
  }
}

std::vector<PhaseSpacePoint> sample(const InitialState& state, std::size_t n, std::uint64_t seed,
                                    double hbar) {
  if (n == 0) throw PreconditionError("sample count must be at least 1");
  std::vector<PhaseSpacePoint> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].q.resize(state.dims());
    out[i].p.resize(state.dims());
    sample_point(state, seed, i, hbar, out[i].q, out[i].p);
  }
  return out;
}

}  // namespace loschmidt
