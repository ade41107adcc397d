#include "loschmidt/estimators.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "ensemble.hpp"
#include "loschmidt/dynamics.hpp"
#include "loschmidt/errors.hpp"
#include "loschmidt/random.hpp"

namespace loschmidt {

using cd = std::complex<double>;

std::string to_string(Reference r) { return r == Reference::average ? "average" : "h_prime"; }

std::string to_string(F2Sampler s) {
  switch (s) {
    case F2Sampler::rotated: return "rotated";
    case F2Sampler::real_axis: return "real_axis";
    default: return "auto";
  }
}

Reference parse_reference(const std::string& s) {
  if (s == "average") return Reference::average;
  if (s == "h_prime") return Reference::h_prime;
  throw PreconditionError("unknown reference Hamiltonian '" + s + "' (expected average|h_prime)");
}

F2Sampler parse_f2_sampler(const std::string& s) {
  if (s == "auto") return F2Sampler::automatic;
  if (s == "rotated") return F2Sampler::rotated;
  if (s == "real_axis") return F2Sampler::real_axis;
  throw PreconditionError("unknown f2 sampler '" + s + "' (expected auto|rotated|real_axis)");
}

void EstimatorConfig::validate() const {
  if (n_traj < 1) throw PreconditionError("n_traj must be at least 1");
  if (!(tau > 0.0)) throw PreconditionError("tau must be positive");
  if (!(hbar > 0.0)) throw PreconditionError("hbar must be positive");
  if (!(proposal_width_factor > 0.0)) throw PreconditionError("proposal_width_factor must be positive");
  if (!(degenerate_a_threshold > 0.0)) {
    throw PreconditionError("degenerate_a_threshold must be positive");
  }
  if (batches < 2) throw PreconditionError("at least two batches are needed for batch means");
}

namespace {

void check_dims(const InitialState& state, const HamiltonianPair& pair) {
  if (state.dims() != pair.dims()) {
    throw PreconditionError("state has " + std::to_string(state.dims()) +
                            " degrees of freedom, Hamiltonians have " +
                            std::to_string(pair.dims()));
  }
}

// exp(-i phase / hbar) for a real accumulated phase. f1 and f2 share it so
// their degenerate paths agree bit for bit.
inline cd phase_factor(double phase, double hbar) { return std::polar(1.0, -phase / hbar); }

inline cd phase_factor(cd phase, double hbar) {
  return std::exp(phase.imag() / hbar) * phase_factor(phase.real(), hbar);
}

FidelitySeries unit_series(const EstimatorConfig& config, const std::string& name) {
  FidelitySeries s(config.n_steps, config.tau, name);
  std::fill(s.values.begin(), s.values.end(), cd(1.0, 0.0));
  s.meta.n_traj = config.n_traj;
  s.meta.seed = config.seed;
  return s;
}

FidelitySeries from_ensemble(const detail::EnsembleResult& r, const EstimatorConfig& config,
                             const std::string& name, bool batch_means) {
  FidelitySeries s(config.n_steps, config.tau, name);
  if (batch_means) {
    detail::finalize_batch_means(r, s.values, s.std_error);
  } else {
    detail::finalize_iid(r, s.values, s.std_error);
  }
  s.meta.n_traj = config.n_traj;
  s.meta.seed = config.seed;
  return s;
}

double gaussian_moment(int k, double mu, double s) {
  const double v = s * s;
  switch (k) {
    case 0: return 1.0;
    case 1: return mu;
    case 2: return mu * mu + v;
    case 3: return mu * mu * mu + 3.0 * mu * v;
    default: return mu * mu * mu * mu + 6.0 * mu * mu * v + 3.0 * v * v;
  }
}

double gaussian_mean(const CoordinateFunction& f, double mu, double s) {
  double m = 0.0;
  const auto& c = f.polynomial().coefficients();
  for (int k = 0; k <= Polynomial::kMaxDegree; ++k) {
    m += c[static_cast<std::size_t>(k)] * gaussian_moment(k, mu, s);
  }
  const auto& cs = f.cosine();
  if (!cs.is_zero()) {
    m += cs.amplitude * std::cos(cs.wavenumber * mu) *
         std::exp(-0.5 * cs.wavenumber * cs.wavenumber * s * s);
  }
  return m;
}

}  // namespace

double mean_perturbation(const InitialState& state, const HamiltonianPair& pair, double hbar) {
  check_dims(state, pair);
  double m = 0.0;
  for (const auto& c : state.components()) {
    for (std::size_t d = 0; d < state.dims(); ++d) {
      const double sq = c.sigma[d] / std::numbers::sqrt2;
      const double sp = hbar / (c.sigma[d] * std::numbers::sqrt2);
      m += c.weight * (gaussian_mean(pair.delta.potential(d), c.center_q[d], sq) +
                       gaussian_mean(pair.delta.kinetic(d), c.center_p[d], sp));
    }
  }
  return m;
}

FidelitySeries f0(const InitialState& state, const HamiltonianPair& pair,
                  const EstimatorConfig& config) {
  config.validate();
  check_dims(state, pair);
  if (pair.delta.is_zero()) return unit_series(config, "f0");

  const std::size_t dims = state.dims();
  const std::size_t n_values = config.n_steps + 1;
  auto result = detail::run_ensemble(
      config.n_traj, n_values, config.batches, config.threads,
      [&](std::size_t index, std::span<cd> w) {
        std::vector<double> q(dims), p(dims);
        sample_point(state, config.seed, index, config.hbar, q, p);
        const double dh = pair.delta(q, p);
        for (std::size_t n = 0; n < n_values; ++n) {
          w[n] = phase_factor(static_cast<double>(n) * config.tau * dh, config.hbar);
        }
      });
  return from_ensemble(result, config, "f0", false);
}

FidelitySeries f1_dr(const InitialState& state, const HamiltonianPair& pair,
                     const EstimatorConfig& config, Reference reference) {
  config.validate();
  check_dims(state, pair);
  const std::string name = reference == Reference::average ? "f1" : "f1_h_prime";
  if (pair.delta.is_zero()) return unit_series(config, name);

  const SeparableHamiltonian& dynamics =
      reference == Reference::average ? pair.average : pair.h_prime;
  const SeparableHamiltonian& delta = pair.delta;
  const std::size_t dims = state.dims();
  const std::size_t n_values = config.n_steps + 1;
  const double tau = config.tau;

  auto result = detail::run_ensemble(
      config.n_traj, n_values, config.batches, config.threads,
      [&](std::size_t index, std::span<cd> w) {
        std::vector<double> q(dims), p(dims);
        sample_point(state, config.seed, index, config.hbar, q, p);
        double phase = 0.0;
        w[0] = cd(1.0, 0.0);
        for (std::size_t n = 1; n < n_values; ++n) {
          drift_inplace(q.data(), p.data(), dims, dynamics, tau);
          // dH at (new position, old momentum)
          double dh = 0.0;
          for (std::size_t d = 0; d < dims; ++d) {
            dh += delta.kinetic(d).value(p[d]) + delta.potential(d).value(q[d]);
          }
          phase += tau * dh;
          kick_inplace(q.data(), p.data(), dims, dynamics, tau);
          check_escape(q.data(), p.data(), dims, n);
          w[n] = phase_factor(phase, config.hbar);
        }
      });
  auto series = from_ensemble(result, config, name, false);
  series.meta.variant = "reference=" + to_string(reference);
  return series;
}

namespace {

void check_f2_preconditions(const InitialState& state, const HamiltonianPair& pair) {
  check_dims(state, pair);
  if (pair.dims() != 1) throw PreconditionError("second-order estimators require D = 1");
  if (!pair.delta.kinetic_is_zero()) {
    throw PreconditionError(
        "second-order estimators require a momentum-independent perturbation (dT = 0)");
  }
}

}  // namespace

FidelitySeries f2_mc(const InitialState& state, const HamiltonianPair& pair,
                     const EstimatorConfig& config) {
  config.validate();
  check_f2_preconditions(state, pair);
  if (pair.delta.is_zero()) return unit_series(config, "f2_mc");

  F2Sampler sampler = config.f2_sampler;
  if (sampler == F2Sampler::automatic) {
    sampler = pair.average.is_polynomial() && pair.delta.is_polynomial() ? F2Sampler::rotated
                                                                         : F2Sampler::real_axis;
  }

  const CoordinateFunction& kinetic = pair.average.kinetic(0);
  const CoordinateFunction& potential = pair.average.potential(0);
  const CoordinateFunction& dv = pair.delta.potential(0);
  const double tau = config.tau;
  const double hbar = config.hbar;
  const double h = 2.0 * std::numbers::pi * hbar;
  const double threshold = config.degenerate_a_threshold;
  const std::size_t n_values = config.n_steps + 1;

  detail::EnsembleResult result;
  if (sampler == F2Sampler::rotated) {
    result = detail::run_ensemble(
        config.n_traj, n_values, config.batches, config.threads,
        [&](std::size_t index, std::span<cd> w) {
          double q0 = 0.0, p0 = 0.0;
          sample_point(state, config.seed, index, hbar, {&q0, 1}, {&p0, 1});
          auto kicks = sample_engine(config.seed, index, Stream::momentum_kicks);
          std::normal_distribution<double> normal(0.0, 1.0);
          cd q(q0, 0.0), p(p0, 0.0), phase(0.0, 0.0);
          w[0] = cd(1.0, 0.0);
          for (std::size_t n = 1; n < n_values; ++n) {
            q = q + tau * kinetic.derivative(p, 1);
            // Exponent sign of the smeared delta, exp(i a xi^2 + i b xi).
            const cd a = -tau * dv.derivative(q, 2) / (8.0 * hbar);
            p = p - tau * potential.derivative(q, 1);
            if (std::abs(a) >= threshold) {
              // Ray p = c + hbar e^{-i theta} u on which delta~ dp is N(0, 2|a|) du.
              const double theta = 0.25 * std::numbers::pi - 0.5 * std::arg(a);
              const double u = std::sqrt(2.0 * std::abs(a)) * normal(kicks);
              p = p + hbar * std::polar(u, -theta);
            }
            phase = phase + tau * dv.value(q);
            check_escape(&q, &p, 1, n);
            w[n] = phase_factor(phase, hbar);
          }
        });
  } else {
    const double width = config.proposal_width_factor;
    result = detail::run_ensemble(
        config.n_traj, n_values, config.batches, config.threads,
        [&](std::size_t index, std::span<cd> w) {
          double q = 0.0, p = 0.0;
          sample_point(state, config.seed, index, hbar, {&q, 1}, {&p, 1});
          auto kicks = sample_engine(config.seed, index, Stream::momentum_kicks);
          std::normal_distribution<double> normal(0.0, 1.0);
          double phase = 0.0;
          double log_weight = 0.0;
          double weight_angle = 0.0;
          w[0] = cd(1.0, 0.0);
          for (std::size_t n = 1; n < n_values; ++n) {
            q = q + tau * kinetic.derivative(p, 1);
            const double a = -tau * dv.derivative(q, 2) / (8.0 * hbar);
            p = p - tau * potential.derivative(q, 1);
            if (std::abs(a) >= threshold) {
              const double sigma = width * hbar * std::sqrt(2.0 * std::numbers::pi * std::abs(a));
              const double z = normal(kicks);
              const double b = sigma * z / hbar;
              p = p + sigma * z;
              // delta~(p) / g(p), g the N(c, sigma^2) proposal density.
              log_weight += std::log(std::sqrt(std::numbers::pi / std::abs(a)) / h) + 0.5 * z * z +
                            std::log(std::sqrt(2.0 * std::numbers::pi) * sigma);
              weight_angle += 0.25 * std::numbers::pi * (a > 0.0 ? 1.0 : -1.0) - b * b / (4.0 * a);
            }
            phase += tau * dv.value(q);
            check_escape(&q, &p, 1, n);
            w[n] = std::polar(std::exp(log_weight), weight_angle) * phase_factor(phase, hbar);
          }
        });
  }

  auto series = from_ensemble(result, config, "f2_mc", true);
  series.meta.effective_sample_size = detail::effective_sample_size(result, config.n_steps);
  series.meta.variant = "sampler=" + to_string(sampler);
  if (series.meta.effective_sample_size < 0.01 * static_cast<double>(config.n_traj)) {
    std::ostringstream msg;
    msg << "effective sample size collapsed to " << series.meta.effective_sample_size << " of "
        << config.n_traj << " paths";
    series.meta.warnings.push_back(msg.str());
  }
  return series;
}

}  // namespace loschmidt
