#include "loschmidt/qgrid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>

#include "loschmidt/errors.hpp"
#include "loschmidt/series_io.hpp"

namespace loschmidt {

namespace {

// FFTW's planner is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Signed FFT frequency index of bin j.
long signed_bin(std::size_t j, std::size_t m) {
  return j < m / 2 ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(m);
}

}  // namespace

GridSpec GridSpec::uniform(std::size_t dims, double q_min, double q_max, std::size_t points,
                           bool periodic_domain) {
  GridSpec g;
  g.q_min.assign(dims, q_min);
  g.q_max.assign(dims, q_max);
  g.points = points;
  g.periodic_domain = periodic_domain;
  g.validate();
  return g;
}

std::size_t GridSpec::total_points() const noexcept {
  std::size_t n = 1;
  for (std::size_t d = 0; d < dims(); ++d) n *= points;
  return n;
}

double GridSpec::cell_volume() const {
  double v = 1.0;
  for (std::size_t d = 0; d < dims(); ++d) v *= spacing(d);
  return v;
}

double GridSpec::momentum(std::size_t d, std::size_t j, double hbar) const {
  const double length = q_max.at(d) - q_min.at(d);
  return 2.0 * std::numbers::pi * hbar * static_cast<double>(signed_bin(j, points)) / length;
}

void GridSpec::validate() const {
  if (dims() < 1 || dims() > 2) throw PreconditionError("grid propagation supports D = 1 or 2");
  if (q_max.size() != q_min.size()) throw PreconditionError("grid extent dimension mismatch");
  if (!is_power_of_two(points) || points < 4) {
    throw PreconditionError("grid point count must be a power of two >= 4");
  }
  for (std::size_t d = 0; d < dims(); ++d) {
    if (!(q_max[d] > q_min[d])) throw PreconditionError("grid extent must be nonempty");
  }
}

GridSpec covering_grid(const InitialState& state, std::size_t points, double sigmas) {
  const std::size_t dims = state.dims();
  GridSpec g;
  g.q_min.assign(dims, 0.0);
  g.q_max.assign(dims, 0.0);
  g.points = points;
  for (std::size_t d = 0; d < dims; ++d) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& c : state.components()) {
      lo = std::min(lo, c.center_q[d] - sigmas * c.sigma[d]);
      hi = std::max(hi, c.center_q[d] + sigmas * c.sigma[d]);
    }
    g.q_min[d] = lo;
    g.q_max[d] = hi;
  }
  g.validate();
  return g;
}

GridWavefunction::GridWavefunction(GridSpec grid, std::vector<std::complex<double>> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  grid_.validate();
  if (values_.size() != grid_.total_points()) {
    throw PreconditionError("wavefunction size does not match the grid");
  }
}

GridWavefunction GridWavefunction::from_component(const GaussianComponent& c, const GridSpec& grid,
                                                  double hbar) {
  grid.validate();
  if (c.dims() != grid.dims()) throw PreconditionError("state and grid dimensions differ");
  if (!grid.periodic_domain) {
    for (std::size_t d = 0; d < grid.dims(); ++d) {
      if (c.center_q[d] - 8.0 * c.sigma[d] < grid.q_min[d] ||
          c.center_q[d] + 8.0 * c.sigma[d] > grid.q_max[d]) {
        throw PreconditionError("grid extent does not cover the state to 8 sigma");
      }
    }
  }
  std::vector<std::complex<double>> values(grid.total_points());
  const std::size_t m = grid.points;
  std::vector<double> q(grid.dims());
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    std::size_t rest = idx;
    for (std::size_t d = grid.dims(); d-- > 0;) {
      q[d] = grid.position(d, rest % m);
      rest /= m;
    }
    values[idx] = wavefunction(c, q, hbar);
  }
  GridWavefunction psi(grid, std::move(values));
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "sampled wavefunction norm " << format_double(norm) << " differs from 1 by more than 1e-10";
    throw PreconditionError(msg.str());
  }
  return psi;
}

double GridWavefunction::norm() const {
  double s = 0.0;
  for (const auto& v : values_) s += std::norm(v);
  return s * grid_.cell_volume();
}

std::complex<double> GridWavefunction::overlap(const GridWavefunction& other) const {
  if (other.values_.size() != values_.size()) throw PreconditionError("grid mismatch in overlap");
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) s += std::conj(values_[i]) * other.values_[i];
  return s * grid_.cell_volume();
}

struct KickedPropagator::Impl {
  GridSpec grid;
  LeakMonitor monitor;
  std::vector<std::complex<double>> potential_phase;
  std::vector<std::complex<double>> kinetic_phase;  // includes the 1/M^D normalisation
  std::vector<char> position_edge;
  std::vector<char> momentum_edge;
  fftw_complex* buffer = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  ~Impl() {
    std::lock_guard lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
    if (buffer) fftw_free(buffer);
  }
};

KickedPropagator::KickedPropagator(const GridSpec& grid, const SeparableHamiltonian& h, double tau,
                                   double hbar, LeakMonitor monitor)
    : impl_(std::make_unique<Impl>()) {
  grid.validate();
  if (h.dims() != grid.dims()) {
    throw PreconditionError("Hamiltonian has " + std::to_string(h.dims()) +
                            " degrees of freedom but the grid has " +
                            std::to_string(grid.dims()));
  }
  auto& im = *impl_;
  im.grid = grid;
  im.monitor = monitor;
  const std::size_t dims = grid.dims();
  const std::size_t m = grid.points;
  const std::size_t total = grid.total_points();
  const double scale = 1.0 / static_cast<double>(total);

  im.potential_phase.resize(total);
  im.kinetic_phase.resize(total);
  im.position_edge.assign(total, 0);
  im.momentum_edge.assign(total, 0);
  const double edge_bins = monitor.edge_fraction * static_cast<double>(m);
  for (std::size_t idx = 0; idx < total; ++idx) {
    double v = 0.0, t = 0.0;
    bool pos_edge = false, mom_edge = false;
    std::size_t rest = idx;
    for (std::size_t d = dims; d-- > 0;) {
      const std::size_t i = rest % m;
      rest /= m;
      v += h.potential(d).value(grid.position(d, i));
      t += h.kinetic(d).value(grid.momentum(d, i, hbar));
      const double from_edge = std::min(static_cast<double>(i), static_cast<double>(m - 1 - i));
      pos_edge = pos_edge || from_edge < edge_bins;
      const double from_nyquist =
          static_cast<double>(m) / 2.0 - std::abs(static_cast<double>(signed_bin(i, m)));
      mom_edge = mom_edge || from_nyquist <= edge_bins;
    }
    im.potential_phase[idx] = std::polar(1.0, -tau * v / hbar);
    im.kinetic_phase[idx] = std::polar(scale, -tau * t / hbar);
    im.position_edge[idx] = pos_edge ? 1 : 0;
    im.momentum_edge[idx] = mom_edge ? 1 : 0;
  }

  std::lock_guard lock(planner_mutex());
  im.buffer = fftw_alloc_complex(total);
  const int n[2] = {static_cast<int>(m), static_cast<int>(m)};
  im.forward = fftw_plan_dft(static_cast<int>(dims), n, im.buffer, im.buffer, FFTW_FORWARD,
                             FFTW_ESTIMATE);
  im.backward = fftw_plan_dft(static_cast<int>(dims), n, im.buffer, im.buffer, FFTW_BACKWARD,
                              FFTW_ESTIMATE);
  if (!im.forward || !im.backward) throw NumericalError("FFTW planning failed");
}

KickedPropagator::~KickedPropagator() = default;
KickedPropagator::KickedPropagator(KickedPropagator&&) noexcept = default;
KickedPropagator& KickedPropagator::operator=(KickedPropagator&&) noexcept = default;

void KickedPropagator::step(GridWavefunction& psi) {
  auto& im = *impl_;
  auto& values = psi.values();
  if (values.size() != im.grid.total_points()) throw PreconditionError("grid mismatch in step");
  auto* buf = reinterpret_cast<std::complex<double>*>(im.buffer);
  const std::size_t total = values.size();

  std::copy(values.begin(), values.end(), buf);
  fftw_execute(im.forward);
  double mom_total = 0.0, mom_edge = 0.0;
  for (std::size_t i = 0; i < total; ++i) {
    const double w = std::norm(buf[i]);
    mom_total += w;
    if (im.momentum_edge[i]) mom_edge += w;
    buf[i] *= im.kinetic_phase[i];
  }
  fftw_execute(im.backward);
  double pos_edge = 0.0;
  for (std::size_t i = 0; i < total; ++i) {
    values[i] = buf[i] * im.potential_phase[i];
    if (im.position_edge[i]) pos_edge += std::norm(values[i]);
  }
  last_momentum_edge_ = mom_total > 0.0 ? mom_edge / mom_total : 0.0;
  last_position_edge_ = pos_edge * im.grid.cell_volume();

  if (!im.monitor.enabled) return;
  if (last_momentum_edge_ > im.monitor.max_probability) {
    std::ostringstream msg;
    msg << "momentum aliasing: probability " << last_momentum_edge_
        << " within the outer " << im.monitor.edge_fraction * 100
        << "% of the conjugate momentum grid; increase grid points or shrink the extent";
    throw GridAliasing(msg.str());
  }
  if (!im.grid.periodic_domain && last_position_edge_ > im.monitor.max_probability) {
    std::ostringstream msg;
    msg << "boundary leak: probability " << last_position_edge_ << " within the outer "
        << im.monitor.edge_fraction * 100 << "% of the position grid; enlarge the extent";
    throw GridAliasing(msg.str());
  }
}

GridWavefunction kick_step(const GridWavefunction& psi, const SeparableHamiltonian& h, double tau,
                           double hbar) {
  GridWavefunction out = psi;
  if (tau == 0.0) return out;
  LeakMonitor off;
  off.enabled = false;
  KickedPropagator(psi.grid(), h, tau, hbar, off).step(out);
  return out;
}

FidelitySeries fidelity_exact(const InitialState& state, const HamiltonianPair& pair,
                              std::size_t n_steps, double tau, const GridSpec& grid, double hbar,
                              LeakMonitor monitor) {
  if (state.dims() != pair.dims()) throw PreconditionError("state and Hamiltonian dimensions differ");
  FidelitySeries series(n_steps, tau, "exact");
  series.values.assign(n_steps + 1, std::complex<double>(0.0, 0.0));
  series.values[0] = 1.0;

  for (const auto& component : state.components()) {
    GridWavefunction psi_prime = GridWavefunction::from_component(component, grid, hbar);
    GridWavefunction psi_double_prime = psi_prime;
    KickedPropagator u_prime(grid, pair.h_prime, tau, hbar, monitor);
    KickedPropagator u_double_prime(grid, pair.h_double_prime, tau, hbar, monitor);
    for (std::size_t n = 1; n <= n_steps; ++n) {
      u_prime.step(psi_prime);
      u_double_prime.step(psi_double_prime);
      series.values[n] += component.weight * psi_prime.overlap(psi_double_prime);
    }
  }
  series.meta.n_traj = 0;
  return series;
}

}  // namespace loschmidt

#include "loschmidt/version.hpp"

namespace loschmidt {

std::string version() { return LOSCHMIDT_VERSION; }
std::string fft_backend_version() { return fftw_version; }

}  // namespace loschmidt
