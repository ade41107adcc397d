#include "loschmidt/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "loschmidt/errors.hpp"

namespace loschmidt {

namespace {

[[noreturn]] void throw_escape(std::size_t step) {
  std::ostringstream msg;
  msg << "trajectory escaped beyond |x| = " << kEscapeBound << " at step " << step;
  throw TrajectoryEscape(msg.str());
}

bool escaped(double v) { return !(std::abs(v) <= kEscapeBound); }

}  // namespace

PhaseSpacePoint map_step(const PhaseSpacePoint& x, const SeparableHamiltonian& h, double tau) {
  if (x.q.size() != h.dims() || x.p.size() != h.dims()) {
    throw PreconditionError("phase-space point dimension does not match the Hamiltonian");
  }
  PhaseSpacePoint out = x;
  map_step_inplace(out.q.data(), out.p.data(), h.dims(), h, tau);
  return out;
}

void check_escape(const double* q, const double* p, std::size_t dims, std::size_t step) {
  for (std::size_t d = 0; d < dims; ++d) {
    if (escaped(q[d]) || escaped(p[d])) throw_escape(step);
  }
}

void check_escape(const std::complex<double>* q, const std::complex<double>* p, std::size_t dims,
                  std::size_t step) {
  for (std::size_t d = 0; d < dims; ++d) {
    if (escaped(std::abs(q[d])) || escaped(std::abs(p[d]))) throw_escape(step);
  }
}

Trajectory trajectory(const PhaseSpacePoint& x0, const SeparableHamiltonian& h,
                      std::size_t n_steps, double tau, std::string tag) {
  Trajectory traj;
  traj.tau = tau;
  traj.hamiltonian = std::move(tag);
  traj.points.reserve(n_steps + 1);
  traj.points.push_back(x0);
  check_escape(x0.q.data(), x0.p.data(), x0.dims(), 0);
  for (std::size_t n = 1; n <= n_steps; ++n) {
    traj.points.push_back(map_step(traj.points.back(), h, tau));
    const auto& x = traj.points.back();
    check_escape(x.q.data(), x.p.data(), x.dims(), n);
  }
  return traj;
}

}  // namespace loschmidt
