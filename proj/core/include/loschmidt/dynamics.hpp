#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "loschmidt/hamiltonian.hpp"
#include "loschmidt/phase_space.hpp"

namespace loschmidt {

/// Largest phase-space coordinate magnitude before a trajectory is declared escaped.
inline constexpr double kEscapeBound = 1e12;

struct Trajectory {
  std::vector<PhaseSpacePoint> points;  // x_0 .. x_N
  double tau = 0.0;
  std::string hamiltonian;
};

/// Drift-then-kick symplectic map of the kicked quantum map:
///   q_n = q_{n-1} + tau dT/dp(p_{n-1}),  p_n = p_{n-1} - tau dV/dq(q_n).
PhaseSpacePoint map_step(const PhaseSpacePoint& x, const SeparableHamiltonian& h, double tau);

/// q_d += tau dT_d/dp(p_d).
template <class S>
void drift_inplace(S* q, const S* p, std::size_t dims, const SeparableHamiltonian& h, double tau) {
  for (std::size_t d = 0; d < dims; ++d) q[d] = q[d] + tau * h.kinetic(d).derivative(p[d], 1);
}

/// p_d -= tau dV_d/dq(q_d), evaluated at the already drifted positions.
template <class S>
void kick_inplace(const S* q, S* p, std::size_t dims, const SeparableHamiltonian& h, double tau) {
  for (std::size_t d = 0; d < dims; ++d) p[d] = p[d] - tau * h.potential(d).derivative(q[d], 1);
}

template <class S>
void map_step_inplace(S* q, S* p, std::size_t dims, const SeparableHamiltonian& h, double tau) {
  drift_inplace(q, p, dims, h, tau);
  kick_inplace(q, p, dims, h, tau);
}

/// Throws TrajectoryEscape if any coordinate is non-finite or beyond kEscapeBound.
void check_escape(const double* q, const double* p, std::size_t dims, std::size_t step);
void check_escape(const std::complex<double>* q, const std::complex<double>* p, std::size_t dims,
                  std::size_t step);

Trajectory trajectory(const PhaseSpacePoint& x0, const SeparableHamiltonian& h,
                      std::size_t n_steps, double tau, std::string tag = "average");

}  // namespace loschmidt
