#pragma once

#include <cstddef>
#include <vector>

namespace loschmidt {

/// A point x = (q, p) of a 2D-dimensional phase space.
struct PhaseSpacePoint {
  std::vector<double> q;
  std::vector<double> p;

  PhaseSpacePoint() = default;
  PhaseSpacePoint(std::vector<double> q_, std::vector<double> p_)
      : q(std::move(q_)), p(std::move(p_)) {}
  PhaseSpacePoint(double q1, double p1) : q{q1}, p{p1} {}

  std::size_t dims() const noexcept { return q.size(); }

  friend bool operator==(const PhaseSpacePoint&, const PhaseSpacePoint&) = default;
};

}  // namespace loschmidt
