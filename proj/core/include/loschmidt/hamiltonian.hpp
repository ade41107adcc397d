#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "loschmidt/phase_space.hpp"

namespace loschmidt {

/// Polynomial c0 + c1 x + ... + c4 x^4 with exact coefficient-shift
/// derivatives.
class Polynomial {
 public:
  static constexpr int kMaxDegree = 4;
  using Coefficients = std::array<double, kMaxDegree + 1>;

  constexpr Polynomial() = default;
  constexpr explicit Polynomial(const Coefficients& c) : c_(c) {}
  /// Lowest-order coefficient first. Throws PreconditionError above degree 4.
  Polynomial(std::initializer_list<double> c);

  const Coefficients& coefficients() const noexcept { return c_; }
  double coefficient(int k) const { return c_.at(static_cast<std::size_t>(k)); }

  /// Highest power with a nonzero coefficient, -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_zero() const noexcept { return degree() < 0; }

  Polynomial derivative(int order = 1) const;

  template <class S>
  S operator()(S x) const {
    S r = S(c_[kMaxDegree]);
    for (int k = kMaxDegree - 1; k >= 0; --k) r = r * x + S(c_[static_cast<std::size_t>(k)]);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Coefficients c_{};
};

/// amplitude * cos(wavenumber * x).
struct Cosine {
  double amplitude = 0.0;
  double wavenumber = 1.0;

  bool is_zero() const noexcept { return amplitude == 0.0; }

  template <class S>
  S derivative(S x, int order) const {
    using std::cos;
    using std::sin;
    if (amplitude == 0.0) return S(0.0);
    const double scale = amplitude * std::pow(wavenumber, order);
    const S arg = wavenumber * x;
    switch (order % 4) {
      case 0: return scale * cos(arg);
      case 1: return -scale * sin(arg);
      case 2: return -scale * cos(arg);
      default: return scale * sin(arg);
    }
  }

  friend bool operator==(const Cosine&, const Cosine&) = default;
};

/// One separable term: polynomial (degree <= 4) plus an optional cosine.
/// Used for both T_d(p_d) and V_d(q_d).
class CoordinateFunction {
 public:
  CoordinateFunction() = default;
  CoordinateFunction(Polynomial poly, Cosine cosine = {}) : poly_(poly), cosine_(cosine) {}

  const Polynomial& polynomial() const noexcept { return poly_; }
  const Cosine& cosine() const noexcept { return cosine_; }

  bool is_zero() const noexcept { return poly_.is_zero() && cosine_.is_zero(); }
  bool is_polynomial() const noexcept { return cosine_.is_zero(); }
  /// Polynomial degree; a cosine term counts as unbounded degree.
  int degree() const noexcept;

  template <class S>
  S value(S x) const {
    return poly_(x) + cosine_.derivative(x, 0);
  }

  template <class S>
  S derivative(S x, int order) const {
    if (order == 0) return value(x);
    return poly_.derivative(order)(x) + cosine_.derivative(x, order);
  }

  /// Coefficient arithmetic. Cosines must share a wavenumber unless one
  /// amplitude is zero; otherwise IncompatibleFamilies.
  friend CoordinateFunction combine(const CoordinateFunction& a, double wa,
                                    const CoordinateFunction& b, double wb);

  friend bool operator==(const CoordinateFunction&, const CoordinateFunction&) = default;

 private:
  Polynomial poly_;
  Cosine cosine_;
};

/// H(q, p) = sum_d [T_d(p_d) + V_d(q_d)], no cross-coordinate coupling.
class SeparableHamiltonian {
 public:
  SeparableHamiltonian() = default;
  SeparableHamiltonian(std::vector<CoordinateFunction> kinetic,
                       std::vector<CoordinateFunction> potential);

  /// One degree of freedom.
  static SeparableHamiltonian one_dim(CoordinateFunction kinetic, CoordinateFunction potential);
  /// D copies of the same one-dimensional term.
  static SeparableHamiltonian product(std::size_t dims, const CoordinateFunction& kinetic,
                                      const CoordinateFunction& potential);

  std::size_t dims() const noexcept { return kinetic_.size(); }

  const CoordinateFunction& kinetic(std::size_t d) const { return kinetic_.at(d); }
  const CoordinateFunction& potential(std::size_t d) const { return potential_.at(d); }

  double kinetic_energy(std::span<const double> p) const;
  double potential_energy(std::span<const double> q) const;
  double operator()(std::span<const double> q, std::span<const double> p) const {
    return kinetic_energy(p) + potential_energy(q);
  }
  double operator()(const PhaseSpacePoint& x) const { return (*this)(x.q, x.p); }

  bool is_zero() const noexcept;
  bool kinetic_is_zero() const noexcept;
  bool is_polynomial() const noexcept;
  /// Maximum polynomial degree over the kinetic terms (cosine counts as unbounded).
  int kinetic_degree() const noexcept;
  int potential_degree() const noexcept;

  friend SeparableHamiltonian combine(const SeparableHamiltonian& a, double wa,
                                      const SeparableHamiltonian& b, double wb);

  friend bool operator==(const SeparableHamiltonian&, const SeparableHamiltonian&) = default;

 private:
  std::vector<CoordinateFunction> kinetic_;
  std::vector<CoordinateFunction> potential_;
};

/// p^2 / (2 m) in one coordinate.
CoordinateFunction quadratic_kinetic(double mass = 1.0);
/// 1/2 k (q - centre)^2 + offset.
CoordinateFunction harmonic_potential(double k, double centre = 0.0, double offset = 0.0);

/// (H', H'') with the derived average H = (H' + H'')/2 and perturbation
/// dH = H'' - H'. Immutable after construction.
struct HamiltonianPair {
  SeparableHamiltonian h_prime;
  SeparableHamiltonian h_double_prime;
  SeparableHamiltonian average;
  SeparableHamiltonian delta;

  std::size_t dims() const noexcept { return average.dims(); }
  /// (H'', H'): same average, negated perturbation.
  HamiltonianPair swapped() const;
};

HamiltonianPair make_pair(const SeparableHamiltonian& h_prime,
                          const SeparableHamiltonian& h_double_prime);

/// [H''(x + dx/2) - H'(x - dx/2)] minus the truncation of the dx expansion
/// about the average Hamiltonian at order 0, 1 or 2.
double expansion_remainder(const HamiltonianPair& pair, const PhaseSpacePoint& x,
                           const PhaseSpacePoint& dx, int order);

}  // namespace loschmidt
