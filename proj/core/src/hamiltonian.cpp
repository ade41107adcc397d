#include "loschmidt/hamiltonian.hpp"

#include <algorithm>
#include <limits>

#include "loschmidt/errors.hpp"

namespace loschmidt {

Polynomial::Polynomial(std::initializer_list<double> c) {
  if (c.size() > c_.size()) {
    throw PreconditionError("polynomial degree above " + std::to_string(kMaxDegree) +
                            " is not supported");
  }
  std::copy(c.begin(), c.end(), c_.begin());
}

int Polynomial::degree() const noexcept {
  for (int k = kMaxDegree; k >= 0; --k) {
    if (c_[static_cast<std::size_t>(k)] != 0.0) return k;
  }
  return -1;
}

Polynomial Polynomial::derivative(int order) const {
  Coefficients out{};
  for (int k = order; k <= kMaxDegree; ++k) {
    double factor = 1.0;
    for (int j = 0; j < order; ++j) factor *= static_cast<double>(k - j);
    out[static_cast<std::size_t>(k - order)] = factor * c_[static_cast<std::size_t>(k)];
  }
  return Polynomial(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (auto& v : c_) v *= s;
  return *this;
}

int CoordinateFunction::degree() const noexcept {
  if (!cosine_.is_zero()) return std::numeric_limits<int>::max();
  return poly_.degree();
}

CoordinateFunction combine(const CoordinateFunction& a, double wa, const CoordinateFunction& b,
                           double wb) {
  Polynomial poly = wa * a.poly_ + wb * b.poly_;
  Cosine cosine;
  const bool a_cos = !a.cosine_.is_zero();
  const bool b_cos = !b.cosine_.is_zero();
  if (a_cos && b_cos && a.cosine_.wavenumber != b.cosine_.wavenumber) {
    throw IncompatibleFamilies("cosine terms with different wavenumbers cannot be combined");
  }
  if (a_cos || b_cos) {
    cosine.wavenumber = a_cos ? a.cosine_.wavenumber : b.cosine_.wavenumber;
    cosine.amplitude = wa * a.cosine_.amplitude + wb * b.cosine_.amplitude;
    if (cosine.amplitude == 0.0) cosine.wavenumber = 1.0;
  }
  return CoordinateFunction(poly, cosine);
}

SeparableHamiltonian::SeparableHamiltonian(std::vector<CoordinateFunction> kinetic,
                                           std::vector<CoordinateFunction> potential)
    : kinetic_(std::move(kinetic)), potential_(std::move(potential)) {
  if (kinetic_.size() != potential_.size()) {
    throw PreconditionError("kinetic and potential terms must cover the same coordinates");
  }
  if (kinetic_.empty()) throw PreconditionError("a Hamiltonian needs at least one coordinate");
}

SeparableHamiltonian SeparableHamiltonian::one_dim(CoordinateFunction kinetic,
                                                   CoordinateFunction potential) {
  return SeparableHamiltonian({std::move(kinetic)}, {std::move(potential)});
}

SeparableHamiltonian SeparableHamiltonian::product(std::size_t dims,
                                                   const CoordinateFunction& kinetic,
                                                   const CoordinateFunction& potential) {
  return SeparableHamiltonian(std::vector<CoordinateFunction>(dims, kinetic),
                              std::vector<CoordinateFunction>(dims, potential));
}

double SeparableHamiltonian::kinetic_energy(std::span<const double> p) const {
  if (p.size() != dims()) throw PreconditionError("momentum dimension mismatch");
  double e = 0.0;
  for (std::size_t d = 0; d < dims(); ++d) e += kinetic_[d].value(p[d]);
  return e;
}

double SeparableHamiltonian::potential_energy(std::span<const double> q) const {
  if (q.size() != dims()) throw PreconditionError("position dimension mismatch");
  double e = 0.0;
  for (std::size_t d = 0; d < dims(); ++d) e += potential_[d].value(q[d]);
  return e;
}

bool SeparableHamiltonian::is_zero() const noexcept {
  return kinetic_is_zero() &&
         std::all_of(potential_.begin(), potential_.end(), [](auto& f) { return f.is_zero(); });
}

bool SeparableHamiltonian::kinetic_is_zero() const noexcept {
  return std::all_of(kinetic_.begin(), kinetic_.end(), [](auto& f) { return f.is_zero(); });
}

bool SeparableHamiltonian::is_polynomial() const noexcept {
  auto poly = [](auto& f) { return f.is_polynomial(); };
  return std::all_of(kinetic_.begin(), kinetic_.end(), poly) &&
         std::all_of(potential_.begin(), potential_.end(), poly);
}

int SeparableHamiltonian::kinetic_degree() const noexcept {
  int deg = -1;
  for (auto& f : kinetic_) deg = std::max(deg, f.degree());
  return deg;
}

int SeparableHamiltonian::potential_degree() const noexcept {
  int deg = -1;
  for (auto& f : potential_) deg = std::max(deg, f.degree());
  return deg;
}

SeparableHamiltonian combine(const SeparableHamiltonian& a, double wa,
                             const SeparableHamiltonian& b, double wb) {
  if (a.dims() != b.dims()) {
    throw PreconditionError("Hamiltonians have different numbers of degrees of freedom (" +
                            std::to_string(a.dims()) + " vs " + std::to_string(b.dims()) + ")");
  }
  std::vector<CoordinateFunction> kinetic, potential;
  kinetic.reserve(a.dims());
  potential.reserve(a.dims());
  for (std::size_t d = 0; d < a.dims(); ++d) {
    kinetic.push_back(combine(a.kinetic_[d], wa, b.kinetic_[d], wb));
    potential.push_back(combine(a.potential_[d], wa, b.potential_[d], wb));
  }
  return SeparableHamiltonian(std::move(kinetic), std::move(potential));
}

CoordinateFunction quadratic_kinetic(double mass) {
  if (!(mass > 0.0)) throw PreconditionError("mass must be positive");
  return CoordinateFunction(Polynomial{0.0, 0.0, 0.5 / mass});
}

CoordinateFunction harmonic_potential(double k, double centre, double offset) {
  return CoordinateFunction(
      Polynomial{0.5 * k * centre * centre + offset, -k * centre, 0.5 * k});
}

HamiltonianPair HamiltonianPair::swapped() const { return make_pair(h_double_prime, h_prime); }

HamiltonianPair make_pair(const SeparableHamiltonian& h_prime,
                          const SeparableHamiltonian& h_double_prime) {
  HamiltonianPair pair;
  pair.h_prime = h_prime;
  pair.h_double_prime = h_double_prime;
  pair.average = combine(h_prime, 0.5, h_double_prime, 0.5);
  pair.delta = combine(h_double_prime, 1.0, h_prime, -1.0);
  return pair;
}

double expansion_remainder(const HamiltonianPair& pair, const PhaseSpacePoint& x,
                           const PhaseSpacePoint& dx, int order) {
  if (order < 0 || order > 2) {
    throw PreconditionError("expansion order must be 0, 1 or 2 (got " + std::to_string(order) +
                            ")");
  }
  const std::size_t dims = pair.dims();
  if (x.q.size() != dims || x.p.size() != dims || dx.q.size() != dims || dx.p.size() != dims) {
    throw PreconditionError("phase-space point dimension does not match the Hamiltonian pair");
  }

  double exact = 0.0;
  double truncated = 0.0;
  for (std::size_t d = 0; d < dims; ++d) {
    const double q = x.q[d], p = x.p[d], dq = dx.q[d], dp = dx.p[d];
    exact += pair.h_double_prime.kinetic(d).value(p + 0.5 * dp) +
             pair.h_double_prime.potential(d).value(q + 0.5 * dq);
    exact -= pair.h_prime.kinetic(d).value(p - 0.5 * dp) +
             pair.h_prime.potential(d).value(q - 0.5 * dq);

    truncated += pair.delta.kinetic(d).value(p) + pair.delta.potential(d).value(q);
    if (order >= 1) {
      truncated += pair.average.kinetic(d).derivative(p, 1) * dp +
                   pair.average.potential(d).derivative(q, 1) * dq;
    }
    if (order >= 2) {
      truncated += 0.125 * (pair.delta.kinetic(d).derivative(p, 2) * dp * dp +
                            pair.delta.potential(d).derivative(q, 2) * dq * dq);
    }
  }
  return exact - truncated;
}

}  // namespace loschmidt
