// Closed-form second-order fidelity for quadratic systems.
//
// The integrand of the smeared-momentum path integral is, for quadratic T, V
// and dV, the exponential of a quadratic form in (q_0, p_0, p_1, ...). It is
// integrated forward in time: the "message" m_n(q_n, p_n) = C exp(-x^T A x / 2
// + J^T x) collects every integral over earlier variables, and f(n tau) is
// its total integral. Each step eliminates one variable with a 1D complex
// Gaussian integral. Re A stays positive semidefinite (the initial Wigner
// form is real positive, every other factor is a pure phase, and Schur
// complements preserve accretivity), so every pivot has Re >= 0 and the
// principal square root is the branch reached by continuous deformation.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "loschmidt/errors.hpp"
#include "loschmidt/estimators.hpp"

namespace loschmidt {

namespace {

using cd = std::complex<double>;
constexpr cd kI(0.0, 1.0);

template <std::size_t K>
struct GaussianForm {
  std::array<std::array<cd, K>, K> a{};
  std::array<cd, K> j{};
  cd log_c{};

  double scale() const {
    double s = 0.0;
    for (auto& row : a) {
      for (auto& v : row) s = std::max(s, std::abs(v));
    }
    return s;
  }
};

using Form2 = GaussianForm<2>;
using Form3 = GaussianForm<3>;

// Pivot check shared by every elimination.
void check_pivot(cd pivot, double scale, const char* where) {
  if (std::abs(pivot) <= 1e-14 * std::max(scale, 1e-300)) {
    const double condition = std::abs(pivot) > 0.0 ? scale / std::abs(pivot) : INFINITY;
    std::ostringstream msg;
    msg << "singular Gaussian exponent while integrating " << where
        << " (pivot " << std::abs(pivot) << ", condition " << condition << ")";
    throw SingularExponent(msg.str(), condition);
  }
}

// x = L y + s with det L = 1.
Form2 substitute(const Form2& f, const std::array<std::array<double, 2>, 2>& l,
                 const std::array<double, 2>& s) {
  Form2 out;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      cd v = 0.0;
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t k = 0; k < 2; ++k) v += l[i][r] * f.a[i][k] * l[k][c];
      }
      out.a[r][c] = v;
    }
  }
  std::array<cd, 2> as{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) as[i] += f.a[i][k] * s[k];
  }
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t i = 0; i < 2; ++i) out.j[r] += l[i][r] * (f.j[i] - as[i]);
  }
  cd sas = 0.0, js = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    sas += s[i] * as[i];
    js += f.j[i] * s[i];
  }
  out.log_c = f.log_c - 0.5 * sas + js;
  return out;
}

// Integrates out variable `v` of a K-variable form.
template <std::size_t K>
GaussianForm<K - 1> eliminate(const GaussianForm<K>& f, std::size_t v, const char* where) {
  const cd alpha = f.a[v][v];
  check_pivot(alpha, f.scale(), where);
  GaussianForm<K - 1> out;
  std::size_t r_out = 0;
  for (std::size_t r = 0; r < K; ++r) {
    if (r == v) continue;
    std::size_t c_out = 0;
    for (std::size_t c = 0; c < K; ++c) {
      if (c == v) continue;
      out.a[r_out][c_out] = f.a[r][c] - f.a[r][v] * f.a[v][c] / alpha;
      ++c_out;
    }
    out.j[r_out] = f.j[r] - f.a[r][v] * f.j[v] / alpha;
    ++r_out;
  }
  out.log_c = f.log_c + 0.5 * std::log(2.0 * std::numbers::pi) - 0.5 * std::log(alpha) +
              f.j[v] * f.j[v] / (2.0 * alpha);
  return out;
}

cd total_integral(const Form2& f) {
  const auto reduced = eliminate(f, 1, "the final momentum");
  const cd alpha = reduced.a[0][0];
  check_pivot(alpha, std::max(reduced.scale(), f.scale()), "the final position");
  const cd log_total = reduced.log_c + 0.5 * std::log(2.0 * std::numbers::pi) -
                       0.5 * std::log(alpha) + reduced.j[0] * reduced.j[0] / (2.0 * alpha);
  return std::exp(log_total);
}

}  // namespace

FidelitySeries f2_gaussian_chain(const InitialState& state, const HamiltonianPair& pair,
                                 const EstimatorConfig& config) {
  config.validate();
  if (state.dims() != 1 || pair.dims() != 1) {
    throw PreconditionError("f2_gaussian_chain requires D = 1");
  }
  if (!state.is_pure()) {
    throw PreconditionError("f2_gaussian_chain requires a single Gaussian component");
  }
  if (!pair.delta.kinetic_is_zero()) {
    throw PreconditionError("f2_gaussian_chain requires a momentum-independent perturbation");
  }
  if (pair.average.kinetic_degree() > 2 || pair.average.potential_degree() > 2 ||
      pair.delta.potential_degree() > 2) {
    throw PreconditionError(
        "f2_gaussian_chain requires quadratic T and V and an at most quadratic dV");
  }

  const double tau = config.tau;
  const double hbar = config.hbar;
  const double h = 2.0 * std::numbers::pi * hbar;
  const auto& t = pair.average.kinetic(0).polynomial();
  const auto& v = pair.average.potential(0).polynomial();
  const auto& dv = pair.delta.potential(0).polynomial();
  const double t1 = t.coefficient(1), t2 = t.coefficient(2);
  const double v1 = v.coefficient(1), v2 = v.coefficient(2);
  const double d0 = dv.coefficient(0), d1 = dv.coefficient(1), d2 = dv.coefficient(2);
  // Smeared delta ~ int dxi exp(i a xi^2 + ...) with a = -tau dV''/(8 hbar), the sign
  // carried by exp(i A / hbar); constant for quadratic dV.
  const double a = -tau * 2.0 * d2 / (8.0 * hbar);
  const bool smeared = std::abs(a) >= config.degenerate_a_threshold;

  FidelitySeries series(config.n_steps, tau, "f2_gaussian");
  series.meta.seed = config.seed;
  series.values[0] = 1.0;
  if (pair.delta.is_zero()) {
    std::fill(series.values.begin(), series.values.end(), cd(1.0, 0.0));
    return series;
  }

  // m_0 = rho_W / h.
  const auto& c = state.components().front();
  const double qc = c.center_q[0], pc = c.center_p[0], s = c.sigma[0];
  Form2 m;
  m.a[0][0] = 2.0 / (s * s);
  m.a[1][1] = 2.0 * s * s / (hbar * hbar);
  m.j[0] = 2.0 * qc / (s * s);
  m.j[1] = 2.0 * pc * s * s / (hbar * hbar);
  m.log_c = std::log(2.0 / h) - qc * qc / (s * s) - pc * pc * s * s / (hbar * hbar);

  for (std::size_t n = 1; n <= config.n_steps; ++n) {
    // Drift: q_old = q_new - tau (t1 + 2 t2 p).
    m = substitute(m, {{{1.0, -2.0 * tau * t2}, {0.0, 1.0}}}, {-tau * t1, 0.0});

    if (!smeared) {
      // p_old = p_new + tau (v1 + 2 v2 q).
      m = substitute(m, {{{1.0, 0.0}, {2.0 * tau * v2, 1.0}}}, {0.0, tau * v1});
    } else {
      // Variables (q, p_old, p_new); hbar b = l . z + tau v1.
      Form3 f;
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t col = 0; col < 2; ++col) f.a[r][col] = m.a[r][col];
        f.j[r] = m.j[r];
      }
      const std::array<double, 3> l{2.0 * tau * v2, -1.0, 1.0};
      const double shift = tau * v1;
      const cd k = kI / (2.0 * a * hbar * hbar);
      for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t col = 0; col < 3; ++col) f.a[r][col] += k * l[r] * l[col];
        f.j[r] -= k * shift * l[r];
      }
      f.log_c = m.log_c - 0.5 * k * shift * shift +
                std::log(std::sqrt(std::numbers::pi / std::abs(a)) / h) +
                kI * (0.25 * std::numbers::pi * (a > 0.0 ? 1.0 : -1.0));
      m = eliminate(f, 1, "the previous momentum");
    }

    // exp(-i tau dV(q_n) / hbar)
    m.a[0][0] += 2.0 * kI * tau * d2 / hbar;
    m.j[0] -= kI * tau * d1 / hbar;
    m.log_c -= kI * tau * d0 / hbar;

    series.values[n] = total_integral(m);
  }
  return series;
}

}  // namespace loschmidt
