#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "paraxial/czt.hpp"
#include "paraxial/errors.hpp"
#include "paraxial/field.hpp"
#include "paraxial/grid.hpp"
#include "paraxial/ray_matrix.hpp"

namespace paraxial {

namespace detail {

/// Linear interpolation of field samples at an off-grid coordinate; zero
/// outside the window (compact-support assumption).
inline std::complex<double> interp_linear(const SampledField& f, double x) {
  const double fi = (x - f.grid.x0) / f.grid.dx;
  const auto n = static_cast<std::ptrdiff_t>(f.grid.n);
  if (fi <= -1.0 || fi >= static_cast<double>(n)) return 0.0;
  const double fi0 = std::floor(fi);
  const auto i0 = static_cast<std::ptrdiff_t>(fi0);
  const double t = fi - fi0;
  const auto at = [&](std::ptrdiff_t i) {
    return (i >= 0 && i < n) ? f.samples[static_cast<std::size_t>(i)]
                             : std::complex<double>(0.0);
  };
  return (1.0 - t) * at(i0) + t * at(i0 + 1);
}

/// The quadratic kernel phase coeff*x^2/(2*divisor) sampled on g oscillates
/// with instantaneous frequency up to |coeff|*max|x|/|divisor|; the rectangle
/// rule needs that below pi/dx. On violation, reports the minimal sample count
/// over the same window that would resolve the chirp.
inline void require_chirp_resolvable(double coeff_abs, double divisor_abs, const Grid1D& g,
                                     const char* where) {
  const double rate = coeff_abs * g.max_abs_coord() / divisor_abs;
  const double limit = std::numbers::pi / g.dx;
  if (rate <= limit * (1.0 + 1e-9)) return;
  std::size_t need =
      static_cast<std::size_t>(std::ceil(rate * g.span() / std::numbers::pi));
  need += need % 2;
  std::ostringstream os;
  os << where << ": kernel chirp rate reaches " << rate << ", past pi/dx = " << limit
     << "; need at least " << need << " samples over this window";
  throw NyquistError(os.str(), limit, need);
}

/// 1/sqrt(2*pi*i*b) on the principal branch (b of either sign). The branch
/// affects only a global phase, never intensities.
inline std::complex<double> quadratic_kernel_prefactor(double b) {
  return 1.0 / std::sqrt(std::complex<double>(0.0, 2.0 * std::numbers::pi * b));
}

/// Scaling limit shared by every degenerate (vanishing off-diagonal) path:
/// out(x) = (1/sqrt(scale)) e^{i chirp_coeff x^2 / (2 scale)} in(x / scale).
inline SampledField scaling_limit(const SampledField& f, double scale, double chirp_coeff,
                                  const Grid1D& out, const char* where) {
  if (std::abs(scale) <= 1e-12)
    throw std::invalid_argument(std::string(where) +
                                ": both diagonal and off-diagonal entries vanish; "
                                "impossible for a unimodular matrix");
  const std::complex<double> root = 1.0 / std::sqrt(std::complex<double>(scale, 0.0));
  SampledField result{out, f.domain, std::vector<std::complex<double>>(out.n)};
  for (std::size_t j = 0; j < out.n; ++j) {
    const double x = out.coord(j);
    result.samples[j] =
        root * std::polar(1.0, 0.5 * chirp_coeff * x * x / scale) * interp_linear(f, x / scale);
  }
  return result;
}

}  // namespace detail

/// Diffraction through the (a,b,c,d) system:
///
///   phi(x) = integral (1/sqrt(2 pi i b)) e^{(i/2b)(a x'^2 - 2 x' x + d x^2)} psi(x') dx'
///
/// evaluated as pre-chirp multiply, scaled Fourier sum with kernel
/// e^{-i x' x / b}, post-chirp multiply (an exact refactoring of the rectangle
/// rule). For |b| below 1e-9*dx^2 the kernel has no resolvable chirp on any
/// practical grid and the scaling limit (1/sqrt(a)) e^{i c x^2/(2a)} psi(x/a)
/// applies instead.
inline SampledField collins_spatial(const SampledField& f, const RayMatrix& m,
                                    const Grid1D& out) {
  if (f.domain != Domain::Space)
    throw std::invalid_argument("collins_spatial needs a Space-domain field");
  require_unimodular(m, 1e-9, "collins_spatial");
  const double b_eps = 1e-9 * f.grid.dx * f.grid.dx;
  if (std::abs(m.b) <= b_eps)
    return detail::scaling_limit(f, m.a, m.c, out, "collins_spatial");

  detail::require_chirp_resolvable(std::abs(m.a), std::abs(m.b), f.grid,
                                   "collins_spatial: input grid");
  detail::require_chirp_resolvable(std::abs(m.d), std::abs(m.b), out,
                                   "collins_spatial: output grid");

  std::vector<std::complex<double>> h(f.grid.n);
  for (std::size_t k = 0; k < f.grid.n; ++k) {
    const double xk = f.grid.coord(k);
    h[k] = f.samples[k] * std::polar(1.0, 0.5 * m.a * xk * xk / m.b);
  }
  FourierSumPlan plan(f.grid.n, f.grid.x0, f.grid.dx, out.n, out.x0 / m.b, out.dx / m.b, -1.0);
  SampledField result{out, Domain::Space, plan.apply(h)};
  const std::complex<double> pref =
      f.grid.dx * detail::quadratic_kernel_prefactor(m.b);
  for (std::size_t j = 0; j < out.n; ++j) {
    const double xj = out.coord(j);
    result.samples[j] *= pref * std::polar(1.0, 0.5 * m.d * xj * xj / m.b);
  }
  return result;
}

/// Diffraction through the dual system (d,-b,-c,a), written from its own
/// kernel rather than by delegating to collins_spatial(dual(m)):
///
///   phi(x) = integral (1/sqrt(-2 pi i b)) e^{-(i/2b)(d x'^2 - 2 x' x + a x^2)} psi(x') dx'
///
/// The two routes agree to rounding; tests assert it. |phi|^2 of this output
/// is the quantity the phase-space projection theorem equates with the Radon
/// projection of the input's Wigner function at line parameters (m.d, m.b).
inline SampledField collins_dual_spatial(const SampledField& f, const RayMatrix& m,
                                         const Grid1D& out) {
  if (f.domain != Domain::Space)
    throw std::invalid_argument("collins_dual_spatial needs a Space-domain field");
  require_unimodular(m, 1e-9, "collins_dual_spatial");
  const double b_eps = 1e-9 * f.grid.dx * f.grid.dx;
  if (std::abs(m.b) <= b_eps)
    return detail::scaling_limit(f, m.d, -m.c, out, "collins_dual_spatial");

  detail::require_chirp_resolvable(std::abs(m.d), std::abs(m.b), f.grid,
                                   "collins_dual_spatial: input grid");
  detail::require_chirp_resolvable(std::abs(m.a), std::abs(m.b), out,
                                   "collins_dual_spatial: output grid");

  std::vector<std::complex<double>> h(f.grid.n);
  for (std::size_t k = 0; k < f.grid.n; ++k) {
    const double xk = f.grid.coord(k);
    h[k] = f.samples[k] * std::polar(1.0, -0.5 * m.d * xk * xk / m.b);
  }
  FourierSumPlan plan(f.grid.n, f.grid.x0, f.grid.dx, out.n, out.x0 / m.b, out.dx / m.b, +1.0);
  SampledField result{out, Domain::Space, plan.apply(h)};
  const std::complex<double> pref =
      f.grid.dx * detail::quadratic_kernel_prefactor(-m.b);
  for (std::size_t j = 0; j < out.n; ++j) {
    const double xj = out.coord(j);
    result.samples[j] *= pref * std::polar(1.0, -0.5 * m.a * xj * xj / m.b);
  }
  return result;
}

/// The dual system's action on the spectrum:
///
///   out(nu) = integral (1/sqrt(2 pi i c)) e^{(i/2c)(d nu^2 - 2 nu' nu + a nu'^2)} spec(nu') dnu'
///
/// Same chirp decomposition with c as the divisor. The degenerate c -> 0 limit
/// is (1/sqrt(a)) e^{+i b nu^2/(2a)} spec(nu/a) — the stationary-phase limit of
/// this kernel, pinned against small-c quadrature in the tests.
inline SampledField collins_frequency(const SampledField& f, const RayMatrix& m,
                                      const Grid1D& out) {
  if (f.domain != Domain::Frequency)
    throw std::invalid_argument("collins_frequency needs a Frequency-domain field");
  require_unimodular(m, 1e-9, "collins_frequency");
  const double c_eps = 1e-9 * f.grid.dx * f.grid.dx;
  if (std::abs(m.c) <= c_eps)
    return detail::scaling_limit(f, m.a, m.b, out, "collins_frequency");

  detail::require_chirp_resolvable(std::abs(m.a), std::abs(m.c), f.grid,
                                   "collins_frequency: input grid");
  detail::require_chirp_resolvable(std::abs(m.d), std::abs(m.c), out,
                                   "collins_frequency: output grid");

  std::vector<std::complex<double>> h(f.grid.n);
  for (std::size_t k = 0; k < f.grid.n; ++k) {
    const double nk = f.grid.coord(k);
    h[k] = f.samples[k] * std::polar(1.0, 0.5 * m.a * nk * nk / m.c);
  }
  FourierSumPlan plan(f.grid.n, f.grid.x0, f.grid.dx, out.n, out.x0 / m.c, out.dx / m.c, -1.0);
  SampledField result{out, Domain::Frequency, plan.apply(h)};
  const std::complex<double> pref =
      f.grid.dx * detail::quadratic_kernel_prefactor(m.c);
  for (std::size_t j = 0; j < out.n; ++j) {
    const double nj = out.coord(j);
    result.samples[j] *= pref * std::polar(1.0, 0.5 * m.d * nj * nj / m.c);
  }
  return result;
}

/// Which quadratic kernel collins_direct_oracle sums literally.
enum class CollinsKernel { Spatial, DualSpatial, Frequency };

/// Literal O(N^2) rectangle-rule sum of the selected kernel at every output
/// node: the reference the fast paths are validated against. Refuses the
/// degenerate parameter range (no scaling path here) and grids past 4096
/// samples (cost guard).
inline SampledField collins_direct_oracle(const SampledField& f, const RayMatrix& m,
                                          const Grid1D& out, CollinsKernel mode) {
  require_unimodular(m, 1e-9, "collins_direct_oracle");
  if (f.grid.n > 4096 || out.n > 4096)
    throw std::invalid_argument("collins_direct_oracle is limited to 4096 samples (cost guard)");
  const Domain need =
      (mode == CollinsKernel::Frequency) ? Domain::Frequency : Domain::Space;
  if (f.domain != need)
    throw std::invalid_argument("collins_direct_oracle: field domain does not match the kernel");
  const double divisor = (mode == CollinsKernel::Frequency) ? m.c : m.b;
  if (std::abs(divisor) <= 1e-9 * f.grid.dx * f.grid.dx)
    throw std::invalid_argument("collins_direct_oracle: degenerate parameter for this kernel");

  double in_coeff = 0.0, out_coeff = 0.0, sign = 1.0;
  switch (mode) {
    case CollinsKernel::Spatial:
      in_coeff = m.a;
      out_coeff = m.d;
      sign = 1.0;
      break;
    case CollinsKernel::DualSpatial:
      in_coeff = m.d;
      out_coeff = m.a;
      sign = -1.0;
      break;
    case CollinsKernel::Frequency:
      in_coeff = m.a;
      out_coeff = m.d;
      sign = 1.0;
      break;
  }
  const std::complex<double> pref =
      f.grid.dx * detail::quadratic_kernel_prefactor(sign * divisor);
  SampledField result{out, f.domain, std::vector<std::complex<double>>(out.n)};
  for (std::size_t j = 0; j < out.n; ++j) {
    const double xj = out.coord(j);
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < f.grid.n; ++k) {
      const double xk = f.grid.coord(k);
      const double phase =
          sign * 0.5 * (in_coeff * xk * xk - 2.0 * xk * xj + out_coeff * xj * xj) / divisor;
      acc += f.samples[k] * std::polar(1.0, phase);
    }
    result.samples[j] = pref * acc;
  }
  return result;
}

}  // namespace paraxial
