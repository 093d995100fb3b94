#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "paraxial/czt.hpp"
#include "paraxial/errors.hpp"
#include "paraxial/field.hpp"
#include "paraxial/grid.hpp"

namespace paraxial {

/// Real-valued phase-space density W(nu'_j, x'_i) on the product of a position
/// grid and a frequency grid; values are row-major over x' (values[i*n_nu+j]).
struct WignerDistribution {
  Grid1D x_grid;
  Grid1D nu_grid;
  std::vector<double> values;
  /// max |imaginary part| discarded during computation, relative to peak |W|.
  double imag_residue = 0.0;

  double at(std::size_t i, std::size_t j) const { return values[i * nu_grid.n + j]; }
};

/// Offsets u = 2q*dx keep both half-sample arguments x' +- u/2 on grid nodes,
/// at the cost of capping the representable conjugate band at pi/(2*dx). Use
/// this to size the conjugate window for a given sample spacing.
inline double max_wigner_frequency(double dx) {
  return std::numbers::pi / (2.0 * dx);
}

namespace detail {

inline void check_wigner_band(const Grid1D& conj_grid, double dx, const char* where) {
  const double band = max_wigner_frequency(dx);
  if (conj_grid.max_abs_coord() > band * (1.0 + 1e-12))
    throw NyquistError(std::string(where) + ": target grid reaches " +
                           std::to_string(conj_grid.max_abs_coord()) +
                           ", past the representable bandwidth pi/(2 dx) = " +
                           std::to_string(band),
                       band);
}

struct WignerAccumulator {
  double peak = 0.0;
  double residue = 0.0;

  void take(double re, double im) {
    peak = std::max(peak, std::abs(re));
    residue = std::max(residue, std::abs(im));
  }

  double relative(const char* where) const {
    const double rel = peak > 0.0 ? residue / peak : 0.0;
    if (rel > 1e-10)
      warn(std::string(where) + ": discarded imaginary residue " + std::to_string(rel) +
           " of peak |W|");
    return rel;
  }
};

}  // namespace detail

/// W(nu', x') = integral du/(2 pi) e^{i nu' u} conj(psi(x'+u/2)) psi(x'-u/2),
/// rectangle rule over on-grid offsets u = 2q*dx; psi is treated as zero
/// outside its window (compact-support assumption, with a leak diagnostic).
inline WignerDistribution wigner_from_spatial(const SampledField& f, const Grid1D& nu_grid) {
  if (f.domain != Domain::Space)
    throw std::invalid_argument("wigner_from_spatial needs a Space-domain field");
  detail::check_wigner_band(nu_grid, f.grid.dx, "wigner_from_spatial");
  warn_if_boundary_leak(f, "wigner_from_spatial");

  const std::size_t n = f.grid.n;
  const std::ptrdiff_t m0 = static_cast<std::ptrdiff_t>(n / 2);
  const std::size_t m = static_cast<std::size_t>(2 * m0 + 1);
  const double du = 2.0 * f.grid.dx;
  const double u0 = -static_cast<double>(m0) * du;
  FourierSumPlan plan(m, u0, du, nu_grid.n, nu_grid.x0, nu_grid.dx, +1.0);

  WignerDistribution w{f.grid, nu_grid, std::vector<double>(n * nu_grid.n, 0.0), 0.0};
  const double scale = du / (2.0 * std::numbers::pi);
  detail::WignerAccumulator acc;
  std::vector<std::complex<double>> h(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t q = 0; q < m; ++q) {
      const std::ptrdiff_t off = static_cast<std::ptrdiff_t>(q) - m0;
      const std::ptrdiff_t up = static_cast<std::ptrdiff_t>(i) + off;
      const std::ptrdiff_t dn = static_cast<std::ptrdiff_t>(i) - off;
      h[q] = (up >= 0 && up < static_cast<std::ptrdiff_t>(n) && dn >= 0 &&
              dn < static_cast<std::ptrdiff_t>(n))
                 ? std::conj(f.samples[static_cast<std::size_t>(up)]) *
                       f.samples[static_cast<std::size_t>(dn)]
                 : 0.0;
    }
    const auto row = plan.apply(h);
    double* out_row = w.values.data() + i * nu_grid.n;
    for (std::size_t j = 0; j < nu_grid.n; ++j) {
      const double re = row[j].real() * scale;
      acc.take(re, row[j].imag() * scale);
      out_row[j] = re;
    }
  }
  w.imag_residue = acc.relative("wigner_from_spatial");
  return w;
}

/// Same distribution from the spectrum side:
/// W(nu', x') = integral ds/(2 pi) e^{-i x' s} conj(spec(nu'+s/2)) spec(nu'-s/2).
inline WignerDistribution wigner_from_spectrum(const SampledField& f, const Grid1D& x_grid) {
  if (f.domain != Domain::Frequency)
    throw std::invalid_argument("wigner_from_spectrum needs a Frequency-domain field");
  detail::check_wigner_band(x_grid, f.grid.dx, "wigner_from_spectrum");
  warn_if_boundary_leak(f, "wigner_from_spectrum");

  const std::size_t n = f.grid.n;
  const std::ptrdiff_t m0 = static_cast<std::ptrdiff_t>(n / 2);
  const std::size_t m = static_cast<std::size_t>(2 * m0 + 1);
  const double ds = 2.0 * f.grid.dx;
  const double s0 = -static_cast<double>(m0) * ds;
  FourierSumPlan plan(m, s0, ds, x_grid.n, x_grid.x0, x_grid.dx, -1.0);

  WignerDistribution w{x_grid, f.grid, std::vector<double>(x_grid.n * n, 0.0), 0.0};
  const double scale = ds / (2.0 * std::numbers::pi);
  detail::WignerAccumulator acc;
  std::vector<std::complex<double>> h(m);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t q = 0; q < m; ++q) {
      const std::ptrdiff_t off = static_cast<std::ptrdiff_t>(q) - m0;
      const std::ptrdiff_t up = static_cast<std::ptrdiff_t>(j) + off;
      const std::ptrdiff_t dn = static_cast<std::ptrdiff_t>(j) - off;
      h[q] = (up >= 0 && up < static_cast<std::ptrdiff_t>(n) && dn >= 0 &&
              dn < static_cast<std::ptrdiff_t>(n))
                 ? std::conj(f.samples[static_cast<std::size_t>(up)]) *
                       f.samples[static_cast<std::size_t>(dn)]
                 : 0.0;
    }
    const auto col = plan.apply(h);
    for (std::size_t i = 0; i < x_grid.n; ++i) {
      const double re = col[i].real() * scale;
      acc.take(re, col[i].imag() * scale);
      w.values[i * n + j] = re;
    }
  }
  w.imag_residue = acc.relative("wigner_from_spectrum");
  return w;
}

/// out[i] = sum_j W[i][j] dnu, approximating |psi(x'_i)|^2.
inline std::vector<double> marginal_space(const WignerDistribution& w) {
  std::vector<double> out(w.x_grid.n, 0.0);
  for (std::size_t i = 0; i < w.x_grid.n; ++i) {
    double acc = 0.0;
    const double* row = w.values.data() + i * w.nu_grid.n;
    for (std::size_t j = 0; j < w.nu_grid.n; ++j) acc += row[j];
    out[i] = acc * w.nu_grid.dx;
  }
  return out;
}

/// out[j] = sum_i W[i][j] dx, approximating |spectrum(nu'_j)|^2.
inline std::vector<double> marginal_frequency(const WignerDistribution& w) {
  std::vector<double> out(w.nu_grid.n, 0.0);
  for (std::size_t i = 0; i < w.x_grid.n; ++i) {
    const double* row = w.values.data() + i * w.nu_grid.n;
    for (std::size_t j = 0; j < w.nu_grid.n; ++j) out[j] += row[j];
  }
  for (auto& v : out) v *= w.x_grid.dx;
  return out;
}

/// Total phase-space mass, 1 within quadrature error for a normalized field.
inline double total_mass(const WignerDistribution& w) {
  double acc = 0.0;
  for (const double v : w.values) acc += v;
  return acc * w.x_grid.dx * w.nu_grid.dx;
}

/// Bilinear interpolation of W at (nu, x); zero outside the grid.
inline double sample_bilinear(const WignerDistribution& w, double nu, double x) {
  const double fi = (x - w.x_grid.x0) / w.x_grid.dx;
  const double fj = (nu - w.nu_grid.x0) / w.nu_grid.dx;
  const auto ni = static_cast<std::ptrdiff_t>(w.x_grid.n);
  const auto nj = static_cast<std::ptrdiff_t>(w.nu_grid.n);
  if (fi <= -1.0 || fj <= -1.0 || fi >= static_cast<double>(ni) || fj >= static_cast<double>(nj))
    return 0.0;
  const double fi0 = std::floor(fi);
  const double fj0 = std::floor(fj);
  const auto i0 = static_cast<std::ptrdiff_t>(fi0);
  const auto j0 = static_cast<std::ptrdiff_t>(fj0);
  const double ti = fi - fi0;
  const double tj = fj - fj0;
  const auto cell = [&](std::ptrdiff_t i, std::ptrdiff_t j) {
    return (i >= 0 && i < ni && j >= 0 && j < nj)
               ? w.values[static_cast<std::size_t>(i) * w.nu_grid.n + static_cast<std::size_t>(j)]
               : 0.0;
  };
  return (1.0 - ti) * (1.0 - tj) * cell(i0, j0) + ti * (1.0 - tj) * cell(i0 + 1, j0) +
         (1.0 - ti) * tj * cell(i0, j0 + 1) + ti * tj * cell(i0 + 1, j0 + 1);
}

}  // namespace paraxial
