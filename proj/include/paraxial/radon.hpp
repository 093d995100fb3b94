#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "paraxial/errors.hpp"
#include "paraxial/grid.hpp"
#include "paraxial/wigner.hpp"

namespace paraxial {

enum class RadonMode { Spatial, Frequency };

/// Line-integral density over the output coordinate (x in Spatial mode, nu in
/// Frequency mode), tagged with its line parameters: (D, B) or (A, C).
struct RadonProjection {
  Grid1D out_grid;
  RadonMode mode = RadonMode::Spatial;
  double p1 = 0.0;  // D in Spatial mode, A in Frequency mode
  double p2 = 0.0;  // B in Spatial mode, C in Frequency mode
  std::vector<double> density;
};

inline double projection_mass(const RadonProjection& r) {
  double acc = 0.0;
  for (const double v : r.density) acc += v;
  return acc * r.out_grid.dx;
}

namespace detail {

inline void check_density_noise(const std::vector<double>& density, const char* where) {
  double worst = 0.0;
  for (const double v : density) worst = std::min(worst, v);
  if (worst < -1e-6)
    warn(std::string(where) + ": density dips to " + std::to_string(worst) +
         ", below the -1e-6 quadrature-noise allowance");
}

}  // namespace detail

/// R(x) = integral of W along the line x = D x' - B nu', with Jacobian 1/|B|
/// or 1/|D|. The sum steps along whichever axis keeps the interpolated
/// coordinate's per-step stride smaller (|B|*nu_span >= |D|*x_span picks x'),
/// so steep line families never alias. W is zero outside its grid.
inline RadonProjection radon_spatial(const WignerDistribution& w, double d_param,
                                     double b_param, const Grid1D& out) {
  if (d_param == 0.0 && b_param == 0.0)
    throw std::invalid_argument("degenerate line family: D and B are both zero");
  RadonProjection r{out, RadonMode::Spatial, d_param, b_param,
                    std::vector<double>(out.n, 0.0)};
  if (std::abs(b_param) * w.nu_grid.span() >= std::abs(d_param) * w.x_grid.span()) {
    // step along x', interpolate nu' = (D x' - x)/B
    const double weight = w.x_grid.dx / std::abs(b_param);
    for (std::size_t t = 0; t < out.n; ++t) {
      const double x = out.coord(t);
      double acc = 0.0;
      for (std::size_t i = 0; i < w.x_grid.n; ++i) {
        const double xi = w.x_grid.coord(i);
        acc += sample_bilinear(w, (d_param * xi - x) / b_param, xi);
      }
      r.density[t] = acc * weight;
    }
  } else {
    // step along nu', interpolate x' = (x + B nu')/D
    const double weight = w.nu_grid.dx / std::abs(d_param);
    for (std::size_t t = 0; t < out.n; ++t) {
      const double x = out.coord(t);
      double acc = 0.0;
      for (std::size_t j = 0; j < w.nu_grid.n; ++j) {
        const double nuj = w.nu_grid.coord(j);
        acc += sample_bilinear(w, nuj, (x + b_param * nuj) / d_param);
      }
      r.density[t] = acc * weight;
    }
  }
  detail::check_density_noise(r.density, "radon_spatial");
  return r;
}

/// R(nu) = integral of W along the line nu = A nu' - C x'; mirror of
/// radon_spatial with the axis roles swapped.
inline RadonProjection radon_frequency(const WignerDistribution& w, double a_param,
                                       double c_param, const Grid1D& out) {
  if (a_param == 0.0 && c_param == 0.0)
    throw std::invalid_argument("degenerate line family: A and C are both zero");
  RadonProjection r{out, RadonMode::Frequency, a_param, c_param,
                    std::vector<double>(out.n, 0.0)};
  if (std::abs(c_param) * w.x_grid.span() >= std::abs(a_param) * w.nu_grid.span()) {
    // step along nu', interpolate x' = (A nu' - nu)/C
    const double weight = w.nu_grid.dx / std::abs(c_param);
    for (std::size_t t = 0; t < out.n; ++t) {
      const double nu = out.coord(t);
      double acc = 0.0;
      for (std::size_t j = 0; j < w.nu_grid.n; ++j) {
        const double nuj = w.nu_grid.coord(j);
        acc += sample_bilinear(w, nuj, (a_param * nuj - nu) / c_param);
      }
      r.density[t] = acc * weight;
    }
  } else {
    // step along x', interpolate nu' = (nu + C x')/A
    const double weight = w.x_grid.dx / std::abs(a_param);
    for (std::size_t t = 0; t < out.n; ++t) {
      const double nu = out.coord(t);
      double acc = 0.0;
      for (std::size_t i = 0; i < w.x_grid.n; ++i) {
        const double xi = w.x_grid.coord(i);
        acc += sample_bilinear(w, (nu + c_param * xi) / a_param, xi);
      }
      r.density[t] = acc * weight;
    }
  }
  detail::check_density_noise(r.density, "radon_frequency");
  return r;
}

}  // namespace paraxial
