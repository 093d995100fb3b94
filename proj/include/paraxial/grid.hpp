#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace paraxial {

/// Uniform 1-D sampling lattice. Coordinate of index k is x0 + k*dx.
/// Serves both position axes (x, x') and spatial-frequency axes (nu, nu').
struct Grid1D {
  std::size_t n = 0;
  double dx = 0.0;
  double x0 = 0.0;

  double coord(std::size_t k) const { return x0 + static_cast<double>(k) * dx; }
  double span() const { return static_cast<double>(n) * dx; }
  double max_abs_coord() const { return std::max(std::abs(x0), std::abs(coord(n - 1))); }

  bool operator==(const Grid1D&) const = default;
};

inline Grid1D make_grid(std::size_t n, double dx, double x0) {
  if (n < 2)
    throw std::invalid_argument("grid needs at least 2 samples, got " + std::to_string(n));
  if (!(dx > 0.0) || !std::isfinite(dx))
    throw std::invalid_argument("grid spacing must be positive and finite");
  if (!std::isfinite(x0))
    throw std::invalid_argument("grid origin must be finite");
  return Grid1D{n, dx, x0};
}

/// Symmetric window of the given half-width: even n, dx = 2*half_width/n,
/// x0 = -(n/2)*dx. Storing x0 as that exact product makes coord(n/2) == 0
/// for every even n.
inline Grid1D make_centered_grid(std::size_t n, double half_width) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("centered grid needs an even sample count >= 2, got " +
                                std::to_string(n));
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw std::invalid_argument("centered grid needs a positive finite half-width");
  const double dx = 2.0 * half_width / static_cast<double>(n);
  const double x0 = -(static_cast<double>(n / 2) * dx);
  return Grid1D{n, dx, x0};
}

}  // namespace paraxial
