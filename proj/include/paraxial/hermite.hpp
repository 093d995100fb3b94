#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "paraxial/field.hpp"
#include "paraxial/grid.hpp"

namespace paraxial {

/// Orders beyond this under-resolve on the default grids (the classical
/// turning point sqrt(2*order+1) approaches the window edge).
inline constexpr unsigned max_hermite_order = 20;

/// Value of the L2-normalized Hermite-Gauss function of the given order,
/// via the normalized three-term recurrence
///   h_0 = pi^{-1/4} e^{-x^2/2},  h_1 = sqrt(2) x h_0,
///   h_k = x sqrt(2/k) h_{k-1} - sqrt((k-1)/k) h_{k-2}.
inline double hermite_gauss_value(unsigned order, double x) {
  if (order > max_hermite_order)
    throw std::invalid_argument("hermite order " + std::to_string(order) +
                                " out of range (max " + std::to_string(max_hermite_order) + ")");
  const double h0 = std::exp(-0.5 * x * x) / std::pow(std::numbers::pi, 0.25);
  if (order == 0) return h0;
  double prev = h0;
  double cur = std::numbers::sqrt2 * x * h0;
  for (unsigned k = 2; k <= order; ++k) {
    const double next =
        x * std::sqrt(2.0 / k) * cur - std::sqrt(static_cast<double>(k - 1) / k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// The order-th Hermite-Gauss function sampled on the grid (Space domain).
inline SampledField hermite_gauss(const Grid1D& grid, unsigned order) {
  return sample_function(
      grid, [order](double x) { return hermite_gauss_value(order, x); }, Domain::Space);
}

}  // namespace paraxial
