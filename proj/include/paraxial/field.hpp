#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "paraxial/errors.hpp"
#include "paraxial/grid.hpp"

namespace paraxial {

/// Which coordinate the samples live on: position (psi) or spatial frequency
/// (its spectrum). Transform directions and kernel choices dispatch on this.
enum class Domain { Space, Frequency };

/// Complex samples of a field (or its spectrum) on a uniform grid.
struct SampledField {
  Grid1D grid;
  Domain domain = Domain::Space;
  std::vector<std::complex<double>> samples;
};

/// Samples f at every grid node. f may return double or complex<double>.
/// A non-finite value is an error naming the offending coordinate.
template <typename F>
SampledField sample_function(const Grid1D& grid, F&& f, Domain tag) {
  SampledField out{grid, tag, {}};
  out.samples.reserve(grid.n);
  for (std::size_t k = 0; k < grid.n; ++k) {
    const double x = grid.coord(k);
    const std::complex<double> v = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("sampled function is not finite at coordinate " +
                                  std::to_string(x));
    out.samples.push_back(v);
  }
  return out;
}

/// Rectangle-rule L2 norm: sqrt(sum |s_k|^2 * dx).
inline double l2_norm(const SampledField& f) {
  double acc = 0.0;
  for (const auto& s : f.samples) acc += std::norm(s);
  return std::sqrt(acc * f.grid.dx);
}

/// Rectangle-rule inner product <f, g> = sum conj(f_k) g_k dx.
inline std::complex<double> inner_product(const SampledField& f, const SampledField& g) {
  if (!(f.grid == g.grid) || f.domain != g.domain)
    throw std::invalid_argument("inner product requires matching grids and domains");
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < f.samples.size(); ++k)
    acc += std::conj(f.samples[k]) * g.samples[k];
  return acc * f.grid.dx;
}

inline SampledField normalized(SampledField f) {
  const double norm = l2_norm(f);
  if (!(norm > 0.0)) throw std::invalid_argument("cannot normalize a zero field");
  for (auto& s : f.samples) s /= norm;
  return f;
}

/// alpha*f + beta*g on a shared grid and domain.
inline SampledField superpose(std::complex<double> alpha, const SampledField& f,
                              std::complex<double> beta, const SampledField& g) {
  if (!(f.grid == g.grid) || f.domain != g.domain)
    throw std::invalid_argument("superposition requires matching grids and domains");
  SampledField out{f.grid, f.domain, std::vector<std::complex<double>>(f.grid.n)};
  for (std::size_t k = 0; k < f.grid.n; ++k)
    out.samples[k] = alpha * f.samples[k] + beta * g.samples[k];
  return out;
}

inline std::vector<double> intensity(const SampledField& f) {
  std::vector<double> out(f.samples.size());
  for (std::size_t k = 0; k < f.samples.size(); ++k) out[k] = std::norm(f.samples[k]);
  return out;
}

/// Largest edge-sample magnitude relative to the peak magnitude; the
/// window-truncation diagnostic (0 for an identically zero field).
inline double boundary_leak(const SampledField& f) {
  double peak = 0.0;
  for (const auto& s : f.samples) peak = std::max(peak, std::abs(s));
  if (peak == 0.0) return 0.0;
  return std::max(std::abs(f.samples.front()), std::abs(f.samples.back())) / peak;
}

/// Fields are assumed compactly supported within their window; out-of-grid
/// reads elsewhere treat them as zero. This surfaces a violated assumption.
inline void warn_if_boundary_leak(const SampledField& f, const char* where) {
  const double leak = boundary_leak(f);
  if (leak > 1e-8)
    warn(std::string(where) + ": boundary samples reach " + std::to_string(leak) +
         " of the peak; the window may be truncating the state");
}

}  // namespace paraxial
