#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "paraxial/field.hpp"
#include "paraxial/grid.hpp"
#include "paraxial/ray_matrix.hpp"

namespace paraxial {

/// Gaussian-windowed linear chirp: width parameter epsilon > 0, chirp rate
/// beta. Everything about this state has a closed form, which makes it the
/// end-to-end oracle for the projection theorem.
struct ChirpletParams {
  double epsilon = 1.0;
  double beta = 0.0;
};

namespace detail {

inline void require_valid(const ChirpletParams& p) {
  if (!(p.epsilon > 0.0) || !std::isfinite(p.epsilon) || !std::isfinite(p.beta))
    throw std::invalid_argument("chirplet needs epsilon > 0 and finite parameters");
}

}  // namespace detail

/// psi0(x) = (eps/pi)^{1/4} exp(-(eps - i beta) x^2 / 2); unit L2 norm.
inline std::complex<double> chirplet_field(const ChirpletParams& p, double x) {
  detail::require_valid(p);
  const double amp = std::pow(p.epsilon / std::numbers::pi, 0.25) *
                     std::exp(-0.5 * p.epsilon * x * x);
  return std::polar(amp, 0.5 * p.beta * x * x);
}

/// W0(nu, x) = (1/pi) exp(-[eps x^2 + (nu - beta x)^2 / eps]): a tilted
/// Gaussian concentrated on the line nu = beta x.
inline double chirplet_wigner(const ChirpletParams& p, double nu, double x) {
  detail::require_valid(p);
  const double shifted = nu - p.beta * x;
  return std::exp(-(p.epsilon * x * x + shifted * shifted / p.epsilon)) / std::numbers::pi;
}

/// Radon projection of W0 at line parameters (D, B):
///   R0(x) = sqrt(eps/pi / den) exp(-eps x^2 / den), den = (D - B beta)^2 + B^2 eps^2.
/// den vanishes only when D = B = 0 (the degenerate line family).
inline double chirplet_radon(const ChirpletParams& p, double d_param, double b_param,
                             double x) {
  detail::require_valid(p);
  const double tilt = d_param - b_param * p.beta;
  const double den = tilt * tilt + b_param * b_param * p.epsilon * p.epsilon;
  if (!(den > 0.0))
    throw std::invalid_argument("degenerate line family: D and B are both zero");
  return std::sqrt(p.epsilon / std::numbers::pi / den) * std::exp(-p.epsilon * x * x / den);
}

/// |phi0(x)|^2 of the chirplet propagated through the dual system (d,-b,-c,a):
/// the same closed form as chirplet_radon(p, m.d, m.b, x) — that equality is
/// the theorem's worked example. A and C enter phi0 only as unimodular phase.
/// B = 0 defers to the (exact) marginal form rather than a limit.
inline double chirplet_fresnel_intensity(const ChirpletParams& p, const RayMatrix& m,
                                         double x) {
  require_unimodular(m, 1e-9, "chirplet_fresnel_intensity");
  return chirplet_radon(p, m.d, m.b, x);
}

/// The spectrum of a chirplet is again a chirplet (up to a unit-modulus global
/// phase) with parameters (eps, -beta) / (eps^2 + beta^2).
inline ChirpletParams chirplet_spectrum_params(const ChirpletParams& p) {
  detail::require_valid(p);
  const double mag = p.epsilon * p.epsilon + p.beta * p.beta;
  return ChirpletParams{p.epsilon / mag, -p.beta / mag};
}

inline SampledField sample_chirplet(const Grid1D& grid, const ChirpletParams& p,
                                    Domain tag = Domain::Space) {
  detail::require_valid(p);
  return sample_function(
      grid, [&p](double x) { return chirplet_field(p, x); }, tag);
}

}  // namespace paraxial
