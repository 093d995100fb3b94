#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "paraxial/czt.hpp"
#include "paraxial/errors.hpp"
#include "paraxial/field.hpp"
#include "paraxial/grid.hpp"

namespace paraxial {

/// Unitary Fourier transform between Space and Frequency by rectangle-rule
/// summation, evaluated exactly on the caller's target grid:
///
///   Space -> Frequency:  out(nu) = (1/sqrt(2 pi)) sum_k psi(x_k) e^{-i x_k nu} dx
///   Frequency -> Space:  conjugate kernel, same normalization.
///
/// The forward kernel sign is e^{-i x nu}; it is the unique choice under which
/// the Wigner marginals reproduce |psi|^2 and |spectrum|^2 simultaneously (see
/// the conventions table in the README). Target coordinates must stay within
/// the representable band pi/dx of the source grid.
inline SampledField unitary_ft(const SampledField& f, const Grid1D& target) {
  const double limit = std::numbers::pi / f.grid.dx;
  if (target.max_abs_coord() > limit * (1.0 + 1e-12))
    throw NyquistError("transform target reaches " + std::to_string(target.max_abs_coord()) +
                           ", past the maximum representable frequency " + std::to_string(limit),
                       limit);
  const double sign = (f.domain == Domain::Space) ? -1.0 : 1.0;
  FourierSumPlan plan(f.grid.n, f.grid.x0, f.grid.dx, target.n, target.x0, target.dx, sign);
  SampledField out{target, f.domain == Domain::Space ? Domain::Frequency : Domain::Space,
                   plan.apply(f.samples)};
  const double scale = f.grid.dx / std::sqrt(2.0 * std::numbers::pi);
  for (auto& z : out.samples) z *= scale;
  return out;
}

}  // namespace paraxial
