#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "paraxial/collins.hpp"
#include "paraxial/field.hpp"
#include "paraxial/grid.hpp"
#include "paraxial/radon.hpp"
#include "paraxial/ray_matrix.hpp"
#include "paraxial/wigner.hpp"

namespace paraxial {

enum class TheoremMode { Spatial, Frequency };

/// Axes for one verification: the conjugate_grid spans the Wigner function's
/// other axis (nu' when the input lives in space, x' when it lives in
/// frequency); out_grid carries both the output intensity and the Radon
/// projection, so no resampling enters the error metric.
struct TheoremGrids {
  Grid1D conjugate_grid;
  Grid1D out_grid;
};

/// Quantitative comparison of the two sides of the projection theorem:
/// lhs = |output of the dual system|^2, rhs = Radon projection of the input's
/// Wigner function, on a shared grid.
struct TheoremReport {
  TheoremMode mode = TheoremMode::Spatial;
  RayMatrix matrix;
  Grid1D out_grid;
  std::vector<double> lhs;
  RadonProjection rhs;
  double err_linf = 0.0;
  double err_l1 = 0.0;
  double mass_lhs = 0.0;
  double mass_rhs = 0.0;
  /// Masses stray past 2e-3 of 1: the out_grid (or the input window) does not
  /// capture the state. Pointwise errors remain meaningful; masses do not.
  bool window_leak = false;
  /// Non-empty when this case failed to compute (sweep keeps going).
  std::string error;

  bool ok() const { return error.empty(); }
};

namespace detail {

inline void finalize_report(TheoremReport& r) {
  double linf = 0.0, l1 = 0.0, mass_l = 0.0, mass_r = 0.0;
  for (std::size_t k = 0; k < r.lhs.size(); ++k) {
    const double diff = std::abs(r.lhs[k] - r.rhs.density[k]);
    linf = std::max(linf, diff);
    l1 += diff;
    mass_l += r.lhs[k];
    mass_r += r.rhs.density[k];
  }
  r.err_linf = linf;
  r.err_l1 = l1 * r.out_grid.dx;
  r.mass_lhs = mass_l * r.out_grid.dx;
  r.mass_rhs = mass_r * r.out_grid.dx;
  r.window_leak =
      std::abs(r.mass_lhs - 1.0) > 2e-3 || std::abs(r.mass_rhs - 1.0) > 2e-3;
}

}  // namespace detail

/// Spatial-domain theorem with a precomputed Wigner function (sweeps reuse one
/// Wigner across many matrices): lhs = |dual-system output|^2, rhs = Radon
/// projection at (m.d, m.b). Throws on grid incompatibilities.
inline TheoremReport verify_spatial(const SampledField& psi, const WignerDistribution& w,
                                    const RayMatrix& m, const Grid1D& out_grid) {
  TheoremReport r{TheoremMode::Spatial, m, out_grid, {}, {}, 0, 0, 0, 0, false, {}};
  r.lhs = intensity(collins_dual_spatial(psi, m, out_grid));
  r.rhs = radon_spatial(w, m.d, m.b, out_grid);
  detail::finalize_report(r);
  return r;
}

inline TheoremReport verify_spatial(const SampledField& psi, const RayMatrix& m,
                                    const TheoremGrids& grids) {
  return verify_spatial(psi, wigner_from_spatial(psi, grids.conjugate_grid), m,
                        grids.out_grid);
}

/// Frequency-domain theorem: the kernel of collins_frequency applied with m's
/// own entries already realizes the dual system on spectra, so
/// lhs = |collins_frequency(spec, m)|^2 and rhs = Radon projection of the
/// spectral Wigner function at (m.a, m.c), over the output frequency axis.
inline TheoremReport verify_frequency(const SampledField& spec, const WignerDistribution& w,
                                      const RayMatrix& m, const Grid1D& out_grid) {
  TheoremReport r{TheoremMode::Frequency, m, out_grid, {}, {}, 0, 0, 0, 0, false, {}};
  r.lhs = intensity(collins_frequency(spec, m, out_grid));
  r.rhs = radon_frequency(w, m.a, m.c, out_grid);
  detail::finalize_report(r);
  return r;
}

inline TheoremReport verify_frequency(const SampledField& spec, const RayMatrix& m,
                                      const TheoremGrids& grids) {
  return verify_frequency(spec, wigner_from_spectrum(spec, grids.conjugate_grid), m,
                          grids.out_grid);
}

/// Cartesian product of fields x matrices, field-major order. The mode of each
/// case follows the field's domain tag. Per-case failures (grid guards, ...)
/// are recorded in the report's error marker without aborting the sweep.
/// With threads > 1, cases are distributed over worker threads; results are
/// stored by index, so output is bitwise independent of the thread count.
inline std::vector<TheoremReport> sweep(const std::vector<SampledField>& fields,
                                        const std::vector<RayMatrix>& matrices,
                                        const TheoremGrids& grids, unsigned threads = 1) {
  if (fields.empty()) throw std::invalid_argument("sweep needs at least one field");
  if (matrices.empty()) throw std::invalid_argument("sweep needs at least one matrix");

  struct Prepared {
    std::optional<WignerDistribution> w;
    std::string error;
  };
  std::vector<Prepared> prepared(fields.size());
  for (std::size_t fi = 0; fi < fields.size(); ++fi) {
    try {
      prepared[fi].w = fields[fi].domain == Domain::Space
                           ? wigner_from_spatial(fields[fi], grids.conjugate_grid)
                           : wigner_from_spectrum(fields[fi], grids.conjugate_grid);
    } catch (const std::exception& e) {
      prepared[fi].error = e.what();
    }
  }

  const std::size_t total = fields.size() * matrices.size();
  std::vector<TheoremReport> reports(total);
  auto run_case = [&](std::size_t idx) {
    const std::size_t fi = idx / matrices.size();
    const std::size_t mi = idx % matrices.size();
    const SampledField& f = fields[fi];
    const RayMatrix& m = matrices[mi];
    const TheoremMode mode =
        f.domain == Domain::Space ? TheoremMode::Spatial : TheoremMode::Frequency;
    TheoremReport r{mode, m, grids.out_grid, {}, {}, 0, 0, 0, 0, false, {}};
    if (!prepared[fi].error.empty()) {
      r.error = prepared[fi].error;
    } else {
      try {
        r = (mode == TheoremMode::Spatial)
                ? verify_spatial(f, *prepared[fi].w, m, grids.out_grid)
                : verify_frequency(f, *prepared[fi].w, m, grids.out_grid);
      } catch (const std::exception& e) {
        r.error = e.what();
      }
    }
    reports[idx] = std::move(r);
  };

  if (threads <= 1 || total <= 1) {
    for (std::size_t idx = 0; idx < total; ++idx) run_case(idx);
  } else {
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(threads, total));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned wk = 0; wk < workers; ++wk) {
      pool.emplace_back([&, wk] {
        for (std::size_t idx = wk; idx < total; idx += workers) run_case(idx);
      });
    }
    for (auto& t : pool) t.join();
  }
  return reports;
}

/// Deterministic random unimodular matrices built by composing free_space and
/// thin_lens stages (never by normalizing a random 2x2, so det == 1 up to a
/// few ulp by construction). Keeps only matrices whose selected off-diagonal
/// entry (b in Spatial mode, c in Frequency mode) has magnitude in [lo, hi]
/// and whose dual-system kernel chirps stay resolvable on the given grids with
/// a safety margin, so every survivor is numerically trustworthy at the grids'
/// resolution.
inline std::vector<RayMatrix> random_unimodular_matrices(std::size_t count, std::uint64_t seed,
                                                         double lo, double hi,
                                                         TheoremMode mode,
                                                         const Grid1D& field_grid,
                                                         const Grid1D& out_grid) {
  std::mt19937_64 rng(seed);
  // fixed uniform mapping (not std::uniform_real_distribution, whose output
  // is implementation-defined and would break cross-toolchain determinism)
  auto u01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto uniform = [&](double a, double b) { return a + (b - a) * u01(); };

  const double budget_in = 0.8 * std::numbers::pi / field_grid.dx;
  const double budget_out = 0.8 * std::numbers::pi / out_grid.dx;
  const double x_in = field_grid.max_abs_coord();
  const double x_out = out_grid.max_abs_coord();

  std::vector<RayMatrix> picked;
  picked.reserve(count);
  for (std::size_t attempt = 0; attempt < 200000 && picked.size() < count; ++attempt) {
    RayMatrix m;
    const std::size_t stages = 2 + static_cast<std::size_t>(rng() % 3);
    for (std::size_t s = 0; s < stages; ++s) {
      if (rng() & 1) {
        m = compose(m, free_space(uniform(-2.5, 2.5)));
      } else {
        double strength = uniform(-2.0, 2.0);
        if (std::abs(strength) < 0.2) strength = std::copysign(0.2, strength);
        m = compose(m, thin_lens(-1.0 / strength));
      }
    }
    const double sel = (mode == TheoremMode::Spatial) ? m.b : m.c;
    if (std::abs(sel) < lo || std::abs(sel) > hi) continue;
    double rate_in, rate_out;
    if (mode == TheoremMode::Spatial) {
      rate_in = (std::abs(m.d) * x_in + x_out) / std::abs(m.b);
      rate_out = (std::abs(m.a) * x_out + x_in) / std::abs(m.b);
    } else {
      rate_in = (std::abs(m.a) * x_in + x_out) / std::abs(m.c);
      rate_out = (std::abs(m.d) * x_out + x_in) / std::abs(m.c);
    }
    if (rate_in > budget_in || rate_out > budget_out) continue;
    picked.push_back(m);
  }
  if (picked.size() < count)
    throw std::runtime_error("random matrix generation exhausted its attempt budget");
  return picked;
}

}  // namespace paraxial
