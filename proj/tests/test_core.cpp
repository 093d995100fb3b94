#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "paraxial/chirplet.hpp"
#include "paraxial/czt.hpp"
#include "paraxial/errors.hpp"
#include "paraxial/field.hpp"
#include "paraxial/fourier.hpp"
#include "paraxial/grid.hpp"
#include "paraxial/hermite.hpp"
#include "paraxial/ray_matrix.hpp"

using namespace paraxial;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::MessageMatches;

namespace {

constexpr double pi = std::numbers::pi;
// quarter root of 1/pi, the peak amplitude of the unit Gaussian state
constexpr double root4_inv_pi = 0.7511255444649425;

std::mt19937_64 seeded_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::complex<double>> random_samples(std::size_t n, std::uint64_t seed) {
  auto rng = seeded_rng(seed);
  std::vector<std::complex<double>> out(n);
  for (auto& z : out)
    z = {2.0 * unit_uniform(rng) - 1.0, 2.0 * unit_uniform(rng) - 1.0};
  return out;
}

double max_abs_diff(const std::vector<std::complex<double>>& a,
                    const std::vector<std::complex<double>>& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace

TEST_CASE("centered grid covers [-h, h) with node at zero", "[grid]") {
  const Grid1D g = make_centered_grid(4, 2.0);
  REQUIRE(g.n == 4);
  REQUIRE(g.dx == 1.0);
  REQUIRE(g.coord(0) == -2.0);
  REQUIRE(g.coord(1) == -1.0);
  REQUIRE(g.coord(2) == 0.0);
  REQUIRE(g.coord(3) == 1.0);
  REQUIRE(g.span() == 4.0);
  REQUIRE(g.max_abs_coord() == 2.0);
}

TEST_CASE("centered grid puts the midpoint node exactly at zero", "[grid]") {
  const Grid1D g = make_centered_grid(1024, 8.0);
  REQUIRE(g.dx == 0.015625);
  REQUIRE(g.coord(512) == 0.0);
  REQUIRE(g.coord(0) == -8.0);
}

TEST_CASE("grid constructors reject invalid shapes", "[grid]") {
  REQUIRE_THROWS_AS(make_centered_grid(5, 1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(make_centered_grid(0, 1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(make_centered_grid(64, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(make_centered_grid(64, -2.0), std::invalid_argument);
  REQUIRE_THROWS_AS(make_grid(1, 0.5, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(make_grid(16, 0.0, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(make_grid(16, 0.5, std::nan("")), std::invalid_argument);
}

TEST_CASE("sampling honors the function and the domain tag", "[field]") {
  const Grid1D g = make_centered_grid(8, 4.0);
  const SampledField f =
      sample_function(g, [](double) { return std::complex<double>(1.0, -2.0); },
                      Domain::Frequency);
  REQUIRE(f.domain == Domain::Frequency);
  REQUIRE(f.samples.size() == 8);
  for (const auto& s : f.samples) REQUIRE(s == std::complex<double>(1.0, -2.0));
}

TEST_CASE("unit gaussian state peaks at the quarter root of 1/pi", "[field]") {
  const Grid1D g = make_centered_grid(64, 4.0);
  const SampledField f = sample_chirplet(g, ChirpletParams{1.0, 0.0});
  REQUIRE_THAT(std::abs(f.samples[32]), Catch::Matchers::WithinAbs(root4_inv_pi, 1e-15));
}

TEST_CASE("sampling a non-finite value names the coordinate", "[field]") {
  const Grid1D g = make_centered_grid(8, 4.0);
  REQUIRE_THROWS_MATCHES(
      sample_function(
          g, [&g](double x) { return x == g.coord(3) ? std::nan("") : 0.0; }, Domain::Space),
      std::invalid_argument, MessageMatches(ContainsSubstring("-1")));
}

TEST_CASE("l2 norm: zero field, unit state, homogeneity", "[field]") {
  const Grid1D g = make_centered_grid(1024, 8.0);
  const SampledField zero =
      sample_function(g, [](double) { return 0.0; }, Domain::Space);
  REQUIRE(l2_norm(zero) == 0.0);

  const SampledField psi = sample_chirplet(g, ChirpletParams{1.0, 0.5});
  REQUIRE_THAT(l2_norm(psi), Catch::Matchers::WithinAbs(1.0, 1e-10));

  const SampledField doubled = superpose(2.0, psi, 0.0, psi);
  REQUIRE_THAT(l2_norm(doubled), Catch::Matchers::WithinAbs(2.0 * l2_norm(psi), 1e-12));
}

TEST_CASE("normalized rejects the zero field and fixes the norm otherwise", "[field]") {
  const Grid1D g = make_centered_grid(256, 8.0);
  const SampledField zero =
      sample_function(g, [](double) { return 0.0; }, Domain::Space);
  REQUIRE_THROWS_AS(normalized(zero), std::invalid_argument);

  SampledField psi = sample_chirplet(g, ChirpletParams{2.0, -1.0});
  for (auto& s : psi.samples) s *= std::complex<double>(0.3, 0.4);
  REQUIRE_THAT(l2_norm(normalized(psi)), Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("superpose and intensity are pointwise", "[field]") {
  const Grid1D g = make_centered_grid(32, 2.0);
  const SampledField a =
      sample_function(g, [](double x) { return std::complex<double>(x, 1.0); }, Domain::Space);
  const SampledField b =
      sample_function(g, [](double x) { return std::complex<double>(0.0, x); }, Domain::Space);
  const SampledField s = superpose({0.0, 1.0}, a, 2.0, b);
  const auto inten = intensity(s);
  for (std::size_t k = 0; k < g.n; ++k) {
    const std::complex<double> expect =
        std::complex<double>(0.0, 1.0) * a.samples[k] + 2.0 * b.samples[k];
    REQUIRE(std::abs(s.samples[k] - expect) <= 1e-15);
    REQUIRE(std::abs(inten[k] - std::norm(s.samples[k])) <= 1e-15);
  }

  const Grid1D other = make_centered_grid(32, 3.0);
  const SampledField c =
      sample_function(other, [](double) { return 1.0; }, Domain::Space);
  REQUIRE_THROWS_AS(superpose(1.0, a, 1.0, c), std::invalid_argument);
}

TEST_CASE("boundary leak is the edge-to-peak magnitude ratio", "[field]") {
  const Grid1D g = make_centered_grid(64, 6.0);
  const SampledField flat =
      sample_function(g, [](double) { return 0.5; }, Domain::Space);
  REQUIRE(boundary_leak(flat) == 1.0);
  const SampledField packet = sample_chirplet(g, ChirpletParams{1.0, 0.0});
  REQUIRE(boundary_leak(packet) < 1e-7);
}

TEST_CASE("chirp transform matches the literal sum", "[czt]") {
  const std::size_t m = 13, p = 9;
  const double rate = 0.37;
  const auto h = random_samples(m, 101);
  const CztPlan plan(m, p, rate);
  const auto fast = plan.apply(h);

  std::vector<std::complex<double>> direct(p, 0.0);
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t k = 0; k < m; ++k)
      direct[j] += h[k] * std::polar(1.0, rate * static_cast<double>(j) *
                                              static_cast<double>(k));
  REQUIRE(max_abs_diff(fast, direct) <= 1e-12 * static_cast<double>(m));
}

TEST_CASE("chirp transform rejects empty and mismatched inputs", "[czt]") {
  REQUIRE_THROWS_AS(CztPlan(0, 4, 0.1), std::invalid_argument);
  REQUIRE_THROWS_AS(CztPlan(4, 0, 0.1), std::invalid_argument);
  const CztPlan plan(4, 4, 0.1);
  const auto h = random_samples(5, 7);
  REQUIRE_THROWS_AS(plan.apply(h), std::invalid_argument);
}

TEST_CASE("fourier sum plan matches the literal sum on unrelated grids", "[czt]") {
  const std::size_t m = 17, p = 11;
  const double s0 = -1.3, ds = 0.21, t0 = -2.0, dt = 0.33;
  const auto h = random_samples(m, 202);
  const FourierSumPlan plan(m, s0, ds, p, t0, dt, +1.0);
  const auto fast = plan.apply(h);

  std::vector<std::complex<double>> direct(p, 0.0);
  for (std::size_t j = 0; j < p; ++j) {
    const double t = t0 + static_cast<double>(j) * dt;
    for (std::size_t k = 0; k < m; ++k) {
      const double s = s0 + static_cast<double>(k) * ds;
      direct[j] += h[k] * std::polar(1.0, s * t);
    }
  }
  REQUIRE(max_abs_diff(fast, direct) <= 1e-12 * static_cast<double>(m));
}

TEST_CASE("fourier sum plan handles negative target steps", "[czt]") {
  const std::size_t m = 12, p = 9;
  const double s0 = 0.4, ds = 0.15, t0 = 2.1, dt = -0.37;
  const auto h = random_samples(m, 303);
  const FourierSumPlan plan(m, s0, ds, p, t0, dt, -1.0);
  const auto fast = plan.apply(h);

  std::vector<std::complex<double>> direct(p, 0.0);
  for (std::size_t j = 0; j < p; ++j) {
    const double t = t0 + static_cast<double>(j) * dt;
    for (std::size_t k = 0; k < m; ++k) {
      const double s = s0 + static_cast<double>(k) * ds;
      direct[j] += h[k] * std::polar(1.0, -s * t);
    }
  }
  REQUIRE(max_abs_diff(fast, direct) <= 1e-12 * static_cast<double>(m));
}

TEST_CASE("unitary transform matches the literal quadrature sum", "[fourier]") {
  const Grid1D xg = make_centered_grid(256, 6.0);
  const Grid1D ng = make_centered_grid(64, 4.0);
  const SampledField psi = sample_chirplet(xg, ChirpletParams{0.9, -0.3});
  const SampledField spec = unitary_ft(psi, ng);
  REQUIRE(spec.domain == Domain::Frequency);

  for (std::size_t j = 0; j < ng.n; ++j) {
    const double nu = ng.coord(j);
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < xg.n; ++k)
      acc += psi.samples[k] * std::polar(1.0, -xg.coord(k) * nu);
    acc *= xg.dx / std::sqrt(2.0 * pi);
    REQUIRE(std::abs(spec.samples[j] - acc) <= 1e-12);
  }
}

TEST_CASE("the unit gaussian state is its own spectrum", "[fourier]") {
  const Grid1D g = make_centered_grid(512, 8.0);
  const SampledField psi = sample_chirplet(g, ChirpletParams{1.0, 0.0});
  const SampledField spec = unitary_ft(psi, g);
  for (std::size_t k = 0; k < g.n; ++k)
    REQUIRE(std::abs(spec.samples[k] - psi.samples[k]) <= 1e-8);
}

TEST_CASE("transforming forward and back is the identity", "[fourier]") {
  const Grid1D xg = make_centered_grid(512, 8.0);
  const Grid1D ng = make_centered_grid(512, 8.0);
  const SampledField psi = sample_chirplet(xg, ChirpletParams{1.2, 0.4});
  const SampledField back = unitary_ft(unitary_ft(psi, ng), xg);
  REQUIRE(back.domain == Domain::Space);
  REQUIRE(max_abs_diff(back.samples, psi.samples) <= 1e-8);
}

TEST_CASE("the transform preserves the l2 norm and linearity", "[fourier]") {
  const Grid1D g = make_centered_grid(512, 8.0);
  const SampledField f = sample_chirplet(g, ChirpletParams{1.0, 0.5});
  const SampledField h = hermite_gauss(g, 2);
  REQUIRE_THAT(l2_norm(unitary_ft(f, g)), Catch::Matchers::WithinAbs(l2_norm(f), 1e-10));

  const std::complex<double> alpha{0.6, -0.2}, beta{-0.1, 0.9};
  const SampledField lhs = unitary_ft(superpose(alpha, f, beta, h), g);
  const SampledField rhs = superpose(alpha, unitary_ft(f, g), beta, unitary_ft(h, g));
  REQUIRE(max_abs_diff(lhs.samples, rhs.samples) <= 1e-12);
}

TEST_CASE("transform of the zero field is zero", "[fourier]") {
  const Grid1D g = make_centered_grid(64, 4.0);
  const SampledField zero =
      sample_function(g, [](double) { return 0.0; }, Domain::Space);
  const SampledField spec = unitary_ft(zero, g);
  for (const auto& z : spec.samples) REQUIRE(std::abs(z) == 0.0);
}

TEST_CASE("targets past the representable band are rejected with the limit", "[fourier]") {
  const Grid1D xg = make_centered_grid(64, 2.0);
  const Grid1D wide = make_centered_grid(64, 60.0);
  const SampledField psi = sample_chirplet(xg, ChirpletParams{1.0, 0.0});
  try {
    (void)unitary_ft(psi, wide);
    FAIL("expected a bandwidth error");
  } catch (const NyquistError& e) {
    REQUIRE_THAT(e.max_frequency(), Catch::Matchers::WithinAbs(pi / xg.dx, 1e-9));
  }
}

TEST_CASE("ground state value and first-state parity", "[hermite]") {
  REQUIRE_THAT(hermite_gauss_value(0, 0.0), Catch::Matchers::WithinAbs(root4_inv_pi, 1e-15));
  REQUIRE(hermite_gauss_value(1, 0.0) == 0.0);
  for (const double x : {0.3, 1.1, 2.7})
    REQUIRE_THAT(hermite_gauss_value(1, -x),
                 Catch::Matchers::WithinAbs(-hermite_gauss_value(1, x), 1e-15));
}

TEST_CASE("second state matches its closed form", "[hermite]") {
  for (const double x : {0.0, 0.5, 1.0, 2.0}) {
    const double expect = root4_inv_pi * (2.0 * x * x - 1.0) / std::numbers::sqrt2 *
                          std::exp(-0.5 * x * x);
    REQUIRE_THAT(hermite_gauss_value(2, x), Catch::Matchers::WithinAbs(expect, 1e-14));
  }
}

TEST_CASE("hermite-gauss states are unit norm across orders", "[hermite]") {
  const Grid1D g = make_centered_grid(1024, 10.0);
  for (const unsigned order : {0u, 1u, 2u, 3u, 5u, 20u})
    REQUIRE_THAT(l2_norm(hermite_gauss(g, order)), Catch::Matchers::WithinAbs(1.0, 1e-10));
}

TEST_CASE("hermite-gauss states are mutually orthogonal", "[hermite]") {
  const Grid1D g = make_centered_grid(1024, 10.0);
  const SampledField h0 = hermite_gauss(g, 0);
  const SampledField h2 = hermite_gauss(g, 2);
  const SampledField h5 = hermite_gauss(g, 5);
  REQUIRE(std::abs(inner_product(h0, h2)) <= 1e-12);
  REQUIRE(std::abs(inner_product(h2, h5)) <= 1e-12);
  REQUIRE_THAT(inner_product(h2, h2).real(), Catch::Matchers::WithinAbs(1.0, 1e-10));
}

TEST_CASE("orders past the supported maximum are rejected", "[hermite]") {
  REQUIRE_THROWS_AS(hermite_gauss_value(21, 0.0), std::invalid_argument);
  const Grid1D g = make_centered_grid(64, 8.0);
  REQUIRE_THROWS_AS(hermite_gauss(g, 21), std::invalid_argument);
}

TEST_CASE("matrix algebra: determinants, composition, inverse pair", "[matrix]") {
  REQUIRE(RayMatrix{}.det() == 1.0);
  REQUIRE(free_space(1.7).det() == 1.0);
  REQUIRE(thin_lens(2.0).det() == 1.0);
  REQUIRE(fourier_stage().det() == 1.0);
  REQUIRE_THROWS_AS(thin_lens(0.0), std::invalid_argument);

  const RayMatrix m = compose(free_space(1.0), thin_lens(2.0));
  REQUIRE(m.a == 1.0);
  REQUIRE(m.b == 1.0);
  REQUIRE(m.c == -0.5);
  REQUIRE(m.d == 0.5);

  // the companion matrix undoes the original: it is the exact inverse
  const RayMatrix round = compose(m, dual(m));
  REQUIRE_THAT(round.a, Catch::Matchers::WithinAbs(1.0, 1e-15));
  REQUIRE_THAT(round.b, Catch::Matchers::WithinAbs(0.0, 1e-15));
  REQUIRE_THAT(round.c, Catch::Matchers::WithinAbs(0.0, 1e-15));
  REQUIRE_THAT(round.d, Catch::Matchers::WithinAbs(1.0, 1e-15));

  const RayMatrix twice = dual(dual(m));
  REQUIRE(twice.a == m.a);
  REQUIRE(twice.b == m.b);
  REQUIRE(twice.c == m.c);
  REQUIRE(twice.d == m.d);
}

TEST_CASE("matrix parsing accepts entries and rejects bad determinants", "[matrix]") {
  const RayMatrix m = parse_ray_matrix("1, 0.7, 0, 1");
  REQUIRE(m.b == 0.7);
  REQUIRE_THROWS_AS(parse_ray_matrix("1,0.7,0"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_ray_matrix("a,b,c,d"), std::invalid_argument);
  REQUIRE_THROWS_MATCHES(parse_ray_matrix("1,0.7,0,2"), std::invalid_argument,
                         MessageMatches(ContainsSubstring("determinant")));
}

TEST_CASE("unimodularity check names the determinant", "[matrix]") {
  REQUIRE_THROWS_MATCHES(
      require_unimodular(RayMatrix{2.0, 0.0, 0.0, 1.0}, 1e-9, "test"),
      std::invalid_argument, MessageMatches(ContainsSubstring("determinant")));
  REQUIRE_NOTHROW(require_unimodular(fourier_stage(), 1e-9, "test"));
  REQUIRE_THAT(to_string(RayMatrix{1.0, 0.7, 0.0, 1.0}), ContainsSubstring("0.7"));
}
