#pragma once

#include <cctype>
#include <complex>
#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "paraxial/chirplet.hpp"
#include "paraxial/errors.hpp"
#include "paraxial/field.hpp"
#include "paraxial/grid.hpp"
#include "paraxial/hermite.hpp"
#include "paraxial/ray_matrix.hpp"

namespace paraxial {

/// One weighted component of a configured field.
struct FieldTerm {
  enum class Kind { Chirplet, Hermite };
  Kind kind = Kind::Chirplet;
  ChirpletParams chirplet;
  unsigned order = 0;
  std::complex<double> weight = 1.0;
};

struct FieldSpec {
  std::vector<FieldTerm> terms{FieldTerm{}};  // default: chirplet eps=1 beta=0
  bool normalize = false;
};

/// A matrix plus the text it was parsed from (kept for reporting).
struct MatrixSpec {
  RayMatrix matrix;
  std::string text;
};

/// Everything a CLI run needs. Defaults describe the worked example:
/// chirplet eps=1 beta=0.5 through (1, 0.7, 0, 1) on n=1024, half_width=8.
struct RunConfig {
  enum class Mode { Spatial, Frequency, Both };

  FieldSpec field{{FieldTerm{FieldTerm::Kind::Chirplet, ChirpletParams{1.0, 0.5}, 0, 1.0}},
                  false};
  std::size_t n = 1024;
  double half_width = 8.0;
  std::size_t nu_n = 0;        // 0: mirror n
  double nu_half_width = 0.0;  // 0: mirror half_width
  std::vector<MatrixSpec> matrices{{RayMatrix{1.0, 0.7, 0.0, 1.0}, "1,0.7,0,1"}};
  Mode mode = Mode::Spatial;
  double tolerance = 1e-3;
  bool tolerance_set = false;  // true when the config or a flag named one
  std::string out_dir = "out";

  Grid1D space_grid() const { return make_centered_grid(n, half_width); }
  Grid1D frequency_grid() const {
    return make_centered_grid(nu_n ? nu_n : n, nu_half_width > 0 ? nu_half_width : half_width);
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos
                                                                     : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline unsigned parse_unsigned(std::string_view token, const char* what) {
  const double v = parse_real(token, what);
  const auto u = static_cast<unsigned long>(v);
  if (v < 0.0 || static_cast<double>(u) != v)
    throw std::invalid_argument(std::string(what) + ": expected a non-negative integer, got \"" +
                                std::string(token) + "\"");
  return static_cast<unsigned>(u);
}

/// "re,im" -> complex
inline std::complex<double> parse_complex_pair(std::string_view token, const char* what) {
  const auto parts = split(token, ',');
  if (parts.size() == 1) return {parse_real(parts[0], what), 0.0};
  if (parts.size() == 2)
    return {parse_real(parts[0], what), parse_real(parts[1], what)};
  throw std::invalid_argument(std::string(what) + ": expected \"re\" or \"re,im\", got \"" +
                              std::string(token) + "\"");
}

/// "hermite:ORDER" or "chirplet:EPS,BETA", optionally "... @ re,im".
inline FieldTerm parse_field_term(std::string_view text) {
  FieldTerm term;
  std::string_view body = text;
  const std::size_t at = text.find('@');
  if (at != std::string_view::npos) {
    body = trim(text.substr(0, at));
    term.weight = parse_complex_pair(trim(text.substr(at + 1)), "field term weight");
  }
  const std::size_t colon = body.find(':');
  const std::string_view kind = trim(body.substr(0, colon));
  const std::string_view params =
      colon == std::string_view::npos ? std::string_view{} : trim(body.substr(colon + 1));
  if (kind == "hermite") {
    term.kind = FieldTerm::Kind::Hermite;
    if (params.empty())
      throw std::invalid_argument("hermite term needs an order, e.g. \"hermite:2\"");
    term.order = parse_unsigned(params, "hermite order");
    if (term.order > max_hermite_order)
      throw std::invalid_argument("hermite order " + std::to_string(term.order) +
                                  " out of range (max " + std::to_string(max_hermite_order) +
                                  ")");
  } else if (kind == "chirplet") {
    term.kind = FieldTerm::Kind::Chirplet;
    term.chirplet = ChirpletParams{1.0, 0.0};
    if (!params.empty()) {
      const auto parts = split(params, ',');
      if (parts.size() != 2)
        throw std::invalid_argument(
            "chirplet term needs \"chirplet:EPSILON,BETA\", got \"" + std::string(text) + "\"");
      term.chirplet.epsilon = parse_real(parts[0], "chirplet epsilon");
      term.chirplet.beta = parse_real(parts[1], "chirplet beta");
    }
    if (!(term.chirplet.epsilon > 0.0))
      throw std::invalid_argument("chirplet epsilon must be positive");
  } else {
    throw std::invalid_argument("unknown field term kind \"" + std::string(kind) +
                                "\" (expected hermite or chirplet)");
  }
  return term;
}

}  // namespace detail

/// A matrix spec is either four comma-separated entries "A,B,C,D" or a
/// whitespace-separated cascade of elements applied left to right:
/// "free:LENGTH", "lens:FOCAL", "fourier".
inline RayMatrix parse_matrix_spec(std::string_view text) {
  const std::string_view trimmed = detail::trim(text);
  if (trimmed.empty()) throw std::invalid_argument("empty matrix spec");
  if (trimmed.find(',') != std::string_view::npos) return parse_ray_matrix(trimmed);
  RayMatrix m;
  std::istringstream tokens{std::string(trimmed)};
  std::string tok;
  while (tokens >> tok) {
    if (tok == "fourier") {
      m = compose(m, fourier_stage());
    } else if (tok.rfind("free:", 0) == 0) {
      m = compose(m, free_space(detail::parse_real(tok.substr(5), "free-space length")));
    } else if (tok.rfind("lens:", 0) == 0) {
      m = compose(m, thin_lens(detail::parse_real(tok.substr(5), "lens focal length")));
    } else {
      throw std::invalid_argument("unknown matrix element \"" + tok +
                                  "\" (expected free:L, lens:F, or fourier)");
    }
  }
  return m;
}

/// Key-value config with [field] / [grid] / [matrices] / [run] sections,
/// '#' comments, one "key = value" per line. Errors carry file:line.
inline RunConfig parse_run_config(std::istream& in, const std::string& filename) {
  RunConfig cfg;
  bool field_seen = false;
  bool matrices_seen = false;
  std::string section;
  std::string line;
  int lineno = 0;

  std::string field_type = "chirplet";
  ChirpletParams field_chirplet{1.0, 0.5};
  unsigned field_order = 0;
  std::string field_terms;

  auto fail = [&](const std::string& msg) -> void { throw ConfigError(filename, lineno, msg); };

  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (const std::size_t hash = s.find('#'); hash != std::string_view::npos)
      s = s.substr(0, hash);
    s = detail::trim(s);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail("unterminated section header");
      section = std::string(detail::trim(s.substr(1, s.size() - 2)));
      if (section != "field" && section != "grid" && section != "matrices" && section != "run")
        fail("unknown section [" + section + "]");
      if (section == "matrices") {
        cfg.matrices.clear();  // a matrices section replaces the default list
        matrices_seen = true;
      }
      if (section == "field") field_seen = true;
      continue;
    }
    const std::size_t eq = s.find('=');
    if (eq == std::string_view::npos) fail("expected \"key = value\"");
    const std::string key{detail::trim(s.substr(0, eq))};
    const std::string value{detail::trim(s.substr(eq + 1))};
    if (key.empty()) fail("empty key");
    if (section.empty()) fail("key \"" + key + "\" outside any section");

    try {
      if (section == "field") {
        if (key == "type") {
          if (value != "chirplet" && value != "hermite" && value != "superposition")
            fail("field type must be chirplet, hermite, or superposition");
          field_type = value;
        } else if (key == "epsilon") {
          field_chirplet.epsilon = detail::parse_real(value, "epsilon");
        } else if (key == "beta") {
          field_chirplet.beta = detail::parse_real(value, "beta");
        } else if (key == "order") {
          field_order = detail::parse_unsigned(value, "order");
        } else if (key == "terms") {
          field_terms = value;
        } else if (key == "normalize") {
          if (value == "true") cfg.field.normalize = true;
          else if (value == "false") cfg.field.normalize = false;
          else fail("normalize must be true or false");
        } else {
          fail("unknown [field] key \"" + key + "\"");
        }
      } else if (section == "grid") {
        if (key == "n") cfg.n = detail::parse_unsigned(value, "n");
        else if (key == "half_width") cfg.half_width = detail::parse_real(value, "half_width");
        else if (key == "nu_n") cfg.nu_n = detail::parse_unsigned(value, "nu_n");
        else if (key == "nu_half_width")
          cfg.nu_half_width = detail::parse_real(value, "nu_half_width");
        else fail("unknown [grid] key \"" + key + "\"");
      } else if (section == "matrices") {
        cfg.matrices.push_back(MatrixSpec{parse_matrix_spec(value), value});
      } else {  // run
        if (key == "mode") {
          if (value == "spatial") cfg.mode = RunConfig::Mode::Spatial;
          else if (value == "frequency") cfg.mode = RunConfig::Mode::Frequency;
          else if (value == "both") cfg.mode = RunConfig::Mode::Both;
          else fail("mode must be spatial, frequency, or both");
        } else if (key == "tolerance") {
          cfg.tolerance = detail::parse_real(value, "tolerance");
          if (!(cfg.tolerance > 0.0)) fail("tolerance must be positive");
          cfg.tolerance_set = true;
        } else if (key == "out_dir") {
          if (value.empty()) fail("out_dir must not be empty");
          cfg.out_dir = value;
        } else {
          fail("unknown [run] key \"" + key + "\"");
        }
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

  if (field_seen) {
    cfg.field.terms.clear();
    try {
      if (field_type == "chirplet") {
        if (!(field_chirplet.epsilon > 0.0))
          throw std::invalid_argument("chirplet epsilon must be positive");
        cfg.field.terms.push_back(
            FieldTerm{FieldTerm::Kind::Chirplet, field_chirplet, 0, 1.0});
      } else if (field_type == "hermite") {
        if (field_order > max_hermite_order)
          throw std::invalid_argument("hermite order " + std::to_string(field_order) +
                                      " out of range (max " +
                                      std::to_string(max_hermite_order) + ")");
        cfg.field.terms.push_back(
            FieldTerm{FieldTerm::Kind::Hermite, ChirpletParams{}, field_order, 1.0});
      } else {
        if (field_terms.empty())
          throw std::invalid_argument("superposition field needs a terms list");
        for (const auto part : detail::split(field_terms, ';')) {
          if (part.empty()) throw std::invalid_argument("empty field term");
          cfg.field.terms.push_back(detail::parse_field_term(part));
        }
      }
    } catch (const std::exception& e) {
      throw ConfigError(filename, lineno, e.what());
    }
  }
  // fail fast on the grid spec before any computation or output
  try {
    (void)cfg.space_grid();
    (void)cfg.frequency_grid();
  } catch (const std::exception& e) {
    throw ConfigError(filename, lineno, e.what());
  }
  (void)matrices_seen;
  return cfg;
}

inline RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path);
  return parse_run_config(in, path);
}

/// Realizes the field spec on a grid (Space domain), applying term weights and
/// the optional final normalization.
inline SampledField build_field(const FieldSpec& spec, const Grid1D& grid) {
  if (spec.terms.empty()) throw std::invalid_argument("field spec has no terms");
  SampledField acc = sample_function(
      grid,
      [&spec](double x) {
        std::complex<double> v = 0.0;
        for (const auto& t : spec.terms) {
          v += t.weight * (t.kind == FieldTerm::Kind::Hermite
                               ? std::complex<double>(hermite_gauss_value(t.order, x))
                               : chirplet_field(t.chirplet, x));
        }
        return v;
      },
      Domain::Space);
  return spec.normalize ? normalized(std::move(acc)) : acc;
}

}  // namespace paraxial
