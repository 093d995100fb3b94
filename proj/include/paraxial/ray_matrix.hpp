#pragma once

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace paraxial {

/// Ray-transfer (ABCD) matrix of a paraxial system; unimodular (ad - bc = 1).
/// Its entries double as Radon line parameters: (d, b) in the spatial domain,
/// (a, c) in the frequency domain.
struct RayMatrix {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  double det() const { return a * d - b * c; }
  bool operator==(const RayMatrix&) const = default;
};

inline std::string to_string(const RayMatrix& m) {
  std::ostringstream os;
  os << "(" << m.a << "," << m.b << "," << m.c << "," << m.d << ")";
  return os.str();
}

inline void require_unimodular(const RayMatrix& m, double tol, const char* where) {
  const double det = m.det();
  if (!(std::abs(det - 1.0) <= tol)) {
    std::ostringstream os;
    os << where << ": matrix " << to_string(m) << " has determinant " << det
       << ", expected 1 within " << tol;
    throw std::invalid_argument(os.str());
  }
}

/// Cascade: first is applied first, so the product is second * first.
inline RayMatrix compose(const RayMatrix& first, const RayMatrix& second) {
  return RayMatrix{second.a * first.a + second.b * first.c,
                   second.a * first.b + second.b * first.d,
                   second.c * first.a + second.d * first.c,
                   second.c * first.b + second.d * first.d};
}

/// The system (d, -b, -c, a): the matrix inverse, since det = 1. An input
/// propagated through dual(m) has |output|^2 equal to the Radon projection of
/// its Wigner function at line parameters (m.d, m.b).
inline RayMatrix dual(const RayMatrix& m) { return RayMatrix{m.d, -m.b, -m.c, m.a}; }

inline RayMatrix free_space(double distance) { return RayMatrix{1.0, distance, 0.0, 1.0}; }

inline RayMatrix thin_lens(double focal_length) {
  if (focal_length == 0.0 || !std::isfinite(focal_length))
    throw std::invalid_argument("thin lens needs a nonzero finite focal length");
  return RayMatrix{1.0, 0.0, -1.0 / focal_length, 1.0};
}

inline RayMatrix fourier_stage() { return RayMatrix{0.0, 1.0, -1.0, 0.0}; }

namespace detail {

inline double parse_real(std::string_view token, const char* what) {
  const std::string text(token);
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  while (end && *end == ' ') ++end;
  if (end == text.c_str() || (end && *end != '\0') || !std::isfinite(value))
    throw std::invalid_argument(std::string(what) + ": cannot parse real number from \"" +
                                text + "\"");
  return value;
}

}  // namespace detail

/// Parses "A,B,C,D" (four comma-separated reals). Rejects |det - 1| > 1e-9
/// with a message naming the determinant.
inline RayMatrix parse_ray_matrix(std::string_view text) {
  std::vector<double> entries;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view token =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    entries.push_back(detail::parse_real(token, "ray matrix"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (entries.size() != 4)
    throw std::invalid_argument("ray matrix needs exactly four comma-separated entries, got " +
                                std::to_string(entries.size()));
  const RayMatrix m{entries[0], entries[1], entries[2], entries[3]};
  require_unimodular(m, 1e-9, "ray matrix");
  return m;
}

}  // namespace paraxial
