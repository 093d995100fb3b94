#pragma once

#include <atomic>
#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace paraxial {

/// Base class for runtime failures raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested frequency (grid coordinate or kernel chirp rate) exceeds what a
/// grid can represent. Carries the representable limit and, when the remedy is
/// a finer grid over the same window, the minimal sample count that would pass.
class NyquistError : public Error {
 public:
  NyquistError(const std::string& what, double max_frequency, std::size_t min_samples = 0)
      : Error(what), max_frequency_(max_frequency), min_samples_(min_samples) {}

  /// Largest frequency the offending grid can represent, pi/dx.
  double max_frequency() const noexcept { return max_frequency_; }
  /// Minimal sample count over the same window that would satisfy the check;
  /// 0 when refinement is not the applicable remedy.
  std::size_t min_samples() const noexcept { return min_samples_; }

 private:
  double max_frequency_ = 0.0;
  std::size_t min_samples_ = 0;
};

/// Configuration-file problem carrying its source location.
class ConfigError : public Error {
 public:
  ConfigError(std::string file, int line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const noexcept { return file_; }
  int line() const noexcept { return line_; }

 private:
  std::string file_;
  int line_ = 0;
};

/// Non-fatal diagnostics (window leakage, discarded imaginary residue, small
/// negative densities) are routed through a swappable handler so callers and
/// tests can capture them. The default prints to stderr.
using WarningHandler = void (*)(const std::string& message);

namespace detail {

inline void default_warning_handler(const std::string& message) {
  std::fputs(("paraxial: warning: " + message + "\n").c_str(), stderr);
}

inline std::atomic<WarningHandler>& warning_handler_slot() {
  static std::atomic<WarningHandler> slot{&default_warning_handler};
  return slot;
}

}  // namespace detail

/// Installs a new warning handler and returns the previous one. Passing
/// nullptr restores the default stderr handler.
inline WarningHandler set_warning_handler(WarningHandler handler) {
  return detail::warning_handler_slot().exchange(handler ? handler : &detail::default_warning_handler);
}

inline void warn(const std::string& message) {
  detail::warning_handler_slot().load()(message);
}

}  // namespace paraxial
