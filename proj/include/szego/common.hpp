#pragma once

#include <complex>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace szego {

using cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

/// Raised when an input violates a documented precondition or a numerical
/// guard trips (singular sample, nonzero winding, aliasing, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the experiment front end on malformed configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// 17 significant digits: enough to round-trip an IEEE double exactly.
inline std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::string fmt17(cplx z) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

}  // namespace szego
