#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace lrssec {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double ln2 = 0.693147180559945309417232121458176568;

// Raised when an iterative numerical kernel (quadrature, Laplace inversion,
// series/continued fraction) cannot meet its accuracy target. Carries the
// offending value and the estimated error so callers can report diagnostics.
class numerical_error : public std::runtime_error {
 public:
  numerical_error(const std::string& what, double value, double err_estimate)
      : std::runtime_error(what + " (value=" + std::to_string(value) +
                           ", err_estimate=" + std::to_string(err_estimate) + ")"),
        value_(value),
        err_estimate_(err_estimate) {}
  explicit numerical_error(const std::string& what)
      : std::runtime_error(what), value_(0), err_estimate_(0) {}

  double value() const { return value_; }
  double err_estimate() const { return err_estimate_; }

 private:
  double value_;
  double err_estimate_;
};

// A probability. Construction enforces [0,1] up to a small rounding slack;
// values inside the slack are snapped to the boundary, anything further out
// is a genuine numerical failure and throws.
class Probability {
 public:
  Probability() = default;
  Probability(double v) : v_(checked(v)) {}  // implicit: call sites pass plain doubles
  operator double() const { return v_; }
  double value() const { return v_; }

 private:
  static double checked(double v) {
    constexpr double slack = 1e-9;
    if (!std::isfinite(v) || v < -slack || v > 1.0 + slack)
      throw numerical_error("probability outside [0,1]", v, 0.0);
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
  }
  double v_ = 0.0;
};

inline double linear_from_db(double db) { return std::pow(10.0, db / 10.0); }
inline double db_from_linear(double lin) { return 10.0 * std::log10(lin); }

}  // namespace lrssec
