#pragma once

// Scalar special functions backing the closed-form secrecy metrics:
// Gaussian Q, Marcum Q of order 1/2, regularized incomplete gammas,
// exponential integral E1 and the Kummer confluent hypergeometric 1F1.
// All are plain functions of doubles; every routine either converges to
// near machine accuracy or throws.

#include <cmath>
#include <limits>

#include "lrssec/common.hpp"

namespace lrssec {

// Upper tail of the standard normal, Q(x) = 1 - Phi(x).
// erfc keeps full relative accuracy deep into the tail, which the SOP
// asymptotes rely on.
inline Probability gaussian_q(double x) {
  if (!std::isfinite(x)) throw std::domain_error("gaussian_q: non-finite argument");
  return 0.5 * std::erfc(x * 0.7071067811865475244);
}

// Marcum Q of order 1/2 via the identity Q_{1/2}(a,b) = Q(b-a) + Q(b+a).
inline Probability marcum_q_half(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw std::domain_error("marcum_q_half: arguments must be finite and nonnegative");
  return static_cast<double>(gaussian_q(b - a)) + static_cast<double>(gaussian_q(b + a));
}

namespace detail {

// Lower regularized gamma by power series, valid and fast for x < s+1.
// The iteration cap scales with sqrt(s): near x ~ s the terms only start
// decaying after O(sqrt(s)) steps.
inline double gamma_p_series(double s, double x) {
  double ap = s;
  double sum = 1.0 / s;
  double del = sum;
  const int max_iter = 200 + static_cast<int>(10.0 * std::sqrt(s));
  for (int i = 0; i < max_iter; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-17)
      return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
  }
  throw numerical_error("reg_gamma: series failed to converge", sum, std::fabs(del));
}

// Upper regularized gamma by modified Lentz continued fraction, for x >= s+1.
inline double gamma_q_cf(double s, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  const int max_iter = 500 + static_cast<int>(10.0 * std::sqrt(s));
  for (int i = 1; i <= max_iter; ++i) {
    double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-17)
      return std::exp(-x + s * std::log(x) - std::lgamma(s)) * h;
  }
  throw numerical_error("reg_gamma: continued fraction failed to converge", h, 0.0);
}

}  // namespace detail

// Regularized upper incomplete gamma, Gamma(s,x)/Gamma(s).
inline Probability reg_gamma_upper(double s, double x) {
  if (!(s > 0.0) || !std::isfinite(s)) throw std::domain_error("reg_gamma_upper: s must be > 0");
  if (!(x >= 0.0) || !std::isfinite(x)) throw std::domain_error("reg_gamma_upper: x must be >= 0");
  if (x == 0.0) return 1.0;
  return (x < s + 1.0) ? 1.0 - detail::gamma_p_series(s, x) : detail::gamma_q_cf(s, x);
}

// Regularized lower incomplete gamma; complement of reg_gamma_upper.
inline Probability reg_gamma_lower(double s, double x) {
  if (!(s > 0.0) || !std::isfinite(s)) throw std::domain_error("reg_gamma_lower: s must be > 0");
  if (!(x >= 0.0) || !std::isfinite(x)) throw std::domain_error("reg_gamma_lower: x must be >= 0");
  if (x == 0.0) return 0.0;
  return (x < s + 1.0) ? detail::gamma_p_series(s, x) : 1.0 - detail::gamma_q_cf(s, x);
}

namespace detail {

// Continued fraction for x*e^x*E1(x) ... evaluated as E1(x)*e^x; x > 1.
inline double e1_cf_scaled(double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = a * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-17) return h;
  }
  throw numerical_error("exp_integral_e1: continued fraction failed to converge", h, 0.0);
}

inline constexpr double euler_gamma = 0.577215664901532860606512090082402431;

}  // namespace detail

// e^x * E1(x); stays finite for arbitrarily small x where e^x*E1(x) ~ -ln(x),
// and tends to 1/x for large x. Needed by the wiretap ergodic capacity,
// where assembling e^{1/g} and E1(1/g) separately overflows for small g.
inline double exp_integral_e1_scaled(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("exp_integral_e1: x must be > 0");
  if (x > 1.0) return detail::e1_cf_scaled(x);
  // series for E1, then scale
  double sum = -detail::euler_gamma - std::log(x);
  double term = 1.0;
  for (int k = 1; k <= 100; ++k) {
    term *= -x / k;
    double add = -term / k;
    sum += add;
    if (std::fabs(add) < std::fabs(sum) * 1e-17) break;
  }
  return std::exp(x) * sum;
}

// Exponential integral E1(x) = int_x^inf e^{-t}/t dt.
inline double exp_integral_e1(double x) {
  return std::exp(-x) * exp_integral_e1_scaled(x);
}

// Kummer confluent hypergeometric 1F1(a;b;z) by direct Taylor series with
// term-ratio stopping. Large negative z makes the raw series cancel badly,
// so it is rerouted through the Kummer transformation
// 1F1(a;b;z) = e^z 1F1(b-a;b;-z), whose terms are all positive there.
inline double kummer_1f1(double a, double b, double z) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z))
    throw std::domain_error("kummer_1f1: non-finite argument");
  if (b <= 0.0 && b == std::floor(b))
    throw std::domain_error("kummer_1f1: b must not be a nonpositive integer");
  if (z < -20.0) return std::exp(z) * kummer_1f1(b - a, b, -z);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 1000; ++k) {
    term *= (a + k) * z / ((b + k) * (k + 1));
    sum += term;
    if (std::fabs(term) <= std::fabs(sum) * 1e-16) return sum;
  }
  throw numerical_error("kummer_1f1: series failed to converge", sum, std::fabs(term));
}

// Scaled complementary error function e^{y^2} erfc(y) for y >= 0.
inline double erfcx(double y) {
  if (!(y >= 0.0)) throw std::domain_error("erfcx: y must be >= 0");
  if (y < 26.0) return std::exp(y * y) * std::erfc(y);
  // asymptotic expansion; relative error < 1e-15 for y >= 26
  const double z = 0.5 / (y * y);
  return (1.0 - z * (1.0 - 3.0 * z * (1.0 - 5.0 * z * (1.0 - 7.0 * z)))) /
         (y * 1.772453850905516027298167);
}

// e^{E} * Q(x) without overflow when E and x^2/2 are individually huge but
// the product is moderate, as happens in the SOP terms e^{beta} Q(b +- a).
inline double exp_mul_gaussian_q(double e_exponent, double x) {
  if (x < 0.0) return std::exp(e_exponent) * (1.0 - 0.5 * std::erfc(-x * 0.7071067811865475244));
  return 0.5 * erfcx(x * 0.7071067811865475244) * std::exp(e_exponent - 0.5 * x * x);
}

// e^{x} * reg_gamma_upper(s, x); switches to the asymptotic tail expansion
// once e^{x} alone would overflow.
inline double exp_mul_reg_gamma_upper(double s, double x) {
  if (!(s > 0.0)) throw std::domain_error("exp_mul_reg_gamma_upper: s must be > 0");
  if (!(x >= 0.0)) throw std::domain_error("exp_mul_reg_gamma_upper: x must be >= 0");
  if (x < 650.0) return std::exp(x) * static_cast<double>(reg_gamma_upper(s, x));
  // Gamma(s,x) ~ x^{s-1} e^{-x} [1 + (s-1)/x + (s-1)(s-2)/x^2 + ...]
  double term = 1.0, series = 1.0;
  for (int k = 1; k <= 8; ++k) {
    term *= (s - k) / x;
    series += term;
  }
  return std::exp((s - 1.0) * std::log(x) - std::lgamma(s)) * series;
}

// Digamma function, used as an independent cross-check of the fading
// severity constant for gamma-distributed SNR.
inline double digamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("digamma: x must be > 0");
  double result = 0.0;
  while (x < 10.0) {  // shift into the asymptotic range
    result -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x, inv2 = inv * inv;
  result += std::log(x) - 0.5 * inv -
            inv2 * (1.0 / 12.0 -
                    inv2 * (1.0 / 120.0 -
                            inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 / 132.0))));
  return result;
}

}  // namespace lrssec
