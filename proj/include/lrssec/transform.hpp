#pragma once

// MGF machinery for the squared Beckmann legitimate SNR. The SNR is
// gamma = X^2 + Y^2 with X ~ N(mu_x, var_x), Y ~ N(0, var_y) in SNR units,
// giving the conventional MGF in closed form. The CDF and the
// upper-incomplete MGF have no closed form and are recovered by numerical
// Laplace inversion of shifted/scaled versions of the MGF:
//
//   F(z)           = InvLaplace{ M(-p)/p }(z)
//   M_u(s, z)      = M(s) - InvLaplace{ M(s-p)/p }(z),   s <= 0
//
// One inversion kernel serves both (the CDF is the s = 0 case), so a single
// numerical codepath is validated by the oracles.

#include <algorithm>
#include <cmath>
#include <complex>

#include "lrssec/common.hpp"
#include "lrssec/laplace.hpp"

namespace lrssec {

struct BeckmannComponents {
  double mu_x;   // in-phase mean, SNR units
  double var_x;  // in-phase variance
  double var_y;  // quadrature variance

  double mean_snr() const { return mu_x * mu_x + var_x + var_y; }
};

struct BeckmannShape {
  double k_factor;
  double q;
};

// Recover component parameters from (K, q, mean):
//   mu_x^2 = mean K/(1+K),  var_x + var_y = mean/(1+K),  var_x/var_y = q^2.
// K = 0 is the Rayleigh limit (zero mean, and equal variances at q = 1).
inline BeckmannComponents beckmann_from_kq(double k_factor, double q, double mean_snr) {
  if (!(k_factor >= 0.0) || !(q > 0.0) || !(mean_snr > 0.0))
    throw std::domain_error("beckmann_from_kq: need K >= 0, q > 0, mean_snr > 0");
  const double diffuse = mean_snr / (1.0 + k_factor);
  const double var_y = diffuse / (1.0 + q * q);
  return {std::sqrt(mean_snr * k_factor / (1.0 + k_factor)), diffuse - var_y, var_y};
}

inline BeckmannShape kq_from_beckmann(const BeckmannComponents& c) {
  return {c.mu_x * c.mu_x / (c.var_x + c.var_y), std::sqrt(c.var_x / c.var_y)};
}

// E[e^{s gamma}] = exp(s mu^2/(1-2 s var_x)) / sqrt((1-2 s var_x)(1-2 s var_y));
// converges for s < 1/(2 max(var_x, var_y)).
inline double mgf(const BeckmannComponents& c, double s) {
  if (!std::isfinite(s)) throw std::domain_error("mgf: non-finite s");
  const double dx = 1.0 - 2.0 * s * c.var_x;
  const double dy = 1.0 - 2.0 * s * c.var_y;
  if (!(dx > 0.0) || !(dy > 0.0))
    throw std::domain_error("mgf: s outside the convergence strip");
  return std::exp(s * c.mu_x * c.mu_x / dx) / std::sqrt(dx * dy);
}

// Complex continuation used on the Bromwich contour. For Re(s) < 0 the
// arguments of sqrt keep positive real part, so the principal branch is safe.
inline std::complex<long double> mgf(const BeckmannComponents& c, std::complex<long double> s) {
  const std::complex<long double> one(1.0L, 0.0L);
  const std::complex<long double> dx = one - 2.0L * s * static_cast<long double>(c.var_x);
  const std::complex<long double> dy = one - 2.0L * s * static_cast<long double>(c.var_y);
  const long double mu2 = static_cast<long double>(c.mu_x) * static_cast<long double>(c.mu_x);
  return std::exp(s * mu2 / dx) / std::sqrt(dx * dy);
}

// Generic inversion front ends, shared with the gamma-MGF oracle. `mgf_c`
// maps complex s to the conventional MGF value.
//
// Per the clamping policy, results are snapped into their mathematically
// valid range only after the inversion's own tolerance check passed; a
// divergent inversion surfaces as numerical_error instead.

template <class MgfC>
Probability invert_cdf(MgfC&& mgf_c, double z, const LaplaceOptions& opt = {}) {
  if (!(z >= 0.0)) throw std::domain_error("invert_cdf: z must be >= 0");
  if (z == 0.0) return 0.0;
  const double v = euler_laplace_inverse_checked(
      [&](std::complex<long double> p) { return mgf_c(-p) / p; }, z, opt);
  return Probability(std::min(1.0, std::max(0.0, v)));
}

template <class MgfC>
double invert_incomplete_mgf_upper(MgfC&& mgf_c, double mgf_at_s, double s, double z,
                                   const LaplaceOptions& opt = {}) {
  if (!(s <= 0.0)) throw std::domain_error("invert_incomplete_mgf_upper: s must be <= 0");
  if (!(z >= 0.0)) throw std::domain_error("invert_incomplete_mgf_upper: z must be >= 0");
  if (z == 0.0) return mgf_at_s;  // full-range integral
  const long double sl = s;
  const double lower = euler_laplace_inverse_checked(
      [&](std::complex<long double> p) { return mgf_c(sl - p) / p; }, z, opt);
  const double v = mgf_at_s - std::min(std::max(lower, 0.0), 1.0);
  return std::min(1.0, std::max(0.0, v));
}

// P(gamma_b <= z) for the squared Beckmann law.
inline Probability cdf(const BeckmannComponents& c, double z, const LaplaceOptions& opt = {}) {
  return invert_cdf([&](std::complex<long double> s) { return mgf(c, s); }, z, opt);
}

// Upper-incomplete MGF int_z^inf e^{s x} f(x) dx for s <= 0. Reduces to
// mgf(c, s) at z = 0 and to the survival function at s = 0.
inline double incomplete_mgf_upper(const BeckmannComponents& c, double s, double z,
                                   const LaplaceOptions& opt = {}) {
  return invert_incomplete_mgf_upper([&](std::complex<long double> p) { return mgf(c, p); },
                                     mgf(c, s), s, z, opt);
}

}  // namespace lrssec
