#pragma once

// Closed-form and asymptotic secrecy metrics for the three legitimate-link
// models paired with the Rayleigh eavesdropper: FR (folded normal), BR
// (Beckmann) and NR (Nakagami/gamma).
//
// Every SOP expression is an instance of the same identity obtained by
// integrating the outage event over the exponential eavesdropper SNR:
//
//   P = F_b(tau-1) + e^{(tau-1)/(tau ge)} * M_u(-1/(tau ge), tau-1)
//
// with F_b the legitimate CDF and M_u its upper-incomplete MGF. FR and NR
// admit closed forms for both pieces; BR evaluates them by Laplace inversion.

#include <cmath>
#include <functional>
#include <optional>

#include "lrssec/channel.hpp"
#include "lrssec/common.hpp"
#include "lrssec/quadrature.hpp"
#include "lrssec/special_functions.hpp"
#include "lrssec/transform.hpp"

namespace lrssec {

enum class ScenarioVariant { fr, br, nr };

// One evaluated metric point (spec'd container used by the sweep driver).
struct SecrecyPoint {
  std::optional<Probability> sop;
  std::optional<double> asc;  // bits/s/Hz, >= 0
  ScenarioVariant variant = ScenarioVariant::br;
  bool asymptotic = false;
};

namespace detail {

struct SopGeometry {
  double tau, z, s, beta;  // beta = (tau-1)/(tau*ge) = -s*z
};

inline SopGeometry sop_geometry(double rate_rs, double eve_mean) {
  if (!(rate_rs >= 0.0)) throw std::domain_error("sop: rate_rs must be >= 0");
  if (!(eve_mean > 0.0)) throw std::domain_error("sop: eavesdropper mean SNR must be > 0");
  const double tau = std::exp2(rate_rs);
  const double z = tau - 1.0;
  const double s = -1.0 / (tau * eve_mean);
  return {tau, z, s, -s * z};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FR: folded-normal legitimate link (no phase errors).

inline Probability sop_fr(const FoldedNormal& leg, const EveDist& eve, double rate_rs) {
  const auto g = detail::sop_geometry(rate_rs, eve.mean_snr);
  const double K = leg.k_factor, gb = leg.mean_snr;
  const double a0 = std::sqrt(K);
  const double b0 = std::sqrt((K + 1.0) * g.z / gb);
  // 1 - Q_{1/2}(a0, b0) rewritten as Q(a0-b0) - Q(a0+b0): both tails are
  // small together in the high-SNR regime, avoiding 1 - (1 - eps).
  const double cdf_term =
      static_cast<double>(gaussian_q(a0 - b0)) - static_cast<double>(gaussian_q(a0 + b0));
  const double denom = K + 1.0 - 2.0 * gb * g.s;
  const double a_s = std::sqrt(K * (K + 1.0) / denom);
  const double b_s = std::sqrt(2.0 * ((K + 1.0) / (2.0 * gb) - g.s) * g.z);
  const double c_s = K * gb * g.s / denom;
  // e^{beta + c_s} (a_s/sqrt(K)) [Q(b_s - a_s) + Q(b_s + a_s)], scaled form
  const double mgf_term = (a_s / a0) * (exp_mul_gaussian_q(g.beta + c_s, b_s - a_s) +
                                        exp_mul_gaussian_q(g.beta + c_s, b_s + a_s));
  return Probability(cdf_term + mgf_term);
}

// High-SNR SOP for FR; decays as gb^{-1/2} (secrecy diversity order 1/2).
// Valid as an approximation only for large gb, so the raw value may exceed 1
// at low SNR and is returned unclamped.
inline double sop_fr_asymptotic(const FoldedNormal& leg, const EveDist& eve, double rate_rs) {
  const auto g = detail::sop_geometry(rate_rs, eve.mean_snr);
  const double K = leg.k_factor, gb = leg.mean_snr;
  return std::exp(-0.5 * K) * std::sqrt(g.tau * eve.mean_snr * (1.0 + K) / (2.0 * gb)) *
         exp_mul_reg_gamma_upper(1.5, g.beta);
}

// ---------------------------------------------------------------------------
// BR: squared-Beckmann legitimate link (phase errors), via Laplace inversion.

inline Probability sop_br(const Beckmann& leg, const EveDist& eve, double rate_rs,
                          const LaplaceOptions& opt = {}) {
  const auto g = detail::sop_geometry(rate_rs, eve.mean_snr);
  if (g.beta > 700.0)
    throw numerical_error("sop_br: (tau-1)/(tau*ge) too large for the incomplete-MGF route",
                          g.beta, 0.0);
  const BeckmannComponents c = beckmann_from_kq(leg.k_factor, leg.q, leg.mean_snr);
  const double cdf_term = cdf(c, g.z, opt);
  const double mgf_term = std::exp(g.beta) * incomplete_mgf_upper(c, g.s, g.z, opt);
  return Probability(std::min(1.0, cdf_term + mgf_term));
}

// High-SNR SOP for BR; decays as gb^{-1} (secrecy diversity order 1).
inline double sop_br_asymptotic(const Beckmann& leg, const EveDist& eve, double rate_rs) {
  const auto g = detail::sop_geometry(rate_rs, eve.mean_snr);
  const double K = leg.k_factor, q = leg.q;
  return std::exp(-K * (1.0 + q * q) / (2.0 * q * q)) * (1.0 + K) * (1.0 + q * q) *
         (eve.mean_snr * g.tau + g.tau - 1.0) / (2.0 * q * leg.mean_snr);
}

// ---------------------------------------------------------------------------
// NR: gamma-approximated legitimate link.

inline Probability sop_nr(const Nakagami& leg, const EveDist& eve, double rate_rs) {
  const auto g = detail::sop_geometry(rate_rs, eve.mean_snr);
  const double m = leg.m, gb = leg.mean_snr;
  const double cdf_term = reg_gamma_lower(m, g.z * m / gb);
  // e^{beta} * regG(m, z m/gb + beta) / (1 + gb/(m tau ge))^m, scaled so the
  // exponential never overflows on its own.
  const double arg = g.z * m / gb + g.beta;
  const double mgf_term = std::exp(g.beta - arg) * exp_mul_reg_gamma_upper(m, arg) /
                          std::pow(1.0 + gb / (m * g.tau * eve.mean_snr), m);
  return Probability(cdf_term + mgf_term);
}

// High-SNR SOP for NR; decays as gb^{-m} (secrecy diversity order m).
inline double sop_nr_asymptotic(const Nakagami& leg, const EveDist& eve, double rate_rs) {
  const auto g = detail::sop_geometry(rate_rs, eve.mean_snr);
  return std::pow(g.tau * leg.m * eve.mean_snr / leg.mean_snr, leg.m) *
         exp_mul_reg_gamma_upper(leg.m + 1.0, g.beta);
}

inline Probability sop(const LegitimateDist& leg, const EveDist& eve, double rate_rs,
                       const LaplaceOptions& opt = {}) {
  if (const auto* fn = std::get_if<FoldedNormal>(&leg)) return sop_fr(*fn, eve, rate_rs);
  if (const auto* bk = std::get_if<Beckmann>(&leg)) return sop_br(*bk, eve, rate_rs, opt);
  return sop_nr(std::get<Nakagami>(leg), eve, rate_rs);
}

inline double sop_asymptotic(const LegitimateDist& leg, const EveDist& eve, double rate_rs) {
  if (const auto* fn = std::get_if<FoldedNormal>(&leg)) return sop_fr_asymptotic(*fn, eve, rate_rs);
  if (const auto* bk = std::get_if<Beckmann>(&leg)) return sop_br_asymptotic(*bk, eve, rate_rs);
  return sop_nr_asymptotic(std::get<Nakagami>(leg), eve, rate_rs);
}

// ---------------------------------------------------------------------------
// ASC. Exact decomposition C_S = C_B - C_E + G_Z where
//   C_E = e^{1/ge} E1(1/ge) / ln 2                     (wiretap capacity)
//   G_Z = (e^{1/ge}/ln2) int_0^1 (1/u) e^{-1/(u ge)} M(-1/(u ge)) du >= 0
//   C_B = (1/ln2) int_0^inf (1 - F(g))/(1 + g) dg      (legitimate capacity)

namespace detail {

// Survival function, conventional MGF (s <= 0) and mean for any legitimate
// variant, the three ingredients all ASC pieces consume.
struct SnrLaw {
  std::function<double(double)> survival;
  std::function<double(double)> mgf_neg;
  double mean;
};

inline SnrLaw make_snr_law(const LegitimateDist& leg, const LaplaceOptions& opt) {
  if (const auto* fn = std::get_if<FoldedNormal>(&leg)) {
    const double K = fn->k_factor, gb = fn->mean_snr;
    const double mu2 = gb * K / (1.0 + K);
    const double v = gb / (1.0 + K);
    return {[K, gb](double zv) {
              if (zv <= 0.0) return 1.0;
              return static_cast<double>(
                  marcum_q_half(std::sqrt(K), std::sqrt((K + 1.0) * zv / gb)));
            },
            [mu2, v](double s) {
              const double d = 1.0 - 2.0 * s * v;
              return std::exp(s * mu2 / d) / std::sqrt(d);
            },
            gb};
  }
  if (const auto* bk = std::get_if<Beckmann>(&leg)) {
    const BeckmannComponents c = beckmann_from_kq(bk->k_factor, bk->q, bk->mean_snr);
    return {[c, opt](double zv) {
              return zv <= 0.0 ? 1.0 : 1.0 - static_cast<double>(cdf(c, zv, opt));
            },
            [c](double s) { return mgf(c, s); }, bk->mean_snr};
  }
  const auto& nk = std::get<Nakagami>(leg);
  const double m = nk.m, gb = nk.mean_snr;
  return {[m, gb](double zv) {
            return zv <= 0.0 ? 1.0 : static_cast<double>(reg_gamma_upper(m, m * zv / gb));
          },
          [m, gb](double s) { return std::pow(1.0 - s * gb / m, -m); }, gb};
}

// (1/ln2) int_0^inf survival(g)/(1+g) dg with the substitution g = e^v - 1,
// truncated where the survival drops below 1e-13.
inline double ergodic_capacity_bits(const SnrLaw& law) {
  double v_max = std::log1p(law.mean);
  while (law.survival(std::expm1(v_max)) > 1e-13 && v_max < 700.0) v_max += 2.0;
  QuadratureOptions qopt;
  qopt.abs_tol = 1e-9;
  qopt.rel_tol = 1e-9;
  const double integral = integrate(
      [&law](double v) {
        const double s = law.survival(std::expm1(v));
        return s < 0.0 ? 0.0 : (s > 1.0 ? 1.0 : s);
      },
      0.0, v_max, qopt);
  return integral / ln2;
}

inline double wiretap_capacity_bits(double eve_mean) {
  return exp_integral_e1_scaled(1.0 / eve_mean) / ln2;
}

// G_Z with u = e^{-v}: (1/ln2) int_0^vmax e^{(1 - e^v)/ge} M(-e^v/ge) dv.
// The integrand is double-exponentially suppressed in v; truncation at
// (e^v - 1)/ge = 45 keeps the dropped tail below e^{-45}.
inline double asc_gain_bits(const SnrLaw& law, double eve_mean) {
  const double v_max = std::log1p(45.0 * eve_mean);
  if (v_max <= 0.0) return 0.0;
  QuadratureOptions qopt;
  qopt.abs_tol = 1e-10;
  qopt.rel_tol = 1e-9;
  const double integral = integrate(
      [&law, eve_mean](double v) {
        const double ev = std::exp(v);
        return std::exp((1.0 - ev) / eve_mean) * law.mgf_neg(-ev / eve_mean);
      },
      0.0, v_max, qopt);
  return integral / ln2;
}

// Fading severity constant t_Z = -E[ln(gamma/mean)]/ln2, evaluated from the
// CDF by integration by parts around the pivot z = mean:
//   E[ln(gamma/mean)] = int_0^inf surv(mean e^w) dw - int_0^inf F(mean e^-w) dw
inline double fading_severity_bits(const SnrLaw& law) {
  double w_up = 1.0;
  while (law.survival(law.mean * std::exp(w_up)) > 1e-14 && w_up < 700.0) w_up += 2.0;
  double w_dn = 1.0;
  while (1.0 - law.survival(law.mean * std::exp(-w_dn)) > 1e-14 && w_dn < 700.0) w_dn += 4.0;
  QuadratureOptions qopt;
  qopt.abs_tol = 1e-9;
  qopt.rel_tol = 1e-9;
  const double upper = integrate(
      [&law](double w) {
        const double s = law.survival(law.mean * std::exp(w));
        return s < 0.0 ? 0.0 : s;
      },
      0.0, w_up, qopt);
  const double lower = integrate(
      [&law](double w) {
        const double f = 1.0 - law.survival(law.mean * std::exp(-w));
        return f < 0.0 ? 0.0 : f;
      },
      0.0, w_dn, qopt);
  return -(upper - lower) / ln2;
}

}  // namespace detail

struct AscResult {
  double value;       // max{raw, 0}
  double raw;         // C_B - C_E + G_Z before clamping
  double capacity_b;  // legitimate ergodic capacity, bits/s/Hz
  double capacity_e;  // wiretap ergodic capacity, bits/s/Hz
  double gain_gz;     // ASC gain term G_Z >= 0
};

inline AscResult asc(const LegitimateDist& leg, const EveDist& eve,
                     const LaplaceOptions& opt = {}) {
  if (!(eve.mean_snr > 0.0)) throw std::domain_error("asc: eavesdropper mean SNR must be > 0");
  const detail::SnrLaw law = detail::make_snr_law(leg, opt);
  const double cb = detail::ergodic_capacity_bits(law);
  const double ce = detail::wiretap_capacity_bits(eve.mean_snr);
  const double gz = detail::asc_gain_bits(law, eve.mean_snr);
  const double raw = cb - ce + gz;
  return {std::max(raw, 0.0), raw, cb, ce, gz};
}

// Fading severity constant t_Z of the legitimate variant (bits).
inline double fading_severity_t(const LegitimateDist& leg, const LaplaceOptions& opt = {}) {
  return detail::fading_severity_bits(detail::make_snr_law(leg, opt));
}

// High-SNR ASC: log2(mean) - t_Z - C_E. Unclamped.
inline double asc_asymptotic(const LegitimateDist& leg, const EveDist& eve,
                             const LaplaceOptions& opt = {}) {
  if (!(eve.mean_snr > 0.0)) throw std::domain_error("asc: eavesdropper mean SNR must be > 0");
  const detail::SnrLaw law = detail::make_snr_law(leg, opt);
  return std::log2(law.mean) - detail::fading_severity_bits(law) -
         detail::wiretap_capacity_bits(eve.mean_snr);
}

}  // namespace lrssec
