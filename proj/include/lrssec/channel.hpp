#pragma once

// Maps the physical scenario (reflector count, phase quantization, per-hop
// fading) to the statistical parameters of the equivalent scalar channels:
// the legitimate link collapses to a squared-Beckmann SNR (exactly folded
// normal without phase errors, approximately gamma when moment-matched) and
// the eavesdropper link to an exponential SNR with mean n*gamma0e.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <variant>

#include "lrssec/common.hpp"
#include "lrssec/special_functions.hpp"

namespace lrssec {

// Residual per-element phase error: either perfect compensation or the
// uniform error on [-u, u] with u = 2^-bits * pi left by b-bit quantization.
class PhaseErrorModel {
 public:
  static PhaseErrorModel none() { return PhaseErrorModel(std::nullopt); }
  static PhaseErrorModel uniform_quantized(unsigned bits) {
    if (bits < 1) throw std::invalid_argument("PhaseErrorModel: bits must be >= 1");
    return PhaseErrorModel(bits);
  }

  bool has_errors() const { return bits_.has_value(); }
  unsigned bits() const {
    if (!bits_) throw std::logic_error("PhaseErrorModel: no quantization bits in the no-error model");
    return *bits_;
  }
  double half_width() const { return bits_ ? std::ldexp(pi, -static_cast<int>(*bits_)) : 0.0; }

 private:
  explicit PhaseErrorModel(std::optional<unsigned> bits) : bits_(bits) {}
  std::optional<unsigned> bits_;
};

// One hop's fading law, normalized to unit power E|H|^2 = 1. Rayleigh is the
// K = 0 member of the Rician family.
struct HopFading {
  double rician_k = 0.0;

  static HopFading rayleigh() { return {0.0}; }
  static HopFading rician(double k) {
    if (!(k >= 0.0) || !std::isfinite(k)) throw std::invalid_argument("HopFading: K must be >= 0");
    return {k};
  }
};

struct SystemConfig {
  int n = 1;                                          // reflector count
  PhaseErrorModel phase_model = PhaseErrorModel::none();
  HopFading hop_a_r = HopFading::rayleigh();
  HopFading hop_r_b = HopFading::rayleigh();
  HopFading hop_r_e = HopFading::rayleigh();
  double gamma0_b = 1.0;  // single-reflector mean SNR, legitimate (linear)
  double gamma0_e = 1.0;  // single-reflector mean SNR, eavesdropper (linear)
  double rate_rs = 1.0;   // target secrecy rate, bits/s/Hz

  void validate() const {
    if (n < 1) throw std::invalid_argument("SystemConfig: n must be >= 1");
    if (!(gamma0_b > 0.0) || !(gamma0_e > 0.0))
      throw std::invalid_argument("SystemConfig: single-reflector SNRs must be > 0");
    if (!(rate_rs >= 0.0)) throw std::invalid_argument("SystemConfig: rate_rs must be >= 0");
  }
};

// Circular moments phi_j = E[e^{j*Theta}] of the residual phase and the mean
// hop magnitudes a1, a2b, a2e, with the composites a_b, a_e.
struct MomentSet {
  double phi1 = 1.0, phi2 = 1.0;
  double a1 = 1.0, a2b = 1.0, a2e = 1.0;
  double a_b = 1.0, a_e = 1.0;
};

// phi_j = sin(j*u)/(j*u) for uniform errors of half-width u; (1,1) without
// errors.
inline std::pair<double, double> circular_moments(const PhaseErrorModel& model) {
  if (!model.has_errors()) return {1.0, 1.0};
  const double u = model.half_width();
  return {std::sin(u) / u, std::sin(2.0 * u) / (2.0 * u)};
}

// E|H| for a unit-power hop: sqrt(pi)/2 for Rayleigh, and
// sqrt(pi/(4(K+1))) * 1F1(-1/2; 1; -K) for Rician-K.
inline double mean_magnitude(const HopFading& hop) {
  return std::sqrt(pi / (4.0 * (hop.rician_k + 1.0))) * kummer_1f1(-0.5, 1.0, -hop.rician_k);
}

inline MomentSet moment_set(const SystemConfig& cfg) {
  cfg.validate();
  MomentSet m;
  std::tie(m.phi1, m.phi2) = circular_moments(cfg.phase_model);
  m.a1 = mean_magnitude(cfg.hop_a_r);
  m.a2b = mean_magnitude(cfg.hop_r_b);
  m.a2e = mean_magnitude(cfg.hop_r_e);
  m.a_b = std::sqrt(m.a1 * m.a2b);
  m.a_e = std::sqrt(m.a1 * m.a2e);
  return m;
}

// Legitimate-link SNR models. K plays the Rician role (mean-to-diffuse power
// ratio), q the Hoyt role (in-phase to quadrature spread ratio). q >= 1 does
// not hold universally: coarse quantization (1 bit) yields phi2 < phi1^2*a_b^4
// and hence q < 1, so only q > 0 is required here.
struct FoldedNormal {
  double k_factor;
  double mean_snr;
};
struct Beckmann {
  double k_factor;
  double q;
  double mean_snr;
};
struct Nakagami {
  double m;
  double mean_snr;
};
using LegitimateDist = std::variant<FoldedNormal, Beckmann, Nakagami>;

enum class LegitimateModel { folded_normal, beckmann, nakagami };

struct EveDist {
  double mean_snr;
};

namespace detail {

inline double los_power_fraction(const MomentSet& mom, double phi1) {
  const double ab2 = mom.a_b * mom.a_b;
  const double p = phi1 * phi1 * ab2 * ab2;  // phi1^2 * a_b^4
  if (p >= 1.0)
    throw std::domain_error(
        "legitimate_params: phi1^2*a_b^4 >= 1 (deterministic-channel limit, K diverges)");
  return p;
}

}  // namespace detail

// Equivalent scalar parameters of the legitimate link:
//   K    = n p / (1 - p),                 p = phi1^2 a_b^4
//   q    = sqrt((1 + phi2 - 2p)/(1 - phi2))
//   mean = n^2 gamma0b [p + (1 - p)/n]
// The folded-normal variant is the no-error case (phi1 = phi2 = 1); the
// Nakagami variant moment-matches a gamma law with shape
// m = (n/2) p / (1 + phi2 - 2p) and mean n^2 gamma0b p.
inline LegitimateDist legitimate_params(const SystemConfig& cfg, const MomentSet& mom,
                                        LegitimateModel which) {
  cfg.validate();
  const double n = static_cast<double>(cfg.n);
  switch (which) {
    case LegitimateModel::folded_normal: {
      if (cfg.phase_model.has_errors())
        throw std::invalid_argument(
            "legitimate_params: folded normal requires the no-phase-error model");
      const double p = detail::los_power_fraction(mom, 1.0);
      return FoldedNormal{n * p / (1.0 - p), n * n * cfg.gamma0_b * (p + (1.0 - p) / n)};
    }
    case LegitimateModel::beckmann: {
      if (!cfg.phase_model.has_errors())
        throw std::invalid_argument(
            "legitimate_params: Beckmann requires phase errors (q diverges as phi2 -> 1); "
            "request the folded-normal variant instead");
      const double p = detail::los_power_fraction(mom, mom.phi1);
      const double q = std::sqrt((1.0 + mom.phi2 - 2.0 * p) / (1.0 - mom.phi2));
      return Beckmann{n * p / (1.0 - p), q, n * n * cfg.gamma0_b * (p + (1.0 - p) / n)};
    }
    case LegitimateModel::nakagami: {
      const double p = detail::los_power_fraction(mom, mom.phi1);
      const double m = 0.5 * n * p / (1.0 + mom.phi2 - 2.0 * p);
      return Nakagami{m, n * n * cfg.gamma0_b * p};
    }
  }
  throw std::invalid_argument("legitimate_params: unknown variant");
}

// The eavesdropper's equivalent SNR is exponential with mean n*gamma0e.
inline EveDist eavesdropper_params(const SystemConfig& cfg) {
  cfg.validate();
  return EveDist{static_cast<double>(cfg.n) * cfg.gamma0_e};
}

// Scaling law for mean-SNR ratio: n (g0b/g0e) [p + (1-p)/n]. Equals the
// Beckmann mean over the eavesdropper mean identically.
inline double snr_ratio_scaling(const SystemConfig& cfg, const MomentSet& mom) {
  cfg.validate();
  const double n = static_cast<double>(cfg.n);
  const double p = detail::los_power_fraction(mom, mom.phi1);
  return n * (cfg.gamma0_b / cfg.gamma0_e) * (p + (1.0 - p) / n);
}

inline double mean_snr(const LegitimateDist& d) {
  return std::visit([](const auto& v) { return v.mean_snr; }, d);
}

}  // namespace lrssec
