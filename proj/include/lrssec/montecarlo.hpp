#pragma once

// Ground-truth oracle: simulates the raw per-element channels
//
//   H_b = (1/n) sum_i |H_{i,1}||H_{i,b}| e^{j Theta_i}
//   H_e = (1/n) sum_i |H_{i,1}||H_{i,e}| e^{j Psi_i},  Psi_i = ang(H_{i,e}) - ang(H_{i,b}) + Theta_i
//
// where Theta_i is the residual phase error left after the surface
// compensates the legitimate link. ang(H_{i,1}) cancels in both sums and is
// never drawn. Per-hop magnitudes are Rician (complex Gaussian with LOS
// offset, total power 1); all raw phases are uniform.
//
// Trials are generated in fixed-size chunks, each with its own substream, so
// a batch is bit-identical for a given (config, seed, trials) regardless of
// the number of worker threads.

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "lrssec/channel.hpp"
#include "lrssec/common.hpp"
#include "lrssec/rng.hpp"
#include "lrssec/stats.hpp"

namespace lrssec {

struct TrialBatch {
  SystemConfig cfg;
  std::uint64_t seed = 0;
  std::vector<double> hb2;  // |H_b|^2 per trial
  std::vector<double> he2;  // |H_e|^2 per trial

  std::size_t trials() const { return hb2.size(); }
  double snr_scale_b() const { return static_cast<double>(cfg.n) * cfg.n * cfg.gamma0_b; }
  double snr_scale_e() const { return static_cast<double>(cfg.n) * cfg.n * cfg.gamma0_e; }
  double gamma_b(std::size_t i) const { return snr_scale_b() * hb2[i]; }
  double gamma_e(std::size_t i) const { return snr_scale_e() * he2[i]; }
};

struct TestReport {
  std::string description;
  double statistic = 0.0;
  double threshold = 0.0;
  bool passed = false;  // statistic <= threshold
};

namespace detail {

struct HopSampler {
  double los;    // sqrt(K/(K+1))
  double sigma;  // sqrt(1/(2(K+1)))

  explicit HopSampler(const HopFading& hop)
      : los(std::sqrt(hop.rician_k / (hop.rician_k + 1.0))),
        sigma(std::sqrt(0.5 / (hop.rician_k + 1.0))) {}

  double magnitude(Rng& rng) const {
    const auto [g1, g2] = rng.normal_pair();
    const double re = los + sigma * g1;
    const double im = sigma * g2;
    return std::sqrt(re * re + im * im);
  }
};

inline constexpr std::size_t chunk_size = 1 << 14;

inline void simulate_chunk(const SystemConfig& cfg, std::uint64_t seed, std::size_t chunk,
                           std::size_t begin, std::size_t end, std::vector<double>& hb2,
                           std::vector<double>& he2) {
  Rng rng(substream_seed(seed, chunk));
  const HopSampler hop1(cfg.hop_a_r), hopb(cfg.hop_r_b), hope(cfg.hop_r_e);
  const bool with_errors = cfg.phase_model.has_errors();
  const double u = cfg.phase_model.half_width();
  const double inv_n = 1.0 / static_cast<double>(cfg.n);
  for (std::size_t t = begin; t < end; ++t) {
    double br = 0.0, bi = 0.0, er = 0.0, ei = 0.0;
    for (int i = 0; i < cfg.n; ++i) {
      const double r1 = hop1.magnitude(rng);
      const double rb = hopb.magnitude(rng);
      const double re = hope.magnitude(rng);
      const double ang_b = rng.uniform(-pi, pi);
      const double ang_e = rng.uniform(-pi, pi);
      const double theta = with_errors ? rng.uniform(-u, u) : 0.0;
      const double psi = ang_e - ang_b + theta;
      const double ab = r1 * rb;
      const double ae = r1 * re;
      br += ab * std::cos(theta);
      bi += ab * std::sin(theta);
      er += ae * std::cos(psi);
      ei += ae * std::sin(psi);
    }
    hb2[t] = (br * br + bi * bi) * inv_n * inv_n;
    he2[t] = (er * er + ei * ei) * inv_n * inv_n;
  }
}

}  // namespace detail

// Simulate `trials` draws of the per-element channel. jobs = 0 uses the
// hardware concurrency; any jobs value yields identical output.
inline TrialBatch simulate_batch(const SystemConfig& cfg, std::uint64_t seed, std::size_t trials,
                                 int jobs = 0) {
  cfg.validate();
  if (trials < 1) throw std::invalid_argument("simulate_batch: trials must be >= 1");
  TrialBatch batch;
  batch.cfg = cfg;
  batch.seed = seed;
  batch.hb2.resize(trials);
  batch.he2.resize(trials);

  const std::size_t chunks = (trials + detail::chunk_size - 1) / detail::chunk_size;
  unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::thread::hardware_concurrency();
  if (workers < 1) workers = 1;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, chunks));

  auto run = [&](unsigned worker) {
    for (std::size_t c = worker; c < chunks; c += workers) {
      const std::size_t begin = c * detail::chunk_size;
      const std::size_t end = std::min(trials, begin + detail::chunk_size);
      detail::simulate_chunk(cfg, seed, c, begin, end, batch.hb2, batch.he2);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  return batch;
}

// Fraction of trials whose secrecy capacity falls below rate_rs. The outage
// event log2(1+gamma_b) - log2(1+gamma_e) < rs is evaluated in the exact
// equivalent form gamma_b < tau*gamma_e + tau - 1. For rate_rs = 0 the
// clamped secrecy capacity can never go below zero, so the probability is 0
// by convention (the closed forms instead integrate the unclamped event).
inline Probability empirical_sop(const TrialBatch& batch, double rate_rs) {
  if (!(rate_rs >= 0.0)) throw std::domain_error("empirical_sop: rate_rs must be >= 0");
  if (rate_rs == 0.0) return 0.0;
  const double tau = std::exp2(rate_rs);
  const double sb = batch.snr_scale_b(), se = batch.snr_scale_e();
  std::size_t count = 0;
  for (std::size_t i = 0; i < batch.trials(); ++i)
    if (sb * batch.hb2[i] < tau * se * batch.he2[i] + tau - 1.0) ++count;
  return static_cast<double>(count) / static_cast<double>(batch.trials());
}

// Sample mean of max{log2(1+gamma_b) - log2(1+gamma_e), 0} with its standard
// error.
inline MeanWithError empirical_asc(const TrialBatch& batch) {
  const double sb = batch.snr_scale_b(), se = batch.snr_scale_e();
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t i = 0; i < batch.trials(); ++i) {
    const double cs =
        std::max((std::log1p(sb * batch.hb2[i]) - std::log1p(se * batch.he2[i])) / ln2, 0.0);
    sum += cs;
    sum2 += cs * cs;
  }
  const double n = static_cast<double>(batch.trials());
  const double mean = sum / n;
  const double var = std::max(sum2 / n - mean * mean, 0.0);
  return {mean, std::sqrt(var / n)};
}

// Pearson correlation of |H_b|^2 and |H_e|^2 across trials against the
// 3/sqrt(trials) null bound.
inline TestReport independence_test(const TrialBatch& batch) {
  const double rho = pearson_correlation(batch.hb2, batch.he2);
  const double threshold = 3.0 / std::sqrt(static_cast<double>(batch.trials()));
  return {"|corr(|H_b|^2, |H_e|^2)| below 3/sqrt(trials)", std::fabs(rho), threshold,
          std::fabs(rho) <= threshold};
}

// KS distance of |H_e| from the Rayleigh law with E{R^2} = 1/n, i.e. of
// |H_e|^2 from Exp(mean 1/n), at the 1% asymptotic critical value.
inline TestReport rayleigh_gof_test(const TrialBatch& batch) {
  const double n = static_cast<double>(batch.cfg.n);
  const double d =
      ks_statistic(batch.he2, [n](double x) { return -std::expm1(-n * x); });
  const double threshold = ks_critical_value(batch.trials(), 0.01);
  return {"KS(|H_e|, Rayleigh(E{R^2}=1/n)) at 1% significance", d, threshold, d <= threshold};
}

enum class DumpFormat { csv, binary };

// Raw (gamma_b, gamma_e) stream: CSV with a "gamma_b,gamma_e" header, or
// packed little-endian binary64 pairs.
inline void dump_samples(const TrialBatch& batch, std::ostream& out, DumpFormat format) {
  if (format == DumpFormat::csv) {
    out << "gamma_b,gamma_e\n";
    char line[64];
    for (std::size_t i = 0; i < batch.trials(); ++i) {
      std::snprintf(line, sizeof(line), "%.17g,%.17g\n", batch.gamma_b(i), batch.gamma_e(i));
      out << line;
    }
  } else {
    for (std::size_t i = 0; i < batch.trials(); ++i) {
      const double pair[2] = {batch.gamma_b(i), batch.gamma_e(i)};
      char bytes[16];
      std::memcpy(bytes, pair, sizeof(pair));
      out.write(bytes, sizeof(bytes));
    }
  }
}

// Streaming moments of Re(H_b), Im(H_b) and |H_b|^2, used to check the
// equivalent-channel parameter displays (mu = phi1 a_b^2 etc.) without
// storing per-trial components.
struct HbComponentMoments {
  double mean_u = 0.0, var_u = 0.0, var_v = 0.0, mean_hb2 = 0.0;
  std::size_t trials = 0;
};

inline HbComponentMoments hb_component_moments(const SystemConfig& cfg, std::uint64_t seed,
                                               std::size_t trials) {
  cfg.validate();
  Rng rng(substream_seed(seed, 0));
  const detail::HopSampler hop1(cfg.hop_a_r), hopb(cfg.hop_r_b);
  const bool with_errors = cfg.phase_model.has_errors();
  const double u = cfg.phase_model.half_width();
  const double inv_n = 1.0 / static_cast<double>(cfg.n);
  double su = 0.0, suu = 0.0, sv = 0.0, svv = 0.0, sp = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    double br = 0.0, bi = 0.0;
    for (int i = 0; i < cfg.n; ++i) {
      const double ab = hop1.magnitude(rng) * hopb.magnitude(rng);
      const double theta = with_errors ? rng.uniform(-u, u) : 0.0;
      br += ab * std::cos(theta);
      bi += ab * std::sin(theta);
    }
    br *= inv_n;
    bi *= inv_n;
    su += br;
    suu += br * br;
    sv += bi;
    svv += bi * bi;
    sp += br * br + bi * bi;
  }
  const double n = static_cast<double>(trials);
  HbComponentMoments m;
  m.mean_u = su / n;
  m.var_u = suu / n - m.mean_u * m.mean_u;
  const double mean_v = sv / n;
  m.var_v = svv / n - mean_v * mean_v;
  m.mean_hb2 = sp / n;
  m.trials = trials;
  return m;
}

}  // namespace lrssec
