#pragma once

// Sweep driver: evaluates SOP/ASC curve families over an (n, bits, SNR) grid
// and emits CSV rows in deterministic grid order. Grid cells are evaluated
// concurrently; Monte Carlo cells get per-cell substreams, so the output is a
// pure function of (spec, seed).

#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "lrssec/channel.hpp"
#include "lrssec/common.hpp"
#include "lrssec/metrics.hpp"
#include "lrssec/montecarlo.hpp"

namespace lrssec {

enum class Metric { sop, asc };

enum class SweepVariant { fr, br, nr, mc, fr_asym, br_asym, nr_asym };

inline std::string to_string(SweepVariant v) {
  switch (v) {
    case SweepVariant::fr: return "FR";
    case SweepVariant::br: return "BR";
    case SweepVariant::nr: return "NR";
    case SweepVariant::mc: return "MC";
    case SweepVariant::fr_asym: return "FR-asym";
    case SweepVariant::br_asym: return "BR-asym";
    case SweepVariant::nr_asym: return "NR-asym";
  }
  return "?";
}

struct SweepSpec {
  Metric metric = Metric::sop;
  std::vector<SweepVariant> variants = {SweepVariant::br, SweepVariant::mc};
  std::vector<int> n_list = {64};
  std::vector<std::optional<unsigned>> bits_list = {2u};  // nullopt = no phase errors
  double g0b_start_db = -10.0;
  double g0b_stop_db = 30.0;
  double g0b_step_db = 2.0;
  double g0e_db = 10.0;
  double rate_rs = 1.0;
  std::size_t trials = 1'000'000;
  std::uint64_t seed = 0x1c0ffee5eedULL;
  int jobs = 0;
  // per-hop fading; defaults follow the Rician(1)/Rician(1)/Rayleigh setup
  HopFading hop_a_r = HopFading::rician(1.0);
  HopFading hop_r_b = HopFading::rician(1.0);
  HopFading hop_r_e = HopFading::rayleigh();

  void validate() const {
    if (variants.empty() || n_list.empty() || bits_list.empty())
      throw std::invalid_argument("SweepSpec: variants, n and bits lists must be nonempty");
    if (!(g0b_step_db > 0.0)) throw std::invalid_argument("SweepSpec: g0b step must be > 0");
    if (g0b_stop_db < g0b_start_db)
      throw std::invalid_argument("SweepSpec: g0b stop must be >= start");
    if (!(rate_rs >= 0.0)) throw std::invalid_argument("SweepSpec: rate_rs must be >= 0");
    if (trials < 1) throw std::invalid_argument("SweepSpec: trials must be >= 1");
    for (int n : n_list)
      if (n < 1) throw std::invalid_argument("SweepSpec: n must be >= 1");
  }

  std::vector<double> g0b_grid_db() const {
    const int count =
        static_cast<int>(std::floor((g0b_stop_db - g0b_start_db) / g0b_step_db + 1.5));
    std::vector<double> grid(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = g0b_start_db + i * g0b_step_db;
    return grid;
  }
};

struct SweepRow {
  int n = 0;
  std::optional<unsigned> bits;
  double g0b_db = 0.0;
  SweepVariant variant = SweepVariant::br;
  double value = 0.0;
  std::optional<double> std_error;  // Monte Carlo rows only
  // set when fewer than ~100 outage events are expected at this trial count;
  // the row is kept, not dropped
  bool below_mc_floor = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

namespace detail {

inline bool variant_applies(SweepVariant v, bool infinite_bits) {
  switch (v) {
    case SweepVariant::fr:
    case SweepVariant::fr_asym: return infinite_bits;
    case SweepVariant::br:
    case SweepVariant::br_asym: return !infinite_bits;
    default: return true;
  }
}

struct SweepCell {
  int n;
  std::optional<unsigned> bits;
  double g0b_db;
  std::uint64_t mc_seed;
};

inline std::vector<SweepRow> evaluate_cell(const SweepSpec& spec, const SweepCell& cell,
                                           int mc_jobs) {
  SystemConfig cfg;
  cfg.n = cell.n;
  cfg.phase_model = cell.bits ? PhaseErrorModel::uniform_quantized(*cell.bits)
                              : PhaseErrorModel::none();
  cfg.hop_a_r = spec.hop_a_r;
  cfg.hop_r_b = spec.hop_r_b;
  cfg.hop_r_e = spec.hop_r_e;
  cfg.gamma0_b = linear_from_db(cell.g0b_db);  // dB -> linear happens here only
  cfg.gamma0_e = linear_from_db(spec.g0e_db);
  cfg.rate_rs = spec.rate_rs;
  const MomentSet mom = moment_set(cfg);
  const EveDist eve = eavesdropper_params(cfg);
  const bool infinite_bits = !cell.bits.has_value();

  auto legit = [&](SweepVariant v) {
    switch (v) {
      case SweepVariant::fr:
      case SweepVariant::fr_asym:
        return legitimate_params(cfg, mom, LegitimateModel::folded_normal);
      case SweepVariant::br:
      case SweepVariant::br_asym:
        return legitimate_params(cfg, mom, LegitimateModel::beckmann);
      default: return legitimate_params(cfg, mom, LegitimateModel::nakagami);
    }
  };

  std::vector<SweepRow> rows;
  std::optional<TrialBatch> batch;
  for (SweepVariant v : spec.variants) {
    if (!variant_applies(v, infinite_bits)) continue;
    SweepRow row;
    row.n = cell.n;
    row.bits = cell.bits;
    row.g0b_db = cell.g0b_db;
    row.variant = v;
    if (v == SweepVariant::mc) {
      if (!batch) batch = simulate_batch(cfg, cell.mc_seed, spec.trials, mc_jobs);
      if (spec.metric == Metric::sop) {
        const double p = empirical_sop(*batch, spec.rate_rs);
        row.value = p;
        row.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(spec.trials));
        row.below_mc_floor = p * static_cast<double>(spec.trials) < 100.0;
      } else {
        const MeanWithError m = empirical_asc(*batch);
        row.value = m.value;
        row.std_error = m.std_error;
      }
    } else {
      const bool asym = v == SweepVariant::fr_asym || v == SweepVariant::br_asym ||
                        v == SweepVariant::nr_asym;
      const LegitimateDist leg = legit(v);
      if (spec.metric == Metric::sop)
        row.value = asym ? sop_asymptotic(leg, eve, spec.rate_rs)
                         : static_cast<double>(sop(leg, eve, spec.rate_rs));
      else
        row.value = asym ? asc_asymptotic(leg, eve) : asc(leg, eve).value;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace detail

inline SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> grid = spec.g0b_grid_db();

  std::vector<detail::SweepCell> cells;
  for (int n : spec.n_list)
    for (const auto& bits : spec.bits_list)
      for (double g : grid)
        cells.push_back({n, bits, g, substream_seed(spec.seed, cells.size())});

  unsigned workers =
      spec.jobs > 0 ? static_cast<unsigned>(spec.jobs) : std::thread::hardware_concurrency();
  if (workers < 1) workers = 1;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cells.size()));

  std::vector<std::vector<SweepRow>> per_cell(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        per_cell[i] = detail::evaluate_cell(spec, cells[i], /*mc_jobs=*/1);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (workers == 1) {
    // single worker keeps inner Monte Carlo parallelism instead
    for (std::size_t i = 0; i < cells.size(); ++i)
      per_cell[i] = detail::evaluate_cell(spec, cells[i], spec.jobs);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  SweepResult result;
  for (auto& rows : per_cell)
    for (auto& row : rows) result.rows.push_back(row);
  return result;
}

// Fixed schema: n,bits,g0b_dB,variant,value,stderr. bits is "inf" for the
// no-error model; stderr is empty for closed-form rows.
inline void write_csv(const SweepResult& result, std::ostream& out) {
  out << "n,bits,g0b_dB,variant,value,stderr\n";
  char buf[160];
  for (const SweepRow& row : result.rows) {
    char bits[16];
    if (row.bits)
      std::snprintf(bits, sizeof(bits), "%u", *row.bits);
    else
      std::snprintf(bits, sizeof(bits), "inf");
    if (row.std_error)
      std::snprintf(buf, sizeof(buf), "%d,%s,%.10g,%s,%.12g,%.6g\n", row.n, bits, row.g0b_db,
                    to_string(row.variant).c_str(), row.value, *row.std_error);
    else
      std::snprintf(buf, sizeof(buf), "%d,%s,%.10g,%s,%.12g,\n", row.n, bits, row.g0b_db,
                    to_string(row.variant).c_str(), row.value);
    out << buf;
  }
}

// Figure presets: ASC curve families (four surface sizes, three quantization
// settings) and SOP curve families (2-bit vs ideal phases).
inline SweepSpec fig1_preset() {
  SweepSpec s;
  s.metric = Metric::asc;
  s.variants = {SweepVariant::fr, SweepVariant::br, SweepVariant::nr, SweepVariant::mc};
  s.n_list = {4, 16, 64, 256};
  s.bits_list = {1u, 2u, std::nullopt};
  s.g0b_start_db = -10.0;
  s.g0b_stop_db = 30.0;
  s.g0b_step_db = 2.0;
  s.g0e_db = 10.0;
  return s;
}

inline SweepSpec fig2_preset() {
  SweepSpec s;
  s.metric = Metric::sop;
  s.variants = {SweepVariant::fr,      SweepVariant::br,      SweepVariant::nr,
                SweepVariant::mc,      SweepVariant::fr_asym, SweepVariant::br_asym,
                SweepVariant::nr_asym};
  s.n_list = {4, 16, 64, 256};
  s.bits_list = {2u, std::nullopt};
  s.g0b_start_db = -10.0;
  s.g0b_stop_db = 30.0;
  s.g0b_step_db = 2.0;
  s.g0e_db = 10.0;
  s.rate_rs = 1.0;
  return s;
}

}  // namespace lrssec
