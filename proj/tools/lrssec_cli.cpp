// lrssec command-line driver.
//
//   lrssec sweep     SOP/ASC curve families over an (n, bits, SNR) grid, CSV out
//   lrssec validate  runs the acceptance gates and module invariants
//   lrssec dump      raw (gamma_b, gamma_e) Monte Carlo samples
//
// Exit codes: 0 success, 1 validation failure, 2 bad arguments.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lrssec/lrssec.hpp"

namespace {

std::string normalize(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::replace(s.begin(), s.end(), '_', '-');
  return s;
}

lrssec::SweepVariant parse_variant(const std::string& raw) {
  const std::string s = normalize(raw);
  if (s == "fr") return lrssec::SweepVariant::fr;
  if (s == "br") return lrssec::SweepVariant::br;
  if (s == "nr") return lrssec::SweepVariant::nr;
  if (s == "mc") return lrssec::SweepVariant::mc;
  if (s == "fr-asym") return lrssec::SweepVariant::fr_asym;
  if (s == "br-asym") return lrssec::SweepVariant::br_asym;
  if (s == "nr-asym") return lrssec::SweepVariant::nr_asym;
  throw CLI::ValidationError("--variants", "unknown variant '" + raw + "'");
}

std::optional<unsigned> parse_bits(const std::string& raw) {
  const std::string s = normalize(raw);
  if (s == "inf" || s == "none") return std::nullopt;
  const int b = std::stoi(s);
  if (b < 1) throw CLI::ValidationError("--bits", "bits must be >= 1 or 'inf'");
  return static_cast<unsigned>(b);
}

// "start:stop:step" in dB; a single number means one grid point.
void parse_grid(const std::string& raw, lrssec::SweepSpec& spec) {
  const auto c1 = raw.find(':');
  if (c1 == std::string::npos) {
    spec.g0b_start_db = spec.g0b_stop_db = std::stod(raw);
    spec.g0b_step_db = 1.0;
    return;
  }
  const auto c2 = raw.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw CLI::ValidationError("--g0b-dB", "expected start:stop:step or a single value");
  spec.g0b_start_db = std::stod(raw.substr(0, c1));
  spec.g0b_stop_db = std::stod(raw.substr(c1 + 1, c2 - c1 - 1));
  spec.g0b_step_db = std::stod(raw.substr(c2 + 1));
}

int run_sweep_cmd(const lrssec::SweepSpec& spec, const std::string& out_path) {
  const lrssec::SweepResult result = lrssec::run_sweep(spec);
  for (const auto& row : result.rows) {
    if (row.below_mc_floor)
      std::fprintf(stderr,
                   "warning: n=%d bits=%s g0b=%g dB: fewer than 100 expected outage events at "
                   "%zu trials; MC estimate below the resolvable floor\n",
                   row.n, row.bits ? std::to_string(*row.bits).c_str() : "inf", row.g0b_db,
                   spec.trials);
  }
  if (out_path.empty() || out_path == "-") {
    lrssec::write_csv(result, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::fprintf(stderr, "error: cannot open '%s' for writing\n", out_path.c_str());
      return 2;
    }
    lrssec::write_csv(result, out);
  }
  return 0;
}

void print_gate(const lrssec::GateResult& g, int index, bool verbose) {
  std::printf("[%s] criterion %2d: %s  (statistic=%.4g, threshold=%.4g)\n",
              g.passed ? "PASS" : "FAIL", index, g.name.c_str(), g.statistic, g.threshold);
  if (verbose || !g.passed)
    for (const auto& line : g.details) std::printf("         %s\n", line.c_str());
}

int run_validate_cmd(std::uint64_t seed, int jobs, std::size_t trials, bool verbose) {
  lrssec::GateOptions opt;
  opt.seed = seed;
  opt.jobs = jobs;
  opt.sop_trials = trials;
  opt.asc_trials = trials;
  opt.stat_trials = trials;
  const std::vector<lrssec::GateResult> gates = lrssec::run_acceptance_gates(opt);
  bool all_passed = true;
  int index = 1;
  for (const auto& g : gates) {
    print_gate(g, index++, verbose);
    all_passed = all_passed && g.passed;
  }
  // module invariant beyond the numbered criteria
  lrssec::SystemConfig cfg;
  cfg.n = 16;
  cfg.phase_model = lrssec::PhaseErrorModel::uniform_quantized(2);
  cfg.hop_a_r = lrssec::HopFading::rician(1.0);
  cfg.hop_r_b = lrssec::HopFading::rician(1.0);
  cfg.hop_r_e = lrssec::HopFading::rayleigh();
  cfg.gamma0_b = 10.0;
  cfg.gamma0_e = 10.0;
  const lrssec::GateResult mg =
      lrssec::moment_consistency_gate(cfg, lrssec::moment_set(cfg), seed, trials);
  std::printf("[%s] invariant   : %s  (statistic=%.4g, threshold=%.4g)\n",
              mg.passed ? "PASS" : "FAIL", mg.name.c_str(), mg.statistic, mg.threshold);
  if (verbose || !mg.passed)
    for (const auto& line : mg.details) std::printf("         %s\n", line.c_str());
  all_passed = all_passed && mg.passed;
  std::printf("%s\n", all_passed ? "all gates passed" : "one or more gates FAILED");
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Physical-layer-security metrics for reflecting-surface links"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file; flags override");

  // ---- sweep ----
  std::string metric = "sop";
  std::vector<std::string> variant_names = {"FR", "BR", "NR", "MC"};
  std::vector<std::string> bits_names = {"2", "inf"};
  std::vector<int> n_list = {4, 16, 64, 256};
  std::string grid = "-10:30:2";
  double g0e_db = 10.0;
  double rate_rs = 1.0;
  std::size_t trials = 1'000'000;
  std::uint64_t seed = lrssec::SweepSpec{}.seed;
  int jobs = 0;
  std::string out_path = "-";
  std::string preset;

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate metric curves over a grid, CSV output");
  sweep->add_option("--metric", metric, "sop or asc")->check(CLI::IsMember({"sop", "asc"}));
  sweep->add_option("--variants", variant_names,
                    "subset of FR,BR,NR,MC,FR-asym,BR-asym,NR-asym")
      ->delimiter(',');
  sweep->add_option("--n", n_list, "reflector counts")->delimiter(',');
  sweep->add_option("--bits", bits_names, "quantization bits per point; 'inf' = no phase errors")
      ->delimiter(',');
  sweep->add_option("--g0b-dB", grid, "legitimate single-reflector SNR grid, start:stop:step dB");
  sweep->add_option("--g0e-dB", g0e_db, "eavesdropper single-reflector SNR, dB");
  sweep->add_option("--rs", rate_rs, "target secrecy rate, bits/s/Hz");
  sweep->add_option("--trials", trials, "Monte Carlo trials per grid point");
  sweep->add_option("--seed", seed, "random seed");
  sweep->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  sweep->add_option("--out", out_path, "output CSV path ('-' = stdout)");
  sweep->add_option("--preset", preset, "fig1 (ASC families) or fig2 (SOP families)")
      ->check(CLI::IsMember({"fig1", "fig2"}));

  // ---- validate ----
  std::uint64_t v_seed = lrssec::GateOptions{}.seed;
  int v_jobs = 0;
  std::size_t v_trials = 1'000'000;
  bool v_verbose = false;
  CLI::App* validate = app.add_subcommand("validate", "run acceptance gates and invariants");
  validate->add_option("--seed", v_seed, "random seed");
  validate->add_option("--jobs", v_jobs, "worker threads (0 = hardware)");
  validate->add_option("--trials", v_trials, "Monte Carlo trials per gate");
  validate->add_flag("--verbose", v_verbose, "print per-point details for passing gates too");

  // ---- dump ----
  int d_n = 64;
  std::string d_bits = "2";
  double d_g0b = 10.0, d_g0e = 10.0;
  std::size_t d_trials = 100000;
  std::uint64_t d_seed = 1;
  std::string d_format = "csv";
  std::string d_out = "-";
  CLI::App* dump = app.add_subcommand("dump", "stream raw (gamma_b, gamma_e) sample pairs");
  dump->add_option("--n", d_n, "reflector count");
  dump->add_option("--bits", d_bits, "quantization bits or 'inf'");
  dump->add_option("--g0b-dB", d_g0b, "legitimate single-reflector SNR, dB");
  dump->add_option("--g0e-dB", d_g0e, "eavesdropper single-reflector SNR, dB");
  dump->add_option("--trials", d_trials, "number of sample pairs");
  dump->add_option("--seed", d_seed, "random seed");
  dump->add_option("--format", d_format, "csv or bin (packed little-endian binary64 pairs)")
      ->check(CLI::IsMember({"csv", "bin"}));
  dump->add_option("--out", d_out, "output path ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sweep->parsed()) {
      lrssec::SweepSpec spec;
      if (preset == "fig1")
        spec = lrssec::fig1_preset();
      else if (preset == "fig2")
        spec = lrssec::fig2_preset();
      // explicit flags override preset fields
      if (preset.empty() || sweep->count("--metric"))
        spec.metric = metric == "asc" ? lrssec::Metric::asc : lrssec::Metric::sop;
      if (preset.empty() || sweep->count("--variants")) {
        spec.variants.clear();
        for (const auto& v : variant_names) spec.variants.push_back(parse_variant(v));
      }
      if (preset.empty() || sweep->count("--n")) spec.n_list = n_list;
      if (preset.empty() || sweep->count("--bits")) {
        spec.bits_list.clear();
        for (const auto& b : bits_names) spec.bits_list.push_back(parse_bits(b));
      }
      if (preset.empty() || sweep->count("--g0b-dB")) parse_grid(grid, spec);
      if (preset.empty() || sweep->count("--g0e-dB")) spec.g0e_db = g0e_db;
      if (preset.empty() || sweep->count("--rs")) spec.rate_rs = rate_rs;
      spec.trials = trials;
      spec.seed = seed;
      spec.jobs = jobs;
      return run_sweep_cmd(spec, out_path);
    }
    if (validate->parsed()) return run_validate_cmd(v_seed, v_jobs, v_trials, v_verbose);
    if (dump->parsed()) {
      lrssec::SystemConfig cfg;
      cfg.n = d_n;
      const std::optional<unsigned> bits = parse_bits(d_bits);
      cfg.phase_model = bits ? lrssec::PhaseErrorModel::uniform_quantized(*bits)
                             : lrssec::PhaseErrorModel::none();
      cfg.hop_a_r = lrssec::HopFading::rician(1.0);
      cfg.hop_r_b = lrssec::HopFading::rician(1.0);
      cfg.hop_r_e = lrssec::HopFading::rayleigh();
      cfg.gamma0_b = lrssec::linear_from_db(d_g0b);
      cfg.gamma0_e = lrssec::linear_from_db(d_g0e);
      const lrssec::TrialBatch batch = lrssec::simulate_batch(cfg, d_seed, d_trials);
      const lrssec::DumpFormat fmt =
          d_format == "bin" ? lrssec::DumpFormat::binary : lrssec::DumpFormat::csv;
      if (d_out.empty() || d_out == "-") {
        lrssec::dump_samples(batch, std::cout, fmt);
      } else {
        std::ofstream out(d_out, std::ios::binary);
        if (!out) {
          std::fprintf(stderr, "error: cannot open '%s' for writing\n", d_out.c_str());
          return 2;
        }
        lrssec::dump_samples(batch, out, fmt);
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
