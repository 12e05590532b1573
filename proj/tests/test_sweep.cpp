#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "lrssec/sweep.hpp"
#include "lrssec/validation.hpp"

using namespace lrssec;

namespace {

SweepSpec tiny_spec() {
  SweepSpec spec;
  spec.metric = Metric::sop;
  spec.variants = {SweepVariant::fr, SweepVariant::br, SweepVariant::nr, SweepVariant::mc};
  spec.n_list = {4};
  spec.bits_list = {1u, std::nullopt};
  spec.g0b_start_db = 0.0;
  spec.g0b_stop_db = 8.0;
  spec.g0b_step_db = 4.0;
  spec.g0e_db = 10.0;
  spec.rate_rs = 1.0;
  spec.trials = 4000;
  spec.seed = 99;
  return spec;
}

}  // namespace

TEST_CASE("sweep rows: applicability, order, determinism") {
  const SweepSpec spec = tiny_spec();
  const SweepResult a = run_sweep(spec);
  // per cell: bits=1 -> BR,NR,MC; bits=inf -> FR,NR,MC; 3 g0b points each
  REQUIRE(a.rows.size() == 3 * 3 * 2);

  // deterministic grid order: n, then bits, then g0b, then variant
  REQUIRE(a.rows[0].bits.has_value());
  REQUIRE(a.rows[0].g0b_db == 0.0);
  REQUIRE(to_string(a.rows[0].variant) == "BR");
  REQUIRE(to_string(a.rows[1].variant) == "NR");
  REQUIRE(to_string(a.rows[2].variant) == "MC");
  REQUIRE(a.rows[3].g0b_db == 4.0);
  REQUIRE_FALSE(a.rows[9].bits.has_value());
  REQUIRE(to_string(a.rows[9].variant) == "FR");

  // closed-form rows carry no stderr, MC rows do
  for (const auto& row : a.rows) {
    if (row.variant == SweepVariant::mc)
      REQUIRE(row.std_error.has_value());
    else
      REQUIRE_FALSE(row.std_error.has_value());
  }

  // byte-stable CSV, independent of worker count
  SweepSpec spec_j1 = spec;
  spec_j1.jobs = 1;
  SweepSpec spec_j2 = spec;
  spec_j2.jobs = 2;
  std::ostringstream csv1, csv2, csv3;
  write_csv(run_sweep(spec_j1), csv1);
  write_csv(run_sweep(spec_j2), csv2);
  write_csv(a, csv3);
  REQUIRE(csv1.str() == csv2.str());
  REQUIRE(csv1.str() == csv3.str());
  REQUIRE(csv1.str().rfind("n,bits,g0b_dB,variant,value,stderr\n", 0) == 0);
  REQUIRE(csv1.str().find(",inf,") != std::string::npos);
}

TEST_CASE("sweep closed-form rows match direct metric evaluation") {
  SweepSpec spec = tiny_spec();
  spec.variants = {SweepVariant::nr};
  spec.g0b_start_db = spec.g0b_stop_db = 6.0;
  const SweepResult r = run_sweep(spec);
  REQUIRE(r.rows.size() == 2);

  // dB -> linear conversion applied exactly once, at the boundary
  SystemConfig cfg;
  cfg.n = 4;
  cfg.phase_model = PhaseErrorModel::uniform_quantized(1);
  cfg.hop_a_r = HopFading::rician(1.0);
  cfg.hop_r_b = HopFading::rician(1.0);
  cfg.hop_r_e = HopFading::rayleigh();
  cfg.gamma0_b = linear_from_db(6.0);
  cfg.gamma0_e = linear_from_db(10.0);
  const auto nk = std::get<Nakagami>(
      legitimate_params(cfg, moment_set(cfg), LegitimateModel::nakagami));
  const double direct = sop_nr(nk, eavesdropper_params(cfg), 1.0);
  REQUIRE(r.rows[0].value == direct);
}

TEST_CASE("sweep asc metric and asymptotic variants") {
  SweepSpec spec = tiny_spec();
  spec.metric = Metric::asc;
  spec.variants = {SweepVariant::nr, SweepVariant::nr_asym, SweepVariant::mc};
  spec.n_list = {4};
  spec.bits_list = {2u};
  spec.g0b_start_db = spec.g0b_stop_db = 20.0;
  spec.trials = 20000;
  const SweepResult r = run_sweep(spec);
  REQUIRE(r.rows.size() == 3);
  REQUIRE(r.rows[0].value > 0.0);
  // asymptotic ASC close to exact at high SNR
  REQUIRE(std::fabs(r.rows[1].value - r.rows[0].value) < 0.1);
  // MC row in the same ballpark
  REQUIRE(std::fabs(r.rows[2].value - r.rows[0].value) < 0.5);
}

TEST_CASE("Monte Carlo floor is flagged, not dropped") {
  SweepSpec spec = tiny_spec();
  spec.metric = Metric::sop;
  spec.variants = {SweepVariant::mc};
  spec.n_list = {16};
  spec.bits_list = {2u};
  spec.g0b_start_db = spec.g0b_stop_db = 30.0;  // deep SNR: outage far below 100/trials
  spec.trials = 2000;
  const SweepResult r = run_sweep(spec);
  REQUIRE(r.rows.size() == 1);
  REQUIRE(r.rows[0].below_mc_floor);
}

TEST_CASE("figure presets") {
  const SweepSpec f1 = fig1_preset();
  REQUIRE(f1.metric == Metric::asc);
  REQUIRE(f1.n_list == std::vector<int>{4, 16, 64, 256});
  REQUIRE(f1.bits_list.size() == 3);
  REQUIRE_FALSE(f1.bits_list.back().has_value());
  REQUIRE(f1.g0e_db == 10.0);
  f1.validate();

  const SweepSpec f2 = fig2_preset();
  REQUIRE(f2.metric == Metric::sop);
  REQUIRE(f2.rate_rs == 1.0);
  REQUIRE(f2.bits_list.size() == 2);
  f2.validate();

  SweepSpec bad = tiny_spec();
  bad.g0b_step_db = 0.0;
  REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = tiny_spec();
  bad.variants.clear();
  REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("BR curves increase with n at fixed SNR (ASC preset property)") {
  // the headline figure behavior: more reflectors, more secrecy capacity
  SweepSpec spec;
  spec.metric = Metric::asc;
  spec.variants = {SweepVariant::br};
  spec.n_list = {4, 16, 64};
  spec.bits_list = {2u};
  spec.g0b_start_db = spec.g0b_stop_db = 10.0;
  const SweepResult r = run_sweep(spec);
  REQUIRE(r.rows.size() == 3);
  REQUIRE(r.rows[0].value < r.rows[1].value);
  REQUIRE(r.rows[1].value < r.rows[2].value);
}

TEST_CASE("fast validation gates pass") {
  GateOptions opt;
  const GateResult g1 = gate_special_fn_identities(opt);
  REQUIRE(g1.passed);
  const GateResult g2 = gate_laplace_oracle(opt);
  REQUIRE(g2.passed);
  const GateResult g3 = gate_degenerate_reduction(opt);
  REQUIRE(g3.passed);
  const GateResult g9 = gate_diversity_orders(opt);
  REQUIRE(g9.passed);
  const GateResult g10 = gate_asymptote_consistency(opt);
  REQUIRE(g10.passed);
}

TEST_CASE("moment-consistency gate catches an injected fault") {
  SystemConfig cfg;
  cfg.n = 16;
  cfg.phase_model = PhaseErrorModel::uniform_quantized(2);
  cfg.hop_a_r = HopFading::rician(1.0);
  cfg.hop_r_b = HopFading::rician(1.0);
  cfg.hop_r_e = HopFading::rayleigh();
  cfg.gamma0_b = 10.0;
  cfg.gamma0_e = 10.0;
  const MomentSet mom = moment_set(cfg);
  const GateResult honest = moment_consistency_gate(cfg, mom, 5, 1'000'000);
  REQUIRE(honest.passed);

  MomentSet wrong = mom;
  wrong.phi2 = mom.phi2 * 1.05;  // deliberately corrupted second circular moment
  const GateResult faulty = moment_consistency_gate(cfg, wrong, 5, 1'000'000);
  REQUIRE_FALSE(faulty.passed);
}
