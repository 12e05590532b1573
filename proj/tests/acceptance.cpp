// Acceptance suite: runs the numbered criteria and prints one pass/fail line
// per criterion, with per-point details underneath. Exit status is nonzero
// if any executed criterion fails.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run a single criterion (1-10)
//   acceptance --seed S --jobs J --trials T

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "lrssec/validation.hpp"

namespace {

void print_gate(const lrssec::GateResult& g, int index) {
  std::printf("[%s] criterion %2d: %s  (statistic=%.4g, threshold=%.4g)\n",
              g.passed ? "PASS" : "FAIL", index, g.name.c_str(), g.statistic, g.threshold);
  for (const auto& line : g.details) std::printf("         %s\n", line.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  lrssec::GateOptions opt;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    auto next = [&]() -> const char* {
      if (i + 1 >= argc) {
        std::fprintf(stderr, "missing value for %s\n", arg.c_str());
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--criterion") {
      only = std::atoi(next());
      if (only < 1 || only > 10) {
        std::fprintf(stderr, "--criterion expects 1..10\n");
        return 2;
      }
    } else if (arg == "--seed") {
      opt.seed = std::strtoull(next(), nullptr, 10);
    } else if (arg == "--jobs") {
      opt.jobs = std::atoi(next());
    } else if (arg == "--trials") {
      const std::size_t t = std::strtoull(next(), nullptr, 10);
      opt.sop_trials = opt.asc_trials = opt.stat_trials = t;
    } else {
      std::fprintf(stderr, "unknown argument '%s'\n", arg.c_str());
      return 2;
    }
  }

  lrssec::BatchCache cache(opt.seed, opt.stat_trials, opt.jobs);
  using Gate = std::function<lrssec::GateResult()>;
  const std::vector<Gate> gates = {
      [&] { return lrssec::gate_special_fn_identities(opt); },
      [&] { return lrssec::gate_laplace_oracle(opt); },
      [&] { return lrssec::gate_degenerate_reduction(opt); },
      [&] { return lrssec::gate_sop_vs_channel_oracle(opt); },
      [&] { return lrssec::gate_asc_agreement(opt, cache); },
      [&] { return lrssec::gate_scaling_laws(opt, cache); },
      [&] { return lrssec::gate_independence(opt, cache); },
      [&] { return lrssec::gate_rayleigh_gof(opt, cache); },
      [&] { return lrssec::gate_diversity_orders(opt); },
      [&] { return lrssec::gate_asymptote_consistency(opt); },
  };

  bool all_passed = true;
  for (int i = 1; i <= static_cast<int>(gates.size()); ++i) {
    if (only != 0 && i != only) continue;
    const lrssec::GateResult g = gates[static_cast<std::size_t>(i - 1)]();
    print_gate(g, i);
    all_passed = all_passed && g.passed;
  }
  std::printf("%s\n", all_passed ? "acceptance: all executed criteria passed"
                                 : "acceptance: at least one criterion FAILED");
  return all_passed ? 0 : 1;
}
