#pragma once

// Reproducible substreams for parallel trial generation. Each chunk of
// trials owns an engine seeded from (seed, chunk index) through a splitmix64
// mix, so results are bit-identical regardless of thread count or schedule.

#include <cstdint>
#include <random>
#include <utility>

#include "lrssec/common.hpp"

namespace lrssec {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream * 0x9e3779b97f4a7c15ULL + 1));
}

// Uniform/normal draws with a fixed, auditable consumption pattern
// (Box-Muller, two uniforms per normal pair) on top of mt19937_64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform on (0, 1]; never zero, safe under log()
  double uniform01() { return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::pair<double, double> normal_pair() {
    const double r = std::sqrt(-2.0 * std::log(uniform01()));
    const double a = 2.0 * pi * uniform01();
    return {r * std::cos(a), r * std::sin(a)};
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace lrssec
