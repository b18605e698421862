#pragma once

#include <cstdint>
#include <random>

namespace cliquemine {

// mt19937_64 with explicit output mapping. std::*_distribution output is
// implementation-defined, so anything that must reproduce across toolchains
// goes through these helpers instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // 53-bit mantissa uniform in [0, 1)
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in [0, bound); bound > 0
  std::uint64_t below(std::uint64_t bound) {
    // rejection to kill modulo bias
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  int range(int lo, int hi) {  // inclusive on both ends
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cliquemine
