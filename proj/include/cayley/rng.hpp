#pragma once

#include "cayley/rational.hpp"

#include <cstdint>

namespace cayley {

/// SplitMix64 stream. Every verification trial draws from its own substream
/// keyed by (seed, trial index), so trial results are independent of
/// execution order and identical across platforms (no std::random
/// distributions are involved anywhere).
class SubstreamRng {
 public:
  SubstreamRng(std::uint64_t seed, std::uint64_t trial_index)
      : state_(finalize(seed + 0x9e3779b97f4a7c15ULL) ^
               finalize(0xd1b54a32d192ed03ULL * (trial_index + 1))) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return finalize(state_);
  }

  /// Uniform in [lo, hi], both inclusive. Modulo bias is irrelevant for the
  /// tiny ranges used here.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  /// Small rational p/q with |p| <= max_num and 1 <= q <= max_den. Keeps
  /// intermediate sizes bounded while exercising non-integrality.
  Rational rational(int max_num = 9, int max_den = 4) {
    const std::int64_t p = int_in(-max_num, max_num);
    const std::int64_t q = int_in(1, max_den);
    return Rational(p, q);
  }

  /// Nonzero variant of rational().
  Rational nonzero_rational(int max_num = 9, int max_den = 4) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (r != 0) return r;
    }
  }

  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1].
  double symmetric_unit() { return 2.0 * uniform01() - 1.0; }

 private:
  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

} // namespace cayley
