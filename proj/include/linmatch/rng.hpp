#pragma once

#include <cstdint>
#include <random>

namespace linmatch {

/// Seeded generator with portable derived draws. std::mt19937_64 output is
/// specified by the standard; the distribution helpers below avoid
/// std::uniform_int_distribution, whose mapping is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform draw in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    for (;;) {
      std::uint64_t x = eng_();
      if (x < limit) return x % bound;
    }
  }

  /// Uniform draw in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace linmatch
