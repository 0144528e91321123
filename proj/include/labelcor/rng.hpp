#pragma once

#include <cstdint>
#include <limits>

namespace labelcor {

/// SplitMix64 step; used for seeding and for deriving independent streams.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Seed for stream `stream` of a base seed. Distinct streams are decorrelated.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// xoshiro256** (Blackman & Vigna), seeded through SplitMix64.
///
/// All distributions below are implemented here rather than taken from
/// <random>, whose distribution algorithms are implementation-defined; the same
/// seed yields the same bits on every conforming platform (normal draws also
/// depend on the platform's std::log).
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed) noexcept;

  /// Generator for stream `stream` of `seed` (see derive_seed).
  static Xoshiro256 stream(std::uint64_t seed, std::uint64_t stream) noexcept {
    return Xoshiro256(derive_seed(seed, stream));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
  result_type operator()() noexcept { return next(); }

  std::uint64_t next() noexcept;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Uniform integer on [0, bound) without modulo bias. bound must be > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;
  /// Standard normal (Marsaglia polar method).
  double normal() noexcept;

 private:
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace labelcor
