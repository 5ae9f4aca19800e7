#pragma once

#include <cstdint>

namespace rslab {

/**
 * SplitMix64 (Steele, Lea, Flood 2014) with the published constants.
 *
 *   state += 0x9e3779b97f4a7c15
 *   z = state
 *   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
 *   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
 *   return z ^ (z >> 31)
 *
 * Doubles are drawn as (next() >> 11) * 2^-53, uniform on [0, 1).
 * Every seeded operation in the library draws from this generator only, so
 * outputs are bit-reproducible across platforms.
 */
class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    constexpr double next_double() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

/// First SplitMix64 output for `seed`; used to derive per-trial seeds as
/// mix(seed ^ trial_index).
constexpr std::uint64_t mix(std::uint64_t seed) noexcept { return SplitMix64(seed).next(); }

} // namespace rslab
