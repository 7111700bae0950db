#pragma once

#include <cstdint>
#include <random>

namespace pblock {

/// Deterministic generator used by every randomized routine. Values are drawn
/// from the raw engine output so that streams are identical across standard
/// library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish value in [0, bound); bound must be positive. The modulo bias
  /// is below 2^-40 for every bound used here.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  /// Seed for trial `index` of a campaign seeded with `seed`.
  static std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) { return seed ^ index; }

private:
  static std::uint64_t mix(std::uint64_t x)
  {
    // splitmix64 finalizer, so that seeds differing in one bit give unrelated streams
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

} // namespace pblock
