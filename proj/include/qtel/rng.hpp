#pragma once

#include <cstdint>

namespace qtel {

// SplitMix64 finalizer (Stafford mix13); bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Counter-based deterministic random stream. Every draw hashes
// (key, counter), and substream() derives an independent child key from
// (key, label) without consuming draws, so trials can run in parallel and
// still see exactly the randomness addressed to them. Outputs depend only
// on (seed, substream labels, draw index), never on platform or schedule.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : key_(mix64(seed ^ kSeedSalt)) {}

  RngStream substream(std::uint64_t label) const {
    return RngStream(FromKey{}, mix64(key_ ^ mix64(label ^ kChildSalt)));
  }

  std::uint64_t next_u64() { return mix64(key_ + kGamma * ++counter_); }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, bound); bound must be nonzero. Bias is bounded by
  // bound / 2^64, far below anything observable here.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  bool next_bernoulli(double p) { return next_double() < p; }

 private:
  struct FromKey {};
  RngStream(FromKey, std::uint64_t key) : key_(key) {}

  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;
  static constexpr std::uint64_t kSeedSalt = 0x7c1592ad5b69a3e1ull;
  static constexpr std::uint64_t kChildSalt = 0x632be59bd9b4e019ull;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Stable seed for a labeled branch of a run; used to give experiment arms
// unrelated randomness under a single user-facing seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label) noexcept {
  return mix64(seed ^ mix64(label ^ 0xa24baed4963ee407ull));
}

}  // namespace qtel
