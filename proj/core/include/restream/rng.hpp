#pragma once

#include <cstdint>
#include <span>

namespace restream {

// SplitMix64 (Steele/Lea/Vigna, public domain). Seeded streams are the
// reproducibility contract for traffic generation and key derivation, so the
// generator is pinned here by its reference constants instead of delegating
// to an implementation-defined <random> engine.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  uint32_t next_u32() { return static_cast<uint32_t>(next_u64() >> 32); }

  uint16_t next_u16() { return static_cast<uint16_t>(next_u64() >> 48); }

  // Uniform in [lo, hi], both inclusive. Modulo bias is immaterial for the
  // small ranges used here.
  uint64_t next_range(uint64_t lo, uint64_t hi) {
    return lo + next_u64() % (hi - lo + 1);
  }

  void fill(std::span<uint8_t> out) {
    for (auto& b : out) b = static_cast<uint8_t>(next_u64() >> 56);
  }

 private:
  uint64_t state_;
};

}  // namespace restream
