#pragma once

#include <array>
#include <cstdint>

namespace restream {

// AES-128 block encryption (FIPS 197), encrypt direction only. This is the
// fixed-key permutation behind the keyed tuple hash; the schedule is expanded
// once at construction so per-tuple hashing touches no key material.
class Aes128 {
 public:
  explicit Aes128(const std::array<uint8_t, 16>& key);

  std::array<uint8_t, 16> encrypt(const std::array<uint8_t, 16>& block) const;

 private:
  std::array<uint8_t, 176> round_keys_;  // 11 round keys of 16 bytes
};

}  // namespace restream
