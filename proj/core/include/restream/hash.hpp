#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "restream/aes128.hpp"
#include "restream/tuple.hpp"

namespace restream {

// Slot strategies for the connection table. SumMod is the traditional
// baseline; CryptoKeyed encrypts the 96-bit tuple concatenation under a fixed
// key and keeps the low bits.
enum class HashStrategy { SumMod, CryptoKeyed };

const char* to_string(HashStrategy s);
std::optional<HashStrategy> strategy_from_name(const std::string& name);

struct HashConfig {
  uint32_t table_size = 4096;     // power of two, >= 2
  std::array<uint8_t, 16> key{};  // fixed for the lifetime of a table; CryptoKeyed only
  HashStrategy strategy = HashStrategy::CryptoKeyed;
};

constexpr bool is_power_of_two(uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

// Key material from the documented SplitMix64 stream, so a run is
// reproducible from its key seed.
std::array<uint8_t, 16> key_from_seed(uint64_t seed);

std::string key_to_hex(const std::array<uint8_t, 16>& key);

// (src_ip + dst_ip + src_port + dst_port) mod N over exact 64-bit integers.
// Direction-blind: addition cannot tell the two directions apart.
uint32_t sum_mod_key(const FourTuple& t, uint32_t table_size);

// encode96(t) in bytes 0..11 of a zero-padded 16-byte block, AES-128 under
// `aes`, then the low log2(N) bits of the big-endian ciphertext integer.
uint32_t crypto_slot(const Aes128& aes, const FourTuple& t, uint32_t table_size);

// One-shot form; expands the key schedule on every call.
uint32_t crypto_key(const FourTuple& t, const HashConfig& cfg);

// Strategy dispatch with the key schedule expanded once. Throws
// std::invalid_argument when cfg.table_size is not a power of two >= 2.
class TupleHasher {
 public:
  explicit TupleHasher(const HashConfig& cfg);

  uint32_t slot(const FourTuple& t) const;
  const HashConfig& config() const { return cfg_; }

 private:
  HashConfig cfg_;
  std::optional<Aes128> aes_;
};

}  // namespace restream
