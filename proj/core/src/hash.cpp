#include "restream/hash.hpp"

#include <stdexcept>

#include "restream/bytes.hpp"
#include "restream/rng.hpp"

namespace restream {

const char* to_string(HashStrategy s) {
  return s == HashStrategy::SumMod ? "sum_mod" : "crypto_keyed";
}

std::optional<HashStrategy> strategy_from_name(const std::string& name) {
  if (name == "sum_mod") return HashStrategy::SumMod;
  if (name == "crypto_keyed" || name == "crypto") return HashStrategy::CryptoKeyed;
  return std::nullopt;
}

std::array<uint8_t, 16> key_from_seed(uint64_t seed) {
  SplitMix64 rng(seed);
  std::array<uint8_t, 16> key{};
  for (size_t i = 0; i < 16; i += 8) {
    uint64_t w = rng.next_u64();
    for (size_t j = 0; j < 8; ++j) key[i + j] = static_cast<uint8_t>(w >> (56 - 8 * j));
  }
  return key;
}

std::string key_to_hex(const std::array<uint8_t, 16>& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(32);
  for (uint8_t b : key) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

uint32_t sum_mod_key(const FourTuple& t, uint32_t table_size) {
  const uint64_t sum = static_cast<uint64_t>(t.src_ip) + t.dst_ip + t.src_port + t.dst_port;
  return static_cast<uint32_t>(sum % table_size);
}

uint32_t crypto_slot(const Aes128& aes, const FourTuple& t, uint32_t table_size) {
  std::array<uint8_t, 16> block{};
  const auto enc = encode96(t);
  std::copy(enc.begin(), enc.end(), block.begin());
  const auto ct = aes.encrypt(block);
  // Low bits of the big-endian ciphertext integer; table_size is a power of
  // two so the low 64 bits decide the residue.
  uint64_t low = 0;
  for (size_t i = 8; i < 16; ++i) low = low << 8 | ct[i];
  return static_cast<uint32_t>(low & (table_size - 1));
}

uint32_t crypto_key(const FourTuple& t, const HashConfig& cfg) {
  return crypto_slot(Aes128(cfg.key), t, cfg.table_size);
}

TupleHasher::TupleHasher(const HashConfig& cfg) : cfg_(cfg) {
  if (!is_power_of_two(cfg.table_size) || cfg.table_size < 2)
    throw std::invalid_argument("table_size must be a power of two >= 2");
  if (cfg.strategy == HashStrategy::CryptoKeyed) aes_.emplace(cfg.key);
}

uint32_t TupleHasher::slot(const FourTuple& t) const {
  if (cfg_.strategy == HashStrategy::SumMod) return sum_mod_key(t, cfg_.table_size);
  return crypto_slot(*aes_, t, cfg_.table_size);
}

}  // namespace restream
