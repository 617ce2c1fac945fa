#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "restream/hash.hpp"
#include "restream/tuple.hpp"

namespace restream {

// Occupancy and direction figures for one strategy over one tuple population.
struct StrategyReport {
  uint64_t slots_used = 0;
  uint64_t max_chain = 0;
  double mean_chain = 0.0;            // tuples per non-empty slot
  double chi_square = 0.0;            // sum((o_i - e)^2 / e), e = M/N, over all N slots
  double direction_collision_rate = 0.0;  // fraction with slot(t) == slot(reverse(t))
};

struct BenchReport {
  uint32_t table_size = 0;
  uint64_t tuple_count = 0;
  StrategyReport sum_mod;
  StrategyReport crypto_keyed;
};

StrategyReport bench_strategy(const std::vector<FourTuple>& tuples, const HashConfig& cfg);

// Both strategies over the same tuples and table size; `key` feeds the
// CryptoKeyed side only.
BenchReport hash_bench(const std::vector<FourTuple>& tuples, uint32_t table_size,
                       const std::array<uint8_t, 16>& key);

}  // namespace restream
