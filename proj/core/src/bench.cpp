#include "restream/bench.hpp"

namespace restream {

StrategyReport bench_strategy(const std::vector<FourTuple>& tuples, const HashConfig& cfg) {
  const TupleHasher hasher(cfg);
  std::vector<uint64_t> histogram(cfg.table_size, 0);
  uint64_t direction_collisions = 0;
  for (const FourTuple& t : tuples) {
    const uint32_t slot = hasher.slot(t);
    ++histogram[slot];
    if (slot == hasher.slot(reverse(t))) ++direction_collisions;
  }

  StrategyReport r;
  const uint64_t m = tuples.size();
  for (uint64_t o : histogram) {
    if (o == 0) continue;
    ++r.slots_used;
    r.max_chain = std::max(r.max_chain, o);
  }
  r.mean_chain = r.slots_used == 0 ? 0.0 : static_cast<double>(m) / static_cast<double>(r.slots_used);
  if (m > 0) {
    const double e = static_cast<double>(m) / static_cast<double>(cfg.table_size);
    double chi = 0.0;
    for (uint64_t o : histogram) {
      const double d = static_cast<double>(o) - e;
      chi += d * d / e;
    }
    r.chi_square = chi;
    r.direction_collision_rate =
        static_cast<double>(direction_collisions) / static_cast<double>(m);
  }
  return r;
}

BenchReport hash_bench(const std::vector<FourTuple>& tuples, uint32_t table_size,
                       const std::array<uint8_t, 16>& key) {
  BenchReport report;
  report.table_size = table_size;
  report.tuple_count = tuples.size();
  report.sum_mod =
      bench_strategy(tuples, HashConfig{table_size, {}, HashStrategy::SumMod});
  report.crypto_keyed =
      bench_strategy(tuples, HashConfig{table_size, key, HashStrategy::CryptoKeyed});
  return report;
}

}  // namespace restream
