#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "restream/hash.hpp"
#include "restream/reassembly.hpp"
#include "restream/tuple.hpp"

namespace restream {

enum class FlowState { SynSeen, Established };

// Per-direction connection state. Entries on one slot form a singly linked
// chain in insertion order.
struct FlowEntry {
  FourTuple tuple;
  FlowState state = FlowState::SynSeen;
  uint64_t last_activity_us = 0;
  StreamWindow window;
  std::unique_ptr<FlowEntry> next;
};

struct TableStats {
  uint64_t slots_used = 0;
  uint64_t max_chain = 0;
  double mean_chain = 0.0;  // over non-empty chains
  uint64_t count = 0;
};

// N power-of-two slots of chained FlowEntries keyed by the directed 4-tuple
// under the configured strategy. The slot only narrows the search; identity
// is always the full tuple comparison. Single logical writer: the packet path
// and the reaper must not mutate the table concurrently.
class ConnectionTable {
 public:
  explicit ConnectionTable(const HashConfig& cfg);

  FlowEntry* lookup(const FourTuple& t);
  const FlowEntry* lookup(const FourTuple& t) const;

  // Fresh SynSeen entry appended at the chain tail; nullptr if the tuple is
  // already present.
  FlowEntry* insert(const FourTuple& t, uint64_t now_us);

  bool remove(const FourTuple& t);

  // Removes exactly the entries idle strictly longer than `timeout_us` and
  // returns their tuples. Entries with last activity in the future are kept.
  std::vector<FourTuple> reap(uint64_t now_us, uint64_t timeout_us);

  TableStats stats() const;
  uint64_t size() const { return count_; }
  uint32_t slot_of(const FourTuple& t) const { return hasher_.slot(t); }
  const HashConfig& config() const { return hasher_.config(); }

  template <typename F>
  void for_each(F&& fn) const {
    for (const auto& head : slots_)
      for (const FlowEntry* e = head.get(); e != nullptr; e = e->next.get()) fn(*e);
  }

 private:
  TupleHasher hasher_;
  std::vector<std::unique_ptr<FlowEntry>> slots_;
  uint64_t count_ = 0;
};

}  // namespace restream
