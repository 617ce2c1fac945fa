#include "restream/flow_table.hpp"

namespace restream {

ConnectionTable::ConnectionTable(const HashConfig& cfg) : hasher_(cfg), slots_(cfg.table_size) {}

FlowEntry* ConnectionTable::lookup(const FourTuple& t) {
  for (FlowEntry* e = slots_[hasher_.slot(t)].get(); e != nullptr; e = e->next.get())
    if (e->tuple == t) return e;
  return nullptr;
}

const FlowEntry* ConnectionTable::lookup(const FourTuple& t) const {
  return const_cast<ConnectionTable*>(this)->lookup(t);
}

FlowEntry* ConnectionTable::insert(const FourTuple& t, uint64_t now_us) {
  std::unique_ptr<FlowEntry>* link = &slots_[hasher_.slot(t)];
  while (*link) {
    if ((*link)->tuple == t) return nullptr;
    link = &(*link)->next;
  }
  auto entry = std::make_unique<FlowEntry>();
  entry->tuple = t;
  entry->state = FlowState::SynSeen;
  entry->last_activity_us = now_us;
  *link = std::move(entry);
  ++count_;
  return link->get();
}

bool ConnectionTable::remove(const FourTuple& t) {
  std::unique_ptr<FlowEntry>* link = &slots_[hasher_.slot(t)];
  while (*link) {
    if ((*link)->tuple == t) {
      std::unique_ptr<FlowEntry> dead = std::move(*link);
      *link = std::move(dead->next);
      --count_;
      return true;
    }
    link = &(*link)->next;
  }
  return false;
}

std::vector<FourTuple> ConnectionTable::reap(uint64_t now_us, uint64_t timeout_us) {
  std::vector<FourTuple> removed;
  for (auto& head : slots_) {
    std::unique_ptr<FlowEntry>* link = &head;
    while (*link) {
      const uint64_t last = (*link)->last_activity_us;
      const uint64_t idle = now_us > last ? now_us - last : 0;
      if (idle > timeout_us) {
        removed.push_back((*link)->tuple);
        std::unique_ptr<FlowEntry> dead = std::move(*link);
        *link = std::move(dead->next);
        --count_;
      } else {
        link = &(*link)->next;
      }
    }
  }
  return removed;
}

TableStats ConnectionTable::stats() const {
  TableStats s;
  s.count = count_;
  for (const auto& head : slots_) {
    uint64_t chain = 0;
    for (const FlowEntry* e = head.get(); e != nullptr; e = e->next.get()) ++chain;
    if (chain == 0) continue;
    ++s.slots_used;
    s.max_chain = std::max(s.max_chain, chain);
  }
  s.mean_chain = s.slots_used == 0 ? 0.0
                                   : static_cast<double>(count_) / static_cast<double>(s.slots_used);
  return s;
}

}  // namespace restream
