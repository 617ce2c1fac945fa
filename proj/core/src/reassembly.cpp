#include "restream/reassembly.hpp"

namespace restream {

std::vector<uint8_t> StreamWindow::assemble(std::span<const uint8_t> incoming) const {
  // cache_ already holds the stored payloads joined in order.
  std::vector<uint8_t> out;
  out.reserve(cache_.size() + incoming.size());
  out.insert(out.end(), cache_.begin(), cache_.end());
  out.insert(out.end(), incoming.begin(), incoming.end());
  return out;
}

void StreamWindow::commit(StoredPacket packet) {
  if (packets_.size() == kMaxStoredPackets) {
    const size_t evicted = packets_.front().payload.size();
    cache_.erase(cache_.begin(), cache_.begin() + static_cast<long>(evicted));
    packets_.pop_front();
  }
  cache_.insert(cache_.end(), packet.payload.begin(), packet.payload.end());
  packets_.push_back(std::move(packet));
}

}  // namespace restream
