#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <vector>

namespace restream {

// A malicious segment is at most kMaxSegmentBytes and so spans at most
// kWindowPackets MSS-sized packets. The newest packet is scanned together
// with at most kMaxStoredPackets stored copies.
inline constexpr size_t kMaxSegmentBytes = 16384;
inline constexpr size_t kMssBytes = 1460;
inline constexpr size_t kWindowPackets = (kMaxSegmentBytes + kMssBytes - 1) / kMssBytes;
inline constexpr size_t kMaxStoredPackets = kWindowPackets - 1;

static_assert(kWindowPackets == 12);
static_assert(kMaxStoredPackets == 11);

struct StoredPacket {
  uint32_t seq = 0;
  std::vector<uint8_t> payload;
  uint64_t timestamp_us = 0;
};

// FIFO of stored packet copies plus the incrementally maintained
// concatenation of their payloads. Invariant: cache() equals the payloads of
// packets() joined in queue order. Packets are kept in arrival order;
// sequence numbers are stored but do not reorder anything.
class StreamWindow {
 public:
  // Stored payloads in queue order followed by `incoming`. Pure: the window
  // is unchanged no matter how often this is called.
  std::vector<uint8_t> assemble(std::span<const uint8_t> incoming) const;

  // Append at the tail; if the window already holds kMaxStoredPackets, the
  // head is evicted first. The cache drops the evicted payload from its front
  // and gains the new payload at its back.
  void commit(StoredPacket packet);

  size_t size() const { return packets_.size(); }
  const std::deque<StoredPacket>& packets() const { return packets_; }
  const std::vector<uint8_t>& cache() const { return cache_; }

 private:
  std::deque<StoredPacket> packets_;
  std::vector<uint8_t> cache_;
};

}  // namespace restream
