#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "restream/tuple.hpp"

namespace restream {

// TCP flag bits as encoded in the header. Only the five tracked flags are
// kept on a decoded record; URG/ECE/CWR are dropped.
namespace tcp_flags {
inline constexpr uint8_t kFin = 0x01;
inline constexpr uint8_t kSyn = 0x02;
inline constexpr uint8_t kRst = 0x04;
inline constexpr uint8_t kPsh = 0x08;
inline constexpr uint8_t kAck = 0x10;
inline constexpr uint8_t kMask = kFin | kSyn | kRst | kPsh | kAck;
}  // namespace tcp_flags

// A link-layer frame as captured or generated. Timestamps are microseconds
// since epoch and are not assumed monotonic.
struct RawFrame {
  std::vector<uint8_t> bytes;
  uint64_t timestamp_us = 0;
};

struct PacketRecord {
  FourTuple tuple;
  uint32_t seq = 0;
  uint8_t flags = 0;  // tcp_flags bits
  std::vector<uint8_t> payload;
  uint64_t timestamp_us = 0;

  bool has_flag(uint8_t f) const { return (flags & f) != 0; }
};

enum class DecodeError {
  NotIPv4,       // ethertype != 0x0800 (VLAN-tagged frames included)
  NotTCP,        // IPv4 protocol != 6
  Truncated,     // a header or a declared length exceeds the frame
  FragmentedIP,  // MF set or fragment offset != 0; passed through unscanned
};

const char* to_string(DecodeError e);

using DecodeResult = std::variant<PacketRecord, DecodeError>;

// Ethernet II / IPv4 / TCP decoder. IPv4 options are skipped via IHL and TCP
// options via the data offset; the payload ends at the IPv4 total length, so
// Ethernet trailer padding is ignored. Checksums are not verified. Total over
// arbitrary byte sequences: every input yields one record or one error.
DecodeResult decode(const RawFrame& frame);

}  // namespace restream
