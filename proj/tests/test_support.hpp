// Shared fixtures: an independent Ethernet/IPv4/TCP frame builder and a
// naive substring matcher. Both are deliberately written from the wire
// formats, not from the library code they are used to check.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "restream/rng.hpp"
#include "restream/signatures.hpp"
#include "restream/tuple.hpp"

namespace testutil {

struct FrameSpec {
  uint32_t src_ip = 0x01020304;  // 1.2.3.4
  uint32_t dst_ip = 0x05060708;  // 5.6.7.8
  uint16_t src_port = 40000;
  uint16_t dst_port = 80;
  uint32_t seq = 0;
  uint8_t flags = 0x02;  // SYN
  std::vector<uint8_t> payload;

  // shape knobs
  size_t ip_option_words = 0;   // IHL words beyond 5, filled with NOPs
  size_t tcp_option_words = 0;  // data-offset words beyond 5, filled with NOPs
  size_t trailer_bytes = 0;     // Ethernet padding past the IPv4 total length
  bool vlan = false;            // insert an 802.1Q tag
  uint16_t frag_field = 0;      // raw IPv4 flags + fragment offset
  uint8_t protocol = 6;
  uint8_t version = 4;
};

std::vector<uint8_t> build_frame_bytes(const FrameSpec& spec);

// Per-signature first-occurrence substring scan; the oracle match_buffer must
// agree with.
std::vector<restream::MatchResult> naive_match(std::span<const uint8_t> buffer,
                                               const restream::SignatureSet& sigs,
                                               restream::Stage stage);

inline bool same_matches(const std::vector<restream::MatchResult>& a,
                         const std::vector<restream::MatchResult>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].signature_id != b[i].signature_id || a[i].offset != b[i].offset ||
        a[i].stage != b[i].stage)
      return false;
  return true;
}

inline restream::FourTuple random_tuple(restream::SplitMix64& rng) {
  return {rng.next_u32(), rng.next_u32(), rng.next_u16(), rng.next_u16()};
}

inline std::vector<uint8_t> random_bytes(restream::SplitMix64& rng, size_t n) {
  std::vector<uint8_t> out(n);
  rng.fill(out);
  return out;
}

}  // namespace testutil
