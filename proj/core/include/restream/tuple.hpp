#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace restream {

// Directed connection identity. Addresses are numeric IPv4 values, so
// "1.2.3.4" is 0x01020304; the two directions of one conversation are two
// distinct tuples.
struct FourTuple {
  uint32_t src_ip = 0;
  uint32_t dst_ip = 0;
  uint16_t src_port = 0;
  uint16_t dst_port = 0;

  friend bool operator==(const FourTuple&, const FourTuple&) = default;
};

// The opposite direction of the same conversation.
constexpr FourTuple reverse(const FourTuple& t) {
  return {t.dst_ip, t.src_ip, t.dst_port, t.src_port};
}

// src_ip | dst_ip | src_port | dst_port concatenated big-endian, src_ip in
// the most significant position. Injective: the fields occupy disjoint byte
// ranges.
std::array<uint8_t, 12> encode96(const FourTuple& t);

std::string ip_to_string(uint32_t ip);
std::string to_string(const FourTuple& t);

}  // namespace restream
