#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "restream/packet.hpp"
#include "restream/tuple.hpp"

namespace restream {

// Tuple populations for benchmarking and replay. `uniform` draws everything
// at random; `enterprise` models the skew of a real site (one server, a /24
// client pool, a handful of service ports, sequential ephemeral ports);
// `constant_sum` keeps src_ip+dst_ip+src_port+dst_port identical across
// connections, the sum-mod worst case.
enum class ProfileKind { Uniform, Enterprise, ConstantSum };

const char* to_string(ProfileKind k);
std::optional<ProfileKind> profile_from_name(const std::string& name);

struct TrafficProfile {
  ProfileKind kind = ProfileKind::Uniform;
  uint32_t connections = 1000;
  uint32_t min_packets = 1;  // data packets per connection, SYN not counted
  uint32_t max_packets = 8;
  uint32_t min_payload = 16;  // bytes per data packet
  uint32_t max_payload = 512;
  uint64_t seed = 1;
};

// One directed client-to-server tuple per connection. The same profile and
// seed always produce the same tuples, and gen_traffic uses exactly these.
std::vector<FourTuple> gen_tuples(const TrafficProfile& profile);

// Well-formed Ethernet/IPv4/TCP frames: per connection a SYN, then in-order
// data packets. Byte-identical for identical profile + seed.
std::vector<RawFrame> gen_traffic(const TrafficProfile& profile);

// Single frame with correct lengths and checksums.
RawFrame build_frame(const FourTuple& tuple, uint32_t seq, uint32_t ack, uint8_t flags,
                     std::span<const uint8_t> payload, uint64_t timestamp_us, uint16_t ip_id);

}  // namespace restream
