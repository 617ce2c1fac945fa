#include "restream/traffic.hpp"

#include "restream/bytes.hpp"
#include "restream/rng.hpp"

namespace restream {

namespace {

constexpr uint64_t kBaseTimestampUs = 1600000000ull * 1000000;  // 2020-09-13T12:26:40Z
constexpr uint64_t kFrameGapUs = 100;

// enterprise profile constants
constexpr uint32_t kClientNet = 0x0A002A00;   // 10.0.42.0/24
constexpr uint32_t kServerIp = 0xC0000A0A;    // 192.0.10.10
constexpr uint16_t kServicePorts[4] = {80, 443, 25, 53};
constexpr uint16_t kEphemeralBase = 49152;

// constant_sum profile base endpoints; one field steps up while another steps
// down, so the 4-tuple sum never moves.
constexpr uint32_t kConstSumSrcBase = 0x0A000001;  // 10.0.0.1
constexpr uint32_t kConstSumDstBase = 0xC6336401;  // 198.51.100.1

uint16_t ones_complement_sum(std::span<const uint8_t> data, uint32_t acc) {
  for (size_t i = 0; i + 1 < data.size(); i += 2) acc += read_be16(data, i);
  if (data.size() % 2 != 0) acc += static_cast<uint32_t>(data.back()) << 8;
  while (acc >> 16) acc = (acc & 0xFFFF) + (acc >> 16);
  return static_cast<uint16_t>(~acc);
}

}  // namespace

const char* to_string(ProfileKind k) {
  switch (k) {
    case ProfileKind::Uniform: return "uniform";
    case ProfileKind::Enterprise: return "enterprise";
    case ProfileKind::ConstantSum: return "constant_sum";
  }
  return "?";
}

std::optional<ProfileKind> profile_from_name(const std::string& name) {
  if (name == "uniform") return ProfileKind::Uniform;
  if (name == "enterprise") return ProfileKind::Enterprise;
  if (name == "constant_sum") return ProfileKind::ConstantSum;
  return std::nullopt;
}

std::vector<FourTuple> gen_tuples(const TrafficProfile& profile) {
  // Stream split keeps gen_tuples and gen_traffic aligned on the same tuples.
  SplitMix64 master(profile.seed);
  SplitMix64 rng(master.next_u64());

  std::vector<FourTuple> tuples;
  tuples.reserve(profile.connections);
  for (uint32_t i = 0; i < profile.connections; ++i) {
    FourTuple t;
    switch (profile.kind) {
      case ProfileKind::Uniform:
        t.src_ip = rng.next_u32();
        t.dst_ip = rng.next_u32();
        t.src_port = rng.next_u16();
        t.dst_port = rng.next_u16();
        break;
      case ProfileKind::Enterprise:
        t.src_ip = kClientNet | static_cast<uint32_t>(rng.next_range(1, 254));
        t.dst_ip = kServerIp;
        t.src_port = static_cast<uint16_t>(kEphemeralBase + i % 16384);
        t.dst_port = kServicePorts[rng.next_u64() % 4];
        break;
      case ProfileKind::ConstantSum:
        t.src_ip = kConstSumSrcBase + i;
        t.dst_ip = kConstSumDstBase - i;
        t.src_port = 40000;
        t.dst_port = 80;
        break;
    }
    tuples.push_back(t);
  }
  return tuples;
}

RawFrame build_frame(const FourTuple& tuple, uint32_t seq, uint32_t ack, uint8_t flags,
                     std::span<const uint8_t> payload, uint64_t timestamp_us, uint16_t ip_id) {
  const size_t ip_len = 20 + 20 + payload.size();
  RawFrame frame;
  frame.timestamp_us = timestamp_us;
  frame.bytes.resize(14 + ip_len);
  std::span<uint8_t> b(frame.bytes);

  // Ethernet II, locally administered MACs
  const uint8_t dst_mac[6] = {0x02, 0, 0, 0, 0, 0x02};
  const uint8_t src_mac[6] = {0x02, 0, 0, 0, 0, 0x01};
  std::copy(std::begin(dst_mac), std::end(dst_mac), b.begin());
  std::copy(std::begin(src_mac), std::end(src_mac), b.begin() + 6);
  write_be16(b, 12, 0x0800);

  // IPv4
  b[14] = 0x45;  // version 4, IHL 5
  write_be16(b, 16, static_cast<uint16_t>(ip_len));
  write_be16(b, 18, ip_id);
  write_be16(b, 20, 0x4000);  // DF
  b[22] = 64;                 // TTL
  b[23] = 6;                  // TCP
  write_be32(b, 26, tuple.src_ip);
  write_be32(b, 30, tuple.dst_ip);
  write_be16(b, 24, ones_complement_sum(b.subspan(14, 20), 0));

  // TCP
  const size_t tcp = 34;
  write_be16(b, tcp, tuple.src_port);
  write_be16(b, tcp + 2, tuple.dst_port);
  write_be32(b, tcp + 4, seq);
  write_be32(b, tcp + 8, ack);
  b[tcp + 12] = 5 << 4;  // data offset, no options
  b[tcp + 13] = flags;
  write_be16(b, tcp + 14, 65535);  // window
  std::copy(payload.begin(), payload.end(), b.begin() + tcp + 20);

  // checksum over pseudo header + segment
  uint32_t acc = (tuple.src_ip >> 16) + (tuple.src_ip & 0xFFFF);
  acc += (tuple.dst_ip >> 16) + (tuple.dst_ip & 0xFFFF);
  acc += 6;
  acc += static_cast<uint32_t>(20 + payload.size());
  write_be16(b, tcp + 16, ones_complement_sum(b.subspan(tcp), acc));

  return frame;
}

std::vector<RawFrame> gen_traffic(const TrafficProfile& profile) {
  SplitMix64 master(profile.seed);
  (void)master.next_u64();  // the tuple stream, consumed inside gen_tuples
  SplitMix64 body(master.next_u64());

  const std::vector<FourTuple> tuples = gen_tuples(profile);
  std::vector<RawFrame> frames;
  uint64_t ts = kBaseTimestampUs;
  uint16_t ip_id = 1;

  for (const FourTuple& t : tuples) {
    const uint32_t isn = body.next_u32();
    frames.push_back(build_frame(t, isn, 0, tcp_flags::kSyn, {}, ts, ip_id++));
    ts += kFrameGapUs;

    uint32_t seq = isn + 1;  // SYN consumes one sequence number
    const uint64_t data_packets = body.next_range(profile.min_packets, profile.max_packets);
    for (uint64_t p = 0; p < data_packets; ++p) {
      std::vector<uint8_t> payload(body.next_range(profile.min_payload, profile.max_payload));
      body.fill(payload);
      frames.push_back(build_frame(t, seq, 1, tcp_flags::kAck | tcp_flags::kPsh, payload, ts,
                                   ip_id++));
      seq += static_cast<uint32_t>(payload.size());
      ts += kFrameGapUs;
    }
  }
  return frames;
}

}  // namespace restream
