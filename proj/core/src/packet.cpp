#include "restream/packet.hpp"

#include "restream/bytes.hpp"

namespace restream {

namespace {
constexpr size_t kEthHeader = 14;
constexpr uint16_t kEtherTypeIPv4 = 0x0800;
}  // namespace

const char* to_string(DecodeError e) {
  switch (e) {
    case DecodeError::NotIPv4: return "NotIPv4";
    case DecodeError::NotTCP: return "NotTCP";
    case DecodeError::Truncated: return "Truncated";
    case DecodeError::FragmentedIP: return "FragmentedIP";
  }
  return "?";
}

DecodeResult decode(const RawFrame& frame) {
  const std::span<const uint8_t> b(frame.bytes);
  if (b.size() < kEthHeader) return DecodeError::Truncated;
  if (read_be16(b, 12) != kEtherTypeIPv4) return DecodeError::NotIPv4;

  const size_t ip = kEthHeader;
  if (b.size() < ip + 20) return DecodeError::Truncated;
  const uint8_t vihl = b[ip];
  if (vihl >> 4 != 4) return DecodeError::NotIPv4;
  const size_t ihl = (vihl & 0x0F) * 4;
  if (ihl < 20) return DecodeError::Truncated;
  const uint16_t total_len = read_be16(b, ip + 2);
  if (total_len < ihl || ip + total_len > b.size()) return DecodeError::Truncated;

  if (b[ip + 9] != 6) return DecodeError::NotTCP;
  const uint16_t frag = read_be16(b, ip + 6);
  if ((frag & 0x2000) != 0 || (frag & 0x1FFF) != 0) return DecodeError::FragmentedIP;

  const size_t tcp = ip + ihl;
  const size_t segment_len = total_len - ihl;
  if (segment_len < 20) return DecodeError::Truncated;
  const size_t data_off = (b[tcp + 12] >> 4) * 4;
  if (data_off < 20 || data_off > segment_len) return DecodeError::Truncated;

  PacketRecord r;
  r.tuple.src_ip = read_be32(b, ip + 12);
  r.tuple.dst_ip = read_be32(b, ip + 16);
  r.tuple.src_port = read_be16(b, tcp);
  r.tuple.dst_port = read_be16(b, tcp + 2);
  r.seq = read_be32(b, tcp + 4);
  r.flags = b[tcp + 13] & tcp_flags::kMask;
  r.payload.assign(frame.bytes.begin() + static_cast<long>(tcp + data_off),
                   frame.bytes.begin() + static_cast<long>(ip + total_len));
  r.timestamp_us = frame.timestamp_us;
  return r;
}

}  // namespace restream
