#include "test_support.hpp"

namespace testutil {

std::vector<uint8_t> build_frame_bytes(const FrameSpec& s) {
  std::vector<uint8_t> b;
  const auto u8 = [&](uint8_t v) { b.push_back(v); };
  const auto u16 = [&](uint16_t v) {
    u8(static_cast<uint8_t>(v >> 8));
    u8(static_cast<uint8_t>(v));
  };
  const auto u32 = [&](uint32_t v) {
    u16(static_cast<uint16_t>(v >> 16));
    u16(static_cast<uint16_t>(v));
  };

  for (int i = 0; i < 6; ++i) u8(0xAA);  // dst MAC
  for (int i = 0; i < 6; ++i) u8(0xBB);  // src MAC
  if (s.vlan) {
    u16(0x8100);
    u16(0x0001);
  }
  u16(0x0800);

  const size_t ihl = 5 + s.ip_option_words;
  const size_t doff = 5 + s.tcp_option_words;
  const size_t total = ihl * 4 + doff * 4 + s.payload.size();
  u8(static_cast<uint8_t>(s.version << 4 | ihl));
  u8(0);                                  // DSCP/ECN
  u16(static_cast<uint16_t>(total));
  u16(0x1234);                            // identification
  u16(s.frag_field);
  u8(64);                                 // TTL
  u8(s.protocol);
  u16(0);                                 // checksum, not verified by decode
  u32(s.src_ip);
  u32(s.dst_ip);
  for (size_t i = 0; i < s.ip_option_words * 4; ++i) u8(0x01);  // NOP options

  u16(s.src_port);
  u16(s.dst_port);
  u32(s.seq);
  u32(0);  // ack
  u8(static_cast<uint8_t>(doff << 4));
  u8(s.flags);
  u16(5840);  // window
  u16(0);     // checksum
  u16(0);     // urgent pointer
  for (size_t i = 0; i < s.tcp_option_words * 4; ++i) u8(0x01);

  b.insert(b.end(), s.payload.begin(), s.payload.end());
  for (size_t i = 0; i < s.trailer_bytes; ++i) u8(0x00);
  return b;
}

std::vector<restream::MatchResult> naive_match(std::span<const uint8_t> buffer,
                                               const restream::SignatureSet& sigs,
                                               restream::Stage stage) {
  const auto fold = [](uint8_t c) {
    return c >= 'A' && c <= 'Z' ? static_cast<uint8_t>(c + 32) : c;
  };
  std::vector<restream::MatchResult> out;
  for (const restream::Signature& sig : sigs.signatures()) {
    if (!restream::stage_applies(sig.stages, stage)) continue;
    if (sig.pattern.empty() || sig.pattern.size() > buffer.size()) continue;
    for (size_t off = 0; off + sig.pattern.size() <= buffer.size(); ++off) {
      bool hit = true;
      for (size_t k = 0; k < sig.pattern.size() && hit; ++k) {
        const uint8_t a = buffer[off + k];
        const uint8_t p = sig.pattern[k];
        hit = sig.nocase ? fold(a) == fold(p) : a == p;
      }
      if (hit) {
        out.push_back({sig.id, off, stage});
        break;
      }
    }
  }
  return out;
}

}  // namespace testutil
