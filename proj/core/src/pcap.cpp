#include "restream/pcap.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>

#include "restream/bytes.hpp"

namespace restream {

namespace {

constexpr uint32_t kMagicMicros = 0xA1B2C3D4;
constexpr uint32_t kMagicMicrosSwapped = 0xD4C3B2A1;
constexpr uint32_t kMagicNanos = 0xA1B23C4D;
constexpr uint32_t kMagicNanosSwapped = 0x4D3CB2A1;
constexpr uint32_t kLinkTypeEthernet = 1;

uint32_t read_u32(std::span<const uint8_t> b, size_t off, bool big_endian) {
  return big_endian ? read_be32(b, off) : read_le32(b, off);
}

}  // namespace

std::vector<RawFrame> read_pcap(std::istream& in) {
  std::array<uint8_t, 24> header;
  in.read(reinterpret_cast<char*>(header.data()), header.size());
  if (in.gcount() < 4) throw PcapError(PcapErrorKind::TruncatedRecord, "file shorter than magic");

  bool big_endian = false;
  bool nanos = false;
  switch (read_le32(header, 0)) {
    case kMagicMicros: break;
    case kMagicMicrosSwapped: big_endian = true; break;
    case kMagicNanos: nanos = true; break;
    case kMagicNanosSwapped: big_endian = true; nanos = true; break;
    default: throw PcapError(PcapErrorKind::BadMagic, "not a classic pcap file");
  }
  if (in.gcount() < static_cast<std::streamsize>(header.size()))
    throw PcapError(PcapErrorKind::TruncatedRecord, "truncated global header");

  const uint32_t link_type = read_u32(header, 20, big_endian);
  if (link_type != kLinkTypeEthernet)
    throw PcapError(PcapErrorKind::UnsupportedLinkType,
                    "link type " + std::to_string(link_type) + " (need Ethernet)");

  std::vector<RawFrame> frames;
  std::array<uint8_t, 16> rec;
  while (true) {
    in.read(reinterpret_cast<char*>(rec.data()), rec.size());
    if (in.gcount() == 0) break;
    if (in.gcount() < static_cast<std::streamsize>(rec.size()))
      throw PcapError(PcapErrorKind::TruncatedRecord, "truncated record header");

    const uint32_t ts_sec = read_u32(rec, 0, big_endian);
    const uint32_t ts_frac = read_u32(rec, 4, big_endian);
    const uint32_t incl_len = read_u32(rec, 8, big_endian);

    RawFrame frame;
    frame.timestamp_us =
        static_cast<uint64_t>(ts_sec) * 1000000 + (nanos ? ts_frac / 1000 : ts_frac);
    frame.bytes.resize(incl_len);
    in.read(reinterpret_cast<char*>(frame.bytes.data()), incl_len);
    if (in.gcount() < static_cast<std::streamsize>(incl_len))
      throw PcapError(PcapErrorKind::TruncatedRecord, "truncated packet data");
    frames.push_back(std::move(frame));
  }
  return frames;
}

std::vector<RawFrame> read_pcap(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PcapError(PcapErrorKind::Io, "cannot open " + path);
  return read_pcap(in);
}

void write_pcap(std::ostream& out, const std::vector<RawFrame>& frames) {
  std::array<uint8_t, 24> header{};
  write_le32(header, 0, kMagicMicros);
  write_le16(header, 4, 2);   // version 2.4
  write_le16(header, 6, 4);
  write_le32(header, 16, 65535);  // snaplen
  write_le32(header, 20, kLinkTypeEthernet);
  out.write(reinterpret_cast<const char*>(header.data()), header.size());

  std::array<uint8_t, 16> rec{};
  for (const RawFrame& frame : frames) {
    write_le32(rec, 0, static_cast<uint32_t>(frame.timestamp_us / 1000000));
    write_le32(rec, 4, static_cast<uint32_t>(frame.timestamp_us % 1000000));
    write_le32(rec, 8, static_cast<uint32_t>(frame.bytes.size()));
    write_le32(rec, 12, static_cast<uint32_t>(frame.bytes.size()));
    out.write(reinterpret_cast<const char*>(rec.data()), rec.size());
    out.write(reinterpret_cast<const char*>(frame.bytes.data()),
              static_cast<std::streamsize>(frame.bytes.size()));
  }
}

void write_pcap(const std::string& path, const std::vector<RawFrame>& frames) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PcapError(PcapErrorKind::Io, "cannot open " + path + " for writing");
  write_pcap(out, frames);
  out.flush();
  if (!out) throw PcapError(PcapErrorKind::Io, "write failed for " + path);
}

}  // namespace restream
