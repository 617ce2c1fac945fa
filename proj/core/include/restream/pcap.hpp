#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "restream/packet.hpp"

namespace restream {

enum class PcapErrorKind { BadMagic, UnsupportedLinkType, TruncatedRecord, Io };

class PcapError : public std::runtime_error {
 public:
  PcapError(PcapErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  PcapErrorKind kind() const { return kind_; }

 private:
  PcapErrorKind kind_;
};

// Classic pcap only (no pcapng). Readers accept the microsecond magic
// 0xA1B2C3D4 and the nanosecond magic 0xA1B23C4D in either byte order; the
// link type must be Ethernet (1). Timestamps come back as microseconds.
std::vector<RawFrame> read_pcap(std::istream& in);
std::vector<RawFrame> read_pcap(const std::string& path);

// Little-endian classic pcap, microsecond timestamps, Ethernet link type.
void write_pcap(std::ostream& out, const std::vector<RawFrame>& frames);
void write_pcap(const std::string& path, const std::vector<RawFrame>& frames);

}  // namespace restream
