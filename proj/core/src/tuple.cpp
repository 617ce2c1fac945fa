#include "restream/tuple.hpp"

#include "restream/bytes.hpp"

namespace restream {

std::array<uint8_t, 12> encode96(const FourTuple& t) {
  std::array<uint8_t, 12> out{};
  write_be32(out, 0, t.src_ip);
  write_be32(out, 4, t.dst_ip);
  write_be16(out, 8, t.src_port);
  write_be16(out, 10, t.dst_port);
  return out;
}

std::string ip_to_string(uint32_t ip) {
  return std::to_string(ip >> 24) + '.' + std::to_string((ip >> 16) & 0xFF) + '.' +
         std::to_string((ip >> 8) & 0xFF) + '.' + std::to_string(ip & 0xFF);
}

std::string to_string(const FourTuple& t) {
  return ip_to_string(t.src_ip) + ':' + std::to_string(t.src_port) + " -> " +
         ip_to_string(t.dst_ip) + ':' + std::to_string(t.dst_port);
}

}  // namespace restream
