#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace restream {

// Multi-pattern byte matcher (Aho-Corasick with a dense goto table). Add all
// patterns, build once, then scan any number of buffers. Every occurrence of
// every pattern is reported; callers derive start offsets from the pattern
// lengths they own.
class AhoCorasick {
 public:
  AhoCorasick() { nodes_.emplace_back(); }

  void add_pattern(std::span<const uint8_t> pattern, uint32_t pattern_id);

  // Resolves failure transitions into the goto table; no patterns may be
  // added afterwards.
  void build();

  // fn(pattern_id, end_offset) with end_offset one past the occurrence's last
  // byte, in nondecreasing end_offset order.
  template <typename F>
  void scan(std::span<const uint8_t> text, F&& fn) const {
    assert(built_);
    int32_t node = 0;
    for (size_t i = 0; i < text.size(); ++i) {
      node = nodes_[static_cast<size_t>(node)].next[text[i]];
      for (uint32_t id : nodes_[static_cast<size_t>(node)].out) fn(id, i + 1);
    }
  }

  bool empty() const { return nodes_.size() == 1; }

 private:
  struct Node {
    Node() { next.fill(-1); }
    std::array<int32_t, 256> next;
    int32_t fail = 0;
    std::vector<uint32_t> out;
  };

  std::vector<Node> nodes_;
  bool built_ = false;
};

}  // namespace restream
