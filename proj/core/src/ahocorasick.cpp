#include "restream/ahocorasick.hpp"

#include <queue>

namespace restream {

void AhoCorasick::add_pattern(std::span<const uint8_t> pattern, uint32_t pattern_id) {
  assert(!built_);
  assert(!pattern.empty());
  int32_t node = 0;
  for (uint8_t c : pattern) {
    int32_t next = nodes_[static_cast<size_t>(node)].next[c];
    if (next < 0) {
      next = static_cast<int32_t>(nodes_.size());
      nodes_.emplace_back();
      nodes_[static_cast<size_t>(node)].next[c] = next;
    }
    node = next;
  }
  nodes_[static_cast<size_t>(node)].out.push_back(pattern_id);
}

void AhoCorasick::build() {
  assert(!built_);
  std::queue<int32_t> bfs;
  for (int c = 0; c < 256; ++c) {
    int32_t& child = nodes_[0].next[c];
    if (child < 0) {
      child = 0;
    } else {
      nodes_[static_cast<size_t>(child)].fail = 0;
      bfs.push(child);
    }
  }
  while (!bfs.empty()) {
    const int32_t u = bfs.front();
    bfs.pop();
    Node& un = nodes_[static_cast<size_t>(u)];
    // The fail node is shallower, so its outputs are already merged.
    const auto& fail_out = nodes_[static_cast<size_t>(un.fail)].out;
    un.out.insert(un.out.end(), fail_out.begin(), fail_out.end());
    for (int c = 0; c < 256; ++c) {
      const int32_t v = un.next[c];
      const int32_t via_fail = nodes_[static_cast<size_t>(un.fail)].next[c];
      if (v < 0) {
        un.next[c] = via_fail;
      } else {
        nodes_[static_cast<size_t>(v)].fail = via_fail;
        bfs.push(v);
      }
    }
  }
  built_ = true;
}

}  // namespace restream
