#pragma once

#include <cstdint>
#include <vector>

#include "restream/flow_table.hpp"
#include "restream/packet.hpp"
#include "restream/signatures.hpp"

namespace restream {

enum class Mode { Ids, Ips };

inline constexpr uint64_t kDefaultTimeoutUs = 30ull * 60 * 1000 * 1000;  // 30 minutes

struct EngineConfig {
  Mode mode = Mode::Ids;
  HashConfig hash;
  uint64_t timeout_us = kDefaultTimeoutUs;
  bool strict_syn = true;
  SignatureSet signatures;
};

enum class Decision { Pass, Drop, PassWithAlert };

struct Alert {
  uint32_t signature_id = 0;
  Stage stage = Stage::Stage1;
  FourTuple tuple;
  uint64_t timestamp_us = 0;
};

enum class EventKind { FlowCreated, FlowReset, FlowReaped, NonTcpPassthrough, StrictSynDrop };

struct Event {
  EventKind kind;
  FourTuple tuple;  // zero for NonTcpPassthrough
};

struct Verdict {
  Decision decision = Decision::Pass;
  std::vector<Alert> alerts;
  std::vector<Event> events;
};

struct EngineStats {
  TableStats table;
  uint64_t packets_processed = 0;
  uint64_t alerts_stage1 = 0;
  uint64_t alerts_stage2 = 0;
  uint64_t drops = 0;
  uint64_t reaped = 0;
};

// The per-packet pipeline: decode, stage-1 DPI on the packet payload,
// connection management (SYN-first rule), stage-2 DPI over the assembled
// window, then verdict. A stage-2 match resets the connection: both directed
// entries leave the table and the matched packet is never committed. process
// and tick mutate shared state and must not run concurrently.
class Engine {
 public:
  explicit Engine(EngineConfig cfg);

  Verdict process(const RawFrame& frame);

  // Reaps flows idle longer than the configured timeout, one FlowReaped event
  // per removed flow.
  std::vector<Event> tick(uint64_t now_us);

  EngineStats snapshot() const;

  const ConnectionTable& table() const { return table_; }
  const EngineConfig& config() const { return cfg_; }

 private:
  EngineConfig cfg_;
  ConnectionTable table_;
  EngineStats counters_;
};

const char* to_string(Decision d);
const char* to_string(EventKind k);
const char* to_string(Mode m);

}  // namespace restream
