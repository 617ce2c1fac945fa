#include "restream/engine.hpp"

namespace restream {

const char* to_string(Decision d) {
  switch (d) {
    case Decision::Pass: return "pass";
    case Decision::Drop: return "drop";
    case Decision::PassWithAlert: return "pass_with_alert";
  }
  return "?";
}

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::FlowCreated: return "flow_created";
    case EventKind::FlowReset: return "flow_reset";
    case EventKind::FlowReaped: return "flow_reaped";
    case EventKind::NonTcpPassthrough: return "non_tcp_passthrough";
    case EventKind::StrictSynDrop: return "strict_syn_drop";
  }
  return "?";
}

const char* to_string(Mode m) { return m == Mode::Ids ? "ids" : "ips"; }

Engine::Engine(EngineConfig cfg) : cfg_(std::move(cfg)), table_(cfg_.hash) {}

Verdict Engine::process(const RawFrame& frame) {
  ++counters_.packets_processed;
  Verdict v;

  DecodeResult decoded = decode(frame);
  if (std::holds_alternative<DecodeError>(decoded)) {
    // Out-of-scope traffic passes unscanned.
    v.events.push_back({EventKind::NonTcpPassthrough, FourTuple{}});
    return v;
  }
  PacketRecord pkt = std::move(std::get<PacketRecord>(decoded));

  // Stage 1: packet-wise matching.
  bool drop_now = false;
  for (const MatchResult& m : match_buffer(pkt.payload, cfg_.signatures, Stage::Stage1)) {
    v.alerts.push_back({m.signature_id, Stage::Stage1, pkt.tuple, pkt.timestamp_us});
    ++counters_.alerts_stage1;
    if (cfg_.mode == Mode::Ips && cfg_.signatures.by_id(m.signature_id)->action == SigAction::Drop)
      drop_now = true;
  }
  if (drop_now) {
    v.decision = Decision::Drop;
    ++counters_.drops;
    return v;
  }

  // Connection management. New flows must open with SYN; a SYN-ACK is
  // accepted when the opposite direction is already tracked.
  FlowEntry* entry = table_.lookup(pkt.tuple);
  if (entry == nullptr) {
    const bool syn = pkt.has_flag(tcp_flags::kSyn);
    const bool ack = pkt.has_flag(tcp_flags::kAck);
    bool create = false;
    if (syn && !ack)
      create = true;
    else if (syn && ack && table_.lookup(reverse(pkt.tuple)) != nullptr)
      create = true;
    else if (!cfg_.strict_syn)
      create = true;
    if (!create) {
      v.events.push_back({EventKind::StrictSynDrop, pkt.tuple});
      v.decision = Decision::Drop;
      ++counters_.drops;
      return v;
    }
    entry = table_.insert(pkt.tuple, pkt.timestamp_us);
    v.events.push_back({EventKind::FlowCreated, pkt.tuple});
  } else {
    entry->state = FlowState::Established;
  }

  // Stage 2: the stored window plus this packet, matched as one segment.
  const std::vector<uint8_t> assembled = entry->window.assemble(pkt.payload);
  const auto matches = match_buffer(assembled, cfg_.signatures, Stage::Stage2);
  if (!matches.empty()) {
    for (const MatchResult& m : matches) {
      v.alerts.push_back({m.signature_id, Stage::Stage2, pkt.tuple, pkt.timestamp_us});
      ++counters_.alerts_stage2;
    }
    // Reset: both directions leave the table; the matched packet is not
    // committed.
    v.events.push_back({EventKind::FlowReset, pkt.tuple});
    table_.remove(pkt.tuple);
    if (table_.remove(reverse(pkt.tuple)))
      v.events.push_back({EventKind::FlowReset, reverse(pkt.tuple)});
    if (cfg_.mode == Mode::Ips) {
      v.decision = Decision::Drop;
      ++counters_.drops;
    } else {
      v.decision = Decision::PassWithAlert;
    }
    return v;
  }

  // Clean packet: store a copy (pure ACKs carry no signature bytes and are
  // not stored) and let it go.
  entry->last_activity_us = pkt.timestamp_us;
  if (!pkt.payload.empty())
    entry->window.commit({pkt.seq, std::move(pkt.payload), pkt.timestamp_us});
  v.decision = v.alerts.empty() ? Decision::Pass : Decision::PassWithAlert;
  return v;
}

std::vector<Event> Engine::tick(uint64_t now_us) {
  std::vector<Event> events;
  for (const FourTuple& t : table_.reap(now_us, cfg_.timeout_us)) {
    events.push_back({EventKind::FlowReaped, t});
    ++counters_.reaped;
  }
  return events;
}

EngineStats Engine::snapshot() const {
  EngineStats s = counters_;
  s.table = table_.stats();
  return s;
}

}  // namespace restream
