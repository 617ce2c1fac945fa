#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "restream/bench.hpp"
#include "restream/engine.hpp"
#include "restream/traffic.hpp"

namespace restream {

inline constexpr int kReportSchemaVersion = 1;

struct RunTotals {
  uint64_t packets = 0;
  uint64_t passed = 0;
  uint64_t passed_with_alert = 0;
  uint64_t dropped = 0;
  uint64_t alerts_stage1 = 0;
  uint64_t alerts_stage2 = 0;
  uint64_t flows_created = 0;
  uint64_t flows_reset = 0;
  uint64_t flows_reaped = 0;
  uint64_t strict_syn_drops = 0;
  uint64_t non_tcp_passthrough = 0;
};

struct RunReport {
  RunTotals totals;
  TableStats table;
  std::vector<Alert> alerts;
};

// Feeds every frame through the engine, driving the idle reaper with packet
// timestamps as the clock (virtual time; no real waiting).
RunReport replay(Engine& engine, const std::vector<RawFrame>& frames);

// Which strategies a bench report covers.
enum class StrategySelection { Both, SumModOnly, CryptoOnly };

struct BenchMeta {
  TrafficProfile profile;
  uint64_t key_seed = 0;
  std::array<uint8_t, 16> key{};
  StrategySelection selection = StrategySelection::Both;
};

struct RunMeta {
  Mode mode = Mode::Ids;
  HashStrategy strategy = HashStrategy::CryptoKeyed;
  uint32_t table_size = 0;
  uint64_t timeout_secs = 0;
  bool strict_syn = true;
  uint64_t key_seed = 0;
  std::array<uint8_t, 16> key{};
  std::string rules_path;
  std::string pcap_path;                    // empty when traffic was generated
  std::optional<TrafficProfile> profile;    // set when traffic was generated
};

// Deterministic JSON with a fixed field order, so identical inputs produce
// byte-identical reports.
std::string bench_report_json(const BenchReport& report, const BenchMeta& meta);
std::string run_report_json(const RunReport& report, const RunMeta& meta);

}  // namespace restream
