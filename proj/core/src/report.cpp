#include "restream/report.hpp"

#include <json.hpp>

namespace restream {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json strategy_json(const StrategyReport& s) {
  return ordered_json{{"slots_used", s.slots_used},
                      {"max_chain", s.max_chain},
                      {"mean_chain", s.mean_chain},
                      {"chi_square", s.chi_square},
                      {"direction_collision_rate", s.direction_collision_rate}};
}

ordered_json profile_json(const TrafficProfile& p) {
  return ordered_json{{"profile", to_string(p.kind)},
                      {"connections", p.connections},
                      {"packets_per_conn", {p.min_packets, p.max_packets}},
                      {"payload_bytes", {p.min_payload, p.max_payload}},
                      {"seed", p.seed}};
}

ordered_json table_json(const TableStats& t) {
  return ordered_json{{"count", t.count},
                      {"slots_used", t.slots_used},
                      {"max_chain", t.max_chain},
                      {"mean_chain", t.mean_chain}};
}

}  // namespace

RunReport replay(Engine& engine, const std::vector<RawFrame>& frames) {
  RunReport r;
  for (const RawFrame& frame : frames) {
    for (const Event& e : engine.tick(frame.timestamp_us))
      if (e.kind == EventKind::FlowReaped) ++r.totals.flows_reaped;

    Verdict v = engine.process(frame);
    ++r.totals.packets;
    switch (v.decision) {
      case Decision::Pass: ++r.totals.passed; break;
      case Decision::PassWithAlert: ++r.totals.passed_with_alert; break;
      case Decision::Drop: ++r.totals.dropped; break;
    }
    for (const Alert& a : v.alerts) {
      (a.stage == Stage::Stage1 ? r.totals.alerts_stage1 : r.totals.alerts_stage2)++;
      r.alerts.push_back(a);
    }
    for (const Event& e : v.events) {
      switch (e.kind) {
        case EventKind::FlowCreated: ++r.totals.flows_created; break;
        case EventKind::FlowReset: ++r.totals.flows_reset; break;
        case EventKind::FlowReaped: ++r.totals.flows_reaped; break;
        case EventKind::StrictSynDrop: ++r.totals.strict_syn_drops; break;
        case EventKind::NonTcpPassthrough: ++r.totals.non_tcp_passthrough; break;
      }
    }
  }
  r.table = engine.snapshot().table;
  return r;
}

std::string bench_report_json(const BenchReport& report, const BenchMeta& meta) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "bench";
  ordered_json params = profile_json(meta.profile);
  params["table_size"] = report.table_size;
  params["tuples"] = report.tuple_count;
  params["key_seed"] = meta.key_seed;
  params["key"] = key_to_hex(meta.key);
  j["parameters"] = std::move(params);

  ordered_json strategies;
  if (meta.selection != StrategySelection::CryptoOnly)
    strategies["sum_mod"] = strategy_json(report.sum_mod);
  if (meta.selection != StrategySelection::SumModOnly)
    strategies["crypto_keyed"] = strategy_json(report.crypto_keyed);
  j["strategies"] = std::move(strategies);
  return j.dump(2) + "\n";
}

std::string run_report_json(const RunReport& report, const RunMeta& meta) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "run";

  ordered_json params;
  params["mode"] = to_string(meta.mode);
  params["strategy"] = to_string(meta.strategy);
  params["table_size"] = meta.table_size;
  params["timeout_secs"] = meta.timeout_secs;
  params["strict_syn"] = meta.strict_syn;
  params["key_seed"] = meta.key_seed;
  params["key"] = key_to_hex(meta.key);
  params["rules"] = meta.rules_path;
  if (!meta.pcap_path.empty())
    params["source"] = ordered_json{{"pcap", meta.pcap_path}};
  else if (meta.profile)
    params["source"] = profile_json(*meta.profile);
  j["parameters"] = std::move(params);

  const RunTotals& t = report.totals;
  j["totals"] = ordered_json{{"packets", t.packets},
                             {"passed", t.passed},
                             {"passed_with_alert", t.passed_with_alert},
                             {"dropped", t.dropped},
                             {"alerts_stage1", t.alerts_stage1},
                             {"alerts_stage2", t.alerts_stage2},
                             {"flows_created", t.flows_created},
                             {"flows_reset", t.flows_reset},
                             {"flows_reaped", t.flows_reaped},
                             {"strict_syn_drops", t.strict_syn_drops},
                             {"non_tcp_passthrough", t.non_tcp_passthrough}};
  j["table"] = table_json(report.table);

  ordered_json alerts = ordered_json::array();
  for (const Alert& a : report.alerts) {
    alerts.push_back(ordered_json{{"signature_id", a.signature_id},
                                  {"stage", a.stage == Stage::Stage1 ? 1 : 2},
                                  {"src", ip_to_string(a.tuple.src_ip) + ':' +
                                              std::to_string(a.tuple.src_port)},
                                  {"dst", ip_to_string(a.tuple.dst_ip) + ':' +
                                              std::to_string(a.tuple.dst_port)},
                                  {"timestamp_us", a.timestamp_us}});
  }
  j["alerts"] = std::move(alerts);
  return j.dump(2) + "\n";
}

}  // namespace restream
