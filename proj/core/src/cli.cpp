#include "restream/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "restream/pcap.hpp"
#include "restream/report.hpp"

namespace restream {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

struct ProfileFlags {
  std::string name = "uniform";
  TrafficProfile profile;

  void attach(CLI::App* cmd, bool require_name) {
    auto* opt = cmd->add_option("--profile", name, "traffic profile")
                    ->check(CLI::IsMember({"uniform", "enterprise", "constant_sum"}));
    if (require_name) opt->required();
    cmd->add_option("--connections", profile.connections, "number of connections")
        ->capture_default_str();
    cmd->add_option("--packets-min", profile.min_packets, "min data packets per connection")
        ->capture_default_str();
    cmd->add_option("--packets-max", profile.max_packets, "max data packets per connection")
        ->capture_default_str();
    cmd->add_option("--payload-min", profile.min_payload, "min payload bytes per data packet")
        ->capture_default_str();
    cmd->add_option("--payload-max", profile.max_payload, "max payload bytes per data packet")
        ->capture_default_str();
    cmd->add_option("--seed", profile.seed, "traffic generator seed")->capture_default_str();
  }

  TrafficProfile resolve() {
    profile.kind = *profile_from_name(name);
    if (profile.min_packets > profile.max_packets || profile.min_payload > profile.max_payload)
      throw CLI::ValidationError("--packets/--payload bounds must satisfy min <= max");
    return profile;
  }
};

int do_bench(uint32_t table_size, const std::string& strategy, ProfileFlags& flags,
             uint64_t key_seed, const std::string& out_path) {
  const TrafficProfile profile = flags.resolve();
  const auto key = key_from_seed(key_seed);
  const BenchReport report = hash_bench(gen_tuples(profile), table_size, key);

  BenchMeta meta;
  meta.profile = profile;
  meta.key_seed = key_seed;
  meta.key = key;
  meta.selection = strategy == "sum_mod"        ? StrategySelection::SumModOnly
                   : strategy == "crypto_keyed" ? StrategySelection::CryptoOnly
                                                : StrategySelection::Both;
  emit(bench_report_json(report, meta), out_path);
  return 0;
}

int do_run(const std::string& pcap_path, ProfileFlags& flags, bool have_profile,
           const std::string& rules_path, const std::string& mode_name,
           const std::string& strategy_name, uint32_t table_size, uint64_t timeout_secs,
           bool strict_syn, uint64_t key_seed, const std::string& out_path) {
  RunMeta meta;
  std::vector<RawFrame> frames;
  if (!pcap_path.empty()) {
    frames = read_pcap(pcap_path);
    meta.pcap_path = pcap_path;
  } else {
    const TrafficProfile profile = flags.resolve();
    frames = gen_traffic(profile);
    meta.profile = profile;
  }
  (void)have_profile;

  EngineConfig cfg;
  cfg.mode = mode_name == "ips" ? Mode::Ips : Mode::Ids;
  cfg.hash.table_size = table_size;
  cfg.hash.key = key_from_seed(key_seed);
  cfg.hash.strategy = *strategy_from_name(strategy_name);
  cfg.timeout_us = timeout_secs * 1000000;
  cfg.strict_syn = strict_syn;
  cfg.signatures = SignatureSet::parse(read_file(rules_path));

  meta.mode = cfg.mode;
  meta.strategy = cfg.hash.strategy;
  meta.table_size = table_size;
  meta.timeout_secs = timeout_secs;
  meta.strict_syn = strict_syn;
  meta.key_seed = key_seed;
  meta.key = cfg.hash.key;
  meta.rules_path = rules_path;

  Engine engine(std::move(cfg));
  const auto t0 = std::chrono::steady_clock::now();
  const RunReport report = replay(engine, frames);
  const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - t0;

  emit(run_report_json(report, meta), out_path);
  if (!out_path.empty()) {
    // Wall-clock throughput is informational and deliberately kept out of the
    // report file, which must be byte-identical across reruns.
    const double pps =
        wall.count() > 0 ? static_cast<double>(report.totals.packets) / wall.count() : 0.0;
    std::cout << "processed " << report.totals.packets << " packets ("
              << static_cast<uint64_t>(pps) << " pkt/s wall): " << report.totals.passed
              << " passed, " << report.totals.passed_with_alert << " passed with alert, "
              << report.totals.dropped << " dropped; alerts s1="
              << report.totals.alerts_stage1 << " s2=" << report.totals.alerts_stage2
              << "; report written to " << out_path << "\n";
  }
  return 0;
}

int do_gen(ProfileFlags& flags, const std::string& out_path) {
  const TrafficProfile profile = flags.resolve();
  const std::vector<RawFrame> frames = gen_traffic(profile);
  write_pcap(out_path, frames);
  std::cout << "wrote " << frames.size() << " frames to " << out_path << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"TCP stream-reassembly IDS/IPS engine and connection-table hash benchmark"};
  app.require_subcommand(1);

  // bench
  auto* bench = app.add_subcommand("bench", "hash a tuple population, report occupancy stats");
  uint32_t bench_table_size = 1024;
  std::string bench_strategy = "both";
  uint64_t bench_key_seed = 0;
  std::string bench_out;
  ProfileFlags bench_flags;
  bench_flags.profile.connections = 65536;
  bench->add_option("--table-size", bench_table_size, "slot count, power of two")
      ->capture_default_str();
  bench->add_option("--strategy", bench_strategy, "which strategies to report")
      ->check(CLI::IsMember({"both", "sum_mod", "crypto_keyed"}))
      ->capture_default_str();
  bench->add_option("--key-seed", bench_key_seed, "seed for the 128-bit table key")
      ->capture_default_str();
  bench->add_option("--out", bench_out, "write the JSON report here (default: stdout)");
  bench_flags.attach(bench, false);

  // run
  auto* run = app.add_subcommand("run", "replay traffic through the engine");
  std::string run_pcap, run_rules, run_out;
  std::string run_mode = "ids", run_strategy = "crypto_keyed";
  uint32_t run_table_size = 4096;
  uint64_t run_timeout_secs = 1800;
  uint64_t run_key_seed = 0;
  bool run_strict_syn = true;
  ProfileFlags run_flags;
  auto* pcap_opt = run->add_option("--pcap", run_pcap, "replay this classic pcap file");
  run->add_option("--rules", run_rules, "signature rules file")->required();
  run->add_option("--mode", run_mode, "ids: alert and pass; ips: drop on match")
      ->check(CLI::IsMember({"ids", "ips"}))
      ->capture_default_str();
  run->add_option("--strategy", run_strategy, "connection-table hash strategy")
      ->check(CLI::IsMember({"sum_mod", "crypto_keyed"}))
      ->capture_default_str();
  run->add_option("--table-size", run_table_size, "slot count, power of two")
      ->capture_default_str();
  run->add_option("--timeout-secs", run_timeout_secs, "idle flow timeout")
      ->capture_default_str();
  run->add_flag("--strict-syn,!--no-strict-syn", run_strict_syn,
                "require new flows to open with SYN (default on)");
  run->add_option("--key-seed", run_key_seed, "seed for the 128-bit table key")
      ->capture_default_str();
  run->add_option("--out", run_out, "write the JSON report here (default: stdout)");
  run_flags.attach(run, false);
  pcap_opt->excludes(run->get_option("--profile"));

  // gen
  auto* gen = app.add_subcommand("gen", "write a generated traffic profile to a pcap file");
  std::string gen_out;
  ProfileFlags gen_flags;
  gen->add_option("--out", gen_out, "output pcap path")->required();
  gen_flags.attach(gen, true);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("restream");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << "\n";
    return 1;
  }

  try {
    if (bench->parsed()) {
      if (!is_power_of_two(bench_table_size) || bench_table_size < 2) {
        std::cerr << "error: --table-size must be a power of two >= 2\n";
        return 1;
      }
      return do_bench(bench_table_size, bench_strategy, bench_flags, bench_key_seed, bench_out);
    }
    if (run->parsed()) {
      if (run_pcap.empty() && run->get_option("--profile")->count() == 0) {
        std::cerr << "error: run needs --pcap FILE or --profile NAME\n\n" << run->help() << "\n";
        return 1;
      }
      if (!is_power_of_two(run_table_size) || run_table_size < 2) {
        std::cerr << "error: --table-size must be a power of two >= 2\n";
        return 1;
      }
      return do_run(run_pcap, run_flags, run->get_option("--profile")->count() > 0, run_rules,
                    run_mode, run_strategy, run_table_size, run_timeout_secs, run_strict_syn,
                    run_key_seed, run_out);
    }
    if (gen->parsed()) return do_gen(gen_flags, gen_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const RuleParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PcapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace restream
