// Command-line front end: instance generation and I/O, protocol/mechanism
// batteries with oracle cross-checks, ratio sweeps, and construction
// verifiers. All randomized paths are seeded; identical invocations produce
// byte-identical output files (timing is opt-in and lives in the summary).

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xosim/generators.hpp"
#include "xosim/hardness.hpp"
#include "xosim/instance_io.hpp"
#include "xosim/mechanism.hpp"
#include "xosim/parallel.hpp"
#include "xosim/protocols.hpp"
#include "xosim/results.hpp"
#include "xosim/welfare.hpp"

using namespace xosim;

namespace {

struct NamedInstance {
  std::string id;
  uint64_t seed = 0;
  std::vector<Valuation> players;
};

// Generator spec: "random:bxos:m=8,t=6,count=200" or
// "random:xos:m=8,t=6,count=200,vmax=3"; optional n=<players>.
struct GeneratorSpec {
  std::string family;  // "bxos" | "xos"
  int m = 8, t = 0, count = 100, n = 2, vmax = 3;
};

GeneratorSpec parse_generator_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3 || parts[0] != "random")
    throw std::invalid_argument("instance spec must look like random:bxos:m=8,t=6,count=200");
  GeneratorSpec g;
  g.family = parts[1];
  if (g.family != "bxos" && g.family != "xos")
    throw std::invalid_argument("instance spec family must be bxos or xos");
  std::stringstream kv(parts[2]);
  while (std::getline(kv, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad key=value in instance spec: " + item);
    std::string key = item.substr(0, eq);
    int value = std::stoi(item.substr(eq + 1));
    if (key == "m") g.m = value;
    else if (key == "t") g.t = value;
    else if (key == "count") g.count = value;
    else if (key == "n") g.n = value;
    else if (key == "vmax") g.vmax = value;
    else throw std::invalid_argument("unknown instance spec key: " + key);
  }
  return g;
}

std::vector<NamedInstance> materialize(const GeneratorSpec& g, uint64_t seed) {
  std::vector<NamedInstance> out;
  for (int i = 0; i < g.count; ++i) {
    NamedInstance ni;
    ni.seed = Rng::derive(seed, static_cast<uint64_t>(i));
    Rng rng(ni.seed);
    if (g.family == "bxos") {
      BxosProfile prof;
      prof.m = g.m;
      if (g.t > 0) {
        prof.t_max = g.t;
        prof.t_min = std::min(prof.t_min, g.t);
      }
      ni.players = random_bxos_instance(prof, g.n, rng);
    } else {
      XosProfile prof;
      prof.m = g.m;
      if (g.t > 0) {
        prof.t_max = g.t;
        prof.t_min = std::min(prof.t_min, g.t);
      }
      prof.v_max = g.vmax;
      ni.players = random_xos_instance(prof, g.n, rng);
    }
    ni.id = "random-" + g.family + "-" + std::to_string(i);
    out.push_back(std::move(ni));
  }
  return out;
}

std::vector<NamedInstance> collect_instances(const std::string& spec,
                                             const std::vector<std::string>& files,
                                             uint64_t seed) {
  std::vector<NamedInstance> out;
  if (!spec.empty()) out = materialize(parse_generator_spec(spec), seed);
  for (const auto& path : files) {
    NamedInstance ni;
    ni.id = std::filesystem::path(path).stem().string();
    ni.seed = seed;
    ni.players = load_instance(path).players;
    out.push_back(std::move(ni));
  }
  if (out.empty()) throw std::invalid_argument("no instances: pass --instances or --instance-file");
  return out;
}

double oracle_value(const std::vector<Valuation>& players) {
  if (players.size() == 2) return sw_star_xos_pair(players[0], players[1]).value;
  return sw_star_n(players).value;
}

bool all_integral(const std::vector<Valuation>& players) {
  for (const auto& v : players)
    if (!v.integral()) return false;
  return true;
}

// ratio >= bound, exactly when both sides are exact, else 1e-9 relative.
int bound_check(const ProtocolOutcome& out, double achieved, double oracle, const Rat& bound,
                bool integral) {
  if (oracle <= 0) return 1;
  if (out.exact && integral) {
    return out.expected_welfare_exact >= bound * Rat(static_cast<long long>(oracle)) ? 1 : 0;
  }
  return achieved / oracle >= bound.to_double() * (1 - 1e-9) ? 1 : 0;
}

struct RunOptions {
  std::string protocol;  // "1".."6", "baseline", "mechanism"
  std::string mode = "alloc";
  int k = 4;
  std::string x_str;
  std::string alpha_str;  // decision alpha override
  uint64_t seed = 1;
  std::string instances_spec;
  std::vector<std::string> instance_files;
  std::string out_csv;
  std::string summary_path;
  std::string outcome_dir;  // per-instance outcome JSONs with transcripts
  bool timing = false;
  bool oracle_only = false;
  int value_bits = 32;
};

ProtocolOutcome dispatch_protocol(const RunOptions& opt, const NamedInstance& ni,
                                  const std::optional<DecisionSpec>& spec) {
  ProtocolConfig cfg;
  cfg.seed = ni.seed;
  cfg.value_bits = opt.value_bits;
  ProtocolMode mode = opt.mode == "decision" ? ProtocolMode::kDecision : ProtocolMode::kAllocation;
  const auto& players = ni.players;
  auto need2 = [&]() {
    if (players.size() != 2)
      throw std::invalid_argument("protocol " + opt.protocol + " needs exactly 2 players");
  };
  if (opt.protocol == "1") { need2(); return run_protocol1(players[0], players[1], cfg); }
  if (opt.protocol == "2") { need2(); return run_protocol2(players[0], players[1], mode, spec, cfg); }
  if (opt.protocol == "3") { need2(); return run_protocol3(players[0], players[1], opt.k, cfg); }
  if (opt.protocol == "4") return run_protocol4(players, opt.k, Protocol4Eval::kExact, cfg);
  if (opt.protocol == "5") { need2(); return run_protocol5(players[0], players[1], opt.k, mode, spec, cfg); }
  if (opt.protocol == "6") { need2(); return run_protocol6(players[0], players[1], opt.k, mode, spec, cfg); }
  if (opt.protocol == "baseline") { need2(); return baseline_grand_bundle(players[0], players[1], cfg); }
  throw std::invalid_argument("unknown protocol: " + opt.protocol);
}

bool protocol_has_k(const std::string& p) { return p == "3" || p == "4" || p == "5" || p == "6"; }

Rat decision_alpha(const RunOptions& opt) {
  if (!opt.alpha_str.empty()) return Rat::parse(opt.alpha_str);
  if (opt.protocol == "2") return Rat(3, 5);
  if (opt.protocol == "5") return Rat(23, 32) - Rat(1, opt.k);
  if (opt.protocol == "6") return Rat(3, 4) - Rat(1, opt.k);
  throw std::invalid_argument("protocol " + opt.protocol + " has no decision mode");
}

int write_outputs(const std::vector<ResultRow>& rows, const RunOptions& opt, double wall_seconds) {
  if (!opt.out_csv.empty())
    write_csv(rows, opt.out_csv);
  else
    for (const auto& r : rows) std::cout << to_csv(r) << "\n";
  RunSummary summary = summarize(rows);
  summary.wall_seconds = wall_seconds;
  if (!opt.summary_path.empty()) {
    std::ofstream out(opt.summary_path);
    out << summary_to_json(summary, opt.timing);
  }
  std::cerr << "rows=" << summary.rows << " violations=" << summary.violations << "\n";
  return summary.violations == 0 ? 0 : 2;
}

int run_mechanism_battery(const RunOptions& opt) {
  auto instances = collect_instances(opt.instances_spec, opt.instance_files, opt.seed);
  // Mechanism rows have their own per-player schema.
  std::ostringstream csv;
  csv << "instance,seed,player,k,n,m,bundle_size,value,payment,utility\n";
  bool ok = true;
  for (const auto& ni : instances) {
    std::vector<Strategy> strategies(ni.players.size(), truthful_sketch_strategy());
    MechanismOutcome mech = run_mechanism(ni.players, strategies, opt.k, ni.seed);
    for (int l = 0; l < static_cast<int>(ni.players.size()); ++l) {
      ItemSet bundle = mech.allocation.bundle(l);
      long long value = ni.players[l].eval_int(bundle);
      csv << ni.id << "," << ni.seed << "," << l << "," << opt.k << "," << ni.players.size() << ","
          << ni.players[0].m() << "," << bundle.count() << "," << value << ","
          << mech.payments[l].str() << "," << mech.utilities[l].str() << "\n";
      if (mech.utilities[l] < Rat(0)) ok = false;  // truthful players never lose money
    }
  }
  if (!opt.out_csv.empty()) {
    std::ofstream out(opt.out_csv);
    out << csv.str();
  } else {
    std::cout << csv.str();
  }
  return ok ? 0 : 2;
}

int cmd_run(const RunOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  if (opt.protocol == "mechanism") return run_mechanism_battery(opt);

  auto instances = collect_instances(opt.instances_spec, opt.instance_files, opt.seed);
  std::vector<ResultRow> rows(instances.size());
  std::vector<std::string> outcome_jsons(instances.size());
  std::vector<std::string> errors(instances.size());

  auto process = [&](long long idx) {
    const auto& ni = instances[idx];
    try {
      ResultRow row;
      row.instance_id = ni.id;
      row.seed = ni.seed;
      row.n = static_cast<int>(ni.players.size());
      row.m = ni.players[0].m();
      double oracle = oracle_value(ni.players);
      row.oracle = oracle;
      if (opt.oracle_only) {
        row.protocol = "oracle";
        rows[idx] = row;
        return;
      }
      row.protocol = opt.protocol;
      row.mode = opt.mode;
      if (protocol_has_k(opt.protocol)) row.k = opt.k;

      std::optional<DecisionSpec> spec;
      if (opt.mode == "decision") {
        if (opt.x_str.empty()) throw std::invalid_argument("decision mode needs --X");
        spec = DecisionSpec{Rat::parse(opt.x_str), decision_alpha(opt)};
        row.x = spec->x.to_double();
      }
      ProtocolOutcome out = dispatch_protocol(opt, ni, spec);
      row.bits = out.transcript.total_bits();
      row.rounds = out.transcript.round_count();
      if (opt.mode == "decision") {
        row.answer = *out.answer ? 1 : 0;
        // Soundness contract against the oracle.
        bool violated = (oracle >= spec->x.to_double() && !*out.answer) ||
                        (oracle < (spec->alpha * spec->x).to_double() && *out.answer);
        row.bound_satisfied = violated ? 0 : 1;
      } else {
        double achieved = out.expected_welfare;
        row.achieved = achieved;
        row.ratio = oracle > 0 ? achieved / oracle : 1.0;
        Rat bound = protocol_bound(opt.protocol, opt.k);
        row.bound = bound.to_double();
        row.bound_satisfied = bound_check(out, achieved, oracle, bound, all_integral(ni.players));
      }
      if (!opt.outcome_dir.empty()) outcome_jsons[idx] = outcome_to_json(out, ni.id);
      rows[idx] = row;
    } catch (const std::exception& e) {
      errors[idx] = e.what();
    }
  };
  // Instance-level parallelism; rows land in deterministic instance order.
  parallel_for(static_cast<long long>(instances.size()), default_thread_count(), process);
  for (size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty())
      throw std::runtime_error("instance " + instances[i].id + ": " + errors[i]);

  if (!opt.outcome_dir.empty()) {
    std::filesystem::create_directories(opt.outcome_dir);
    for (size_t i = 0; i < instances.size(); ++i) {
      std::ofstream out(opt.outcome_dir + "/" + instances[i].id + ".json");
      out << outcome_jsons[i];
    }
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return write_outputs(rows, opt, wall);
}

struct SweepOptions {
  RunOptions base;
  std::vector<int> k_list;
};

int cmd_sweep(const SweepOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  auto instances = collect_instances(opt.base.instances_spec, opt.base.instance_files, opt.base.seed);
  std::vector<ResultRow> rows;
  std::map<int, std::pair<double, double>> per_k;  // k -> (min, sum)
  std::map<int, long long> per_k_count;
  for (int k : opt.k_list) {
    RunOptions ro = opt.base;
    ro.k = k;
    for (const auto& ni : instances) {
      ResultRow row;
      row.instance_id = ni.id;
      row.seed = ni.seed;
      row.n = static_cast<int>(ni.players.size());
      row.m = ni.players[0].m();
      row.protocol = ro.protocol;
      row.mode = "alloc";
      row.k = k;
      double oracle = oracle_value(ni.players);
      row.oracle = oracle;
      ProtocolOutcome out = dispatch_protocol(ro, ni, std::nullopt);
      row.achieved = out.expected_welfare;
      row.ratio = oracle > 0 ? row.achieved / oracle : 1.0;
      Rat bound = protocol_bound(ro.protocol, k);
      row.bound = bound.to_double();
      row.bound_satisfied = bound_check(out, row.achieved, oracle, bound, all_integral(ni.players));
      row.bits = out.transcript.total_bits();
      row.rounds = out.transcript.round_count();
      rows.push_back(row);
      auto& mm = per_k.try_emplace(k, std::make_pair(1e300, 0.0)).first->second;
      mm.first = std::min(mm.first, row.ratio);
      mm.second += row.ratio;
      ++per_k_count[k];
    }
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int rc = write_outputs(rows, opt.base, wall);
  // Per-k summary lines on stdout when writing to a file.
  if (!opt.base.out_csv.empty()) {
    std::cout << "k,min_ratio,mean_ratio\n";
    for (const auto& [k, mm] : per_k)
      std::cout << k << "," << fmt_number(mm.first) << ","
                << fmt_number(mm.second / static_cast<double>(per_k_count[k])) << "\n";
  }
  return rc;
}

Instance wrap_instance(std::vector<Valuation> players, Provenance prov) {
  Instance inst;
  inst.players = std::move(players);
  inst.provenance = std::move(prov);
  return inst;
}

int cmd_gen_tight(const std::string& eps_str, int m, uint64_t seed, int retries,
               const std::string& out, bool reveal) {
  TightParams params{Rat::parse(eps_str), m};
  TightInstance inst = gen_tight(params, seed, retries);
  Provenance prov;
  prov.construction = "tight";
  prov.seed = seed;
  prov.params_json = "{\"eps\": \"" + params.epsilon.str() + "\", \"m\": " + std::to_string(m) +
                     ", \"t\": " + std::to_string(params.t()) +
                     ", \"verified\": " + (inst.verified ? "true" : "false") +
                     ", \"retries_used\": " + std::to_string(inst.retries_used) + "}";
  prov.hidden_json = "{\"planted_clause\": 0}";
  save_instance(wrap_instance({inst.v1, inst.v2}, std::move(prov)), out, reveal);
  std::cerr << (inst.verified ? "verified" : "UNVERIFIED (flagged)") << " after "
            << inst.retries_used << " attempt(s)\n";
  return inst.verified ? 0 : 3;
}

int cmd_gen_g(int m, int l, uint64_t seed, int force_m, const std::string& out, bool reveal) {
  HiddenBitInstance inst = gen_hidden_bit(m, l, seed, force_m);
  Provenance prov;
  prov.construction = "hidden-bit";
  prov.seed = seed;
  prov.params_json = "{\"m\": " + std::to_string(m) + ", \"l\": " + std::to_string(l) + "}";
  prov.hidden_json = "{\"M\": " + std::to_string(inst.hidden_bit) +
                     ", \"J1\": " + std::to_string(inst.j1) +
                     ", \"J2\": " + std::to_string(inst.j2) + "}";
  save_instance(wrap_instance({inst.v1, inst.v2}, std::move(prov)), out, reveal);
  return 0;
}

int cmd_gen_random(std::string spec, int m, int t, int count, uint64_t seed,
                   const std::string& out_dir) {
  if (spec.empty()) {
    spec = "random:bxos:m=" + std::to_string(m) + ",count=" + std::to_string(count);
    if (t > 0) spec += ",t=" + std::to_string(t);
  }
  auto instances = materialize(parse_generator_spec(spec), seed);
  std::filesystem::create_directories(out_dir);
  for (const auto& ni : instances) {
    Provenance prov;
    prov.construction = "random";
    prov.seed = ni.seed;
    save_instance(wrap_instance(ni.players, std::move(prov)),
                  out_dir + "/" + ni.id + ".json");
  }
  std::cerr << "wrote " << instances.size() << " instance(s) to " << out_dir << "\n";
  return 0;
}

int cmd_verify_exchange(const std::string& file, int player, int k, const std::string& alpha_str,
                        const std::string& method) {
  Instance inst = load_instance(file);
  if (player < 0 || player >= inst.n()) throw std::invalid_argument("--player out of range");
  const Valuation& v = inst.players[player];
  SketchParams params{k, Rat::parse(alpha_str)};
  Sketch sk = method == "exact"   ? sketch_exact(v, params)
              : method == "local" ? sketch_local_search(v, params)
                                  : compute_sketch(v, params);
  ExchangeReport rep = v.binary() ? verify_exchange_bound_binary(sk, v)
                                  : verify_exchange_bound_general(sk, v);
  std::cout << "sketch=[";
  for (size_t i = 0; i < sk.clause_indices.size(); ++i)
    std::cout << (i ? "," : "") << sk.clause_indices[i];
  std::cout << "] objective=" << (sk.exact_arith ? sk.objective.str() : fmt_number(sk.objective_f))
            << " pass=" << (rep.pass ? "yes" : "no") << " worst_clause=" << rep.worst_clause
            << " worst_slack="
            << (rep.exact ? rep.worst_slack.str() : fmt_number(rep.worst_slack_f)) << "\n";
  return rep.pass ? 0 : 2;
}

int cmd_verify_tight(const std::string& eps_str, int m, uint64_t seed, int retries, int k,
                  const std::string& alpha_str) {
  TightParams params{Rat::parse(eps_str), m};
  TightInstance inst = gen_tight(params, seed, retries);
  if (!inst.verified) {
    std::cout << "instance unverified after " << inst.retries_used
              << " attempt(s); first failing condition: " << inst.conditions.first_failure << "\n";
    return 3;
  }
  TightExclusionReport rep = verify_tight_exclusion(inst, k, Rat::parse(alpha_str));
  std::cout << "verified instance (attempt " << inst.retries_used << "); sw*=" << rep.sw_star
            << " max_nonplanted_pair=" << rep.max_nonplanted_pair
            << " exclusion=" << (rep.sketch_excludes_planted[0] ? "yes" : "no") << "/"
            << (rep.sketch_excludes_planted[1] ? "yes" : "no")
            << " swap_improves=" << (rep.swap_strictly_improves[0] ? "yes" : "no") << "/"
            << (rep.swap_strictly_improves[1] ? "yes" : "no")
            << " pair_bound=" << (rep.pair_bound_ok ? "ok" : "VIOLATED")
            << " pass=" << (rep.pass ? "yes" : "no") << "\n";
  return rep.pass ? 0 : 2;
}

int cmd_verify_g_stats(int m, int l, long long trials, double alpha, uint64_t seed) {
  HiddenBitStats st = hidden_bit_stats(m, l, trials, alpha, seed);
  std::cout << "both_planted_always_m/2=" << (st.both_planted_always_half ? "yes" : "no") << "\n"
            << "one_planted mean=" << fmt_number(st.one_planted_mean)
            << " expected=" << fmt_number(st.one_planted_expected)
            << " band=" << fmt_number(st.one_planted_band)
            << " ok=" << (st.one_planted_ok ? "yes" : "no") << "\n"
            << "neither mean=" << fmt_number(st.neither_mean)
            << " expected=" << fmt_number(st.neither_expected)
            << " band=" << fmt_number(st.neither_band) << " ok=" << (st.neither_ok ? "yes" : "no")
            << "\n"
            << "Pr[SW*>alpha*m | M=0]=" << fmt_number(st.pr_sw_exceeds_alpha_m0) << "\n"
            << "Pr[SW*=m | M=1]=" << fmt_number(st.pr_sw_equals_m_m1) << "\n";
  bool ok = st.both_planted_always_half && st.one_planted_ok && st.neither_ok &&
            st.pr_sw_equals_m_m1 == 1.0;
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sketch-based simultaneous combinatorial-auction protocols"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "Run a protocol or mechanism over instances");
  run->add_option("--protocol", run_opt.protocol,
                  "1|2|3|4|5|6|baseline|mechanism")->required();
  run->add_option("--mode", run_opt.mode, "alloc|decision")->check(CLI::IsMember({"alloc", "decision"}));
  run->add_option("--k", run_opt.k, "sketch size");
  run->add_option("--X", run_opt.x_str, "decision threshold (exact decimal or fraction)");
  run->add_option("--alpha", run_opt.alpha_str, "decision alpha override");
  run->add_option("--seed", run_opt.seed, "battery seed")->required();
  run->add_option("--instances", run_opt.instances_spec, "random:<family>:k=v,... generator spec");
  run->add_option("--instance-file", run_opt.instance_files, "instance JSON file(s)");
  run->add_option("--out", run_opt.out_csv, "results CSV path (default stdout)");
  run->add_option("--summary", run_opt.summary_path, "summary JSON path");
  run->add_flag("--timing", run_opt.timing, "include wall time in the summary JSON");
  run->add_flag("--oracle-only", run_opt.oracle_only, "emit oracle values only");
  run->add_option("--value-bits", run_opt.value_bits, "encoding width B for non-binary values");
  run->add_option("--outcome-json", run_opt.outcome_dir, "directory for per-instance outcome JSONs");

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand("sweep", "Ratio-vs-k sweep over a fixed battery");
  sweep->add_option("--protocol", sweep_opt.base.protocol, "3|4|5|6|baseline")->required();
  sweep->add_option("--k-list", sweep_opt.k_list, "k values")->required();
  sweep->add_option("--seed", sweep_opt.base.seed)->required();
  sweep->add_option("--instances", sweep_opt.base.instances_spec);
  sweep->add_option("--instance-file", sweep_opt.base.instance_files);
  sweep->add_option("--out", sweep_opt.base.out_csv);
  sweep->add_option("--summary", sweep_opt.base.summary_path);
  sweep->add_flag("--timing", sweep_opt.base.timing);

  CLI::App* oracle = app.add_subcommand("oracle", "Exact SW* per instance");
  RunOptions oracle_opt;
  oracle_opt.oracle_only = true;
  oracle->add_option("--seed", oracle_opt.seed)->required();
  oracle->add_option("--instances", oracle_opt.instances_spec);
  oracle->add_option("--instance-file", oracle_opt.instance_files);
  oracle->add_option("--out", oracle_opt.out_csv);

  CLI::App* gen = app.add_subcommand("gen", "Generate instance files");
  gen->require_subcommand(1);

  std::string tight_eps = "0.1", tight_out = "tight.json";
  int tight_m = 60000, tight_retries = 1000;
  uint64_t tight_seed = 1;
  bool tight_reveal = false;
  CLI::App* gen_tight_cmd = gen->add_subcommand("tight", "Planted tight instance");
  gen_tight_cmd->add_option("--eps", tight_eps);
  gen_tight_cmd->add_option("--m", tight_m);
  gen_tight_cmd->add_option("--seed", tight_seed)->required();
  gen_tight_cmd->add_option("--retries", tight_retries);
  gen_tight_cmd->add_option("--out", tight_out);
  gen_tight_cmd->add_flag("--reveal", tight_reveal);

  int g_m = 108, g_l = 64, g_force = -1;
  uint64_t g_seed = 1;
  std::string g_out = "hidden_bit.json";
  bool g_reveal = false;
  CLI::App* gen_g_cmd = gen->add_subcommand("hidden-bit", "Hidden-bit lower-bound instance");
  gen_g_cmd->add_option("--m", g_m);
  gen_g_cmd->add_option("--l", g_l);
  gen_g_cmd->add_option("--seed", g_seed)->required();
  gen_g_cmd->add_option("--force-m", g_force, "-1 random, 0 or 1 forced");
  gen_g_cmd->add_option("--out", g_out);
  gen_g_cmd->add_flag("--reveal", g_reveal);

  std::string rnd_spec, rnd_dir = "instances";
  int rnd_m = 6, rnd_t = 0, rnd_count = 10;
  uint64_t rnd_seed = 1;
  CLI::App* gen_rnd_cmd = gen->add_subcommand("random", "Random instance battery");
  gen_rnd_cmd->add_option("--spec", rnd_spec, "full generator spec (overrides --m/--t/--count)");
  gen_rnd_cmd->add_option("--m", rnd_m);
  gen_rnd_cmd->add_option("--t", rnd_t);
  gen_rnd_cmd->add_option("--count", rnd_count);
  gen_rnd_cmd->add_option("--seed", rnd_seed)->required();
  gen_rnd_cmd->add_option("--out-dir", rnd_dir);

  CLI::App* verify = app.add_subcommand("verify", "Construction and sketch-property verifiers");
  verify->require_subcommand(1);

  std::string vx_file, vx_alpha = "1/2", vx_method = "auto";
  int vx_player = 0, vx_k = 4;
  CLI::App* vx = verify->add_subcommand("exchange", "Exchange-bound check for a computed sketch");
  vx->add_option("--instance-file", vx_file)->required();
  vx->add_option("--player", vx_player);
  vx->add_option("--k", vx_k);
  vx->add_option("--alpha", vx_alpha);
  vx->add_option("--method", vx_method)->check(CLI::IsMember({"auto", "exact", "local"}));

  std::string vf_eps = "0.1", vf_alpha = "1/2";
  int vf_m = 60000, vf_retries = 1000, vf_k = 8;
  uint64_t vf_seed = 1;
  CLI::App* vf = verify->add_subcommand("tight", "Planted-clause exclusion on a fresh instance");
  vf->add_option("--eps", vf_eps);
  vf->add_option("--m", vf_m);
  vf->add_option("--seed", vf_seed)->required();
  vf->add_option("--retries", vf_retries);
  vf->add_option("--k", vf_k);
  vf->add_option("--alpha", vf_alpha);

  int vg_m = 108, vg_l = 64;
  long long vg_trials = 10000;
  double vg_alpha = 3.0 / 4 - 1.0 / 108;
  uint64_t vg_seed = 1;
  CLI::App* vg = verify->add_subcommand("hidden-stats", "Monte-Carlo welfare statistics");
  vg->add_option("--m", vg_m);
  vg->add_option("--l", vg_l);
  vg->add_option("--trials", vg_trials);
  vg->add_option("--alpha", vg_alpha);
  vg->add_option("--seed", vg_seed)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(run_opt);
    if (*sweep) return cmd_sweep(sweep_opt);
    if (*oracle) return cmd_run(oracle_opt);
    if (*gen_tight_cmd) return cmd_gen_tight(tight_eps, tight_m, tight_seed, tight_retries, tight_out, tight_reveal);
    if (*gen_g_cmd) return cmd_gen_g(g_m, g_l, g_seed, g_force, g_out, g_reveal);
    if (*gen_rnd_cmd) return cmd_gen_random(rnd_spec, rnd_m, rnd_t, rnd_count, rnd_seed, rnd_dir);
    if (*vx) return cmd_verify_exchange(vx_file, vx_player, vx_k, vx_alpha, vx_method);
    if (*vf) return cmd_verify_tight(vf_eps, vf_m, vf_seed, vf_retries, vf_k, vf_alpha);
    if (*vg) return cmd_verify_g_stats(vg_m, vg_l, vg_trials, vg_alpha, vg_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
