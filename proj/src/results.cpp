#include "xosim/results.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace xosim {

std::string fmt_number(double v) {
  if (std::floor(v) == v && std::abs(v) < 1e15)
    return std::to_string(static_cast<long long>(v));
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_header() {
  return "instance,seed,protocol,mode,k,n,m,X,answer,oracle,achieved,ratio,bound,"
         "bound_satisfied,bits,rounds";
}

std::string to_csv(const ResultRow& r) {
  auto opt_num = [](double v) { return v < 0 ? std::string() : fmt_number(v); };
  auto opt_int = [](int v) { return v < 0 ? std::string() : std::to_string(v); };
  std::string s;
  s += r.instance_id + ",";
  s += std::to_string(r.seed) + ",";
  s += r.protocol + ",";
  s += r.mode + ",";
  s += (r.k > 0 ? std::to_string(r.k) : "") + std::string(",");
  s += std::to_string(r.n) + ",";
  s += std::to_string(r.m) + ",";
  s += opt_num(r.x) + ",";
  s += opt_int(r.answer) + ",";
  s += opt_num(r.oracle) + ",";
  s += opt_num(r.achieved) + ",";
  s += opt_num(r.ratio) + ",";
  s += opt_num(r.bound) + ",";
  s += opt_int(r.bound_satisfied) + ",";
  s += std::to_string(r.bits) + ",";
  s += std::to_string(r.rounds);
  return s;
}

void write_csv(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write CSV: " + path);
  out << csv_header() << "\n";
  for (const auto& r : rows) out << to_csv(r) << "\n";
}

RunSummary summarize(const std::vector<ResultRow>& rows) {
  RunSummary s;
  double sum = 0;
  long long counted = 0;
  for (const auto& r : rows) {
    ++s.rows;
    if (r.bound_satisfied == 0) ++s.violations;
    if (r.ratio >= 0) {
      if (counted == 0 || r.ratio < s.min_ratio) s.min_ratio = r.ratio;
      sum += r.ratio;
      ++counted;
    }
  }
  if (counted > 0) s.mean_ratio = sum / static_cast<double>(counted);
  return s;
}

std::string summary_to_json(const RunSummary& summary, bool include_timing) {
  nlohmann::json j;
  j["rows"] = summary.rows;
  j["violations"] = summary.violations;
  if (summary.min_ratio >= 0) {
    j["min_ratio"] = summary.min_ratio;
    j["mean_ratio"] = summary.mean_ratio;
  }
  if (include_timing && summary.wall_seconds >= 0) j["wall_seconds"] = summary.wall_seconds;
  return j.dump(2) + "\n";
}

std::string outcome_to_json(const ProtocolOutcome& outcome, const std::string& instance_id) {
  nlohmann::json j;
  j["instance"] = instance_id;
  if (outcome.allocation) {
    nlohmann::json owners = nlohmann::json::array();
    for (int i = 0; i < outcome.allocation->m(); ++i) owners.push_back(outcome.allocation->owner(i));
    j["allocation"] = owners;
    j["welfare"] = outcome.welfare;
  }
  if (outcome.answer) j["answer"] = *outcome.answer ? "yes" : "no";
  j["expected_welfare"] = outcome.expected_welfare;
  if (outcome.exact) j["expected_welfare_exact"] = outcome.expected_welfare_exact.str();
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& round : outcome.transcript.rounds) {
    nlohmann::json msgs = nlohmann::json::array();
    for (const auto& msg : round)
      msgs.push_back({{"sender", msg.sender}, {"kind", msg.kind}, {"bits", msg.bits}});
    rounds.push_back(msgs);
  }
  j["transcript"] = {{"rounds", rounds},
                     {"round_count", outcome.transcript.round_count()},
                     {"total_bits", outcome.transcript.total_bits()},
                     {"metadata", outcome.transcript.metadata}};
  return j.dump(2) + "\n";
}

}  // namespace xosim
