#pragma once

#include <string>
#include <vector>

#include "xosim/protocols.hpp"

namespace xosim {

/// One battery row. Doubles are formatted deterministically (integers print
/// as integers, otherwise %.12g), so identical runs produce byte-identical
/// CSV. Wall-clock timing deliberately lives outside these rows; see the
/// summary writer.
struct ResultRow {
  std::string instance_id;
  uint64_t seed = 0;
  std::string protocol;  // "1".."6", "baseline", "mechanism", "oracle"
  std::string mode;      // "alloc", "decision", ""
  int k = 0;
  int n = 0;
  int m = 0;
  double x = -1;          // decision threshold, -1 = n/a
  int answer = -1;        // 1 yes / 0 no / -1 n/a
  double oracle = -1;
  double achieved = -1;   // expected welfare for randomized protocols
  double ratio = -1;
  double bound = -1;
  int bound_satisfied = -1;  // -1 = n/a
  long long bits = 0;
  int rounds = 0;
};

std::string csv_header();
std::string to_csv(const ResultRow& row);
void write_csv(const std::vector<ResultRow>& rows, const std::string& path);

/// Deterministic number formatting shared by all writers.
std::string fmt_number(double v);

struct RunSummary {
  long long rows = 0;
  long long violations = 0;
  double min_ratio = -1;
  double mean_ratio = -1;
  double wall_seconds = -1;  // emitted only when include_timing
};

RunSummary summarize(const std::vector<ResultRow>& rows);
std::string summary_to_json(const RunSummary& summary, bool include_timing);

/// Full protocol outcome (allocation or answer, welfare figures, transcript
/// with per-message bit accounting) as a JSON object.
std::string outcome_to_json(const ProtocolOutcome& outcome, const std::string& instance_id);

}  // namespace xosim
