#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xosim/rational.hpp"
#include "xosim/sketch.hpp"
#include "xosim/valuation.hpp"
#include "xosim/welfare.hpp"

namespace xosim {

struct TranscriptMessage {
  int sender = 0;  // player index; -1 for the auctioneer
  std::string kind;
  long long bits = 0;
};

struct Transcript {
  std::vector<std::vector<TranscriptMessage>> rounds;
  std::map<std::string, std::string> metadata;

  int round_count() const { return static_cast<int>(rounds.size()); }
  long long total_bits() const {
    long long b = 0;
    for (const auto& r : rounds)
      for (const auto& msg : r) b += msg.bits;
    return b;
  }
};

/// Decision problem parameters: answer yes when SW* >= X is certain, no when
/// SW* < alpha * X is certain.
struct DecisionSpec {
  Rat x;
  Rat alpha;

  void validate() const;
};

enum class ProtocolMode { kAllocation, kDecision };

struct ProtocolOutcome {
  std::optional<Allocation> allocation;  // allocation problems
  std::optional<bool> answer;            // decision problems
  double welfare = 0;           // welfare of `allocation`, recomputed from the valuations
  double expected_welfare = 0;  // exact average over the protocol's internal coin
  Rat expected_welfare_exact;   // valid when `exact`
  bool exact = false;
  Transcript transcript;
};

/// Knobs shared by the protocol runners.
struct ProtocolConfig {
  uint64_t seed = 0;             // drives the realized coin of randomized protocols
  int value_bits = 32;           // encoding width B for non-binary clause entries
  long long sketch_budget = 200'000;  // sketch_exact multiset budget before falling back
};

// Wrap-ups (reported messages are plain clause lists).

/// Alice receives the support of the coin-indexed clause, Bob the rest.
Allocation wrapup_alice_only(const std::vector<Clause>& reported, int coin);

struct BestKnownResult {
  Allocation allocation{0, 2};
  double value = 0;
  int i = 0, j = 0;  // maximizing pair, lowest lexicographic on ties
};

/// Per-item-max allocation of the clause pair maximizing SW*.
BestKnownResult wrapup_best_known(const std::vector<Clause>& alice,
                                  const std::vector<Clause>& bob);

/// Yes iff the best pair's SW* >= alpha * X (exact when clauses are integral).
bool wrapup_best_known_decision(const std::vector<Clause>& alice, const std::vector<Clause>& bob,
                                const DecisionSpec& spec);

// Protocols. Numbering follows the simultaneous/sequential family:
//  1: randomized warmup, 2 BXOS players, largest clause + best own pair,
//     Alice-only wrap-up, expected welfare >= (2/3) SW*.
//  2: deterministic warmup, 2 XOS players, both report triples, best-known
//     wrap-up, welfare >= (3/5) SW*; decision threshold (3/5) X.
//  3: (k,1/2)-sketch, random clause, Alice-only; >= (3/4 - 1/k) SW* expected.
//  4: sequential n BXOS players, each sketches the remaining items;
//     >= (1/2 - 1/k) SW* expected.
//  5: both send (k,1/3)-sketches, best-known; >= (23/32 - 1/k) SW*.
//  6: two rounds: Alice's (k,1/2)-sketch, then Bob replies with the exact
//     best split against it; >= (3/4 - 1/k) SW*, deterministic.

ProtocolOutcome run_protocol1(const Valuation& v1, const Valuation& v2,
                              const ProtocolConfig& cfg = {});

ProtocolOutcome run_protocol2(const Valuation& v1, const Valuation& v2, ProtocolMode mode,
                              const std::optional<DecisionSpec>& spec = std::nullopt,
                              const ProtocolConfig& cfg = {});

ProtocolOutcome run_protocol3(const Valuation& v1, const Valuation& v2, int k,
                              const ProtocolConfig& cfg = {});

enum class Protocol4Eval { kExact, kSampled };

ProtocolOutcome run_protocol4(const std::vector<Valuation>& vals, int k,
                              Protocol4Eval eval = Protocol4Eval::kExact,
                              const ProtocolConfig& cfg = {},
                              long long max_paths = 1'000'000);

ProtocolOutcome run_protocol5(const Valuation& v1, const Valuation& v2, int k, ProtocolMode mode,
                              const std::optional<DecisionSpec>& spec = std::nullopt,
                              const ProtocolConfig& cfg = {});

ProtocolOutcome run_protocol6(const Valuation& v1, const Valuation& v2, int k, ProtocolMode mode,
                              const std::optional<DecisionSpec>& spec = std::nullopt,
                              const ProtocolConfig& cfg = {});

/// Zero-communication baseline: the grand bundle to a uniformly random
/// player; expected welfare >= SW*/2.
ProtocolOutcome baseline_grand_bundle(const Valuation& v1, const Valuation& v2,
                                      const ProtocolConfig& cfg = {});

/// The proven approximation guarantee for a protocol id ("1".."6", "baseline").
Rat protocol_bound(const std::string& protocol, int k);

}  // namespace xosim
