#include "xosim/protocols.hpp"

#include <algorithm>
#include <stdexcept>

#include "xosim/rng.hpp"

namespace xosim {

namespace {

long long clause_bits(const Clause& c, int value_bits) {
  return c.binary() ? c.m() : static_cast<long long>(c.m()) * value_bits;
}

std::vector<Clause> pick_clauses(const Valuation& v, const std::vector<int>& indices) {
  std::vector<Clause> out;
  out.reserve(indices.size());
  for (int j : indices) out.push_back(v.clause(j));
  return out;
}

double recompute_welfare(const std::vector<Valuation>& vals, const Allocation& alloc) {
  double total = 0;
  for (size_t l = 0; l < vals.size(); ++l) total += vals[l].eval(alloc.bundle(static_cast<int>(l)));
  return total;
}

// Indices (b1, b2, b3): b1 the largest clause, (b2, b3) the ordered clause
// pair maximizing SW*; all ties to the lowest index.
std::vector<int> warmup_triple(const Valuation& v) {
  int b1 = 0;
  double best_total = v.clause(0).total();
  for (int j = 1; j < v.num_clauses(); ++j) {
    if (v.clause(j).total() > best_total) { best_total = v.clause(j).total(); b1 = j; }
  }
  int b2 = 0, b3 = 0;
  double best_pair = -1;
  for (int i = 0; i < v.num_clauses(); ++i) {
    for (int j = 0; j < v.num_clauses(); ++j) {
      double val = sw_star_pair_value(v.clause(i), v.clause(j));
      if (val > best_pair) { best_pair = val; b2 = i; b3 = j; }
    }
  }
  return {b1, b2, b3};
}

void require_bxos(const Valuation& v, const char* who) {
  if (!v.binary()) throw std::invalid_argument(std::string(who) + ": valuation must be BXOS");
}

const DecisionSpec& require_spec(const std::optional<DecisionSpec>& spec, const char* who) {
  if (!spec) throw std::invalid_argument(std::string(who) + ": decision mode needs a DecisionSpec");
  spec->validate();
  return *spec;
}

Sketch protocol_sketch(const Valuation& v, int k, const Rat& alpha, const ProtocolConfig& cfg,
                       Transcript& tr, const std::string& key = "sketch_method") {
  Sketch sk = compute_sketch(v, SketchParams{k, alpha}, cfg.sketch_budget);
  tr.metadata[key] = sk.method == Sketch::Method::kEnumeration ? "enumeration" : "local_search";
  return sk;
}

}  // namespace

void DecisionSpec::validate() const {
  if (x <= Rat(0)) throw std::invalid_argument("DecisionSpec: X must be positive");
  if (alpha <= Rat(0) || alpha > Rat(1))
    throw std::invalid_argument("DecisionSpec: alpha must lie in (0, 1]");
}

Allocation wrapup_alice_only(const std::vector<Clause>& reported, int coin) {
  if (coin < 0 || coin >= static_cast<int>(reported.size()))
    throw std::invalid_argument("wrapup_alice_only: coin out of range");
  return Allocation::from_bundle(reported[coin].support());
}

BestKnownResult wrapup_best_known(const std::vector<Clause>& alice,
                                  const std::vector<Clause>& bob) {
  if (alice.empty() || bob.empty())
    throw std::invalid_argument("wrapup_best_known: empty report");
  BestKnownResult best;
  best.value = -1;
  for (int i = 0; i < static_cast<int>(alice.size()); ++i) {
    for (int j = 0; j < static_cast<int>(bob.size()); ++j) {
      double val = sw_star_pair_value(alice[i], bob[j]);
      if (val > best.value) {
        best.value = val;
        best.i = i;
        best.j = j;
      }
    }
  }
  best.allocation = sw_star_additive_pair(alice[best.i], bob[best.j]).allocation;
  return best;
}

bool wrapup_best_known_decision(const std::vector<Clause>& alice, const std::vector<Clause>& bob,
                                const DecisionSpec& spec) {
  spec.validate();
  BestKnownResult best = wrapup_best_known(alice, bob);
  bool integral = true;
  for (const auto& c : alice) integral = integral && c.integral();
  for (const auto& c : bob) integral = integral && c.integral();
  if (integral) return Rat(static_cast<long long>(best.value)) >= spec.alpha * spec.x;
  return best.value >= (spec.alpha * spec.x).to_double();
}

ProtocolOutcome run_protocol1(const Valuation& v1, const Valuation& v2,
                              const ProtocolConfig& cfg) {
  require_bxos(v1, "protocol 1");
  require_bxos(v2, "protocol 1");
  std::vector<int> triple = warmup_triple(v1);
  std::vector<Clause> reported = pick_clauses(v1, triple);

  // The Alice-only wrap-up realizes SW*(b_j, v2) for the drawn clause, so the
  // expectation is the exact mean of the three branch values.
  long long sum = 0;
  for (const Clause& b : reported) sum += static_cast<long long>(alice_only_allocation(b, v2).value);

  Rng rng(cfg.seed);
  int coin = static_cast<int>(rng.below(3));

  ProtocolOutcome out;
  out.allocation = wrapup_alice_only(reported, coin);
  out.welfare = recompute_welfare({v1, v2}, *out.allocation);
  out.expected_welfare_exact = Rat(sum, 3);
  out.expected_welfare = out.expected_welfare_exact.to_double();
  out.exact = true;
  out.transcript.rounds.push_back({{0, "clause", clause_bits(reported[coin], cfg.value_bits)}});
  out.transcript.metadata["coin"] = std::to_string(coin);
  return out;
}

ProtocolOutcome run_protocol2(const Valuation& v1, const Valuation& v2, ProtocolMode mode,
                              const std::optional<DecisionSpec>& spec, const ProtocolConfig& cfg) {
  std::vector<Clause> alice = pick_clauses(v1, warmup_triple(v1));
  std::vector<Clause> bob = pick_clauses(v2, warmup_triple(v2));

  ProtocolOutcome out;
  std::vector<TranscriptMessage> round;
  for (const Clause& c : alice) round.push_back({0, "clause", clause_bits(c, cfg.value_bits)});
  for (const Clause& c : bob) round.push_back({1, "clause", clause_bits(c, cfg.value_bits)});
  out.transcript.rounds.push_back(std::move(round));

  if (mode == ProtocolMode::kDecision) {
    out.answer = wrapup_best_known_decision(alice, bob, require_spec(spec, "protocol 2"));
    return out;
  }
  BestKnownResult best = wrapup_best_known(alice, bob);
  out.allocation = best.allocation;
  out.welfare = recompute_welfare({v1, v2}, *out.allocation);
  out.expected_welfare = out.welfare;  // deterministic
  out.expected_welfare_exact = v1.integral() && v2.integral()
                                   ? Rat(static_cast<long long>(out.welfare))
                                   : Rat(0);
  out.exact = v1.integral() && v2.integral();
  return out;
}

ProtocolOutcome run_protocol3(const Valuation& v1, const Valuation& v2, int k,
                              const ProtocolConfig& cfg) {
  require_bxos(v1, "protocol 3");
  require_bxos(v2, "protocol 3");
  if (k < 2) throw std::invalid_argument("protocol 3: k must be >= 2");

  ProtocolOutcome out;
  Sketch sk = protocol_sketch(v1, k, Rat(1, 2), cfg, out.transcript);
  std::vector<Clause> reported = pick_clauses(v1, sk.clause_indices);

  long long sum = 0;
  for (const Clause& b : reported) sum += static_cast<long long>(alice_only_allocation(b, v2).value);

  Rng rng(cfg.seed);
  int coin = static_cast<int>(rng.below(static_cast<uint64_t>(k)));

  out.allocation = wrapup_alice_only(reported, coin);
  out.welfare = recompute_welfare({v1, v2}, *out.allocation);
  out.expected_welfare_exact = Rat(sum, k);
  out.expected_welfare = out.expected_welfare_exact.to_double();
  out.exact = true;
  // Only the drawn clause crosses the wire, whatever k is.
  out.transcript.rounds.push_back({{0, "clause", static_cast<long long>(v1.m())}});
  out.transcript.metadata["coin"] = std::to_string(coin);
  return out;
}

namespace {

// Exact expectation of the sequential protocol by recursing over all coin
// paths: player l sketches the remaining items, each of the k branches is
// weighted 1/k, the last player sweeps up.
Rat protocol4_expectation(const std::vector<Valuation>& vals, int k, int l,
                          const ItemSet& remaining, const ProtocolConfig& cfg) {
  int n = static_cast<int>(vals.size());
  if (l == n - 1) return Rat(vals[l].eval_int(remaining));
  Valuation rest = vals[l].restricted_to(remaining);
  Sketch sk = compute_sketch(rest, SketchParams{k, Rat(1, 2)}, cfg.sketch_budget);
  Rat sum(0);
  for (int j = 0; j < k; ++j) {
    const ItemSet& take = rest.clause(sk.clause_indices[j]).support();
    sum += Rat(vals[l].eval_int(take)) +
           protocol4_expectation(vals, k, l + 1, remaining - take, cfg);
  }
  return sum / Rat(k);
}

}  // namespace

ProtocolOutcome run_protocol4(const std::vector<Valuation>& vals, int k, Protocol4Eval eval,
                              const ProtocolConfig& cfg, long long max_paths) {
  if (vals.size() < 2) throw std::invalid_argument("protocol 4: needs at least 2 players");
  for (const auto& v : vals) require_bxos(v, "protocol 4");
  if (k < 3) throw std::invalid_argument("protocol 4: k must be >= 3");
  int n = static_cast<int>(vals.size());
  int m = vals[0].m();

  if (eval == Protocol4Eval::kExact) {
    double paths = 1;
    for (int l = 0; l + 1 < n; ++l) paths *= k;
    if (paths > static_cast<double>(max_paths))
      throw ResourceError("protocol 4: exact-expectation path budget exceeded");
  }

  ProtocolOutcome out;
  // Realized run (also the only evaluation in sampled mode).
  Rng rng(cfg.seed);
  Allocation alloc(m, n);
  ItemSet remaining = ItemSet::full(m);
  std::string coins;
  for (int l = 0; l + 1 < n; ++l) {
    Valuation rest = vals[l].restricted_to(remaining);
    Sketch sk = protocol_sketch(rest, k, Rat(1, 2), cfg, out.transcript);
    int coin = static_cast<int>(rng.below(static_cast<uint64_t>(k)));
    coins += (coins.empty() ? "" : ",") + std::to_string(coin);
    const ItemSet& take = rest.clause(sk.clause_indices[coin]).support();
    take.for_each([&](int i) { alloc.assign(i, l); });
    remaining = remaining - take;
    out.transcript.rounds.push_back({{l, "clause", static_cast<long long>(m)}});
  }
  remaining.for_each([&](int i) { alloc.assign(i, n - 1); });
  out.allocation = alloc;
  out.welfare = recompute_welfare(vals, alloc);
  out.transcript.metadata["coins"] = coins;

  if (eval == Protocol4Eval::kExact) {
    out.expected_welfare_exact = protocol4_expectation(vals, k, 0, ItemSet::full(m), cfg);
    out.expected_welfare = out.expected_welfare_exact.to_double();
    out.exact = true;
  } else {
    out.expected_welfare = out.welfare;
    out.exact = false;
  }
  return out;
}

ProtocolOutcome run_protocol5(const Valuation& v1, const Valuation& v2, int k, ProtocolMode mode,
                              const std::optional<DecisionSpec>& spec, const ProtocolConfig& cfg) {
  if (k < 1) throw std::invalid_argument("protocol 5: k must be >= 1");
  ProtocolOutcome out;
  Sketch sk1 = protocol_sketch(v1, k, Rat(1, 3), cfg, out.transcript, "sketch_method_alice");
  Sketch sk2 = protocol_sketch(v2, k, Rat(1, 3), cfg, out.transcript, "sketch_method_bob");
  std::vector<Clause> alice = pick_clauses(v1, sk1.clause_indices);
  std::vector<Clause> bob = pick_clauses(v2, sk2.clause_indices);

  std::vector<TranscriptMessage> round;
  for (const Clause& c : alice) round.push_back({0, "clause", clause_bits(c, cfg.value_bits)});
  for (const Clause& c : bob) round.push_back({1, "clause", clause_bits(c, cfg.value_bits)});
  out.transcript.rounds.push_back(std::move(round));

  if (mode == ProtocolMode::kDecision) {
    out.answer = wrapup_best_known_decision(alice, bob, require_spec(spec, "protocol 5"));
    return out;
  }
  BestKnownResult best = wrapup_best_known(alice, bob);
  out.allocation = best.allocation;
  out.welfare = recompute_welfare({v1, v2}, *out.allocation);
  out.expected_welfare = out.welfare;
  out.expected_welfare_exact = v1.integral() && v2.integral()
                                   ? Rat(static_cast<long long>(out.welfare))
                                   : Rat(0);
  out.exact = v1.integral() && v2.integral();
  return out;
}

ProtocolOutcome run_protocol6(const Valuation& v1, const Valuation& v2, int k, ProtocolMode mode,
                              const std::optional<DecisionSpec>& spec, const ProtocolConfig& cfg) {
  if (k < 2) throw std::invalid_argument("protocol 6: k must be >= 2");
  ProtocolOutcome out;
  Sketch sk = protocol_sketch(v1, k, Rat(1, 2), cfg, out.transcript);
  std::vector<Clause> alice = pick_clauses(v1, sk.clause_indices);

  std::vector<TranscriptMessage> round1;
  for (const Clause& c : alice) round1.push_back({0, "clause", clause_bits(c, cfg.value_bits)});
  out.transcript.rounds.push_back(std::move(round1));

  // Bob knows his whole valuation, so SW*(b_j, v2) is exact: the best split
  // against b_j over all of Bob's clauses.
  double best_val = -1;
  int best_j = 0, best_c = 0;
  for (int j = 0; j < k; ++j) {
    for (int c = 0; c < v2.num_clauses(); ++c) {
      double val = sw_star_pair_value(alice[j], v2.clause(c));
      if (val > best_val) { best_val = val; best_j = j; best_c = c; }
    }
  }
  WelfareResult best = sw_star_additive_pair(alice[best_j], v2.clause(best_c));
  out.transcript.metadata["bob_choice"] = std::to_string(best_j);
  long long reply_bits = static_cast<long long>(v1.m()) + cfg.value_bits;  // split + value
  out.transcript.rounds.push_back({{1, "allocation+value", reply_bits}});

  if (mode == ProtocolMode::kDecision) {
    const DecisionSpec& ds = require_spec(spec, "protocol 6");
    if (v1.integral() && v2.integral())
      out.answer = Rat(static_cast<long long>(best.value)) >= ds.alpha * ds.x;
    else
      out.answer = best.value >= (ds.alpha * ds.x).to_double();
    return out;
  }
  out.allocation = best.allocation;
  out.welfare = recompute_welfare({v1, v2}, *out.allocation);
  out.expected_welfare = out.welfare;
  out.expected_welfare_exact = v1.integral() && v2.integral()
                                   ? Rat(static_cast<long long>(out.welfare))
                                   : Rat(0);
  out.exact = v1.integral() && v2.integral();
  return out;
}

ProtocolOutcome baseline_grand_bundle(const Valuation& v1, const Valuation& v2,
                                      const ProtocolConfig& cfg) {
  Rng rng(cfg.seed);
  int winner = static_cast<int>(rng.below(2));
  ProtocolOutcome out;
  Allocation alloc(v1.m(), 2);
  for (int i = 0; i < v1.m(); ++i) alloc.assign(i, winner);
  out.allocation = alloc;
  out.welfare = recompute_welfare({v1, v2}, alloc);
  out.expected_welfare = (v1.grand_total() + v2.grand_total()) / 2;
  if (v1.integral() && v2.integral()) {
    out.expected_welfare_exact = Rat(v1.grand_total_int() + v2.grand_total_int(), 2);
    out.exact = true;
  }
  out.transcript.metadata["winner"] = std::to_string(winner);
  return out;
}

Rat protocol_bound(const std::string& protocol, int k) {
  if (protocol == "1") return Rat(2, 3);
  if (protocol == "2") return Rat(3, 5);
  if (protocol == "3") return Rat(3, 4) - Rat(1, k);
  if (protocol == "4") return Rat(1, 2) - Rat(1, k);
  if (protocol == "5") return Rat(23, 32) - Rat(1, k);
  if (protocol == "6") return Rat(3, 4) - Rat(1, k);
  if (protocol == "baseline") return Rat(1, 2);
  throw std::invalid_argument("protocol_bound: unknown protocol '" + protocol + "'");
}

}  // namespace xosim
