#pragma once

#include <functional>
#include <vector>

#include "xosim/rational.hpp"
#include "xosim/sketch.hpp"
#include "xosim/valuation.hpp"

namespace xosim {

/// What a player broadcasts: k binary additive clauses over the items still
/// unallocated when their turn comes. Need not be clauses of the true
/// valuation; the whole point of the payment rule is that honest sketches
/// win anyway.
struct Report {
  std::vector<ItemSet> clauses;  // size k, supports within the remaining items

  void validate(const ItemSet& remaining, int k) const;
};

/// A player's move: maps (true valuation restricted to remaining items,
/// remaining items, k) to a Report.
using Strategy = std::function<Report(const Valuation&, const ItemSet&, int)>;

/// The honest strategy: report a (k,1/2)-sketch of the remaining-items
/// valuation.
Strategy truthful_sketch_strategy(long long sketch_budget = 200'000);

struct MechanismOutcome {
  Allocation allocation{0, 1};
  std::vector<Rat> payments;   // exact, denominator 2k; last player pays 0
  std::vector<Rat> utilities;  // v_l(bundle) - payment
  std::vector<Report> reports;
  std::vector<int> coins;  // auctioneer's drawn j per player (size n-1)
};

/// Sequential priced mechanism: players 0..n-2 each broadcast k binary
/// clauses over the remaining items; the auctioneer draws j uniformly,
/// hands over supp(b_j), and charges sum_{i allocated} (sum_j' b_j'(i)) / 2k.
/// The last player takes the remainder for free.
MechanismOutcome run_mechanism(const std::vector<Valuation>& true_vals,
                               const std::vector<Strategy>& strategies, int k, uint64_t seed);

/// Expected utility of a report under the mechanism's coin:
/// (1/k) sum_j v(B_j) - (1/2) sum_i x_i^2, exact.
Rat expected_utility(const Valuation& true_val, const Report& report, int k);

enum class BestResponseSearch { kExhaustive, kClauseRestricted };

struct BestResponseResult {
  std::vector<std::vector<ItemSet>> maximizers;  // canonical sorted multisets
  Rat max_utility;
  Rat best_non_sketch_utility;  // highest utility among non-sketch reports
  bool all_maximizers_are_sketches = false;
  bool strict = false;  // max_utility > best_non_sketch_utility
};

/// Enumerates reports (all k-multisets of binary clauses over the m items in
/// exhaustive mode; k-multisets of true clauses in clause-restricted mode),
/// returns every utility maximizer, and checks each against the (k,1/2)-
/// sketch characterization. Exhaustive mode is guarded by 2^(mk) <= budget.
BestResponseResult best_response(const Valuation& true_val, int k,
                                 BestResponseSearch search = BestResponseSearch::kExhaustive,
                                 long long max_reports = 1'000'000);

}  // namespace xosim
