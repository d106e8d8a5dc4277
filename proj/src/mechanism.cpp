#include "xosim/mechanism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "xosim/rng.hpp"
#include "xosim/welfare.hpp"

namespace xosim {

void Report::validate(const ItemSet& remaining, int k) const {
  if (static_cast<int>(clauses.size()) != k)
    throw std::invalid_argument("Report: expected exactly k clauses");
  for (const ItemSet& c : clauses) {
    if (c.m() != remaining.m()) throw std::invalid_argument("Report: item-count mismatch");
    if (!c.is_subset_of(remaining))
      throw std::invalid_argument("Report: clause touches already-allocated items");
  }
}

Strategy truthful_sketch_strategy(long long sketch_budget) {
  return [sketch_budget](const Valuation& rest, const ItemSet& remaining, int k) {
    (void)remaining;
    Sketch sk = compute_sketch(rest, SketchParams{k, Rat(1, 2)}, sketch_budget);
    Report rep;
    for (int j : sk.clause_indices) rep.clauses.push_back(rest.clause(j).support());
    return rep;
  };
}

MechanismOutcome run_mechanism(const std::vector<Valuation>& true_vals,
                               const std::vector<Strategy>& strategies, int k, uint64_t seed) {
  int n = static_cast<int>(true_vals.size());
  if (n < 2) throw std::invalid_argument("run_mechanism: needs at least 2 players");
  if (strategies.size() != true_vals.size())
    throw std::invalid_argument("run_mechanism: one strategy per player");
  if (k < 1) throw std::invalid_argument("run_mechanism: k must be >= 1");
  int m = true_vals[0].m();
  for (const auto& v : true_vals) {
    if (!v.binary()) throw std::invalid_argument("run_mechanism: valuations must be BXOS");
    if (v.m() != m) throw std::invalid_argument("run_mechanism: item-count mismatch");
  }

  Rng rng(seed);
  MechanismOutcome out;
  out.allocation = Allocation(m, n);
  out.payments.assign(n, Rat(0));
  out.utilities.assign(n, Rat(0));

  ItemSet remaining = ItemSet::full(m);
  for (int l = 0; l + 1 < n; ++l) {
    Valuation rest = true_vals[l].restricted_to(remaining);
    Report rep = strategies[l](rest, remaining, k);
    rep.validate(remaining, k);
    int coin = static_cast<int>(rng.below(static_cast<uint64_t>(k)));

    const ItemSet& take = rep.clauses[coin];
    // Charge sum over allocated items of the report's average coverage / 2.
    long long count_sum = 0;
    for (const ItemSet& c : rep.clauses) count_sum += ItemSet::and_count(c, take);
    out.payments[l] = Rat(count_sum, 2LL * k);
    out.utilities[l] = Rat(true_vals[l].eval_int(take)) - out.payments[l];
    take.for_each([&](int i) { out.allocation.assign(i, l); });
    remaining = remaining - take;
    out.reports.push_back(std::move(rep));
    out.coins.push_back(coin);
  }
  remaining.for_each([&](int i) { out.allocation.assign(i, n - 1); });
  out.utilities[n - 1] = Rat(true_vals[n - 1].eval_int(remaining));
  return out;
}

Rat expected_utility(const Valuation& true_val, const Report& report, int k) {
  if (static_cast<int>(report.clauses.size()) != k)
    throw std::invalid_argument("expected_utility: report must have k clauses");
  long long value_sum = 0;
  std::vector<int> counts(true_val.m(), 0);
  for (const ItemSet& c : report.clauses) {
    if (c.m() != true_val.m()) throw std::invalid_argument("expected_utility: item-count mismatch");
    value_sum += true_val.eval_int(c);
    c.for_each([&](int i) { ++counts[i]; });
  }
  long long sq_sum = 0;
  for (long long c : counts) sq_sum += c * c;
  return Rat(value_sum, k) - Rat(sq_sum, 2LL * k * k);
}

namespace {

// Canonical multiset of k subsets, each given by its bitmask over the m
// items, enumerated as non-decreasing mask tuples.
struct MultisetEnum {
  int k;
  long long top;  // number of distinct choices
  std::vector<long long> cur;

  MultisetEnum(int k_, long long top_) : k(k_), top(top_), cur(k_, 0) {}

  bool next() {
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == top - 1) --pos;
    if (pos < 0) return false;
    long long val = cur[pos] + 1;
    for (int p = pos; p < k; ++p) cur[p] = val;
    return true;
  }
};

ItemSet mask_to_set(long long mask, const std::vector<int>& items, int m) {
  ItemSet s(m);
  for (size_t b = 0; b < items.size(); ++b)
    if ((mask >> b) & 1) s.set(items[b]);
  return s;
}

}  // namespace

BestResponseResult best_response(const Valuation& true_val, int k, BestResponseSearch search,
                                 long long max_reports) {
  if (!true_val.binary()) throw std::invalid_argument("best_response: valuation must be BXOS");
  if (k < 1) throw std::invalid_argument("best_response: k must be >= 1");
  const int m = true_val.m();
  const int t = true_val.num_clauses();

  // The sketch side of the characterization: maximal objective over true
  // clause multisets, and the set of true-clause supports.
  Sketch best_sketch = sketch_exact(true_val, SketchParams{k, Rat(1, 2)});
  const Rat sketch_obj = best_sketch.objective;
  std::vector<ItemSet> clause_supports;
  for (int j = 0; j < t; ++j) clause_supports.push_back(true_val.clause(j).support());
  auto is_sketch_report = [&](const std::vector<ItemSet>& sets) {
    std::vector<int> idx;
    for (const ItemSet& s : sets) {
      auto it = std::find(clause_supports.begin(), clause_supports.end(), s);
      if (it == clause_supports.end()) return false;
      idx.push_back(static_cast<int>(it - clause_supports.begin()));
    }
    return objective_binary(true_val, idx, Rat(1, 2)) == sketch_obj;
  };

  long long choices;
  std::vector<int> items;
  if (search == BestResponseSearch::kExhaustive) {
    if (m > 20) throw ResourceError("best_response: exhaustive search needs m <= 20");
    choices = 1LL << m;
    for (int i = 0; i < m; ++i) items.push_back(i);
  } else {
    choices = t;
  }
  double multisets = 1;  // C(choices + k - 1, k)
  for (int i = 1; i <= k; ++i) multisets = multisets * (static_cast<double>(choices) - 1 + i) / i;
  if (multisets > static_cast<double>(max_reports))
    throw ResourceError("best_response: report budget exceeded");

  BestResponseResult result;
  bool have_max = false, have_non_sketch = false;
  MultisetEnum en(k, choices);
  do {
    std::vector<ItemSet> sets;
    sets.reserve(k);
    for (long long c : en.cur) {
      if (search == BestResponseSearch::kExhaustive)
        sets.push_back(mask_to_set(c, items, m));
      else
        sets.push_back(clause_supports[static_cast<int>(c)]);
    }
    Report rep{sets};
    Rat u = expected_utility(true_val, rep, k);
    bool sketchy = is_sketch_report(sets);
    if (!have_max || u > result.max_utility) {
      result.max_utility = u;
      result.maximizers.clear();
      result.maximizers.push_back(sets);
      have_max = true;
    } else if (u == result.max_utility) {
      result.maximizers.push_back(sets);
    }
    if (!sketchy) {
      if (!have_non_sketch || u > result.best_non_sketch_utility)
        result.best_non_sketch_utility = u;
      have_non_sketch = true;
    }
  } while (en.next());

  result.all_maximizers_are_sketches = true;
  for (const auto& sets : result.maximizers)
    if (!is_sketch_report(sets)) result.all_maximizers_are_sketches = false;
  result.strict = !have_non_sketch || result.max_utility > result.best_non_sketch_utility;
  return result;
}

}  // namespace xosim
