#include "xosim/welfare.hpp"

#include <algorithm>
#include <stdexcept>

namespace xosim {

WelfareResult sw_star_additive_pair(const Clause& a, const Clause& b) {
  if (a.m() != b.m()) throw std::invalid_argument("sw_star_additive_pair: item-count mismatch");
  int m = a.m();
  WelfareResult r;
  r.allocation = Allocation(m, 2);
  if (a.binary() && b.binary()) {
    // Union: Alice keeps her support, Bob gets only what Alice skipped.
    r.value = ItemSet::or_count(a.support(), b.support());
    for (int i = 0; i < m; ++i) r.allocation.assign(i, a.support().test(i) ? 0 : 1);
    return r;
  }
  double total = 0;
  for (int i = 0; i < m; ++i) {
    double va = a.value(i), vb = b.value(i);
    r.allocation.assign(i, va >= vb ? 0 : 1);
    total += va >= vb ? va : vb;
  }
  r.value = total;
  return r;
}

double sw_star_pair_value(const Clause& a, const Clause& b) {
  if (a.m() != b.m()) throw std::invalid_argument("sw_star_pair_value: item-count mismatch");
  if (a.binary() && b.binary()) return ItemSet::or_count(a.support(), b.support());
  double total = 0;
  for (int i = 0; i < a.m(); ++i) total += std::max(a.value(i), b.value(i));
  return total;
}

WelfareResult sw_star_xos_pair(const Valuation& v1, const Valuation& v2) {
  if (v1.m() != v2.m()) throw std::invalid_argument("sw_star_xos_pair: item-count mismatch");
  double best = -1;
  int best_j = 0, best_jj = 0;
  for (int j = 0; j < v1.num_clauses(); ++j) {
    for (int jj = 0; jj < v2.num_clauses(); ++jj) {
      double val = sw_star_pair_value(v1.clause(j), v2.clause(jj));
      if (val > best) { best = val; best_j = j; best_jj = jj; }
    }
  }
  WelfareResult r = sw_star_additive_pair(v1.clause(best_j), v2.clause(best_jj));
  r.witnesses = {best_j, best_jj};
  return r;
}

WelfareResult sw_star_n(const std::vector<Valuation>& vals, long long max_tuples) {
  if (vals.empty()) throw std::invalid_argument("sw_star_n: no players");
  int n = static_cast<int>(vals.size());
  int m = vals[0].m();
  for (const auto& v : vals)
    if (v.m() != m) throw std::invalid_argument("sw_star_n: item-count mismatch");

  long long tuples = 1;
  for (const auto& v : vals) {
    tuples *= v.num_clauses();
    if (tuples > max_tuples)
      throw ResourceError("sw_star_n: clause-tuple budget exceeded; use brute_force_partitions");
  }

  WelfareResult best;
  best.value = -1;
  std::vector<int> tuple(n, 0);
  while (true) {
    // Given one clause per player, the best allocation is separable per item.
    double total = 0;
    Allocation alloc(m, n);
    for (int i = 0; i < m; ++i) {
      int owner = 0;
      double v = vals[0].clause(tuple[0]).value(i);
      for (int l = 1; l < n; ++l) {
        double w = vals[l].clause(tuple[l]).value(i);
        if (w > v) { v = w; owner = l; }
      }
      alloc.assign(i, owner);
      total += v;
    }
    if (total > best.value) {
      best.value = total;
      best.allocation = alloc;
      best.witnesses = tuple;
    }
    int pos = n - 1;
    while (pos >= 0 && tuple[pos] + 1 == vals[pos].num_clauses()) tuple[pos--] = 0;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return best;
}

WelfareResult brute_force_partitions(const std::vector<Valuation>& vals, long long max_assignments) {
  if (vals.empty()) throw std::invalid_argument("brute_force_partitions: no players");
  int n = static_cast<int>(vals.size());
  int m = vals[0].m();
  for (const auto& v : vals)
    if (v.m() != m) throw std::invalid_argument("brute_force_partitions: item-count mismatch");

  double assignments = 1;
  for (int i = 0; i < m; ++i) {
    assignments *= n;
    if (assignments > static_cast<double>(max_assignments))
      throw ResourceError("brute_force_partitions: n^m guard exceeded");
  }

  WelfareResult best;
  best.value = -1;
  std::vector<int> owner(m, 0);
  while (true) {
    std::vector<ItemSet> bundles(n, ItemSet(m));
    for (int i = 0; i < m; ++i) bundles[owner[i]].set(i);
    double total = 0;
    for (int l = 0; l < n; ++l) total += vals[l].eval(bundles[l]);
    if (total > best.value) {
      best.value = total;
      best.allocation = Allocation(owner, n);
      best.witnesses.clear();
      for (int l = 0; l < n; ++l) best.witnesses.push_back(vals[l].argmax_clause(bundles[l]));
    }
    int pos = m - 1;
    while (pos >= 0 && owner[pos] + 1 == n) owner[pos--] = 0;
    if (pos < 0) break;
    ++owner[pos];
  }
  return best;
}

WelfareResult alice_only_allocation(const Clause& b, const Valuation& v2) {
  if (!b.binary()) throw std::invalid_argument("alice_only_allocation: clause must be binary");
  if (!v2.binary()) throw std::invalid_argument("alice_only_allocation: opponent must be BXOS");
  if (b.m() != v2.m()) throw std::invalid_argument("alice_only_allocation: item-count mismatch");
  WelfareResult r;
  r.allocation = Allocation::from_bundle(b.support());
  r.value = static_cast<double>(b.support().count() + v2.eval_int(~b.support()));
  return r;
}

}  // namespace xosim
