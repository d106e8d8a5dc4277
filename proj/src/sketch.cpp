#include "xosim/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace xosim {

namespace {

void check_indices(const Valuation& v, const std::vector<int>& indices) {
  if (indices.empty()) throw std::invalid_argument("sketch: empty index multiset");
  for (int j : indices)
    if (j < 0 || j >= v.num_clauses()) throw std::invalid_argument("sketch: clause index out of range");
}

std::vector<int> coverage_counts(const Valuation& v, const std::vector<int>& indices) {
  std::vector<int> c(v.m(), 0);
  for (int j : indices)
    v.clause(j).support().for_each([&](int i) { ++c[i]; });
  return c;
}

// Scaled binary objective: k^2 * den * sum_i (x_i - alpha x_i^2)
//   = sum_i (den * k * c_i - num * c_i^2).
long long objective_binary_scaled(const std::vector<int>& counts, int k, const Rat& alpha) {
  long long num = alpha.num(), den = alpha.den();
  long long total = 0;
  for (long long c : counts) total += den * k * c - num * c * c;
  return total;
}

// Per-item breakpoint walk of int_0^inf f(x_{i,u}) du for the k values the
// sketch clauses assign to one item. `g` maps the level count c to the
// scaled integrand value; widths multiply in afterwards.
template <typename Num, typename G>
Num level_integral(std::vector<double>& vals, const G& g) {
  std::sort(vals.begin(), vals.end());
  Num total{};
  double prev = 0;
  int k = static_cast<int>(vals.size());
  for (int s = 0; s < k; ++s) {
    if (vals[s] <= prev) continue;
    // On (prev, vals[s]], exactly k - s clauses have value >= u.
    total += g(vals[s] - prev, k - s);
    prev = vals[s];
  }
  return total;
}

}  // namespace

void SketchParams::validate() const {
  if (k < 1) throw std::invalid_argument("SketchParams: k must be >= 1");
  if (alpha < Rat(0) || alpha > Rat(1, 2))
    throw std::invalid_argument("SketchParams: alpha must lie in [0, 1/2]");
}

Rat objective_binary(const Valuation& v, const std::vector<int>& indices, const Rat& alpha) {
  if (!v.binary()) throw std::invalid_argument("objective_binary: valuation must be BXOS");
  check_indices(v, indices);
  int k = static_cast<int>(indices.size());
  auto counts = coverage_counts(v, indices);
  return Rat(objective_binary_scaled(counts, k, alpha),
             static_cast<long long>(k) * k * alpha.den());
}

double objective_general(const Valuation& v, const std::vector<int>& indices, const Rat& alpha) {
  check_indices(v, indices);
  int k = static_cast<int>(indices.size());
  double a = alpha.to_double();
  double total = 0;
  std::vector<double> vals(k);
  for (int i = 0; i < v.m(); ++i) {
    for (int j = 0; j < k; ++j) vals[j] = v.clause(indices[j]).value(i);
    total += level_integral<double>(vals, [&](double width, int c) {
      double x = static_cast<double>(c) / k;
      return width * (x - a * x * x);
    });
  }
  return total;
}

Rat objective_general_exact(const Valuation& v, const std::vector<int>& indices, const Rat& alpha) {
  if (!v.integral()) throw std::invalid_argument("objective_general_exact: needs integral values");
  check_indices(v, indices);
  int k = static_cast<int>(indices.size());
  long long num = alpha.num(), den = alpha.den();
  long long scaled = 0;  // k^2 * den * objective
  std::vector<double> vals(k);
  for (int i = 0; i < v.m(); ++i) {
    for (int j = 0; j < k; ++j) vals[j] = v.clause(indices[j]).value(i);
    scaled += level_integral<long long>(vals, [&](double width, int c) {
      long long w = static_cast<long long>(width);
      return w * (den * k * c - num * static_cast<long long>(c) * c);
    });
  }
  return Rat(scaled, static_cast<long long>(k) * k * den);
}

namespace {

Sketch finish_sketch(const Valuation& v, std::vector<int> indices, const SketchParams& params,
                     Sketch::Method method, bool swap_optimal) {
  std::sort(indices.begin(), indices.end());
  Sketch sk;
  sk.clause_indices = std::move(indices);
  sk.params = params;
  sk.method = method;
  sk.swap_optimal = swap_optimal;
  if (v.binary()) {
    sk.counts = coverage_counts(v, sk.clause_indices);
    sk.objective = objective_binary(v, sk.clause_indices, params.alpha);
    sk.objective_f = sk.objective.to_double();
    sk.exact_arith = true;
  } else if (v.integral()) {
    sk.objective = objective_general_exact(v, sk.clause_indices, params.alpha);
    sk.objective_f = sk.objective.to_double();
    sk.exact_arith = true;
  } else {
    sk.objective_f = objective_general(v, sk.clause_indices, params.alpha);
    sk.exact_arith = false;
  }
  return sk;
}

}  // namespace

Sketch sketch_exact(const Valuation& v, const SketchParams& params, long long max_multisets) {
  params.validate();
  int t = v.num_clauses(), k = params.k;
  double count = 1;  // C(t+k-1, k)
  for (int i = 1; i <= k; ++i) count = count * (t - 1 + i) / i;
  if (count > static_cast<double>(max_multisets))
    throw ResourceError("sketch_exact: multiset budget exceeded; use sketch_local_search");

  bool exact = v.integral();
  std::vector<int> idx(k, 0), best_idx;
  Rat best_obj;
  double best_obj_f = 0;
  bool have_best = false;
  while (true) {
    if (exact) {
      Rat obj = v.binary() ? objective_binary(v, idx, params.alpha)
                           : objective_general_exact(v, idx, params.alpha);
      if (!have_best || obj > best_obj) { best_obj = obj; best_idx = idx; have_best = true; }
    } else {
      double obj = objective_general(v, idx, params.alpha);
      if (!have_best || obj > best_obj_f) { best_obj_f = obj; best_idx = idx; have_best = true; }
    }
    // Next non-decreasing tuple (lexicographic), so the first maximum seen is
    // the lexicographically smallest maximizer.
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == t - 1) --pos;
    if (pos < 0) break;
    int val = idx[pos] + 1;
    for (int p = pos; p < k; ++p) idx[p] = val;
  }
  return finish_sketch(v, best_idx, params, Sketch::Method::kEnumeration, true);
}

namespace {

// Bit-plane counter for binary local search: c_i kept as ceil(log2(k+1))
// bit-planes so masked sums reduce to popcounts.
class PlaneCounts {
 public:
  PlaneCounts(int m, int k) : m_(m) {
    int planes = 1;
    while ((1 << planes) <= k) ++planes;
    planes_.assign(planes, ItemSet(m));
  }

  void add(const ItemSet& mask) {
    std::vector<uint64_t> carry = mask.words();
    for (auto& plane : planes_) {
      auto& pw = words(plane);
      for (size_t w = 0; w < pw.size(); ++w) {
        uint64_t t = pw[w] & carry[w];
        pw[w] ^= carry[w];
        carry[w] = t;
      }
    }
  }

  void sub(const ItemSet& mask) {
    std::vector<uint64_t> borrow = mask.words();
    for (auto& plane : planes_) {
      auto& pw = words(plane);
      for (size_t w = 0; w < pw.size(); ++w) {
        uint64_t t = ~pw[w] & borrow[w];
        pw[w] ^= borrow[w];
        borrow[w] = t;
      }
    }
  }

  // Swap delta for replacing clause `out` with clause `in`, scaled by
  // k^2 * den: sum over gained/lost items of the per-item objective change.
  long long swap_delta(const ItemSet& out, const ItemSet& in, long long k, long long num,
                       long long den) const {
    const auto& ow = out.words();
    const auto& iw = in.words();
    long long gain_cnt = 0, gain_sum = 0, lose_cnt = 0, lose_sum = 0;
    for (size_t w = 0; w < ow.size(); ++w) {
      uint64_t gained = iw[w] & ~ow[w];  // c -> c + 1
      uint64_t lost = ow[w] & ~iw[w];    // c -> c - 1
      if (gained) {
        gain_cnt += __builtin_popcountll(gained);
        for (size_t b = 0; b < planes_.size(); ++b)
          gain_sum += static_cast<long long>(__builtin_popcountll(gained & planes_[b].words()[w])) << b;
      }
      if (lost) {
        lose_cnt += __builtin_popcountll(lost);
        for (size_t b = 0; b < planes_.size(); ++b)
          lose_sum += static_cast<long long>(__builtin_popcountll(lost & planes_[b].words()[w])) << b;
      }
    }
    // gained item: g(c+1) - g(c) = den*k - num*(2c+1)
    // lost item:   g(c-1) - g(c) = -den*k + num*(2c-1)
    return den * k * (gain_cnt - lose_cnt) - num * (2 * gain_sum + gain_cnt) +
           num * (2 * lose_sum - lose_cnt);
  }

  std::vector<int> to_counts() const {
    std::vector<int> c(m_, 0);
    for (size_t b = 0; b < planes_.size(); ++b)
      planes_[b].for_each([&](int i) { c[i] += 1 << b; });
    return c;
  }

 private:
  static std::vector<uint64_t>& words(ItemSet& s) {
    return const_cast<std::vector<uint64_t>&>(s.words());
  }

  int m_;
  std::vector<ItemSet> planes_;
};

std::vector<int> initial_indices(const Valuation& v, int k) {
  // k largest clauses by total, ties to the lowest index; repeat cyclically
  // when there are fewer clauses than slots.
  std::vector<int> order(v.num_clauses());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return v.clause(a).total() > v.clause(b).total();
  });
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = order[i % order.size()];
  return idx;
}

Sketch local_search_binary(const Valuation& v, const SketchParams& params) {
  const int k = params.k, t = v.num_clauses();
  const long long num = params.alpha.num(), den = params.alpha.den();
  std::vector<int> idx = initial_indices(v, k);

  PlaneCounts counts(v.m(), k);
  for (int j : idx) counts.add(v.clause(j).support());

  const long long max_iters = 1LL << 40;  // objective strictly increases; loop is finite
  for (long long iter = 0; iter < max_iters; ++iter) {
    long long best_delta = 0;
    int best_pos = -1, best_cl = -1;
    for (int pos = 0; pos < k; ++pos) {
      const ItemSet& out = v.clause(idx[pos]).support();
      for (int cl = 0; cl < t; ++cl) {
        if (cl == idx[pos]) continue;
        long long d = counts.swap_delta(out, v.clause(cl).support(), k, num, den);
        if (d > best_delta) { best_delta = d; best_pos = pos; best_cl = cl; }
      }
    }
    if (best_pos < 0) break;
    counts.sub(v.clause(idx[best_pos]).support());
    counts.add(v.clause(best_cl).support());
    idx[best_pos] = best_cl;
  }
  return finish_sketch(v, idx, params, Sketch::Method::kLocalSearch, true);
}

Sketch local_search_general(const Valuation& v, const SketchParams& params) {
  const int k = params.k, t = v.num_clauses();
  const bool exact = v.integral();
  std::vector<int> idx = initial_indices(v, k);

  auto obj_exact = [&](const std::vector<int>& ind) { return objective_general_exact(v, ind, params.alpha); };
  auto obj_f = [&](const std::vector<int>& ind) { return objective_general(v, ind, params.alpha); };

  Rat cur;
  double cur_f = 0;
  if (exact) cur = obj_exact(idx); else cur_f = obj_f(idx);

  while (true) {
    Rat best;
    double best_f = 0;
    int best_pos = -1, best_cl = -1;
    std::vector<int> trial = idx;
    for (int pos = 0; pos < k; ++pos) {
      int saved = trial[pos];
      for (int cl = 0; cl < t; ++cl) {
        if (cl == saved) continue;
        trial[pos] = cl;
        if (exact) {
          Rat o = obj_exact(trial);
          if (o > cur && (best_pos < 0 || o > best)) { best = o; best_pos = pos; best_cl = cl; }
        } else {
          double o = obj_f(trial);
          if (o > cur_f && (best_pos < 0 || o > best_f)) { best_f = o; best_pos = pos; best_cl = cl; }
        }
      }
      trial[pos] = saved;
    }
    if (best_pos < 0) break;
    idx[best_pos] = best_cl;
    if (exact) cur = best; else cur_f = best_f;
  }
  return finish_sketch(v, idx, params, Sketch::Method::kLocalSearch, true);
}

}  // namespace

Sketch sketch_local_search(const Valuation& v, const SketchParams& params) {
  params.validate();
  return v.binary() ? local_search_binary(v, params) : local_search_general(v, params);
}

Sketch compute_sketch(const Valuation& v, const SketchParams& params, long long max_multisets) {
  try {
    return sketch_exact(v, params, max_multisets);
  } catch (const ResourceError&) {
    return sketch_local_search(v, params);
  }
}

std::vector<std::pair<double, int>> coverage_levels(const Valuation& v, const Sketch& sk,
                                                    int item) {
  std::vector<double> vals;
  vals.reserve(sk.clause_indices.size());
  for (int j : sk.clause_indices) vals.push_back(v.clause(j).value(item));
  std::sort(vals.begin(), vals.end());
  std::vector<std::pair<double, int>> levels;
  int k = static_cast<int>(vals.size());
  double prev = 0;
  for (int s = 0; s < k; ++s) {
    if (vals[s] <= prev) continue;
    levels.emplace_back(vals[s], k - s);
    prev = vals[s];
  }
  return levels;
}

ExchangeReport verify_exchange_bound_binary(const Sketch& sk, const Valuation& v) {
  if (!v.binary()) throw std::invalid_argument("verify_exchange_bound_binary: valuation must be BXOS");
  if (sk.params.alpha > Rat(1, 2)) throw std::invalid_argument("exchange bound needs alpha <= 1/2");
  const long long k = sk.params.k;
  const long long num = sk.params.alpha.num(), den = sk.params.alpha.den();
  const auto counts = sk.counts.empty() ? coverage_counts(v, sk.clause_indices) : sk.counts;
  const long long big_v = v.grand_total_int();

  long long c1 = 0, c2 = 0;  // sum c_i, sum c_i^2
  for (long long c : counts) { c1 += c; c2 += c * c; }

  ExchangeReport rep;
  rep.pass = true;
  rep.exact = true;
  bool have_worst = false;
  long long worst = 0;
  // Scale everything by k^2 * den; slack = LHS - RHS must be >= 0.
  for (int a = 0; a < v.num_clauses(); ++a) {
    const ItemSet& supp = v.clause(a).support();
    long long sum_a = 0;
    supp.for_each([&](int i) { sum_a += counts[i]; });
    long long lhs = den * k * c1 - 2 * num * c2 + 2 * num * k * sum_a;
    long long rhs = den * k * k * supp.count() - 2 * num * k * big_v;
    long long slack = lhs - rhs;
    if (!have_worst || slack < worst) {
      worst = slack;
      rep.worst_clause = a;
      have_worst = true;
    }
    if (slack < 0) rep.pass = false;
  }
  rep.worst_slack = Rat(worst, k * k * den);
  rep.worst_slack_f = rep.worst_slack.to_double();
  return rep;
}

ExchangeReport verify_exchange_bound_general(const Sketch& sk, const Valuation& v) {
  if (sk.params.alpha > Rat(1, 2)) throw std::invalid_argument("exchange bound needs alpha <= 1/2");
  const int k = sk.params.k;
  const long long num = sk.params.alpha.num(), den = sk.params.alpha.den();
  const bool exact = v.integral();

  ExchangeReport rep;
  rep.pass = true;
  rep.exact = exact;
  bool have_worst = false;
  Rat worst;
  double worst_f = 0;

  const double big_v = v.grand_total();
  std::vector<double> vals(k);
  for (int a = 0; a < v.num_clauses(); ++a) {
    const Clause& cl = v.clause(a);
    if (exact) {
      long long lhs_scaled = 0;  // k^2 * den * LHS
      for (int i = 0; i < v.m(); ++i) {
        for (int j = 0; j < k; ++j) vals[j] = v.clause(sk.clause_indices[j]).value(i);
        long long ai = cl.value_int(i);
        lhs_scaled += level_integral<long long>(vals, [&](double width, int c) {
          long long w = static_cast<long long>(width);
          return w * (den * k * c - 2 * num * static_cast<long long>(c) * c);
        });
        // 2 alpha * int_0^{a({i})} x_u du, clipped breakpoint walk.
        std::sort(vals.begin(), vals.end());
        long long prev = 0;
        for (int s = 0; s < k; ++s) {
          long long ws = std::min(static_cast<long long>(vals[s]), ai);
          if (ws <= prev) continue;
          lhs_scaled += 2 * num * (ws - prev) * k * (k - s);
          prev = ws;
        }
      }
      long long rhs_scaled = den * k * k * cl.total_int()
                             - 2 * num * k * static_cast<long long>(big_v);
      Rat slack(lhs_scaled - rhs_scaled, static_cast<long long>(k) * k * den);
      if (!have_worst || slack < worst) { worst = slack; rep.worst_clause = a; have_worst = true; }
      if (slack < Rat(0)) rep.pass = false;
    } else {
      double a2 = 2 * sk.params.alpha.to_double();
      double lhs = 0;
      for (int i = 0; i < v.m(); ++i) {
        for (int j = 0; j < k; ++j) vals[j] = v.clause(sk.clause_indices[j]).value(i);
        double ai = cl.value(i);
        lhs += level_integral<double>(vals, [&](double width, int c) {
          double x = static_cast<double>(c) / k;
          return width * (x - a2 * x * x);
        });
        std::sort(vals.begin(), vals.end());
        double prev = 0;
        for (int s = 0; s < k; ++s) {
          double ws = std::min(vals[s], ai);
          if (ws <= prev) continue;
          lhs += a2 * (ws - prev) * (static_cast<double>(k - s) / k);
          prev = ws;
        }
      }
      double rhs = cl.total() - 2 * sk.params.alpha.to_double() * big_v / k;
      double slack = lhs - rhs;
      if (!have_worst || slack < worst_f) { worst_f = slack; rep.worst_clause = a; have_worst = true; }
      if (slack < -1e-9 * std::max(1.0, std::abs(rhs))) rep.pass = false;
    }
  }
  if (exact) {
    rep.worst_slack = worst;
    rep.worst_slack_f = worst.to_double();
  } else {
    rep.worst_slack_f = worst_f;
  }
  return rep;
}

}  // namespace xosim
