#pragma once

#include <string>
#include <vector>

#include "xosim/rational.hpp"
#include "xosim/valuation.hpp"
#include "xosim/welfare.hpp"

namespace xosim {

struct SketchParams {
  int k = 1;
  Rat alpha;  // in [0, 1/2]; the exchange bounds need alpha <= 1/2

  void validate() const;
};

/// A k-multiset of clause indices of some valuation together with the value
/// of the coverage-minus-regularizer objective it maximizes (or is at least
/// single-swap optimal for).
struct Sketch {
  enum class Method { kEnumeration, kLocalSearch };

  std::vector<int> clause_indices;  // size k, sorted ascending (canonical multiset)
  SketchParams params;
  Rat objective;           // valid when exact_arith
  double objective_f = 0;  // always valid
  bool exact_arith = false;
  bool swap_optimal = false;  // certified: no single-position swap improves
  Method method = Method::kEnumeration;
  std::vector<int> counts;  // binary coverage c_i = sum_j b_j({i}); empty for general
};

/// Binary objective: sum_i (x_i - alpha x_i^2), x_i = c_i / k, evaluated
/// exactly with denominators cleared (k^2 * den(alpha)).
Rat objective_binary(const Valuation& v, const std::vector<int>& indices, const Rat& alpha);

/// General objective: sum_i int_0^inf (x_{i,u} - alpha x_{i,u}^2) du. The
/// integrand is piecewise constant in u, so the integral is a finite sum
/// over the per-item breakpoints (distinct clause values).
double objective_general(const Valuation& v, const std::vector<int>& indices, const Rat& alpha);

/// Same integral with exact arithmetic; requires v.integral().
Rat objective_general_exact(const Valuation& v, const std::vector<int>& indices, const Rat& alpha);

/// Global argmax by enumerating all k-multisets of clause indices; ties go
/// to the lexicographically smallest index multiset. Throws ResourceError
/// when C(t+k-1, k) exceeds the budget.
Sketch sketch_exact(const Valuation& v, const SketchParams& params,
                    long long max_multisets = 2'000'000);

/// Best-improving single-position swap search from the k largest clauses.
/// The returned sketch is certified single-swap optimal, which is the only
/// property the downstream guarantees use. Exact arithmetic whenever the
/// valuation is integral.
Sketch sketch_local_search(const Valuation& v, const SketchParams& params);

/// sketch_exact when the budget allows, else certified local search.
Sketch compute_sketch(const Valuation& v, const SketchParams& params,
                      long long max_multisets = 200'000);

/// Coverage level function of a sketch at one item: the sorted breakpoints
/// u with the count of sketch clauses whose value at the item is >= u
/// (x_{i,u} = count / k). Binary sketches collapse to a single level.
std::vector<std::pair<double, int>> coverage_levels(const Valuation& v, const Sketch& sk,
                                                    int item);

struct ExchangeReport {
  bool pass = false;
  bool exact = false;
  int worst_clause = -1;  // clause index with the smallest slack
  Rat worst_slack;        // exact mode; LHS - RHS of the exchange inequality
  double worst_slack_f = 0;
};

/// Checks, for every clause a of v with A = supp(a):
///   sum_i (x_i - 2a x_i^2) + 2a sum_{i in A} x_i  >=  |A| - 2a v([m]) / k
/// (subsets of supports follow from the full-support case). Exact integer
/// arithmetic; requires a BXOS valuation and alpha <= 1/2.
ExchangeReport verify_exchange_bound_binary(const Sketch& sk, const Valuation& v);

/// Level-function form for general XOS: for every clause a of v,
///   sum_i ( int (x_u - 2a x_u^2) du + 2a int_0^{a({i})} x_u du )
///     >= a([m]) - 2a v([m]) / k,
/// evaluated by breakpoint summation. Exact when v is integral.
ExchangeReport verify_exchange_bound_general(const Sketch& sk, const Valuation& v);

}  // namespace xosim
