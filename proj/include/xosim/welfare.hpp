#pragma once

#include <stdexcept>
#include <vector>

#include "xosim/valuation.hpp"

namespace xosim {

/// Raised when an enumeration guard would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Optimal welfare together with an allocation attaining it and, where the
/// search was over clause choices, the per-player clause indices used.
struct WelfareResult {
  double value = 0;
  Allocation allocation{0, 1};
  std::vector<int> witnesses;  // per-player clause index; empty for raw clause pairs
};

/// Two additive players: each item goes to whoever values it more (ties to
/// player 0); welfare is the per-item max. For binary clauses this is the
/// union size.
WelfareResult sw_star_additive_pair(const Clause& a, const Clause& b);

/// Value of sw_star_additive_pair without materializing the allocation;
/// cheap enough to scan millions of clause pairs.
double sw_star_pair_value(const Clause& a, const Clause& b);

/// Two XOS players: exact optimum as the best clause pair.
WelfareResult sw_star_xos_pair(const Valuation& v1, const Valuation& v2);

/// n XOS players: exact optimum by enumerating clause tuples (one clause per
/// player) and assigning each item to the per-item argmax clause. The tuple
/// count (product of clause counts) is guarded by `max_tuples`.
WelfareResult sw_star_n(const std::vector<Valuation>& vals, long long max_tuples = 10'000'000);

/// Independent test oracle: exhaustive maximum over all n^m ownership
/// vectors. Guarded by `max_assignments`.
WelfareResult brute_force_partitions(const std::vector<Valuation>& vals,
                                     long long max_assignments = 10'000'000);

/// Awards Alice exactly supp(b) and Bob the rest. For binary b and BXOS v2
/// this attains SW*(b, v2) exactly.
WelfareResult alice_only_allocation(const Clause& b, const Valuation& v2);

}  // namespace xosim
