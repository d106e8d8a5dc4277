#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "xosim/rational.hpp"
#include "xosim/rng.hpp"
#include "xosim/sketch.hpp"
#include "xosim/valuation.hpp"

namespace xosim {

// ---------------------------------------------------------------------------
// Tight instance for sketch-and-best-known protocols: two BXOS valuations
// with a planted complementary clause pair worth the full item set, while
// every sampled clause pair stays below (23/32 + 2 eps) m. The planted
// clause is provably excluded from every (k, alpha)-sketch with alpha <= 1/2.
// ---------------------------------------------------------------------------

struct TightParams {
  Rat epsilon;  // in (0, 1/8)
  int m = 0;    // multiple of 4

  int t() const;                       // clauses per side beside the planted one: ceil(128/eps)
  double gamma() const;                // 5/8 + sqrt(3)/8
  std::array<double, 4> p() const;     // per-quarter one-probabilities, Alice
  std::array<double, 4> q() const;     // per-quarter one-probabilities, Bob
  ItemSet block(int j) const;          // quarter A_{j+1} of [m]

  void validate() const;
};

struct TightConditionReport {
  bool all_pass = false;
  std::string first_failure;  // condition name, empty when all pass
};

struct TightInstance {
  TightParams params;
  uint64_t seed = 0;
  int retries_used = 0;
  bool verified = false;
  TightConditionReport conditions;
  Valuation v1{std::vector<Clause>{Clause(ItemSet(1))}};
  Valuation v2{std::vector<Clause>{Clause(ItemSet(1))}};
  // Clause 0 on each side is the planted pair (first/second half of [m]).
};

/// Samples per the block-probability table and resamples until the seven
/// concentration conditions hold, up to max_retries; a failing final attempt
/// is returned with verified = false.
TightInstance gen_tight(const TightParams& params, uint64_t seed, int max_retries = 1000);

/// Re-checks the seven conditions on an instance (exact rational thresholds).
TightConditionReport check_tight_conditions(const TightParams& params, const Valuation& v1,
                                      const Valuation& v2);

struct TightPairScan {
  long long sw_star = 0;            // max over all clause pairs (= m when planted)
  long long max_nonplanted = 0;     // max over pairs avoiding clause 0 on both sides
};

/// One pass over all (t+1)^2 cross pairs.
TightPairScan tight_scan_pairs(const TightInstance& inst);

struct TightExclusionReport {
  bool pass = false;
  bool instance_verified = false;
  std::string declined_reason;  // set when the instance was not verified
  bool sketch_excludes_planted[2] = {false, false};
  bool swap_strictly_improves[2] = {false, false};
  long long sw_star = 0;
  long long max_nonplanted_pair = 0;
  bool pair_bound_ok = false;  // max_nonplanted <= (23/32 + 2 eps) m
  Sketch sketch1, sketch2;
};

/// Computes both sides' (k,alpha)-sketches, confirms the planted clause is
/// absent, exhibits the strictly improving swap out of any sketch that
/// contains it, and checks the best-pair welfare cap.
TightExclusionReport verify_tight_exclusion(const TightInstance& inst, int k, const Rat& alpha,
                                      const TightPairScan* scan = nullptr);

// ---------------------------------------------------------------------------
// Lower-bound input distribution: a hidden bit decides whether a
// complementary set pair is planted (welfare m) or a duplicated set is
// (welfare unchanged), among clauses drawn from overlapping biased families.
// ---------------------------------------------------------------------------

struct HiddenBitInstance {
  int m = 0;  // multiple of 6
  int l = 0;  // clauses per side
  uint64_t seed = 0;
  // Hidden fields, for tests and --reveal only.
  int hidden_bit = 0;  // M
  ItemSet set_s, set_t, u1, u2;
  int j1 = 0, j2 = 0;  // planted positions
  Valuation v1{std::vector<Clause>{Clause(ItemSet(1))}};
  Valuation v2{std::vector<Clause>{Clause(ItemSet(1))}};
};

/// Samples S, T, the hidden bit (or force_m in {0,1}), the planted sets and
/// the remaining clauses from the conditioned uniform families.
HiddenBitInstance gen_hidden_bit(int m, int l, uint64_t seed, int force_m = -1);

struct HiddenBitStats {
  int m = 0, l = 0;
  long long pair_trials = 0, instance_trials = 0;
  // Case means of pair welfare under M = 0.
  bool both_planted_always_half = false;  // |U1 u U2| = m/2 on every draw
  double one_planted_mean = 0, one_planted_expected = 0, one_planted_band = 0;
  bool one_planted_ok = false;
  double neither_mean = 0, neither_expected = 0, neither_band = 0;
  bool neither_ok = false;
  // Full-instance statistics.
  double pr_sw_exceeds_alpha_m0 = 0;  // empirical Pr[SW* > alpha m | M = 0]
  double pr_sw_equals_m_m1 = 0;       // must be 1.0
};

/// Monte-Carlo verification of the construction's welfare statistics. The
/// 3-sigma bands use exact per-item variances (an upper bound for these
/// negatively correlated indicators).
HiddenBitStats hidden_bit_stats(int m, int l, long long trials, double alpha, uint64_t seed);

}  // namespace xosim
