#include "xosim/hardness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xosim {

// ------------------------------------------------------- tight instance

int TightParams::t() const {
  // ceil(128 / eps) with eps = num/den.
  long long num = epsilon.num(), den = epsilon.den();
  return static_cast<int>((128 * den + num - 1) / num);
}

double TightParams::gamma() const { return 5.0 / 8.0 + std::sqrt(3.0) / 8.0; }

std::array<double, 4> TightParams::p() const {
  double g = gamma(), e = epsilon.to_double();
  return {5.0 / 4.0 - g + e, g + e, 1.0 - g, g - 1.0 / 4.0};
}

std::array<double, 4> TightParams::q() const {
  double g = gamma(), e = epsilon.to_double();
  return {1.0 - g, g - 1.0 / 4.0, 5.0 / 4.0 - g + e, g + e};
}

ItemSet TightParams::block(int j) const {
  ItemSet s(m);
  for (int i = j * m / 4; i < (j + 1) * m / 4; ++i) s.set(i);
  return s;
}

void TightParams::validate() const {
  if (epsilon <= Rat(0) || epsilon >= Rat(1, 8))
    throw std::invalid_argument("TightParams: epsilon must lie in (0, 1/8)");
  if (m <= 0 || m % 4 != 0) throw std::invalid_argument("TightParams: m must be a positive multiple of 4");
  for (double prob : p())
    if (prob < 0 || prob > 1) throw std::invalid_argument("TightParams: probability out of [0,1]");
}

namespace {

// ceil / floor of (r * m) for exact rational thresholds on integer counts.
long long ceil_mul(const Rat& r, long long m) {
  Rat v = r * Rat(m);
  return (v.num() + v.den() - 1) / v.den();
}
long long floor_mul(const Rat& r, long long m) {
  Rat v = r * Rat(m);
  return v.num() / v.den();
}

Clause sample_tight_clause(const TightParams& params, const std::array<double, 4>& probs, Rng& rng) {
  ItemSet supp(params.m);
  int quarter = params.m / 4;
  for (int j = 0; j < 4; ++j) {
    double pr = probs[j];
    for (int i = j * quarter; i < (j + 1) * quarter; ++i)
      if (rng.uniform01() < pr) supp.set(i);
  }
  return Clause(std::move(supp));
}

}  // namespace

TightConditionReport check_tight_conditions(const TightParams& params, const Valuation& v1,
                                      const Valuation& v2) {
  const long long m = params.m;
  const int t = params.t();
  const Rat& eps = params.epsilon;

  const long long size_lo = ceil_mul(Rat(1, 2) + Rat(7, 16) * eps, m);
  const long long size_hi = floor_mul(Rat(1, 2) + eps, m);
  const long long half_lo = ceil_mul(Rat(5, 16) + Rat(7, 16) * eps, m);
  const long long half_hi = m / 2;
  const long long inner_same_hi = floor_mul(Rat(5, 16) + Rat(3, 4) * eps, m);
  const long long inner_cross_lo = ceil_mul(Rat(9, 32), m);

  TightConditionReport rep;
  ItemSet first_half = params.block(0) | params.block(1);
  ItemSet second_half = params.block(2) | params.block(3);

  auto fail = [&](const std::string& name) {
    rep.all_pass = false;
    rep.first_failure = name;
    return rep;
  };

  // 1-2: clause sizes; 3-4: mass on the planted half.
  for (int side = 0; side < 2; ++side) {
    const Valuation& v = side == 0 ? v1 : v2;
    const ItemSet& half = side == 0 ? first_half : second_half;
    for (int j = 1; j <= t; ++j) {
      long long size = v.clause(j).support().count();
      if (size < size_lo || size > size_hi)
        return fail(side == 0 ? "1:size-alice" : "2:size-bob");
      long long on_half = ItemSet::and_count(v.clause(j).support(), half);
      if (on_half < half_lo || on_half > half_hi)
        return fail(side == 0 ? "3:half-mass-alice" : "4:half-mass-bob");
    }
  }
  // 5-6: same-side pairwise inner products stay small.
  for (int side = 0; side < 2; ++side) {
    const Valuation& v = side == 0 ? v1 : v2;
    for (int j = 1; j <= t; ++j) {
      for (int jl = j + 1; jl <= t; ++jl) {
        if (ItemSet::and_count(v.clause(j).support(), v.clause(jl).support()) > inner_same_hi)
          return fail(side == 0 ? "5:inner-alice" : "6:inner-bob");
      }
    }
  }
  // 7: every cross pair overlaps substantially.
  for (int j = 1; j <= t; ++j) {
    for (int jl = 1; jl <= t; ++jl) {
      if (ItemSet::and_count(v1.clause(j).support(), v2.clause(jl).support()) < inner_cross_lo)
        return fail("7:inner-cross");
    }
  }
  rep.all_pass = true;
  return rep;
}

TightInstance gen_tight(const TightParams& params, uint64_t seed, int max_retries) {
  params.validate();
  const int t = params.t();
  const auto probs_p = params.p();
  const auto probs_q = params.q();

  TightInstance inst;
  inst.params = params;
  inst.seed = seed;

  Clause planted1(params.block(0) | params.block(1));
  Clause planted2(params.block(2) | params.block(3));

  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Rng rng(Rng::derive(seed, static_cast<uint64_t>(attempt)));
    std::vector<Clause> cl1{planted1}, cl2{planted2};
    cl1.reserve(t + 1);
    cl2.reserve(t + 1);
    for (int j = 0; j < t; ++j) cl1.push_back(sample_tight_clause(params, probs_p, rng));
    for (int j = 0; j < t; ++j) cl2.push_back(sample_tight_clause(params, probs_q, rng));
    Valuation v1(std::move(cl1)), v2(std::move(cl2));
    TightConditionReport rep = check_tight_conditions(params, v1, v2);
    inst.v1 = std::move(v1);
    inst.v2 = std::move(v2);
    inst.conditions = rep;
    inst.retries_used = attempt + 1;
    if (rep.all_pass) {
      inst.verified = true;
      return inst;
    }
  }
  inst.verified = false;  // best attempt, flagged
  return inst;
}

TightPairScan tight_scan_pairs(const TightInstance& inst) {
  TightPairScan scan;
  int n1 = inst.v1.num_clauses(), n2 = inst.v2.num_clauses();
  std::vector<long long> size2(n2);
  for (int j = 0; j < n2; ++j) size2[j] = inst.v2.clause(j).support().count();
  for (int i = 0; i < n1; ++i) {
    long long size1 = inst.v1.clause(i).support().count();
    for (int j = 0; j < n2; ++j) {
      long long un = size1 + size2[j] -
                     ItemSet::and_count(inst.v1.clause(i).support(), inst.v2.clause(j).support());
      scan.sw_star = std::max(scan.sw_star, un);
      if (i != 0 && j != 0) scan.max_nonplanted = std::max(scan.max_nonplanted, un);
    }
  }
  return scan;
}

TightExclusionReport verify_tight_exclusion(const TightInstance& inst, int k, const Rat& alpha,
                                      const TightPairScan* scan) {
  TightExclusionReport rep;
  rep.instance_verified = inst.verified;
  if (!inst.verified) {
    rep.declined_reason = "instance not verified; first failing condition: " +
                          (inst.conditions.first_failure.empty() ? std::string("unknown")
                                                                 : inst.conditions.first_failure);
    return rep;
  }
  if (alpha > Rat(1, 2)) throw std::invalid_argument("verify_tight_exclusion: alpha must be <= 1/2");
  SketchParams sp{k, alpha};
  sp.validate();

  rep.sketch1 = sketch_local_search(inst.v1, sp);
  rep.sketch2 = sketch_local_search(inst.v2, sp);

  for (int side = 0; side < 2; ++side) {
    const Valuation& v = side == 0 ? inst.v1 : inst.v2;
    const Sketch& sk = side == 0 ? rep.sketch1 : rep.sketch2;
    rep.sketch_excludes_planted[side] =
        std::find(sk.clause_indices.begin(), sk.clause_indices.end(), 0) ==
        sk.clause_indices.end();

    // Plant clause 0 into the sketch, then swap it for an unused sampled
    // clause: the objective must strictly increase.
    std::vector<int> with_planted = sk.clause_indices;
    with_planted[0] = 0;
    int replacement = -1;
    for (int cand = 1; cand < v.num_clauses(); ++cand) {
      if (std::find(with_planted.begin(), with_planted.end(), cand) == with_planted.end()) {
        replacement = cand;
        break;
      }
    }
    std::vector<int> swapped = with_planted;
    swapped[0] = replacement;
    rep.swap_strictly_improves[side] =
        objective_binary(v, swapped, alpha) > objective_binary(v, with_planted, alpha);
  }

  TightPairScan local;
  if (scan == nullptr) {
    local = tight_scan_pairs(inst);
    scan = &local;
  }
  rep.sw_star = scan->sw_star;
  rep.max_nonplanted_pair = scan->max_nonplanted;
  // (23/32 + 2 eps) m, compared exactly.
  Rat cap = (Rat(23, 32) + Rat(2) * inst.params.epsilon) * Rat(inst.params.m);
  rep.pair_bound_ok = Rat(rep.max_nonplanted_pair) <= cap;

  rep.pass = rep.sketch_excludes_planted[0] && rep.sketch_excludes_planted[1] &&
             rep.swap_strictly_improves[0] && rep.swap_strictly_improves[1] &&
             rep.pair_bound_ok && rep.sw_star == inst.params.m;
  return rep;
}

// ------------------------------------------------- hidden-bit distribution

namespace {

ItemSet sample_d_s(int m, const ItemSet& s, Rng& rng) {
  // Uniform over sets with |X n S| = m/3 and |X n S^c| = m/6.
  std::vector<int> in_s = s.indices();
  std::vector<int> out_s = (~s).indices();
  ItemSet x(m);
  for (int i : rng.subset_of(in_s, m / 3)) x.set(i);
  for (int i : rng.subset_of(out_s, m / 6)) x.set(i);
  return x;
}

}  // namespace

HiddenBitInstance gen_hidden_bit(int m, int l, uint64_t seed, int force_m) {
  if (m <= 0 || m % 6 != 0) throw std::invalid_argument("gen_hidden_bit: m must be a positive multiple of 6");
  if (l < 2) throw std::invalid_argument("gen_hidden_bit: l must be >= 2");
  if (force_m < -1 || force_m > 1) throw std::invalid_argument("gen_hidden_bit: force_m must be -1, 0 or 1");

  Rng rng(seed);
  HiddenBitInstance inst;
  inst.m = m;
  inst.l = l;
  inst.seed = seed;

  inst.set_s = ItemSet::from_indices(m, rng.subset(m, m / 2));
  // T: m/3 inside S, the rest outside.
  std::vector<int> in_s = inst.set_s.indices();
  std::vector<int> out_s = (~inst.set_s).indices();
  ItemSet t_set(m);
  for (int i : rng.subset_of(in_s, m / 3)) t_set.set(i);
  for (int i : rng.subset_of(out_s, m / 2 - m / 3)) t_set.set(i);
  inst.set_t = t_set;

  inst.hidden_bit = force_m >= 0 ? force_m : static_cast<int>(rng.below(2));

  ItemSet st = inst.set_s & inst.set_t;
  ItemSet s_tc = inst.set_s - inst.set_t;
  ItemSet sc_tc = ~(inst.set_s | inst.set_t);

  ItemSet u1(m);
  if (inst.hidden_bit == 1) {
    // S n T^c entirely, m/6 of S n T, m/6 of S^c n T^c; complementary U2.
    s_tc.for_each([&](int i) { u1.set(i); });
    for (int i : rng.subset_of(st.indices(), m / 6)) u1.set(i);
    for (int i : rng.subset_of(sc_tc.indices(), m / 6)) u1.set(i);
    inst.u2 = ~u1;
  } else {
    // S n T entirely plus m/6 of S^c n T^c; duplicated on both sides.
    st.for_each([&](int i) { u1.set(i); });
    for (int i : rng.subset_of(sc_tc.indices(), m / 6)) u1.set(i);
    inst.u2 = u1;
  }
  inst.u1 = u1;

  inst.j1 = static_cast<int>(rng.below(static_cast<uint64_t>(l)));
  inst.j2 = static_cast<int>(rng.below(static_cast<uint64_t>(l)));

  std::vector<Clause> cl1, cl2;
  cl1.reserve(l);
  cl2.reserve(l);
  for (int j = 0; j < l; ++j)
    cl1.emplace_back(j == inst.j1 ? inst.u1 : sample_d_s(m, inst.set_s, rng));
  for (int j = 0; j < l; ++j)
    cl2.emplace_back(j == inst.j2 ? inst.u2 : sample_d_s(m, inst.set_t, rng));
  inst.v1 = Valuation(std::move(cl1));
  inst.v2 = Valuation(std::move(cl2));
  return inst;
}

namespace {

long long max_pair_union(const Valuation& v1, const Valuation& v2) {
  long long best = 0;
  for (int i = 0; i < v1.num_clauses(); ++i)
    for (int j = 0; j < v2.num_clauses(); ++j)
      best = std::max<long long>(
          best, ItemSet::or_count(v1.clause(i).support(), v2.clause(j).support()));
  return best;
}

}  // namespace

HiddenBitStats hidden_bit_stats(int m, int l, long long trials, double alpha, uint64_t seed) {
  if (m <= 0 || m % 6 != 0) throw std::invalid_argument("hidden_bit_stats: m must be a multiple of 6");
  HiddenBitStats st;
  st.m = m;
  st.l = l;
  st.pair_trials = trials;
  st.instance_trials = trials;

  // Pair-case statistics, M = 0: draw (S, T, U1) and fresh clauses.
  Rng rng(Rng::derive(seed, 1));
  st.both_planted_always_half = true;
  double one_sum = 0, nei_sum = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    HiddenBitInstance inst = gen_hidden_bit(m, 2, Rng::derive(seed, 1'000'000 + trial), 0);
    // Both planted: |U1 u U2| = |U1|.
    if (ItemSet::or_count(inst.u1, inst.u2) != m / 2) st.both_planted_always_half = false;
    // One planted: planted U1 against a fresh draw from D_T.
    one_sum += ItemSet::or_count(inst.u1, sample_d_s(m, inst.set_t, rng));
    // Neither planted.
    nei_sum += ItemSet::or_count(sample_d_s(m, inst.set_s, rng), sample_d_s(m, inst.set_t, rng));
  }
  st.one_planted_mean = one_sum / static_cast<double>(trials);
  st.one_planted_expected = 13.0 * m / 18.0;
  // Per-item variance: items outside U1 are covered w.p. 2/3 (in T) or 1/3
  // (outside), each contributing 2/9; |not U1| = m/2.
  double var_one = (m / 2.0) * (2.0 / 9.0);
  st.one_planted_band = 3.0 * std::sqrt(var_one / static_cast<double>(trials));
  st.one_planted_ok = std::abs(st.one_planted_mean - st.one_planted_expected) <= st.one_planted_band;

  st.neither_mean = nei_sum / static_cast<double>(trials);
  st.neither_expected = 20.0 * m / 27.0;
  // Blocks SnT, (SnT^c)u(TnS^c), S^cnT^c of size m/3 each with per-item
  // variances 8/81, 14/81, 20/81.
  double var_nei = (m / 3.0) * (8.0 + 14.0 + 20.0) / 81.0;
  st.neither_band = 3.0 * std::sqrt(var_nei / static_cast<double>(trials));
  st.neither_ok = std::abs(st.neither_mean - st.neither_expected) <= st.neither_band;

  // Full-instance welfare dichotomy.
  long long exceed = 0, hit_m = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    HiddenBitInstance i0 = gen_hidden_bit(m, l, Rng::derive(seed, 2'000'000 + trial), 0);
    if (static_cast<double>(max_pair_union(i0.v1, i0.v2)) > alpha * m) ++exceed;
    HiddenBitInstance i1 = gen_hidden_bit(m, l, Rng::derive(seed, 3'000'000 + trial), 1);
    if (max_pair_union(i1.v1, i1.v2) == m) ++hit_m;
  }
  st.pr_sw_exceeds_alpha_m0 = static_cast<double>(exceed) / static_cast<double>(trials);
  st.pr_sw_equals_m_m1 = static_cast<double>(hit_m) / static_cast<double>(trials);
  return st;
}

}  // namespace xosim
