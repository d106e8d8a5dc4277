#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xosim/generators.hpp"
#include "xosim/sketch.hpp"

using namespace xosim;

namespace {

Valuation bxos(int m, const std::vector<std::vector<int>>& sets) {
  return Valuation::from_sets(m, sets);
}

}  // namespace

TEST_SUITE("sketch") {

TEST_CASE("binary objective, hand-checked") {
  // x = (1/2, 1, 1/2) under clauses {0,1} and {1,2}:
  // (1/2 - 1/8) + (1 - 1/2) + (1/2 - 1/8) = 5/4.
  Valuation v = bxos(3, {{0, 1}, {1, 2}});
  CHECK(objective_binary(v, {0, 1}, Rat(1, 2)) == Rat(5, 4));

  // k = 1: objective = |A| (1 - alpha).
  Valuation single = bxos(4, {{0, 1, 2}});
  CHECK(objective_binary(single, {0}, Rat(1, 3)) == Rat(3) * Rat(2, 3));

  // alpha = 0: mean clause size.
  Valuation two = bxos(4, {{0, 1, 2}, {3}});
  CHECK(objective_binary(two, {0, 1}, Rat(0)) == Rat(4, 2));
}

TEST_CASE("binary objective cleared of denominators is an integer") {
  Rng rng(31);
  BxosProfile prof;
  prof.m = 8;
  for (int trial = 0; trial < 30; ++trial) {
    Valuation v = random_bxos_valuation(prof, rng);
    int k = 1 + static_cast<int>(rng.below(6));
    std::vector<int> idx;
    for (int j = 0; j < k; ++j)
      idx.push_back(static_cast<int>(rng.below(static_cast<uint64_t>(v.num_clauses()))));
    Rat alpha(static_cast<long long>(rng.below(3)), 4);  // 0, 1/4, 1/2
    Rat obj = objective_binary(v, idx, alpha);
    Rat scaled = obj * Rat(static_cast<long long>(k) * k * alpha.den());
    CHECK(scaled.is_integer());
  }
}

TEST_CASE("general objective via breakpoints, hand-checked") {
  // Binary input: must coincide with the binary objective exactly.
  Valuation v = bxos(3, {{0, 1}, {1, 2}});
  CHECK(objective_general_exact(v, {0, 1}, Rat(1, 2)) == Rat(5, 4));
  CHECK(objective_general(v, {0, 1}, Rat(1, 2)) == doctest::Approx(1.25).epsilon(1e-12));

  // k = 1, clause (2,0), alpha = 1/3: the level sits at 1 on (0,2].
  Valuation w({Clause(std::vector<double>{2, 0})});
  CHECK(objective_general_exact(w, {0}, Rat(1, 3)) == Rat(4, 3));

  // k = 2, clauses (2,0) and (1,0), alpha = 0: 1*1 + 1*(1/2) = 3/2.
  Valuation u({Clause(std::vector<double>{2, 0}), Clause(std::vector<double>{1, 0})});
  CHECK(objective_general_exact(u, {0, 1}, Rat(0)) == Rat(3, 2));
}

TEST_CASE("level integrals match an independent Riemann-sum oracle") {
  // Midpoint quadrature of int_0^inf (x_u - a x_u^2) du with x_u counted
  // directly from the clause values; independent of the breakpoint walk.
  auto quadrature = [](const Valuation& v, const std::vector<int>& idx, double alpha) {
    double vmax = 0;
    for (int j : idx)
      for (int i = 0; i < v.m(); ++i) vmax = std::max(vmax, v.clause(j).value(i));
    const int steps = 40000;
    double du = (vmax + 1e-9) / steps, total = 0;
    int k = static_cast<int>(idx.size());
    for (int i = 0; i < v.m(); ++i) {
      for (int s = 0; s < steps; ++s) {
        double u = (s + 0.5) * du;
        int c = 0;
        for (int j : idx)
          if (v.clause(j).value(i) >= u) ++c;
        double x = static_cast<double>(c) / k;
        total += (x - alpha * x * x) * du;
      }
    }
    return total;
  };

  Rng rng(37);
  for (int trial = 0; trial < 6; ++trial) {
    // Non-integral values exercise the float path.
    std::vector<Clause> clauses;
    int t = 3 + static_cast<int>(rng.below(3));
    for (int j = 0; j < t; ++j) {
      std::vector<double> vals(4);
      for (double& x : vals) x = rng.below(8) * 0.37;
      clauses.emplace_back(std::move(vals));
    }
    Valuation v(std::move(clauses));
    std::vector<int> idx;
    for (int j = 0; j < 3; ++j)
      idx.push_back(static_cast<int>(rng.below(static_cast<uint64_t>(v.num_clauses()))));
    std::sort(idx.begin(), idx.end());
    for (double alpha : {0.0, 1.0 / 3, 0.5}) {
      double fast = objective_general(v, idx, alpha == 0.5 ? Rat(1, 2)
                                              : alpha == 0.0 ? Rat(0) : Rat(1, 3));
      CHECK(fast == doctest::Approx(quadrature(v, idx, alpha)).epsilon(1e-4));
    }
  }

  // Integral values: the exact path must agree with quadrature too.
  Rng rng2(38);
  XosProfile prof;
  prof.m = 4;
  for (int trial = 0; trial < 4; ++trial) {
    Valuation v = random_xos_valuation(prof, rng2);
    std::vector<int> idx = {0, v.num_clauses() - 1};
    Rat exact = objective_general_exact(v, idx, Rat(1, 3));
    CHECK(exact.to_double() == doctest::Approx(quadrature(v, idx, 1.0 / 3)).epsilon(1e-4));
  }
}

TEST_CASE("exchange-bound slack matches a Riemann-sum recompute") {
  // Recompute the worst clause's slack by quadrature:
  //   sum_i ( int (x_u - 2a x_u^2) du + 2a int_0^{a({i})} x_u du )
  //     - a([m]) + 2a v([m]) / k.
  Rng rng(39);
  XosProfile prof;
  prof.m = 5;
  for (int trial = 0; trial < 5; ++trial) {
    Valuation v = random_xos_valuation(prof, rng);
    Sketch sk = sketch_exact(v, {3, Rat(1, 3)});
    ExchangeReport rep = verify_exchange_bound_general(sk, v);
    REQUIRE(rep.pass);

    const Clause& worst = v.clause(rep.worst_clause);
    double alpha = 1.0 / 3, vmax = 4.0;
    const int steps = 60000;
    double du = vmax / steps, lhs = 0;
    int k = sk.params.k;
    for (int i = 0; i < v.m(); ++i) {
      for (int s = 0; s < steps; ++s) {
        double u = (s + 0.5) * du;
        int c = 0;
        for (int j : sk.clause_indices)
          if (v.clause(j).value(i) >= u) ++c;
        double x = static_cast<double>(c) / k;
        lhs += (x - 2 * alpha * x * x) * du;
        if (u < worst.value(i)) lhs += 2 * alpha * x * du;
      }
    }
    double rhs = worst.total() - 2 * alpha * v.grand_total() / k;
    CHECK(rep.worst_slack.to_double() == doctest::Approx(lhs - rhs).epsilon(5e-4));
  }
}

TEST_CASE("general objective scales linearly in the values") {
  Rng rng(32);
  XosProfile prof;
  prof.m = 5;
  for (int trial = 0; trial < 20; ++trial) {
    Valuation v = random_xos_valuation(prof, rng);
    std::vector<int> idx = {0, static_cast<int>(rng.below(static_cast<uint64_t>(v.num_clauses())))};
    double base = objective_general(v, idx, Rat(1, 3));
    std::vector<Clause> scaled;
    for (const Clause& c : v.clauses()) {
      auto vals = c.dense_values();
      for (double& x : vals) x *= 2.5;
      scaled.emplace_back(std::move(vals));
    }
    Valuation v2(std::move(scaled));
    CHECK(objective_general(v2, idx, Rat(1, 3)) == doctest::Approx(2.5 * base).epsilon(1e-9));
  }
}

TEST_CASE("exact sketch enumeration, hand-checked") {
  // Multisets of {0,1} with k=2 at alpha=1/2: (0,0) -> 1, (0,1) -> 9/8,
  // (1,1) -> 1/2.
  Valuation v = bxos(3, {{0, 1}, {2}});
  Sketch sk = sketch_exact(v, {2, Rat(1, 2)});
  CHECK(sk.clause_indices == std::vector<int>{0, 1});
  CHECK(sk.objective == Rat(9, 8));
  CHECK(sk.exact_arith);
  CHECK(sk.swap_optimal);

  // k = 1, alpha = 1/2: the largest clause, lowest index on ties.
  Valuation ties = bxos(4, {{0, 1}, {2, 3}, {0, 1, 2}});
  Sketch one = sketch_exact(ties, {1, Rat(1, 2)});
  CHECK(one.clause_indices == std::vector<int>{2});

  // Single clause: repeated k times.
  Valuation single = bxos(3, {{0, 2}});
  Sketch rep = sketch_exact(single, {3, Rat(1, 2)});
  CHECK(rep.clause_indices == std::vector<int>{0, 0, 0});

  CHECK_THROWS_AS(sketch_exact(bxos(2, {{0}, {1}}), {30, Rat(1, 2)}, 10), ResourceError);
}

TEST_CASE("local search reaches the hand-checked optimum and never beats exact") {
  Valuation v = bxos(3, {{0, 1}, {2}});
  Sketch ls = sketch_local_search(v, {2, Rat(1, 2)});
  CHECK(ls.clause_indices == std::vector<int>{0, 1});
  CHECK(ls.objective == Rat(9, 8));

  Valuation single = bxos(3, {{0, 2}});
  CHECK(sketch_local_search(single, {2, Rat(1, 2)}).clause_indices == std::vector<int>{0, 0});

  Rng rng(33);
  BxosProfile prof;
  prof.m = 8;
  for (int trial = 0; trial < 60; ++trial) {
    Valuation r = random_bxos_valuation(prof, rng);
    int k = 1 + static_cast<int>(rng.below(5));
    Rat alpha(static_cast<long long>(rng.below(3)), 4);
    Sketch ex = sketch_exact(r, {k, alpha});
    Sketch lo = sketch_local_search(r, {k, alpha});
    CHECK(ex.objective >= lo.objective);
  }
}

TEST_CASE("general local search matches exact on integral instances") {
  Rng rng(34);
  XosProfile prof;
  prof.m = 6;
  prof.t_max = 5;
  for (int trial = 0; trial < 30; ++trial) {
    Valuation v = random_xos_valuation(prof, rng);
    Sketch ex = sketch_exact(v, {3, Rat(1, 3)});
    Sketch lo = sketch_local_search(v, {3, Rat(1, 3)});
    CHECK(ex.objective >= lo.objective);
    CHECK(lo.swap_optimal);
  }
}

TEST_CASE("binary exchange bound holds for exact and swap-optimal sketches") {
  Rng rng(35);
  BxosProfile prof;
  for (int trial = 0; trial < 120; ++trial) {
    prof.m = 4 + static_cast<int>(rng.below(7));
    Valuation v = random_bxos_valuation(prof, rng);
    int k = 1 + static_cast<int>(rng.below(6));
    Rat alpha = trial % 2 == 0 ? Rat(1, 2) : Rat(1, 3);
    for (const Sketch& sk : {sketch_exact(v, {k, alpha}), sketch_local_search(v, {k, alpha})}) {
      ExchangeReport rep = verify_exchange_bound_binary(sk, v);
      CHECK(rep.pass);
      CHECK(rep.exact);
    }
  }
}

TEST_CASE("binary exchange bound, k=1 single clause slack is 2 alpha |A|") {
  Valuation v = bxos(4, {{0, 1, 2}});
  Sketch sk = sketch_exact(v, {1, Rat(1, 2)});
  ExchangeReport rep = verify_exchange_bound_binary(sk, v);
  CHECK(rep.pass);
  CHECK(rep.worst_slack == Rat(2) * Rat(1, 2) * Rat(3) - Rat(0));  // LHS - RHS = 2a|A| ... = 3
}

TEST_CASE("exchange bound tolerates empty clauses") {
  Valuation v = bxos(3, {{}, {0, 1}});
  Sketch sk = sketch_exact(v, {2, Rat(1, 2)});
  ExchangeReport rep = verify_exchange_bound_binary(sk, v);
  CHECK(rep.pass);
}

TEST_CASE("general exchange bound agrees with binary on binary input") {
  Valuation v = bxos(4, {{0, 1}, {2, 3}, {1, 2}});
  Sketch sk = sketch_exact(v, {2, Rat(1, 2)});
  ExchangeReport bin = verify_exchange_bound_binary(sk, v);
  ExchangeReport gen = verify_exchange_bound_general(sk, v);
  CHECK(bin.pass);
  CHECK(gen.pass);
  CHECK(bin.worst_slack == gen.worst_slack);
}

TEST_CASE("general exchange bound on random integral XOS sketches") {
  Rng rng(36);
  XosProfile prof;
  for (int trial = 0; trial < 60; ++trial) {
    prof.m = 4 + static_cast<int>(rng.below(5));
    Valuation v = random_xos_valuation(prof, rng);
    int k = 1 + static_cast<int>(rng.below(4));
    Rat alpha = trial % 2 == 0 ? Rat(1, 2) : Rat(1, 3);
    for (const Sketch& sk : {sketch_exact(v, {k, alpha}), sketch_local_search(v, {k, alpha})}) {
      ExchangeReport rep = verify_exchange_bound_general(sk, v);
      CHECK(rep.pass);
      CHECK(rep.exact);
    }
  }
}

TEST_CASE("general exchange bound with k = t and alpha = 0") {
  Valuation v({Clause(std::vector<double>{3, 1, 0}), Clause(std::vector<double>{0, 2, 2}),
               Clause(std::vector<double>{1, 1, 1})});
  Sketch sk = sketch_exact(v, {3, Rat(0)});
  ExchangeReport rep = verify_exchange_bound_general(sk, v);
  CHECK(rep.pass);
  CHECK(rep.worst_slack >= Rat(0));
}

TEST_CASE("params are validated") {
  Valuation v = bxos(2, {{0}});
  CHECK_THROWS_AS(sketch_exact(v, {0, Rat(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(sketch_exact(v, {1, Rat(2, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(objective_binary(Valuation({Clause(std::vector<double>{2})}), {0}, Rat(0)),
                  std::invalid_argument);
}

}  // TEST_SUITE
