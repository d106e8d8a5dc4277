#include <doctest.h>

#include <stdexcept>

#include "xosim/generators.hpp"
#include "xosim/welfare.hpp"

using namespace xosim;

namespace {

Valuation bxos(int m, const std::vector<std::vector<int>>& sets) {
  return Valuation::from_sets(m, sets);
}

double realized(const std::vector<Valuation>& vals, const Allocation& a) {
  double total = 0;
  for (size_t l = 0; l < vals.size(); ++l) total += vals[l].eval(a.bundle(static_cast<int>(l)));
  return total;
}

}  // namespace

TEST_SUITE("welfare") {

TEST_CASE("additive pair: per-item max, union for binary") {
  Clause a(ItemSet(3, {0, 1})), b(ItemSet(3, {1, 2}));
  WelfareResult r = sw_star_additive_pair(a, b);
  CHECK(r.value == 3);  // |{0,1} u {1,2}|
  CHECK(r.allocation.bundle(0) == ItemSet(3, {0, 1}));

  Clause c(std::vector<double>{2, 0, 1}), d(std::vector<double>{1, 3, 1});
  WelfareResult r2 = sw_star_additive_pair(c, d);
  CHECK(r2.value == 6);
  // Ties go to player 0 (item 2 here).
  CHECK(r2.allocation.owner(2) == 0);

  WelfareResult r3 = sw_star_additive_pair(c, c);
  CHECK(r3.value == 3);
  CHECK(r3.allocation.bundle(0) == ItemSet::full(3));
}

TEST_CASE("xos pair equals the best clause pair and brute force") {
  Valuation v1 = bxos(3, {{0, 1}, {2}});
  Valuation v2 = bxos(3, {{1, 2}});
  WelfareResult r = sw_star_xos_pair(v1, v2);
  CHECK(r.value == 3);
  CHECK(r.witnesses == std::vector<int>{0, 0});
  CHECK(brute_force_partitions({v1, v2}).value == 3);

  Valuation ones({Clause(std::vector<double>{1, 1, 1, 1})});
  CHECK(sw_star_xos_pair(ones, ones).value == 4);

  Valuation single = bxos(1, {{0}});
  CHECK(sw_star_xos_pair(single, single).value == 1);
}

TEST_CASE("n-player oracle basics") {
  std::vector<Valuation> vals;
  for (int l = 0; l < 3; ++l) vals.push_back(bxos(3, {{l}}));
  WelfareResult r = sw_star_n(vals);
  CHECK(r.value == 3);

  Valuation v1 = bxos(3, {{0, 1}, {2}});
  Valuation v2 = bxos(3, {{1, 2}});
  CHECK(sw_star_n({v1, v2}).value == 3);
}

TEST_CASE("brute force edge cases") {
  Valuation v1({Clause(std::vector<double>{2})});
  Valuation v2({Clause(std::vector<double>{1})});
  CHECK(brute_force_partitions({v1, v2}).value == 2);

  Valuation zero = bxos(3, {{}});
  CHECK(brute_force_partitions({zero, zero}).value == 0);

  CHECK_THROWS_AS(brute_force_partitions({v1, v2}, 1), ResourceError);
  CHECK_THROWS_AS(sw_star_n({v1, v2}, 0), ResourceError);
}

TEST_CASE("tuple oracle agrees with the partition oracle on random instances") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    BxosProfile prof;
    prof.m = 4 + static_cast<int>(rng.below(5));  // n^m <= 3^8 within guard
    int n = 2 + static_cast<int>(rng.below(2));
    auto vals = random_bxos_instance(prof, n, rng);
    WelfareResult a = sw_star_n(vals);
    WelfareResult b = brute_force_partitions(vals);
    CHECK(a.value == b.value);
    CHECK(realized(vals, a.allocation) == a.value);
  }
  XosProfile xprof;
  xprof.m = 6;
  for (int trial = 0; trial < 60; ++trial) {
    auto vals = random_xos_instance(xprof, 2, rng);
    WelfareResult a = sw_star_n(vals);
    WelfareResult b = brute_force_partitions(vals);
    WelfareResult c = sw_star_xos_pair(vals[0], vals[1]);
    CHECK(a.value == b.value);
    CHECK(a.value == c.value);
  }
}

TEST_CASE("upper bound and clause monotonicity") {
  Rng rng(22);
  BxosProfile prof;
  prof.m = 7;
  for (int trial = 0; trial < 50; ++trial) {
    auto vals = random_bxos_instance(prof, 2, rng);
    WelfareResult r = sw_star_n(vals);
    double grand = vals[0].grand_total() + vals[1].grand_total();
    CHECK(r.value <= grand);

    // Adding a clause never decreases SW*.
    auto clauses = vals[0].clauses();
    clauses.emplace_back(ItemSet::from_indices(7, rng.subset(7, 3)));
    std::vector<Valuation> extended{Valuation(clauses), vals[1]};
    CHECK(sw_star_n(extended).value >= r.value);
  }
}

TEST_CASE("alice-only allocation attains SW* against BXOS opponents") {
  // Hand case: Alice {0,1}, Bob max({1,2},{2}) on the rest.
  Clause b(ItemSet(3, {0, 1}));
  Valuation v2 = bxos(3, {{1, 2}, {2}});
  WelfareResult r = alice_only_allocation(b, v2);
  CHECK(r.value == 3);
  CHECK(brute_force_partitions({Valuation({b}), v2}).value == 3);

  // Degenerate grants.
  Clause empty(ItemSet(3));
  CHECK(alice_only_allocation(empty, v2).value == v2.eval(ItemSet::full(3)));
  Clause all(ItemSet::full(3));
  CHECK(alice_only_allocation(all, v2).value == 3);

  CHECK_THROWS_AS(alice_only_allocation(Clause(std::vector<double>{2, 0, 0}), v2),
                  std::invalid_argument);
}

TEST_CASE("alice-only optimality on a random battery") {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    int m = 3 + static_cast<int>(rng.below(8));
    BxosProfile prof;
    prof.m = m;
    Clause b(ItemSet::from_indices(m, rng.subset(m, static_cast<int>(rng.below(m + 1)))));
    Valuation v2 = random_bxos_valuation(prof, rng);
    WelfareResult fast = alice_only_allocation(b, v2);
    WelfareResult slow = brute_force_partitions({Valuation({b}), v2});
    CHECK(fast.value == slow.value);
  }
}

}  // TEST_SUITE
