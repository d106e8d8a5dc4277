#include <doctest.h>

#include <stdexcept>

#include "xosim/generators.hpp"
#include "xosim/valuation.hpp"

using namespace xosim;

TEST_SUITE("valuation") {

TEST_CASE("clause evaluation is the indicated sum") {
  Clause a(std::vector<double>{1, 0, 1});
  CHECK(a.eval(ItemSet(3, {0, 2})) == 2);
  CHECK(a.eval(ItemSet(3)) == 0);
  Clause b(std::vector<double>{2, 0, 1});
  CHECK(b.eval(ItemSet(3, {0, 1, 2})) == 3);
  CHECK_THROWS_AS(a.eval(ItemSet(4, {0})), std::invalid_argument);
}

TEST_CASE("valuation is the max over clauses") {
  Valuation v = Valuation::from_sets(3, {{0, 1}, {2}});
  CHECK(v.kind() == ValuationKind::BXOS);
  CHECK(v.eval(ItemSet(3, {2})) == 1);
  CHECK(v.eval(ItemSet(3, {0, 1, 2})) == 2);
  CHECK(v.eval(ItemSet(3)) == 0);
}

TEST_CASE("argmax clause ties break to the lowest index") {
  Valuation v = Valuation::from_sets(3, {{0, 1}, {2}});
  CHECK(v.argmax_clause(ItemSet(3, {2})) == 1);
  CHECK(v.argmax_clause(ItemSet(3)) == 0);
  Valuation dup = Valuation::from_sets(2, {{0, 1}, {0, 1}});
  CHECK(dup.argmax_clause(ItemSet(2, {0})) == 0);
}

TEST_CASE("binary detection and integral detection") {
  Clause general(std::vector<double>{0.5, 0});
  CHECK(!general.binary());
  CHECK(!general.integral());
  Clause intc(std::vector<double>{2, 0, 3});
  CHECK(!intc.binary());
  CHECK(intc.integral());
  Clause binc(std::vector<double>{1, 0, 1});
  CHECK(binc.binary());

  Valuation v({intc, binc});
  CHECK(v.kind() == ValuationKind::XOS);
  CHECK(v.integral());
}

TEST_CASE("negative clause values are rejected") {
  CHECK_THROWS_AS(Clause(std::vector<double>{-1, 0}), std::invalid_argument);
}

TEST_CASE("empty clause list is rejected") {
  CHECK_THROWS_AS(Valuation(std::vector<Clause>{}), std::invalid_argument);
}

TEST_CASE("monotonicity, exhaustive on small instances") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int m = 4 + static_cast<int>(rng.below(4));
    BxosProfile prof;
    prof.m = m;
    Valuation v = random_bxos_valuation(prof, rng);
    for (int mask = 0; mask < (1 << m); ++mask) {
      ItemSet s(m);
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) s.set(i);
      double base = v.eval(s);
      for (int i = 0; i < m; ++i) {
        if (s.test(i)) continue;
        ItemSet bigger = s;
        bigger.set(i);
        CHECK(v.eval(bigger) >= base);
      }
    }
  }
}

TEST_CASE("fractional subadditivity witness: argmax clause reproduces the value") {
  Rng rng(12);
  XosProfile prof;
  prof.m = 6;
  for (int trial = 0; trial < 30; ++trial) {
    Valuation v = random_xos_valuation(prof, rng);
    for (int mask = 0; mask < (1 << 6); mask += 3) {
      ItemSet s(6);
      for (int i = 0; i < 6; ++i)
        if ((mask >> i) & 1) s.set(i);
      CHECK(v.clause(v.argmax_clause(s)).eval(s) == v.eval(s));
    }
  }
}

TEST_CASE("BXOS values are integers bounded by the bundle size") {
  Rng rng(13);
  BxosProfile prof;
  prof.m = 8;
  for (int trial = 0; trial < 20; ++trial) {
    Valuation v = random_bxos_valuation(prof, rng);
    for (int rep = 0; rep < 20; ++rep) {
      ItemSet s = ItemSet::from_indices(8, rng.subset(8, static_cast<int>(rng.below(9))));
      long long val = v.eval_int(s);
      CHECK(val <= s.count());
      CHECK(v.eval(s) == static_cast<double>(val));
    }
  }
}

TEST_CASE("restriction zeroes values outside the kept set") {
  Valuation v = Valuation::from_sets(4, {{0, 1, 2}, {2, 3}});
  Valuation r = v.restricted_to(ItemSet(4, {0, 3}));
  CHECK(r.eval(ItemSet::full(4)) == 1);
  CHECK(r.clause(0).support() == ItemSet(4, {0}));
  CHECK(r.clause(1).support() == ItemSet(4, {3}));
}

TEST_CASE("allocation bundles partition the items") {
  Allocation a(5, 3);
  a.assign(0, 2);
  a.assign(3, 1);
  CHECK(a.bundle(0) == ItemSet(5, {1, 2, 4}));
  CHECK(a.bundle(1) == ItemSet(5, {3}));
  CHECK(a.bundle(2) == ItemSet(5, {0}));
  int total = 0;
  for (int l = 0; l < 3; ++l) total += a.bundle(l).count();
  CHECK(total == 5);
}

}  // TEST_SUITE
