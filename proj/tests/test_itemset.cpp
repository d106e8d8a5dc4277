#include <doctest.h>

#include "xosim/itemset.hpp"
#include "xosim/rng.hpp"

using xosim::ItemSet;
using xosim::Rng;

TEST_SUITE("itemset") {

TEST_CASE("basic ops") {
  ItemSet s(10, {0, 3, 7});
  CHECK(s.count() == 3);
  CHECK(s.test(3));
  CHECK(!s.test(4));
  s.reset(3);
  CHECK(s.count() == 2);

  ItemSet a(5, {0, 1, 2}), b(5, {2, 3});
  CHECK((a & b) == ItemSet(5, {2}));
  CHECK((a | b) == ItemSet(5, {0, 1, 2, 3}));
  CHECK((a - b) == ItemSet(5, {0, 1}));
  CHECK(ItemSet::and_count(a, b) == 1);
  CHECK(ItemSet::or_count(a, b) == 4);
  CHECK(ItemSet::diff_count(a, b) == 2);
}

TEST_CASE("complement respects m across word boundaries") {
  for (int m : {1, 63, 64, 65, 130}) {
    ItemSet s(m);
    s.set(0);
    ItemSet c = ~s;
    CHECK(c.count() == m - 1);
    CHECK((s | c) == ItemSet::full(m));
    CHECK((s & c).none());
  }
}

TEST_CASE("subset and iteration") {
  ItemSet a(70, {5, 64, 69}), b = ItemSet::full(70);
  CHECK(a.is_subset_of(b));
  CHECK(!b.is_subset_of(a));
  CHECK(a.indices() == std::vector<int>{5, 64, 69});
}

TEST_CASE("rng subsets are uniform-size and deterministic") {
  Rng r1(42), r2(42);
  auto s1 = r1.subset(100, 30);
  auto s2 = r2.subset(100, 30);
  CHECK(s1 == s2);
  CHECK(s1.size() == 30);
  for (size_t i = 1; i < s1.size(); ++i) CHECK(s1[i - 1] < s1[i]);

  Rng r3(43);
  CHECK(r3.subset(5, 0).empty());
  CHECK(r3.subset(5, 5).size() == 5);
}

TEST_CASE("rng below covers the range") {
  Rng r(7);
  bool seen[5] = {};
  for (int i = 0; i < 200; ++i) seen[r.below(5)] = true;
  for (bool s : seen) CHECK(s);
}

}  // TEST_SUITE
