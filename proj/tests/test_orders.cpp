#include <catch_amalgamated.hpp>

#include "orthocyc/orders.hpp"

using namespace orthocyc;

TEST_CASE("group orders") {
  CHECK(group_order({Family::GL, 2, 2}) == 6);
  CHECK(group_order({Family::U, 1, 2}) == 3);
  CHECK(group_order({Family::Oplus, 4, 2}) == 72);
  CHECK(group_order({Family::Ominus, 4, 2}) == 120);
  CHECK(group_order({Family::Sp, 2, 2}) == 6);
  CHECK(group_order({Family::OmegaMinus, 4, 2}) == 60);
  CHECK(sp_order(0, 2) == 1);
  CHECK(gl_order(0, 3) == 1);
  CHECK_THROWS_AS(sp_order(3, 2), BadDimension);
  CHECK_THROWS_AS(o_order(1, 5, 2), BadDimension);
}

TEST_CASE("form counts: |Sp|/|O+| + |Sp|/|O-| = q^{2n}") {
  for (long q : {2, 4})
    for (int n = 1; n <= 6; ++n) {
      Integer sp = sp_order(2 * n, q);
      REQUIRE(sp % o_order(1, 2 * n, q) == 0);
      REQUIRE(sp % o_order(-1, 2 * n, q) == 0);
      REQUIRE(sp / o_order(1, 2 * n, q) + sp / o_order(-1, 2 * n, q) == ipow(q, 2 * n));
    }
}

TEST_CASE("A and B factors") {
  FqField F(2);
  Poly w{{1, 1, 1}};
  CHECK(b_factor(F, w, Partition{1}) == 3);
  CHECK(b_factor(F, w, Partition{}) == 1);
  CHECK(a_factor(F, w, Partition{1}, 1) == 3);
  Poly c{{1, 1, 0, 1}};
  CHECK(b_pair_factor(F, c, Partition{1}) == 7);
  CHECK(a_pair_factor(F, c, Partition{1}, 1) == 7);
  CHECK_THROWS_AS(b_factor(F, c, Partition{1}), HalfPowerExposure);
  CHECK_THROWS_AS(a_factor(F, c, Partition{1}, 1), HalfPowerExposure);
}

TEST_CASE("GL unipotent centralizers") {
  CHECK(gl_unip_centralizer(Partition{1}, 2) == 1);
  CHECK(gl_unip_centralizer(Partition{1, 1}, 2) == 6);
  CHECK(gl_unip_centralizer(Partition{2}, 2) == 2);
  for (long q : {2, 4})
    for (int n = 1; n <= 8; ++n) {
      Integer gl = gl_order(n, q);
      Integer total = 0;
      for_each_partition(n, [&](const Partition& p) {
        Integer c = gl_unip_centralizer(p, q);
        REQUIRE(gl % c == 0);
        total += gl / c;
      });
      REQUIRE(total == ipow(q, static_cast<unsigned long>(n) * (n - 1)));
    }
}
