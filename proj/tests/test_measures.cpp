#include <catch_amalgamated.hpp>

#include "orthocyc/measures.hpp"

using namespace orthocyc;

namespace {
const MeasureParams kHalf2{Rational(1, 2), 2};
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(MeasureParams(Rational(1, 2), 3), UnsupportedField);
  CHECK_THROWS(MeasureParams(Rational(3, 2), 2));
  CHECK_THROWS(MeasureParams(Rational(0), 2));
  CHECK_NOTHROW(MeasureParams(Rational(7, 5), 2));
}

TEST_CASE("mass values") {
  const auto& p = kHalf2;
  auto empty = r_mass({}, p);
  CHECK(empty.coefficient == Rational(4, 5));
  Bracket prod = infinite_product(p);
  CHECK(prod.hi - prod.lo < rpow(2, -120));
  CHECK(prod.lo > Rational(8, 10));
  CHECK(prod.hi < Rational(87, 100));
  CHECK(r_mass(Partition{3}, p).coefficient == 0);
  // prefactor · q u² / (q² − 1)
  CHECK(r_mass(Partition{1, 1}, p).coefficient == Rational(4, 5) * 2 * Rational(1, 4) / 3);
  CHECK(re_mass(Partition{2}, p).coefficient == 0);
  CHECK(ro_mass(Partition{1, 1}, p).coefficient == 0);
  CHECK(ro_mass(Partition{2}, p).coefficient == 4 * r_weight(Partition{2}, p));
}

TEST_CASE("P' values") {
  for (long q : {2L, 4L})
    for (Rational u : {Rational(1, 2), Rational(1, 3)}) {
      MeasureParams p(u, q);
      CHECK(pprime_sp(0, p) == 1);
      CHECK(pprime_o(0, p) == 1);
      CHECK(pprime_o(2, p) == u * u / (q * (1 - u * u / q) * (1 - Rational(1, q * q))));
      CHECK(pprime_sp(1, p) == u * u / (q * (1 - u * u / q)));
    }
}

TEST_CASE("transition rows") {
  CHECK(k1(0, 0, kHalf2) == 1);
  CHECK(k2(0, 0, kHalf2) == 1);
  CHECK(k1(3, 2, kHalf2) == 0);
  CHECK(k1(2, 3, kHalf2) == 0);
  for (auto p : {kHalf2, MeasureParams(Rational(1, 4), 2), MeasureParams(Rational(1, 2), 4)})
    for (int a = 0; a <= 12; ++a) {
      Rational s1 = 0, s2 = 0;
      for (int b = 0; b <= a; ++b) {
        s1 += k1(a, b, p);
        s2 += k2(a, b, p);
      }
      CHECK(s1 == 1);
      CHECK(s2 == 1);
    }
}

TEST_CASE("chain paths reproduce the masses") {
  for (auto p : {kHalf2, MeasureParams(Rational(1, 2), 4), MeasureParams(Rational(5, 4), 2)})
    for (int n = 0; n <= 10; ++n)
      for_each_partition(n, [&](const Partition& l) {
        for (auto v : {MeasureVariant::R, MeasureVariant::Re, MeasureVariant::Ro})
          REQUIRE(chain_path_coefficient(l, p, v) == measure_mass(l, p, v).coefficient);
      });
}

TEST_CASE("initial column law") {
  auto law = initial_column_dist(kHalf2, MeasureVariant::R);
  CHECK(law.total.lo >= 1 - Rational(1, 1000000000));
  CHECK(law.total.hi - law.total.lo < Rational(1, 1000000000));
  auto even = initial_column_dist(kHalf2, MeasureVariant::Re);
  for (std::size_t a = 1; a < even.coefficients.size(); a += 2) CHECK(even.coefficients[a] == 0);
  auto odd = initial_column_dist(kHalf2, MeasureVariant::Ro);
  for (std::size_t a = 0; a < odd.coefficients.size(); a += 2) CHECK(odd.coefficients[a] == 0);
  // small u concentrates the law at 0
  MeasureParams tiny(Rational(1, 1000), 2);
  auto t = initial_column_dist(tiny, MeasureVariant::R);
  CHECK(t.coefficients[0] * infinite_product(tiny).lo > Rational(999, 1000));
}

TEST_CASE("column marginal matches summed masses") {
  const auto& p = kHalf2;
  const int T = 30;
  std::vector<Rational> by_length(7, 0);
  for (int n = 0; n <= T; ++n)
    for_each_partition(n, [&](const Partition& l) {
      if (l.length() <= 6) by_length[l.length()] += r_mass(l, p).coefficient;
    });
  Rational tail = partition_tail_bound(p, MeasureVariant::R, T);
  for (int a = 0; a <= 6; ++a) {
    Rational init = initial_column_coefficient(a, p, MeasureVariant::R);
    CHECK(by_length[a] <= init);
    CHECK(init <= by_length[a] + tail / infinite_product(p).lo);
  }
}

TEST_CASE("normalization brackets") {
  for (auto p : {MeasureParams(Rational(1, 4), 2), kHalf2, MeasureParams(Rational(1, 2), 4)})
    for (auto v : {MeasureVariant::R, MeasureVariant::Re, MeasureVariant::Ro}) {
      Bracket b = normalization_bracket(p, v, 40);
      CHECK(b.contains(1));
      CHECK(b.hi - b.lo < Rational(1, 1000000));
    }
}

TEST_CASE("sampling") {
  auto a = sample(kHalf2, MeasureVariant::R, 7, 50);
  auto b = sample(kHalf2, MeasureVariant::R, 7, 50);
  CHECK(a == b);
  for (const auto& l : sample(kHalf2, MeasureVariant::Re, 3, 2000)) {
    REQUIRE(l.length() % 2 == 0);
    REQUIRE(odd_parts_even_mult(l));
  }
  for (const auto& l : sample(kHalf2, MeasureVariant::Ro, 3, 2000)) {
    REQUIRE(l.length() % 2 == 1);
    REQUIRE(odd_parts_even_mult(l));
  }
  long empty = 0;
  for (const auto& l : sample(MeasureParams(Rational(1, 1000), 2), MeasureVariant::R, 1, 1000)) empty += l.empty();
  CHECK(empty >= 995);
  CHECK(sampler_tv(kHalf2, MeasureVariant::R, 11, 100000).tv_distance < 0.02);
}

TEST_CASE("mixture identities") {
  for (int n = 0; n <= 4; ++n)
    for_each_partition(n, [&](const Partition& l) {
      for (auto v : {MeasureVariant::R, MeasureVariant::Re, MeasureVariant::Ro}) {
        auto sides = mixture_identity(l, 2, v, 8);
        for (int i = 0; i <= 8; ++i) REQUIRE(sides.groups[i] == sides.measure[i]);
      }
    });
}
