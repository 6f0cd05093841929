#include <catch_amalgamated.hpp>

#include "orthocyc/cycleindex.hpp"

using namespace orthocyc;

namespace {
const Poly kZ1{{1, 1}};
const Poly kW{{1, 1, 1}};
const Poly kC1{{1, 1, 0, 1}};
const Poly kC2{{1, 0, 1, 1}};

RcfData data(std::initializer_list<std::pair<Poly, Partition>> entries) {
  RcfData d;
  for (const auto& [phi, lambda] : entries) d.set(phi, lambda);
  return d;
}
}  // namespace

TEST_CASE("validate_o_data") {
  FqField F(2);
  CHECK(validate_o_data(F, data({{kZ1, {2}}}), 2));
  CHECK_FALSE(validate_o_data(F, data({{kZ1, {3, 1}}}), 4));
  CHECK_FALSE(validate_o_data(F, data({{kC1, {1}}}), 6));
  CHECK(validate_o_data(F, data({{kC1, {1}}, {kC2, {1}}}), 6));
  CHECK_FALSE(validate_o_data(F, data({{Poly{{0, 1}}, {1}}}), 1));
}

TEST_CASE("unipotent weights") {
  CHECK(p_sum_unipotent({2}, 2) == 1);
  CHECK(p_diff_unipotent({2}, 2) == 0);
  CHECK(p_sum_unipotent({1, 1}, 2) == Rational(2, 3));
  CHECK(p_diff_unipotent({1, 1}, 2) == Rational(1, 3));
  CHECK(p_sum_unipotent({3, 1}, 2) == 0);
}

TEST_CASE("class proportions in dimension 2") {
  FqField F(2);
  auto w = class_proportions(F, data({{kW, {1}}}));
  CHECK(w.p_plus == 0);
  CHECK(w.p_minus == Rational(1, 3));
  auto id = class_proportions(F, data({{kZ1, {1, 1}}}));
  CHECK(id.p_plus == Rational(1, 2));
  CHECK(id.p_minus == Rational(1, 6));
  auto e = class_proportions(F, RcfData{});
  CHECK(e.p_plus + e.p_minus == 1);
  CHECK_THROWS_AS(class_proportions(F, data({{kZ1, {3, 1}}})), InvalidData);
  CHECK_THROWS_AS(class_proportions(F, data({{kC1, {1}}})), InvalidData);
}

TEST_CASE("omega proportions") {
  FqField F(2);
  CHECK(omega_class_proportion(F, data({{kZ1, {1, 1}}}), -1) == Rational(1, 3));
  CHECK(omega_class_proportion(F, data({{kZ1, {2}}}), -1) == 0);
  CHECK(omega_class_proportion(F, data({{kZ1, {2}}}), 1) == 0);
  CHECK(omega_class_proportion(F, data({{kW, {1}}}), -1) == Rational(2, 3));
}

TEST_CASE("total mass of each group is 1") {
  for (long q : {2, 4}) {
    FqField F(q);
    IrreducibleCatalog cat(F);
    for (int dim = 2; dim <= 8; dim += 2) {
      Rational plus = 0, minus = 0, om_plus = 0, om_minus = 0;
      for_each_o_data(cat, dim, [&](const RcfData& d) {
        REQUIRE(validate_o_data(F, d, dim));
        auto p = class_proportions(F, d);
        REQUIRE(p.p_plus >= 0);
        REQUIRE(p.p_minus >= 0);
        plus += p.p_plus;
        minus += p.p_minus;
        om_plus += omega_class_proportion(F, d, 1);
        om_minus += omega_class_proportion(F, d, -1);
      });
      CHECK(plus == 1);
      CHECK(minus == 1);
      CHECK(om_plus == 1);
      CHECK(om_minus == 1);
    }
  }
}

TEST_CASE("p_diff matches unipotent proportions of GL over q^2") {
  for (long q : {2, 4})
    for (int size = 0; size <= 12; size += 2)
      for (const auto& lambda : iter_partitions(size, all_mults_even)) {
        std::vector<int> half;
        for (int i = 1; i <= lambda.largest(); ++i) half.insert(half.end(), lambda.multiplicity(i) / 2, i);
        REQUIRE(p_diff_unipotent(lambda, q) == Rational(1, gl_unip_centralizer(Partition(half), q * q)));
      }
}

TEST_CASE("p_diff is nonnegative on unipotent data") {
  for (int size = 0; size <= 16; ++size)
    for (const auto& lambda : iter_partitions(size, odd_parts_even_mult)) {
      REQUIRE(p_diff_unipotent(lambda, 2) >= 0);
      REQUIRE(p_sum_unipotent(lambda, 2) >= p_diff_unipotent(lambda, 2));
    }
}

TEST_CASE("cycle index with unit weights") {
  for (long q : {2, 4}) {
    CycleWeights ones;
    Series sum = cycle_index_series(q, ones, 12, CycleVariant::Sum);
    Series diff = cycle_index_series(q, ones, 12, CycleVariant::Diff);
    Series omega = cycle_index_series(q, ones, 12, CycleVariant::OmegaSum);
    CHECK(sum[0] == 1);
    CHECK(diff[0] == 1);
    for (int n = 1; 2 * n <= 12; ++n) {
      CHECK(sum[2 * n] == 2);
      CHECK(diff[2 * n] == 0);
      CHECK(omega[2 * n] == 1);
      CHECK(sum[2 * n - 1] == 0);
    }
  }
  CHECK_THROWS_AS(cycle_index_series(3, CycleWeights{}, 4, CycleVariant::Sum), UnsupportedField);
}

TEST_CASE("cycle index restricted to unipotents with 2k parts") {
  const long q = 2;
  for (int k = 0; k <= 3; ++k) {
    CycleWeights w;
    w.z_minus_1 = [k](const Partition& l) { return Rational(l.length() == 2 * k ? 1 : 0); };
    w.other = [](int, bool, const Partition& l) { return Rational(l.empty() ? 1 : 0); };
    Series s = cycle_index_series(q, w, 14, CycleVariant::Sum);
    for (int size = 1; size <= 14; ++size) {
      Rational direct = 0;
      for (const auto& l : iter_partitions(size))
        if (l.length() == 2 * k) direct += p_sum_unipotent(l, q);
      REQUIRE(s[size] == direct);
    }
  }
}

TEST_CASE("cycle index coefficients equal sums over explicit data") {
  const long q = 2;
  FqField F(q);
  IrreducibleCatalog cat(F);
  CycleWeights w;
  w.z_minus_1 = [](const Partition& l) { return Rational(l.length() + 1); };  // 1 on the empty partition
  w.other = [](int deg, bool sc, const Partition& l) -> Rational {
    if (l.empty()) return 1;
    Rational v = frac(l.size() + deg, sc ? 2 : 3);
    return sc ? v : v * v;
  };
  Series sum = cycle_index_series(q, w, 8, CycleVariant::Sum);
  Series diff = cycle_index_series(q, w, 8, CycleVariant::Diff);
  for (int dim = 2; dim <= 8; dim += 2) {
    Rational s = 0, d = 0;
    for_each_o_data(cat, dim, [&](const RcfData& data) {
      Rational x = w.z_minus_1(data.at(z_minus_one(F)));
      for (const auto& [phi, lambda] : data.blocks) {
        if (phi == z_minus_one(F)) continue;
        Rational v = frac(lambda.size() + phi.degree(), is_self_conjugate(F, phi) ? 2 : 3);
        x *= v;
      }
      auto p = class_proportions(F, data);
      s += x * (p.p_plus + p.p_minus);
      d += x * (p.p_plus - p.p_minus);
    });
    CHECK(sum[dim] == s);
    CHECK(diff[dim] == d);
  }
}
