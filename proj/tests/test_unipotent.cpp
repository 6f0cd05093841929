#include <catch_amalgamated.hpp>

#include "orthocyc/unipotent.hpp"

using namespace orthocyc;

namespace {
CanonicalDecomposition dec(std::vector<WTerm> w, std::vector<VTerm> v) { return {std::move(w), std::move(v)}; }
}  // namespace

TEST_CASE("enumerating canonical decompositions") {
  auto two = enum_decomps(2);
  REQUIRE(two.size() == 2);
  CHECK(std::find(two.begin(), two.end(), dec({{1, 1}}, {})) != two.end());
  CHECK(std::find(two.begin(), two.end(), dec({}, {{1, 1}})) != two.end());
  auto four = enum_decomps(4);
  CHECK(four.size() == 5);
  for (const auto& d : {dec({{1, 2}}, {}), dec({{2, 1}}, {}), dec({{1, 1}}, {{1, 1}}), dec({}, {{1, 2}}),
                        dec({}, {{2, 1}})})
    CHECK(std::find(four.begin(), four.end(), d) != four.end());
  for (int two_n = 2; two_n <= 12; two_n += 2)
    for (const auto& d : enum_decomps(two_n)) {
      REQUIRE(d.dimension() == two_n);
      REQUIRE(odd_parts_even_mult(d.jordan_type()));
    }
}

TEST_CASE("symplectic invariants") {
  auto v4 = sp_invariants(dec({}, {{2, 1}}));
  CHECK(v4.delta == 1);
  CHECK(v4.s == 0);
  CHECK(v4.class_count == 2);
  CHECK(sp_invariants(dec({}, {{1, 2}})).class_count == 1);
  long total = 0;
  for (const auto& d : enum_decomps(4)) total += sp_invariants(d).class_count;
  CHECK(total == 6);
  auto gap = sp_invariants(dec({{3, 1}}, {{1, 1}, {3, 1}}));
  CHECK(gap.t == 1);
  CHECK(gap.delta == 0);
  CHECK(gap.s == 0);  // 3 = 2·1 + 1 is linked
  auto iso = sp_invariants(dec({{5, 1}}, {{1, 1}}));
  CHECK(iso.s == 1);
}

TEST_CASE("orthogonal class data") {
  auto w2p = o_class_data(dec({{2, 1}}, {}), 1);
  CHECK(w2p.exists);
  CHECK(w2p.exceptional);
  CHECK(w2p.h_class_count == 1);
  CHECK(w2p.k_splitting == 2);
  CHECK_FALSE(o_class_data(dec({{2, 1}}, {}), -1).exists);
  for (int eps : {1, -1}) {
    auto v22 = o_class_data(dec({}, {{1, 2}}), eps);
    CHECK(v22.delta == 1);
    CHECK(v22.h_class_count == 1);
    CHECK(v22.k_splitting == 1);
  }
  CHECK(classes_of_type(Partition{2, 2}, Context::Oplus).size() == 2);
  CHECK(classes_of_type(Partition{2, 2}, Context::Ominus).size() == 1);
  for (int two_n = 2; two_n <= 10; two_n += 2)
    for (const auto& d : enum_decomps(two_n)) {
      for (Context c : {Context::Oplus, Context::Ominus}) {
        auto labels = class_labels(d, c);
        REQUIRE(static_cast<long>(labels.size()) == o_class_data(d, c == Context::Oplus ? 1 : -1).h_class_count);
        for (const auto& l : labels) REQUIRE(l.sign_product() == (c == Context::Oplus ? 1 : -1));
      }
      REQUIRE(static_cast<long>(class_labels(d, Context::Sp).size()) == sp_invariants(d).class_count);
    }
}

TEST_CASE("Weil difference values") {
  auto label = [](CanonicalDecomposition d, std::vector<int> alpha, std::vector<int> beta) {
    return ClassLabel{std::move(d), Context::Sp, std::move(alpha), std::move(beta)};
  };
  CHECK(weil_diff_value(label(dec({{1, 1}}, {}), {}, {}), 2) == 2);
  CHECK(weil_diff_value(label(dec({{1, 1}}, {}), {}, {}), 4) == 4);
  CHECK(weil_diff_value(label(dec({}, {{1, 1}}), {}, {}), 2) == 0);
  CHECK(weil_diff_value(label(dec({{1, 2}}, {}), {}, {}), 2) == 4);
  CHECK(weil_diff_value(label(dec({{2, 1}}, {}), {}, {}), 2) == 4);
  CHECK(weil_diff_value(label(dec({}, {{2, 1}}), {}, {1}), 2) == 2);
  CHECK(weil_diff_value(label(dec({}, {{2, 1}}), {}, {-1}), 2) == -2);
  CHECK(weil_diff_value(label(dec({{3, 1}}, {}), {-1}, {}), 2) == -4);
}

TEST_CASE("induced Weil character") {
  CHECK(induced_weil(Partition{2}, 2) == 0);
  CHECK(induced_weil(Partition{2}, 4) == 0);
  CHECK(induced_weil(Partition{1, 1}, 2) == 2);
  CHECK(induced_weil(Partition{1, 1, 1, 1}, 2) == 112);
  for (long q : {2, 4})
    for (int size = 0; size <= 16; size += 2)
      for (const auto& l : iter_partitions(size, odd_parts_even_mult)) {
        Rational lam = induced_weil(l, q);
        REQUIRE(lam >= 0);
        REQUIRE(p_diff_unipotent(l, q) == lam / Rational(gl_unip_centralizer(l, q)));
      }
}

TEST_CASE("Lambda as a sum over symplectic classes") {
  // Λ(g) = |C_GL(g)| Σ_i β(g_i)/|C_Sp(g_i)|; only pure-W classes contribute.
  for (long q : {2, 4})
    for (int two_n = 2; two_n <= 10; two_n += 2)
      for (const auto& l : iter_partitions(two_n, all_mults_even)) {
        Rational s = 0;
        for (const auto& c : classes_of_type(l, Context::Sp))
          if (c.decomposition.v.empty())
            s += Rational(weil_diff_value(c, q)) / Rational(sp_centralizer_order(c, q));
        REQUIRE(s * Rational(gl_unip_centralizer(l, q)) == induced_weil(l, q));
      }
}

TEST_CASE("centralizer exponent") {
  CHECK(d_exponent(Partition{1, 1}) == 0);
  CHECK(d_exponent(Partition{2, 2}) == 3);
  CHECK(d_exponent(Partition{1, 1, 1, 1}) == 0);
  ClassLabel w2{dec({{2, 1}}, {}), Context::Sp, {}, {}};
  CHECK(sp_centralizer_order(w2, 2) == 48);
  CHECK(sp_order(4, 2) / sp_centralizer_order(w2, 2) == 15);
}

TEST_CASE("odd-dimensional lift") {
  FqField F(2);
  Poly z1 = z_minus_one(F);
  RcfData id;
  id.set(z1, {1, 1});
  CHECK(jordan_lift_odd_dim(F, id).at(z1) == Partition{1, 1, 1});
  RcfData j2;
  j2.set(z1, {2});
  CHECK(jordan_lift_odd_dim(F, j2).at(z1) == Partition{2, 1});
  RcfData w;
  w.set(Poly{{1, 1, 1}}, {1});
  auto lifted = jordan_lift_odd_dim(F, w);
  CHECK(lifted.at(z1) == Partition{1});
  CHECK(lifted.at(Poly{{1, 1, 1}}) == Partition{1});
}
