#include <catch_amalgamated.hpp>

#include "orthocyc/oracle/tables.hpp"
#include "orthocyc/unipotent.hpp"

using namespace orthocyc;
using namespace orthocyc::oracle;

namespace {
RcfData data_of(std::initializer_list<std::pair<Poly, Partition>> blocks) {
  RcfData d;
  for (const auto& [phi, lambda] : blocks) d.set(phi, lambda);
  return d;
}

Mat companion(const FqField& F, const Poly& f) {
  Mat c(f.degree());
  for (int i = 1; i < c.n; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < c.n; ++i) c(i, c.n - 1) = F.neg(f.coeffs[i]);
  return c;
}
}  // namespace

TEST_CASE("standard forms and singular counts") {
  FqField F2(2);
  CHECK(singular_count(F2, standard_form(F2, -1, 4)) == 5);
  CHECK(singular_count(F2, standard_form(F2, 1, 4)) == 9);
  for (long q : {2L, 4L, 8L}) {
    FqField F(q);
    auto Q = standard_form(F, 1, 2);
    long nonsingular = q * q - 1 - singular_count(F, Q);
    CHECK(nonsingular / (q - 1) == q - 1);
  }
  for (long q : {2L, 4L})
    for (int two_n = 2; two_n <= 6; two_n += 2) {
      FqField F(q);
      CHECK(form_type(F, standard_form(F, 1, two_n)) == 1);
      CHECK(form_type(F, standard_form(F, -1, two_n)) == -1);
    }
}

TEST_CASE("Arf type agrees with singular counts") {
  for (long q : {2L, 4L}) {
    FqField F(q);
    for_each_vector(F, 4, [&](const Vec& d) {
      auto Q = standard_form(F, 1, 4);
      for (int i = 0; i < 4; ++i) Q.c(i, i) = d[i];
      REQUIRE((form_type(F, Q) > 0) == diagonal_shift_is_plus(F, d));
    });
  }
}

TEST_CASE("characteristic polynomial of a companion matrix") {
  FqField F(4);
  IrreducibleCatalog cat(F);
  for (int d = 1; d <= 3; ++d)
    for (const auto& phi : cat.of_degree(d)) {
      Poly f = Poly{poly_mul(F, phi.coeffs, z_minus_one(F).coeffs)};
      CHECK(charpoly(F, companion(F, f)) == f);
    }
}

TEST_CASE("group orders") {
  const std::vector<std::pair<GroupKind, long>> cases = {
      {{Family::Oplus, 2, 2}, 2},      {{Family::Ominus, 2, 2}, 6},      {{Family::Oplus, 4, 2}, 72},
      {{Family::Ominus, 4, 2}, 120},   {{Family::Oplus, 6, 2}, 40320},   {{Family::Ominus, 6, 2}, 51840},
      {{Family::Sp, 4, 2}, 720},       {{Family::Odd, 3, 2}, 6},         {{Family::Odd, 5, 2}, 720},
      {{Family::OmegaMinus, 4, 2}, 60}, {{Family::OmegaPlus, 6, 2}, 20160}, {{Family::Oplus, 2, 4}, 6}};
  for (const auto& [kind, order] : cases) {
    auto g = build_group(kind);
    CHECK(static_cast<long>(g.size()) == order);
  }
}

TEST_CASE("enumerated elements preserve the form") {
  for (auto kind : {GroupKind{Family::Oplus, 4, 2}, GroupKind{Family::Ominus, 4, 2}, GroupKind{Family::Odd, 5, 2}}) {
    auto g = build_group(kind);
    for (std::size_t i = 0; i < g.size(); ++i) REQUIRE(preserves(g.F(), g.form, g.matrix(i)));
  }
  auto sp = build_group({Family::Sp, 4, 2});
  for (std::size_t i = 0; i < sp.size(); ++i) REQUIRE(preserves_bilinear(sp.F(), sp.gram, sp.matrix(i)));
}

TEST_CASE("element cap") { CHECK_THROWS_AS(build_group({Family::Ominus, 6, 2}, 1000), BudgetExceeded); }

TEST_CASE("rational canonical form extraction") {
  FqField F(2);
  IrreducibleCatalog cat(F);
  const Poly z1 = z_minus_one(F);
  CHECK(rcf_extract(cat, Mat::identity(4)) == data_of({{z1, Partition{1, 1, 1, 1}}}));
  Mat swap(2);
  swap(0, 1) = swap(1, 0) = 1;
  CHECK(rcf_extract(cat, swap) == data_of({{z1, Partition{2}}}));
  Mat three(2);
  three(0, 1) = three(1, 0) = three(1, 1) = 1;
  CHECK(rcf_extract(cat, three) == data_of({{Poly{{1, 1, 1}}, Partition{1}}}));
}

TEST_CASE("empirical class tables in dimension 2") {
  FqField F(2);
  const Poly z1 = z_minus_one(F);
  auto plus = empirical_class_table(build_group({Family::Oplus, 2, 2}));
  CHECK(plus.proportion(data_of({{z1, Partition{1, 1}}})) == Rational(1, 2));
  CHECK(plus.proportion(data_of({{z1, Partition{2}}})) == Rational(1, 2));
  auto minus = empirical_class_table(build_group({Family::Ominus, 2, 2}));
  CHECK(minus.proportion(data_of({{z1, Partition{1, 1}}})) == Rational(1, 6));
  CHECK(minus.proportion(data_of({{z1, Partition{2}}})) == Rational(1, 2));
  CHECK(minus.proportion(data_of({{Poly{{1, 1, 1}}, Partition{1}}})) == Rational(1, 3));
  for (const auto* t : {&plus, &minus}) {
    Rational s = 0;
    for (const auto& [d, c] : t->counts) s += t->proportion(d);
    CHECK(s == 1);
  }
}

TEST_CASE("class proportions match enumeration in dimension 4") {
  FqField F(2);
  for (int eps : {1, -1}) {
    auto t = empirical_class_table(build_group({eps > 0 ? Family::Oplus : Family::Ominus, 4, 2}));
    for (const auto& [d, c] : t.counts) {
      auto p = class_proportions(F, d);
      CHECK((eps > 0 ? p.p_plus : p.p_minus) == t.proportion(d));
    }
  }
}

TEST_CASE("unipotent conjugacy classes") {
  FqField F(2);
  IrreducibleCatalog cat(F);
  auto count_type = [&](const Group& g, const Partition& lambda) {
    auto classes = conjugacy_classes(g, [&](Key k) { return is_unipotent(*g.space, k); });
    long n = 0;
    for (const auto& c : classes) n += rcf_extract(cat, g.space->decode(c.representative)).at(z_minus_one(F)) == lambda;
    return std::pair<long, std::size_t>{n, classes.size()};
  };
  auto sp4 = build_group({Family::Sp, 4, 2});
  CHECK(count_type(sp4, Partition{2, 2}).second == 6);
  CHECK(count_type(build_group({Family::Ominus, 4, 2}), Partition{2, 2}).first == 1);
  CHECK(count_type(build_group({Family::Oplus, 4, 2}), Partition{2, 2}).first == 2);
}

TEST_CASE("conjugacy classes partition the group") {
  auto g = build_group({Family::Ominus, 4, 2});
  std::size_t total = 0;
  for (const auto& c : conjugacy_classes(g)) total += c.size;
  CHECK(total == 120);
  CHECK(conjugacy_classes(g).size() == 7);  // O⁻₄(2) ≅ S₅
}

TEST_CASE("fixed forms") {
  FqField F(2);
  auto id4 = fixed_forms_by_type(F, Mat::identity(4));
  CHECK(id4.plus == 10);
  CHECK(id4.minus == 6);
  auto id2 = fixed_forms_by_type(F, Mat::identity(2));
  CHECK(id2.plus == 3);
  CHECK(id2.minus == 1);
  Mat t = Mat::identity(2);
  t(0, 1) = 1;
  auto tr = fixed_forms_by_type(F, t);
  CHECK(tr.plus == 1);
  CHECK(tr.minus == 1);
}

TEST_CASE("odd dimension quotient in dimension 3") {
  FqField F(2);
  IrreducibleCatalog cat(F);
  auto g = build_group({Family::Odd, 3, 2});
  for (std::size_t i = 0; i < g.size(); ++i) {
    Mat m = g.matrix(i);
    CHECK(rcf_extract(cat, m) == jordan_lift_odd_dim(F, rcf_extract(cat, radical_quotient(m))));
  }
}
