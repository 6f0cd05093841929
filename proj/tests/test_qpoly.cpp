#include <catch_amalgamated.hpp>

#include "orthocyc/poly.hpp"

using namespace orthocyc;

namespace {
Poly P(std::vector<Elem> c) { return Poly{std::move(c)}; }
}  // namespace

TEST_CASE("field axioms, q <= 16") {
  for (long q : {2, 3, 4, 5, 7, 8, 9, 16}) {
    FqField F(q);
    for (int a = 0; a < q; ++a) {
      REQUIRE(F.add(a, 0) == a);
      REQUIRE(F.mul(a, 1) == a);
      REQUIRE(F.add(a, F.neg(a)) == 0);
      if (a) REQUIRE(F.mul(a, F.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        REQUIRE(F.mul(a, b) == F.mul(b, a));
        for (int c = 0; c < q; ++c) {
          REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
          REQUIRE(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
        }
      }
    }
  }
  FqField F4(4);
  for (int a = 0; a < 4; ++a) CHECK(F4.mul(F4.sqrt(a), F4.sqrt(a)) == a);
  CHECK_THROWS_AS(FqField(6), UnsupportedField);
  CHECK_THROWS_AS(irreducibles(12, 1), UnsupportedField);
}

TEST_CASE("irreducibles over F_2") {
  CHECK(irreducibles(2, 1) == std::vector<Poly>{P({0, 1}), P({1, 1})});
  CHECK(irreducibles(2, 2) == std::vector<Poly>{P({1, 1, 1})});
  CHECK(irreducibles(2, 3) == std::vector<Poly>{P({1, 1, 0, 1}), P({1, 0, 1, 1})});
  CHECK(to_string(P({1, 1, 0, 1})) == "z^3+z+1");
}

TEST_CASE("star") {
  FqField F(2);
  CHECK(star(F, P({1, 1})) == P({1, 1}));
  CHECK(star(F, P({1, 1, 1})) == P({1, 1, 1}));
  CHECK(star(F, P({1, 1, 0, 1})) == P({1, 0, 1, 1}));
  CHECK_THROWS_AS(star(F, P({0, 1})), ZeroConstantTerm);
  for (long q : {2, 3, 4}) {
    FqField G(q);
    IrreducibleCatalog cat(G);
    for (int d = 1; d <= 5; ++d)
      for (const auto& p : cat.of_degree(d))
        if (p.constant()) REQUIRE(star(G, star(G, p)) == p);
  }
}

TEST_CASE("N* and M* by enumeration") {
  CHECK(n_star(2, 2) == 1);
  CHECK(m_star(2, 3) == 1);
  CHECK(n_star(2, 4) == 1);
  CHECK(m_star(2, 4) == 1);
}

TEST_CASE("closed-form counts agree with enumeration") {
  for (long q : {2, 4, 8}) {
    FqField F(q);
    IrreducibleCatalog cat(F);
    int dmax = q == 2 ? 10 : (q == 4 ? 6 : 4);
    for (int d = 1; d <= dmax; ++d) {
      long n = 0, m = 0;
      for (const auto& p : cat.of_degree(d)) {
        if (!p.constant()) continue;
        Poly s = star(F, p);
        if (s == p)
          ++n;
        else if (p < s)
          ++m;
      }
      REQUIRE(irreducible_count(q, d) == static_cast<long>(cat.of_degree(d).size()));
      REQUIRE(n_star_count(q, d) == n);
      REQUIRE(m_star_count(q, d) == m);
      REQUIRE(cat.self_conjugate(d).size() == static_cast<std::size_t>(n));
      REQUIRE(cat.pair_representatives(d).size() == static_cast<std::size_t>(m));
    }
  }
}

TEST_CASE("necklace identity and even degree of self-conjugates") {
  for (long q : {2, 4}) {
    for (int D = 1; D <= 12; ++D) {
      Integer s = 0;
      for (long d : detail::divisors(D)) s += d * irreducible_count(q, static_cast<int>(d));
      REQUIRE(s == ipow(q, D));
    }
    FqField F(q);
    IrreducibleCatalog cat(F);
    for (int d = 3; d <= (q == 2 ? 10 : 5); d += 2)
      for (const auto& p : cat.of_degree(d)) REQUIRE((p.constant() == 0 || !is_self_conjugate(F, p)));
  }
}
