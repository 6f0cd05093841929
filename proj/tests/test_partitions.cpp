#include <catch_amalgamated.hpp>

#include <set>

#include "orthocyc/partitions.hpp"

using namespace orthocyc;

TEST_CASE("make_partition sorts and rejects non-positive parts") {
  Partition p = make_partition({1, 4, 5, 4});
  CHECK(p.parts() == std::vector<int>{5, 4, 4, 1});
  CHECK(make_partition({}).empty());
  CHECK_THROWS_AS(make_partition({1, 0}), NonPositivePart);
}

TEST_CASE("stats of (5,4,4,1)") {
  auto s = stats(Partition{5, 4, 4, 1});
  CHECK(s.size == 14);
  CHECK(s.n == 15);
  CHECK(s.length == 4);
  CHECK(s.odd_parts == 2);
  CHECK(s.conjugate == Partition{4, 3, 3, 3, 1});

  auto e = stats(Partition{});
  CHECK(e.n == 0);
  CHECK(e.length == 0);
  CHECK(e.odd_parts == 0);

  auto t = stats(Partition{2, 2});
  CHECK(t.n == 2);
  CHECK(t.conjugate == Partition{2, 2});
}

TEST_CASE("iter_partitions with support filters") {
  auto as_set = [](const std::vector<Partition>& v) { return std::set<Partition>(v.begin(), v.end()); };
  CHECK(as_set(iter_partitions(2)) == std::set<Partition>{{2}, {1, 1}});
  CHECK(as_set(iter_partitions(4, odd_parts_even_mult)) ==
        std::set<Partition>{{4}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(as_set(iter_partitions(4, all_mults_even)) == std::set<Partition>{{2, 2}, {1, 1, 1, 1}});
  auto five = iter_partitions(5);
  CHECK(five.size() == 7);
  CHECK(five.front() == Partition{5});
  CHECK(five.back() == Partition{1, 1, 1, 1, 1});
}

TEST_CASE("support predicates") {
  CHECK(odd_parts_even_mult(Partition{2, 1, 1}));
  CHECK_FALSE(odd_parts_even_mult(Partition{3, 1}));
  CHECK(all_mults_even(Partition{2, 2}));
  CHECK_FALSE(all_mults_even(Partition{2}));
}

TEST_CASE("conjugation, square-sum identity and column parity, |λ| <= 30") {
  for (int size = 0; size <= 30; ++size)
    for_each_partition(size, [](const Partition& p) {
      REQUIRE(p.conjugate().conjugate() == p);
      long rhs = 0;
      for (int j = 1; j <= p.largest(); ++j) {
        long inner = static_cast<long>(j) * p.multiplicity(j);
        for (int i = 1; i < j; ++i) inner += 2L * i * p.multiplicity(i);
        rhs += inner * p.multiplicity(j);
      }
      REQUIRE(p.conjugate_square_sum() == rhs);
      auto cols = p.conjugate().parts();
      cols.resize(cols.size() + 2, 0);
      bool parity = true;
      for (std::size_t i = 0; i + 1 < cols.size(); i += 2) parity = parity && (cols[i] - cols[i + 1]) % 2 == 0;
      REQUIRE(odd_parts_even_mult(p) == parity);
    });
}

TEST_CASE("partition printing") { CHECK(to_string(Partition{5, 4, 4, 1}) == "[5,4,4,1]"); }
