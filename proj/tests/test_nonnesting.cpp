#include <doctest.h>

#include <set>

#include "ncb/nonnesting.hpp"
#include "oracles.hpp"

using namespace ncb;

TEST_SUITE("nonnesting") {

TEST_CASE("root poset shape") {
  CHECK(positive_roots(1) == std::vector<RootA>{{1, 2}});
  const auto r3 = positive_roots(3);
  CHECK(r3.size() == 6);
  CHECK(std::count_if(r3.begin(), r3.end(), [](RootA r) { return r.height() == 1; }) == 3);
  CHECK(RootA{1, 4}.height() == 3);  // maximal root e_1 - e_{n+1}
  for (auto [lo, hi] : root_poset_covers(3)) {
    CHECK(root_leq(lo, hi));
    CHECK(hi.height() == lo.height() + 1);
  }
}

TEST_CASE("ideal_of_antichain") {
  CHECK(ideal_of_antichain(3, {}) == OrderIdeal(3));
  const std::vector<RootA> a{{1, 3}, {2, 4}};
  CHECK(ideal_of_antichain(3, a) ==
        OrderIdeal(3, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
  const std::vector<RootA> single{{2, 3}};
  CHECK(ideal_of_antichain(3, single) == OrderIdeal(3, {{2, 3}}));
  const std::vector<RootA> bad{{1, 3}, {1, 2}};
  CHECK_THROWS_AS(ideal_of_antichain(3, bad), std::invalid_argument);
}

TEST_CASE("enumerate_ideals counts") {
  CHECK(enumerate_ideals(1).size() == 2);
  CHECK(enumerate_ideals(2).size() == 5);
  CHECK(enumerate_ideals(3).size() == 14);
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_ideals(n).size() == oracle::catalan(n + 1));
}

TEST_CASE("ideal validation") {
  CHECK_THROWS_AS(OrderIdeal(3, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(OrderIdeal(3, {{1, 5}}), std::invalid_argument);
}

TEST_CASE("dyck path endpoints and parsing") {
  CHECK(DyckPath::parse("uudd").to_string() == "uudd");
  CHECK(DyckPath::parse("ud").rank() == 0);
  CHECK_THROWS_AS(DyckPath::parse("du"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::parse("uu"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::parse("uxdd"), std::invalid_argument);
}

TEST_CASE("ideal_to_dyck on named paths") {
  CHECK(ideal_to_dyck(OrderIdeal(2)).to_string() == "ududud");
  CHECK(ideal_to_dyck(full_ideal(2)).to_string() == "uuuddd");
  CHECK(ideal_to_dyck(OrderIdeal(2, {{1, 2}})).to_string() == "uuddud");
  for (int n = 1; n <= 5; ++n) {
    CHECK(ideal_to_dyck(OrderIdeal(n)).to_string() ==
          [&] {
            std::string s;
            for (int t = 0; t <= n; ++t) s += "ud";
            return s;
          }());
    CHECK(ideal_to_dyck(full_ideal(n)).to_string() ==
          std::string(n + 1, 'u') + std::string(n + 1, 'd'));
  }
}

TEST_CASE("ideal <-> dyck round trip") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_ideals(n)) {
      const DyckPath path = ideal_to_dyck(p);
      CHECK(dyck_to_ideal(path) == p);
    }
}

TEST_CASE("bumps_to_ideal") {
  CHECK(bumps_to_ideal(3, {}) == OrderIdeal(3));
  const std::vector<RootA> bumps1324{{1, 3}, {2, 4}};  // 13|24
  CHECK(ideal_to_bumps(bumps_to_ideal(3, bumps1324)) == bumps1324);
  const std::vector<RootA> nested{{1, 4}, {2, 3}};  // 14|23 nests
  CHECK_THROWS_AS(bumps_to_ideal(3, nested), std::invalid_argument);
  const std::vector<RootA> shared{{1, 3}, {3, 4}};  // chains may share endpoints
  CHECK(bumps_to_ideal(3, shared).size() == 4);
  const std::vector<RootA> doubled{{1, 3}, {1, 4}};
  CHECK_THROWS_AS(bumps_to_ideal(3, doubled), std::invalid_argument);
}

TEST_CASE("bumps are the maximal elements") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_ideals(n)) {
      const auto bumps = ideal_to_bumps(p);
      CHECK(bumps_to_ideal(n, bumps) == p);
    }
}

TEST_CASE("krew_nn base cases") {
  CHECK(krew_nn(OrderIdeal(3)) == OrderIdeal(3, {{1, 2}, {2, 3}, {3, 4}}));
  // all-simples ideal maps back to the empty ideal
  CHECK(krew_nn(OrderIdeal(3, {{1, 2}, {2, 3}, {3, 4}})) == OrderIdeal(3));
}

TEST_CASE("krew_nn is a bijection for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const auto ideals = enumerate_ideals(n);
    std::set<OrderIdeal> images;
    for (const auto& p : ideals) images.insert(krew_nn(p));  // constructor revalidates
    CHECK(images.size() == ideals.size());
  }
}

TEST_CASE("krew_nn orbit structure in A_3") {
  const auto ideals = enumerate_ideals(3);
  std::set<OrderIdeal> seen;
  std::multiset<int> sizes;
  for (const auto& p : ideals) {
    if (seen.contains(p)) continue;
    int len = 1;
    seen.insert(p);
    for (OrderIdeal q = krew_nn(p); q != p; q = krew_nn(q)) {
      seen.insert(q);
      ++len;
    }
    sizes.insert(len);
  }
  CHECK(sizes == std::multiset<int>{2, 4, 8});  // the period-4 orbit is Example 4.14's
  // the full ideal sits on an orbit whose length divides 2(n+1) = 8
  int full_len = 1;
  const OrderIdeal full = full_ideal(3);
  for (OrderIdeal q = krew_nn(full); q != full; q = krew_nn(q)) ++full_len;
  CHECK(full_len == 4);
  CHECK(8 % full_len == 0);
}

}  // TEST_SUITE
