#include <doctest.h>

#include <set>

#include "ncb/noncrossing.hpp"
#include "oracles.hpp"

using namespace ncb;

namespace {

NoncrossingPartition nc(int rank, std::vector<std::vector<int>> blocks) {
  return NoncrossingPartition(rank, std::move(blocks));
}

}  // namespace

TEST_SUITE("noncrossing") {

TEST_CASE("is_noncrossing on the Figure 4 pair and degenerate inputs") {
  CHECK(is_noncrossing(3, {{1, 4}, {2, 3}}));
  CHECK_FALSE(is_noncrossing(3, {{1, 3}, {2, 4}}));
  CHECK(is_noncrossing(3, {{1}, {2}, {3}, {4}}));
  CHECK_THROWS_AS(is_noncrossing(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(is_noncrossing(3, {{1, 5}}), std::invalid_argument);
}

TEST_CASE("is_noncrossing agrees with interval membership") {
  for (int n = 1; n <= 4; ++n) {
    std::set<Permutation> interval;
    for (const auto& x : enumerate_nc(n)) interval.insert(x.permutation());
    oracle::for_each_set_partition(n + 1, [&](const std::vector<std::vector<int>>& blocks) {
      Permutation w(n + 1);
      for (auto b : blocks) {
        std::sort(b.begin(), b.end());
        w = w * Permutation::from_cycle(b, n + 1);
      }
      CHECK(is_noncrossing(n, blocks) == interval.contains(w));
    });
  }
}

TEST_CASE("enumerate_nc counts and canonical order") {
  CHECK(enumerate_nc(1).size() == 2);
  CHECK(enumerate_nc(3).size() == 14);
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_nc(n);
    CHECK(all.size() == oracle::catalan(n + 1));
    for (std::size_t t = 0; t + 1 < all.size(); ++t)
      CHECK(all[t].permutation().one_line() < all[t + 1].permutation().one_line());
  }
}

TEST_CASE("enumerate_nc contains the Figure 2 element at n = 5") {
  const auto all = enumerate_nc(5);
  CHECK(std::find(all.begin(), all.end(), nc(5, {{1, 6}, {2, 3, 5}})) != all.end());
}

TEST_CASE("recursive generation path agrees with the absolute-order filter at n = 7") {
  // above rank 6 enumerate_nc switches to block-structure generation
  const auto generated = enumerate_nc(7);
  std::vector<Permutation> filtered;
  const Permutation c = long_cycle(8);
  oracle::for_each_permutation(8, [&](const Permutation& w) {
    if (absolute_leq(w, c)) filtered.push_back(w);
  });
  REQUIRE(generated.size() == filtered.size());
  for (std::size_t t = 0; t < generated.size(); ++t)
    CHECK(generated[t].permutation() == filtered[t]);
}

TEST_CASE("syllable") {
  CHECK(syllable(2, 3) == Word{2});
  CHECK(syllable(3, 5) == Word{4, 3, 4});
  CHECK(syllable(1, 6) == Word{5, 4, 3, 2, 1, 2, 3, 4, 5});
  for (int j = 1; j <= 4; ++j)
    for (int k = j + 1; k <= 6; ++k) {
      CHECK(static_cast<int>(syllable(j, k).size()) == 2 * (k - j) - 1);
      CHECK(evaluate(syllable(j, k), 5) == transposition(j, k, 6));
    }
  CHECK_THROWS_AS(syllable(3, 3), std::invalid_argument);
}

TEST_CASE("standard_form worked examples") {
  CHECK(standard_form(nc(5, {})) == Word{});
  CHECK(standard_form(nc(5, {{1, 6}, {2, 3, 5}})) ==
        Word{2, 4, 3, 4, 5, 4, 3, 2, 1, 2, 3, 4, 5});
  CHECK(standard_form(nc(7, {{1, 4}, {5, 6, 8}})) == Word{3, 2, 1, 2, 3, 5, 7, 6, 7});
}

TEST_CASE("standard_form is a reduced word for the partition") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& x : enumerate_nc(n)) {
      const Word w = standard_form(x);
      CHECK(evaluate(w, n) == x.permutation());
      CHECK(static_cast<int>(w.size()) == coxeter_length(x.permutation()));
    }
}

TEST_CASE("du_sets") {
  CHECK(du_sets(nc(5, {{1, 6}, {2, 3, 5}})) == DuPair{{1, 2, 3}, {3, 5, 6}});
  CHECK(du_sets(nc(3, {})) == DuPair{{}, {}});
  CHECK(du_sets(nc(11, {{2, 6, 11, 12}, {3, 4}, {7, 9, 10}})) ==
        DuPair{{2, 3, 6, 7, 9, 11}, {4, 6, 9, 10, 11, 12}});
}

TEST_CASE("du_inverse") {
  CHECK(du_inverse(3, {{}, {}}) == nc(3, {}));
  CHECK(du_inverse(5, {{1, 2, 3}, {3, 5, 6}}) == nc(5, {{1, 6}, {2, 3, 5}}));
  CHECK_THROWS_AS(du_inverse(3, {{1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(du_inverse(3, {{2}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(du_inverse(3, {{2, 1}, {3, 4}}), std::invalid_argument);
}

TEST_CASE("du round trip and image characterization (Prop 4.2)") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> image;
    for (const auto& x : enumerate_nc(n)) {
      const DuPair p = du_sets(x);
      CHECK(p.d.size() == p.u.size());
      for (std::size_t t = 0; t < p.d.size(); ++t) CHECK(p.d[t] < p.u[t]);
      CHECK(du_inverse(n, p) == x);
      image.insert({p.d, p.u});
    }
    CHECK(image.size() == oracle::catalan(n + 1));  // injective on NC
    // image is all of the set I: every valid pair round-trips through some x
    if (n == 3) CHECK(image.size() == 14);
  }
}

TEST_CASE("fully commutative words") {
  CHECK(fully_commutative_word(3, {{}, {}}) == Word{});
  CHECK(fully_commutative_word(3, {{1}, {2}}) == Word{1});
  std::set<std::vector<int>> images;
  for (const auto& x : enumerate_nc(3)) {
    const Word w = fully_commutative_word(3, du_sets(x));
    const Permutation ev = evaluate(w, 3);
    CHECK_FALSE(oracle::contains_pattern(ev.one_line(), {3, 2, 1}));
    images.insert(ev.one_line());
  }
  CHECK(images.size() == 14);  // distinct 321-avoiding permutations
}

TEST_CASE("kreweras") {
  const int n = 4;
  CHECK(kreweras(nc(n, {})) == nc(n, {{1, 2, 3, 4, 5}}));
  CHECK(kreweras(nc(n, {{1, 2, 3, 4, 5}})) == nc(n, {}));
  CHECK(kreweras(nc(2, {{1, 2}})) == nc(2, {{2, 3}}));
}

TEST_CASE("kreweras squared is conjugation by c") {
  for (int n = 1; n <= 5; ++n) {
    const Permutation c = long_cycle(n + 1);
    for (const auto& x : enumerate_nc(n)) {
      const Permutation w = x.permutation();
      CHECK(kreweras(kreweras(x)).permutation() == c.inverse() * w * c);
    }
  }
}

TEST_CASE("kreweras anti-isomorphism of refinement order") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : enumerate_nc(n))
      for (const auto& b : enumerate_nc(n))
        if (refines(a, b)) CHECK(refines(kreweras(b), kreweras(a)));
}

TEST_CASE("partition constructor rejects crossings") {
  CHECK_THROWS_AS(nc(3, {{1, 3}, {2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(NoncrossingPartition::from_permutation(
                      Permutation::from_cycle(std::vector{1, 3}, 4) *
                      Permutation::from_cycle(std::vector{2, 4}, 4)),
                  std::invalid_argument);
}

}  // TEST_SUITE
