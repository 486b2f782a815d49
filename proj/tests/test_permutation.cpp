#include <doctest.h>

#include "ncb/permutation.hpp"
#include "oracles.hpp"

using namespace ncb;

TEST_SUITE("permutation") {

TEST_CASE("evaluate: empty word, linear Coxeter element, palindromic syllable") {
  CHECK(evaluate({}, 3) == Permutation(4));
  CHECK(evaluate({1, 2, 3}, 3) == long_cycle(4));
  CHECK(evaluate({2, 1, 2}, 3) == transposition(1, 3, 4));
  CHECK_THROWS_AS(evaluate({4}, 3), std::invalid_argument);
  CHECK_THROWS_AS(evaluate({0}, 3), std::invalid_argument);
}

TEST_CASE("coxeter_length") {
  CHECK(coxeter_length(Permutation(5)) == 0);
  for (int m = 2; m <= 6; ++m) CHECK(coxeter_length(long_cycle(m)) == m - 1);
  const Permutation w =
      Permutation::from_cycle(std::vector{1, 6}, 6) * Permutation::from_cycle(std::vector{2, 3, 5}, 6);
  CHECK(coxeter_length(w) == 13);
}

TEST_CASE("reflection_length against BFS table") {
  CHECK(reflection_length(Permutation(4)) == 0);
  CHECK(reflection_length(transposition(2, 5, 6)) == 1);
  const Permutation w =
      Permutation::from_cycle(std::vector{1, 6}, 6) * Permutation::from_cycle(std::vector{2, 3, 5}, 6);
  CHECK(reflection_length(w) == 3);
  for (int m = 2; m <= 5; ++m) {
    const auto table = oracle::reflection_length_table(m);
    oracle::for_each_permutation(
        m, [&](const Permutation& u) { CHECK(reflection_length(u) == table.at(u.one_line())); });
  }
}

TEST_CASE("length identities") {
  for (int m = 2; m <= 5; ++m)
    oracle::for_each_permutation(m, [&](const Permutation& u) {
      CHECK(reflection_length(u) <= coxeter_length(u));
      CHECK(coxeter_length(u) == coxeter_length(u.inverse()));
    });
}

TEST_CASE("absolute order basics") {
  const Permutation c = long_cycle(4);
  CHECK(absolute_leq(Permutation(4), c));
  CHECK(absolute_leq(transposition(2, 3, 4), c));
  CHECK(absolute_leq(transposition(1, 3, 4), c));
  CHECK(absolute_leq(transposition(1, 2, 4) * transposition(3, 4, 4), c));
  CHECK_THROWS_AS(absolute_leq(Permutation(3), c), std::invalid_argument);
}

TEST_CASE("absolute order is a partial order graded by reflection length") {
  for (int m = 2; m <= 4; ++m) {
    std::vector<Permutation> all;
    oracle::for_each_permutation(m, [&](const Permutation& u) { all.push_back(u); });
    for (const auto& u : all)
      for (const auto& v : all) {
        if (absolute_leq(u, v) && absolute_leq(v, u)) CHECK(u == v);
        if (absolute_leq(u, v) && u != v) CHECK(reflection_length(u) < reflection_length(v));
        for (const auto& w : all)
          if (absolute_leq(u, v) && absolute_leq(v, w)) CHECK(absolute_leq(u, w));
      }
  }
}

TEST_CASE("bruhat_leq agrees with the subword oracle on all of S_4") {
  std::vector<Permutation> all;
  oracle::for_each_permutation(4, [&](const Permutation& u) { all.push_back(u); });
  int pairs = 0;
  for (const auto& x : all)
    for (const auto& y : all) {
      ++pairs;
      CHECK(bruhat_leq(x, y) == oracle::bruhat_leq_subword(x, y));
    }
  CHECK(pairs == 576);
}

TEST_CASE("bruhat examples") {
  const Permutation c3 = long_cycle(3);
  CHECK(bruhat_leq(Permutation(3), c3));
  CHECK(bruhat_leq(c3, c3));
  CHECK(bruhat_leq(transposition(2, 3, 3), c3));
  CHECK_FALSE(bruhat_leq(transposition(1, 3, 3), c3));
}

TEST_CASE("support and cycles") {
  CHECK(Permutation(5).support().empty());
  CHECK(Permutation(5).cycles().empty());
  const Permutation w =
      Permutation::from_cycle(std::vector{1, 6}, 6) * Permutation::from_cycle(std::vector{2, 3, 5}, 6);
  CHECK(w.support() == std::vector<int>{1, 2, 3, 5, 6});
  CHECK(w.cycles() == std::vector<std::vector<int>>{{2, 3, 5}, {1, 6}});
  CHECK(transposition(3, 4, 6).support() == std::vector<int>{3, 4});

  Permutation big = Permutation::from_cycle(std::vector{2, 6, 11, 12}, 12) *
                    Permutation::from_cycle(std::vector{3, 4}, 12) *
                    Permutation::from_cycle(std::vector{7, 9, 10}, 12);
  CHECK(big.cycles() == std::vector<std::vector<int>>{{3, 4}, {7, 9, 10}, {2, 6, 11, 12}});
}

TEST_CASE("composition convention: rightmost letter acts first") {
  // s_1 s_2 sends 3 -> 1: first s_2 maps 3 to 2, then s_1 maps 2 to 1
  const Permutation w = evaluate({1, 2}, 2);
  CHECK(w(3) == 1);
  CHECK(w(1) == 2);
}

TEST_CASE("from_one_line validates") {
  CHECK_THROWS_AS(Permutation::from_one_line({1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_line({0, 1, 2}), std::invalid_argument);
  CHECK(Permutation::from_one_line({2, 3, 1}) == long_cycle(3));
}

TEST_CASE("reflection type") {
  CHECK(Reflection{2, 5}.to_permutation(6) == transposition(2, 5, 6));
  const Permutation t = Reflection{1, 4}.to_permutation(5);
  CHECK(t * t == Permutation(5));
}

}  // TEST_SUITE
