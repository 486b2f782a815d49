#include <doctest.h>

#include "ncb/vectors.hpp"
#include "oracles.hpp"

using namespace ncb;

namespace {

NoncrossingPartition nc(int rank, std::vector<std::vector<int>> blocks) {
  return NoncrossingPartition(rank, std::move(blocks));
}

// Example 4.6's rank-2 ideal in A_7
OrderIdeal example_4_6_ideal() {
  return OrderIdeal(7, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {5, 6}, {6, 7}, {6, 8}, {7, 8}});
}

// Example 4.10 / Figure 10's ideal in A_5
OrderIdeal example_4_10_ideal() {
  return OrderIdeal(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}, {2, 4}, {3, 5}, {4, 6},
                        {1, 4}, {2, 5}, {1, 5}});
}

// column of the vertical labeling: the root with label i at height h
RootA column_root(int i, int h) {
  if (h % 2 == 1) return {i - (h - 1) / 2, i + (h + 1) / 2};
  return {i - h / 2, i + h / 2};
}

}  // namespace

TEST_SUITE("bijections") {

TEST_CASE("labels") {
  CHECK(vert_label({1, 6}) == 3);
  CHECK(vert_label({2, 4}) == 3);
  CHECK(vert_label({3, 4}) == 3);
  CHECK(diag_label({1, 6}) == 5);
  CHECK(diag_label({3, 4}) == 3);
}

TEST_CASE("nc_to_dyck per-point rules") {
  CHECK(nc_to_dyck(nc(3, {})).to_string() == "udududud");
  CHECK(nc_to_dyck(nc(3, {{1, 2, 3, 4}})).to_string() == "uudududd");
  CHECK(nc_to_dyck(nc(1, {{1, 2}})).to_string() == "uudd");
  // Figure 7 path (n = 11)
  CHECK(nc_to_dyck(nc(11, {{2, 6, 11, 12}, {3, 4}, {7, 9, 10}})).to_string() ==
        "uduuuuddudduuuuddudddudd");
}

TEST_CASE("dyck_to_nc inverts nc_to_dyck") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& x : enumerate_nc(n)) CHECK(dyck_to_nc(nc_to_dyck(x)) == x);
}

TEST_CASE("dyck_map") {
  CHECK(dyck_map(OrderIdeal(3)) == nc(3, {}));
  // the full ideal maps to the nested chain of long arcs, not to c
  CHECK(dyck_map(full_ideal(2)) == nc(2, {{1, 3}}));
  CHECK(dyck_map(full_ideal(3)) == nc(3, {{1, 4}, {2, 3}}));
  CHECK(dyck_map(full_ideal(5)) == nc(5, {{1, 6}, {2, 5}, {3, 4}}));
  // the all-simples ideal is the one that hits the single block
  CHECK(dyck_map(OrderIdeal(3, {{1, 2}, {2, 3}, {3, 4}})) == nc(3, {{1, 2, 3, 4}}));
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_ideals(n))
      CHECK(dyck_to_ideal(nc_to_dyck(dyck_map(p))) == p);
}

TEST_CASE("vertical word of Example 4.6") {
  CHECK(vertical_word(7, example_4_6_ideal().roots()) == Word{7, 3, 2, 1, 2, 3, 5, 6, 7});
  CHECK(vertical_map(example_4_6_ideal()) == nc(7, {{1, 4}, {5, 6, 8}}));
}

TEST_CASE("vertical word basics") {
  CHECK(vertical_word(4, {}) == Word{});
  for (int i = 1; i <= 4; ++i) {
    const std::vector<RootA> single{{i, i + 1}};
    CHECK(vertical_word(4, single) == Word{i});
  }
}

TEST_CASE("vertical map on the Figure 9 ideal") {
  // reconstructed from its vertical vector (1,3,5,4,2,3,2) by column prefixes
  const IntVector v{1, 3, 5, 4, 2, 3, 2};
  std::vector<RootA> roots;
  for (int i = 1; i <= 7; ++i)
    for (int h = 1; h <= v[i - 1]; ++h) roots.push_back(column_root(i, h));
  const OrderIdeal p(7, std::move(roots));  // validates it is an ideal
  CHECK(vertical_map(p) == nc(7, {{3, 4}, {2, 5}, {6, 7}, {1, 8}}));
}

TEST_CASE("diagonal word and map of Example 4.10") {
  CHECK(diagonal_word(5, example_4_10_ideal().roots()) ==
        Word{5, 4, 3, 2, 4, 3, 4, 1, 2, 3, 4, 5});
  CHECK(diagonal_map(example_4_10_ideal()) == nc(5, {{2, 4}, {1, 6}}));
}

TEST_CASE("diagonal map endpoints") {
  CHECK(diagonal_map(OrderIdeal(4)) == nc(4, {}));
  CHECK(diagonal_map(OrderIdeal(4, {{1, 2}, {2, 3}, {3, 4}, {4, 5}})) == nc(4, {{1, 2, 3, 4, 5}}));
  CHECK(diagonal_map(full_ideal(4)) == nc(4, {{1, 5}, {2, 4}}));
}

TEST_CASE("u_map lands on distinct 231-avoiders with the size statistic") {
  CHECK(u_map(OrderIdeal(3)) == Permutation(4));
  const std::vector<RootA> single{{2, 3}};
  CHECK(u_map(OrderIdeal(3, single)) == simple_reflection(2, 4));
  for (int n = 2; n <= 5; ++n) {
    std::set<std::vector<int>> images;
    for (const auto& p : enumerate_ideals(n)) {
      const Permutation u = u_map(p);
      CHECK_FALSE(oracle::contains_pattern(u.one_line(), {2, 3, 1}));
      CHECK(coxeter_length(u) == p.size());
      images.insert(u.one_line());
    }
    CHECK(images.size() == oracle::catalan(n + 1));
  }
}

TEST_CASE("Theorem 4.15 equivalence with the length statistic, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(check_equivalence(n));
    for (const auto& p : enumerate_ideals(n)) {
      const NoncrossingPartition x = vertical_map(p);
      CHECK(coxeter_length(x.permutation()) == p.size());
      // the vertical word is the standard form up to commutations: same letters
      IntVector a(n + 1, 0), b(n + 1, 0);
      for (int s : vertical_word(n, p.roots())) ++a[s];
      for (int s : standard_form(x)) ++b[s];
      CHECK(a == b);
      // the diagonal word is reduced but is a different word: its letter
      // multiset is the diagonal vector, not the vertical one
      CHECK(static_cast<int>(diagonal_word(n, p.roots()).size()) == p.size());
    }
  }
}

TEST_CASE("equivariance of the diagonal map under Kreweras") {
  for (int n = 1; n <= 5; ++n) {
    const Permutation c = long_cycle(n + 1);
    for (const auto& p : enumerate_ideals(n)) {
      bool all_simples = true;
      for (int i = 1; i <= n; ++i)
        if (!p.contains({i, i + 1})) {
          all_simples = false;
          break;
        }
      if (!all_simples) continue;
      CHECK(diagonal_map(krew_nn(p)).permutation() ==
            diagonal_map(p).permutation().inverse() * c);
    }
  }
}

TEST_CASE("lt_from_ideal") {
  CHECK(lt_from_ideal(OrderIdeal(4)) == 0);
  const std::vector<RootA> single{{2, 3}};
  CHECK(lt_from_ideal(OrderIdeal(4, single)) == 1);
  CHECK(lt_from_ideal(example_4_6_ideal()) == 3);
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_ideals(n))
      CHECK(lt_from_ideal(p) == reflection_length(vertical_map(p).permutation()));
}

TEST_CASE("rank census: brute-force lT counts, printed formula flagged") {
  std::vector<int> census(4, 0);
  for (const auto& x : enumerate_nc(3)) ++census[reflection_length(x.permutation())];
  CHECK(census == std::vector<int>{1, 6, 6, 1});
  // the printed closed form 1/(n+1) C(n+1,k) C(n+1,k-1) at (n,k) = (3,1) gives 1, not 6;
  // it matches only after shifting k by one
  auto printed = [](int n, int k) {
    auto binom = [](int a, int b) {
      if (b < 0 || b > a) return 0;
      int v = 1;
      for (int t = 1; t <= b; ++t) v = v * (a - t + 1) / t;
      return v;
    };
    return binom(n + 1, k) * binom(n + 1, k - 1) / (n + 1);
  };
  CHECK(printed(3, 1) == 1);
  for (int k = 0; k <= 3; ++k) CHECK(census[k] == printed(3, k + 1));
}

}  // TEST_SUITE
