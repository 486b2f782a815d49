#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "ncb/permutation.hpp"

namespace ncb {

// The positive root e_i - e_j of S_{n+1}, 1 <= i < j <= n+1.
struct RootA {
  int i = 0;
  int j = 0;
  int height() const { return j - i; }
  friend bool operator==(const RootA&, const RootA&) = default;
  friend auto operator<=>(const RootA&, const RootA&) = default;
};

// Root poset order: e_i - e_j <= e_k - e_l iff [i,j] is contained in [k,l].
inline bool root_leq(RootA a, RootA b) { return b.i <= a.i && a.j <= b.j; }

std::vector<RootA> positive_roots(int rank);  // n(n+1)/2 roots
std::vector<std::pair<RootA, RootA>> root_poset_covers(int rank);

// A downward-closed subset of the positive root poset, identified with a
// nonnesting partition. Roots are kept sorted.
class OrderIdeal {
 public:
  OrderIdeal() = default;
  explicit OrderIdeal(int rank) : rank_(rank) {}
  OrderIdeal(int rank, std::vector<RootA> roots);  // validates downward closure

  int rank() const { return rank_; }
  const std::vector<RootA>& roots() const { return roots_; }
  int size() const { return static_cast<int>(roots_.size()); }
  bool contains(RootA r) const;
  bool subset_of(const OrderIdeal& other) const;

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
  friend auto operator<=>(const OrderIdeal&, const OrderIdeal&) = default;

 private:
  int rank_ = 0;
  std::vector<RootA> roots_;
};

// Downward closure of an antichain (pairwise incomparability is validated).
OrderIdeal ideal_of_antichain(int rank, std::span<const RootA> antichain);

OrderIdeal full_ideal(int rank);

// All order ideals, sorted by their root lists.
std::vector<OrderIdeal> enumerate_ideals(int rank);

// A Dyck path with 2(rank+1) steps; true = up. Prefix sums stay nonnegative
// and the endpoint returns to zero.
class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(std::vector<bool> up_steps);  // validates
  static DyckPath parse(const std::string& ud);   // e.g. "uudd"

  int rank() const { return static_cast<int>(steps_.size()) / 2 - 1; }
  const std::vector<bool>& steps() const { return steps_; }
  std::string to_string() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<bool> steps_;
};

// Overlay bijection: a root e_i - e_j lies under the path iff the path height
// at abscissa i+j-1 is at least j-i+1. Mutually inverse.
DyckPath ideal_to_dyck(const OrderIdeal& p);
OrderIdeal dyck_to_ideal(const DyckPath& path);

// Bumps of a nonnesting set partition <-> antichain of the ideal.
OrderIdeal bumps_to_ideal(int rank, std::span<const RootA> bumps);
std::vector<RootA> ideal_to_bumps(const OrderIdeal& p);  // maximal roots

// Kreweras action on nonnesting partitions: split at the least k with
// alpha_{k+1} missing, shift the initial part right-to-left endpoints
// (e_i - e_j -> e_i - e_{j-1}, simple roots vanish), shift the final part
// (e_i - e_j -> e_{i-1} - e_j), then add the simple roots alpha_{k+1}..alpha_n.
OrderIdeal krew_nn(const OrderIdeal& p);

}  // namespace ncb
