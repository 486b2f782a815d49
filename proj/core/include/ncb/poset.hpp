#pragma once

#include <cstdint>
#include <vector>

namespace ncb {

// A finite poset on elements {0,...,size-1} given by its full order relation.
class FinitePoset {
 public:
  FinitePoset() = default;
  explicit FinitePoset(std::vector<std::vector<char>> leq);

  int size() const { return static_cast<int>(leq_.size()); }
  bool leq(int a, int b) const { return leq_[a][b] != 0; }

  bool is_partial_order() const;  // reflexive, antisymmetric, transitive
  std::vector<int> lower_covers(int x) const;
  std::vector<std::pair<int, int>> cover_pairs() const;  // (lower, upper)
  std::vector<int> maximal_elements() const;

  // Every pair has a meet and a join.
  bool is_lattice() const;

  // Birkhoff test: the poset is a distributive lattice iff mapping each
  // element to its down-set of join-irreducibles is an order isomorphism
  // onto the ideals of the join-irreducible subposet.
  bool is_distributive_lattice() const;

  // Number of order ideals; requires size() <= 64.
  std::uint64_t count_ideals() const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  std::vector<std::vector<char>> leq_;
};

}  // namespace ncb
