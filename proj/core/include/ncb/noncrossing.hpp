#pragma once

#include <vector>

#include "ncb/permutation.hpp"

namespace ncb {

// A noncrossing set partition of [rank+1] for the linear Coxeter element.
// Only non-singleton blocks are stored; each block is strictly increasing and
// blocks are ordered by their maximal element (the paper's polygon order).
class NoncrossingPartition {
 public:
  NoncrossingPartition() = default;
  // Validates membership of all entries, disjointness and the noncrossing
  // condition; singleton blocks are accepted and dropped.
  NoncrossingPartition(int rank, std::vector<std::vector<int>> blocks);
  // Validates w <=_T c; blocks are the cycles of w.
  static NoncrossingPartition from_permutation(const Permutation& w);

  int rank() const { return rank_; }
  int points() const { return rank_ + 1; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  Permutation permutation() const;
  bool is_identity() const { return blocks_.empty(); }

  friend bool operator==(const NoncrossingPartition&, const NoncrossingPartition&) = default;
  friend auto operator<=>(const NoncrossingPartition&, const NoncrossingPartition&) = default;

 private:
  int rank_ = 0;
  std::vector<std::vector<int>> blocks_;
};

// Bump-crossing test on arbitrary disjoint blocks (overlap is an input error).
bool is_noncrossing(int rank, const std::vector<std::vector<int>>& blocks);

// All of NC(S_{rank+1}, c) in lexicographic order of one-line notation.
// Uses the absolute-order filter for rank <= 6 and recursive block-structure
// generation above that; the two paths agree where both run.
std::vector<NoncrossingPartition> enumerate_nc(int rank);

// The syllable s_[j,k] = (s_{k-1} ... s_{j+1}) s_j (s_{j+1} ... s_{k-1}),
// a palindromic reduced word for the transposition (j,k).
Word syllable(int j, int k);

// Concatenation of syllables over the polygons of pi; reduced.
Word standard_form(const NoncrossingPartition& pi);

// Initial set D (non-terminal polygon vertices) and final set U (non-initial
// ones), both strictly increasing.
struct DuPair {
  std::vector<int> d;
  std::vector<int> u;
  friend bool operator==(const DuPair&, const DuPair&) = default;
};

DuPair du_sets(const NoncrossingPartition& pi);
// Inverse of du_sets; validates |D| = |U|, strict monotonicity and d_i < u_i.
NoncrossingPartition du_inverse(int rank, const DuPair& p);

// The fully commutative (321-avoiding) word (s_{u_1-1}...s_{d_1})(s_{u_2-1}...s_{d_2})...
// attached to a DU pair, each factor a descending run.
Word fully_commutative_word(int rank, const DuPair& p);

// Kreweras complement pi -> pi^{-1} c.
NoncrossingPartition kreweras(const NoncrossingPartition& pi);

// Refinement order: every block of a lies inside a block of b.
bool refines(const NoncrossingPartition& a, const NoncrossingPartition& b);

}  // namespace ncb
