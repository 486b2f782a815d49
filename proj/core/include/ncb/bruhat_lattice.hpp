#pragma once

#include "ncb/poset.hpp"
#include "ncb/vectors.hpp"

namespace ncb {

// Bruhat order restricted to NC(S_{n+1}, c), elements in canonical order.
struct BruhatNcPoset {
  std::vector<NoncrossingPartition> elements;
  FinitePoset poset;
};

BruhatNcPoset restricted_bruhat_poset(int rank);

// Theorem 6.1 / Prop 6.5: Bruhat comparability on NC equals componentwise
// order of vertical vectors and equals ideal inclusion under V; the poset is
// a graded distributive lattice with rank function l_S.
bool check_main_theorem(int rank);

// Elements covered by y in Bruhat order, by cycle surgery: split a block at a
// consecutive pair k,k+1, or insert a fixed point k strictly between adjacent
// block entries when the result stays noncrossing.
std::vector<NoncrossingPartition> nc_covers(const NoncrossingPartition& y);

enum class DeletionOutcome { cover, not_reduced, not_noncrossing };

// Delete alpha from the ideal p: maximal roots give covers; deleting a
// non-maximal root always breaks reducedness or noncrossingness of D(p').
DeletionOutcome deletion_dichotomy(const OrderIdeal& p, RootA alpha);

}  // namespace ncb
