#pragma once

#include <span>

#include "ncb/noncrossing.hpp"
#include "ncb/nonnesting.hpp"

namespace ncb {

// Root-poset labelings driving the two product bijections.
inline int vert_label(RootA r) { return (r.i + r.j) / 2; }  // ceil((i+j-1)/2)
inline int diag_label(RootA r) { return r.j - 1; }

// Per-point Dyck path construction: no arcs -> ud, arcs in and out -> du,
// arc out only -> uu, arc in only -> dd.
DyckPath nc_to_dyck(const NoncrossingPartition& pi);
NoncrossingPartition dyck_to_nc(const DyckPath& path);

// Composite Dyck(p) = dyck_to_nc(ideal_to_dyck(p)).
NoncrossingPartition dyck_map(const OrderIdeal& p);

// V(p): rows from height n down to 1; even rows list vertical labels in
// decreasing order, odd rows (inverted factors) in increasing order.
// Defined on arbitrary root subsets; the bijection claims hold on ideals.
Word vertical_word(int rank, std::span<const RootA> roots);
NoncrossingPartition vertical_map(const OrderIdeal& p);

// D(p): even-height rows (increasing height, labels decreasing within a row)
// followed by the inverse of the odd-height block.
Word diagonal_word(int rank, std::span<const RootA> roots);
NoncrossingPartition diagonal_map(const OrderIdeal& p);

// U(p): all rows in increasing height, labels decreasing; lands on the
// 231-avoiding permutations.
Word u_word(int rank, std::span<const RootA> roots);
Permutation u_map(const OrderIdeal& p);

// True iff Dyck(p) = V(p) = D(p) for every ideal of the given rank.
bool check_equivalence(int rank);

// #odd-height roots - #even-height roots = l_T of the image.
int lt_from_ideal(const OrderIdeal& p);

}  // namespace ncb
