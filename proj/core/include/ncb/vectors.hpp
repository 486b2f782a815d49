#pragma once

#include "ncb/bijections.hpp"

namespace ncb {

using IntVector = std::vector<int>;

bool componentwise_leq(const IntVector& a, const IntVector& b);

// Entry i counts roots of p with vertical label i; equals the number of
// copies of s_i in the standard form of V(p).
IntVector vertical_vector(const OrderIdeal& p);

// Combinatorial reading on the polygons of x:
//   vert_i = 2 * #{polygons nesting i strictly between consecutive vertices}
//            + [i in D_x].
IntVector vertical_vector_of_nc(const NoncrossingPartition& x);

// Membership in V_n: first nonzero entry 1, last nonzero entry 1 or 2, and
// consecutive entries obey the parity transition table
//   even -> even: step -2 or 0      even -> odd: step +-1
//   odd  -> even: step +-1          odd  -> odd: step +2 or 0.
bool is_vertical_vector(const IntVector& w);
std::vector<IntVector> enumerate_vertical_vectors(int rank);

IntVector diagonal_vector(const OrderIdeal& p);
// 1 - w_1 <= 2 - w_2 <= ... <= n - w_n with w_i <= i.
bool is_diagonal_vector(const IntVector& w);
std::vector<IntVector> enumerate_diagonal_vectors(int rank);

// Is i in U_x, read off the vertical vector (Lemma 5.3(5)):
// for i <= n, x_i odd with x_{i-1} in {x_i, x_i+1}, or x_i even with
// x_i < x_{i-1}; for i = n+1, x_n > 0.
bool u_membership(const NoncrossingPartition& x, int i);

}  // namespace ncb
