#pragma once

#include <array>
#include <functional>

#include "ncb/bruhat_lattice.hpp"

namespace ncb {

// A standard Coxeter element of S_{rank+1}: the (rank+1)-cycle written from 1,
// with a witness word using each simple reflection exactly once.
struct CoxeterElement {
  std::vector<int> cycle;  // starts at 1
  Word word;
  Permutation permutation;
};

// The (n+1)-cycle written from 1: rises 1 = i_1 < ... < i_k = n+1, then falls
// n+1 > i_{k+1} > ... > i_{n+1} > 1.
bool is_coxeter_cycle(std::span<const int> cycle);

// All 2^{rank-1} standard Coxeter elements (lexicographic in cycle), each with
// the lexicographically first witness word among orderings of s_1..s_n.
std::vector<CoxeterElement> coxeter_elements(int rank);

// [e, cox] in absolute order, lexicographic one-line order.
std::vector<Permutation> enumerate_nc_general(int rank, const Permutation& cox);

// Standard form of a cycle below cox, by peeling the reflection joining the
// two smallest support elements on the side given by the cyclic order.
Word cycle_standard_form(const Permutation& cycle, const Permutation& cox);

// Concatenation of cycle standard forms over the cycle decomposition;
// possibly unreduced.
Word standard_form_general(const Permutation& x, const Permutation& cox);

// D and U sets of an arbitrary permutation's cycle blocks (the c'-polygon
// reading: non-terminal resp. non-initial support indices).
DuPair du_sets_general(const Permutation& x);

// Consecutive arcs of each cycle's support, drawn on the line 1..rank+1.
struct ArcDiagram {
  int rank = 0;
  std::vector<std::pair<int, int>> arcs;
};

ArcDiagram arc_diagram(const Permutation& x);

// Crossing pairs are (i,j,k,l) with i<j<k<l for arcs (i,k),(j,l). The picker
// chooses which crossing to resolve next; by default the lexicographically
// least. Returns the crossing-free arc set.
using CrossingPicker = std::function<std::size_t(std::span<const std::array<int, 4>>)>;
std::vector<std::pair<int, int>> resolve_crossings(ArcDiagram diagram,
                                                   const CrossingPicker& pick = {});

// phi_{c',c}: crossing resolution of the arc diagram; fixes reflections,
// preserves support, l_T and the DU pair.
NoncrossingPartition phi(const Permutation& x, const Permutation& cox);

// phi_{c',c''} = phi_{c'',c}^{-1} after phi_{c',c}.
Permutation phi_general(const Permutation& x, const Permutation& from_cox,
                        const Permutation& to_cox);

IntVector letter_counts(const Word& w, int rank);

// The distributive order induced on NC(S_{n+1}, cox) by comparing standard
// form letter-count vectors componentwise.
struct InducedOrder {
  std::vector<Permutation> elements;
  std::vector<IntVector> vectors;
  FinitePoset poset;
};

InducedOrder induced_order(int rank, const Permutation& cox);

}  // namespace ncb
