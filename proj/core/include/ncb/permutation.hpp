#pragma once

#include <compare>
#include <span>
#include <vector>

namespace ncb {

// A word in the simple reflections s_1..s_n, stored as 1-based letter indices.
// Words may be empty and need not be reduced.
using Word = std::vector<int>;

// A permutation of {1,...,m} in one-line notation.
//
// Products compose as functions written on the left: (u*v)(x) = u(v(x)).
// Consequently the rightmost letter of a word acts first, the linear Coxeter
// element s_1 s_2 ... s_n is the long cycle (1,2,...,n+1), and the cycle
// (i_1,...,i_k) factors as (i_1,i_2)(i_2,i_3)...(i_{k-1},i_k).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int points);  // identity on {1,...,points}
  static Permutation from_one_line(std::vector<int> images);
  // The cycle (c_1,...,c_k) inside the identity on {1,...,points}.
  static Permutation from_cycle(std::span<const int> cycle, int points);

  int points() const { return static_cast<int>(img_.size()); }
  int rank() const { return points() - 1; }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& one_line() const { return img_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  std::vector<int> support() const;
  // Disjoint cycles, fixed points omitted; each cycle starts at its minimum
  // and cycles are listed in ascending order of their maximal entry.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

Permutation simple_reflection(int i, int points);
Permutation transposition(int i, int j, int points);
Permutation long_cycle(int points);  // c = (1,2,...,points)

// Left-to-right product of the word's letters in S_{rank+1}; the empty word
// gives the identity. Letters outside [1,rank] are an input error.
Permutation evaluate(const Word& word, int rank);

int coxeter_length(const Permutation& w);     // = inversion count
int reflection_length(const Permutation& w);  // = points - #cycles (fixed points count)

// Absolute order: u <=_T v iff l_T(u) + l_T(u^-1 v) = l_T(v).
bool absolute_leq(const Permutation& u, const Permutation& v);

// Bruhat order by the Ehresmann tableau criterion,
// x[i,j] := |{a in [i] : x(a) >= j}|, x <= y iff x[i,j] <= y[i,j] for all i,j.
bool bruhat_leq(const Permutation& x, const Permutation& y);

// The transposition (i,j) with i < j.
struct Reflection {
  int i = 0;
  int j = 0;
  Permutation to_permutation(int points) const;
  friend bool operator==(const Reflection&, const Reflection&) = default;
};

}  // namespace ncb
