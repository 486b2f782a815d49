#pragma once

#include <compare>
#include <span>
#include <vector>

#include "ncb/permutation.hpp"

namespace ncb {

// An element of the hyperoctahedral group B_n, acting on [n] u -[n] with
// w(-i) = -w(i); stored as the signed images of 1..n. Products compose as
// functions, rightmost factor first, as in type A.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(int n);  // identity
  static SignedPermutation from_images(std::vector<int> images);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return x > 0 ? img_[x - 1] : -img_[-x - 1]; }
  const std::vector<int>& images() const { return img_; }

  SignedPermutation operator*(const SignedPermutation& rhs) const;
  SignedPermutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> img_;
};

// Generators: s_i = (i,i+1)(-i,-i-1) for i < n, s_n = (n,-n).
SignedPermutation b_simple(int i, int n);
SignedPermutation b_evaluate(const Word& word, int n);
// c = s_1 s_2 ... s_n = (1,2,...,n,-1,-2,...,-n).
SignedPermutation b_coxeter(int n);

std::vector<SignedPermutation> b_group(int n);        // all 2^n n! elements
std::vector<SignedPermutation> b_reflections(int n);  // n^2 reflections

// Reflection length over the n^2 reflections (BFS table, cached per rank).
int b_reflection_length(const SignedPermutation& w);
bool b_absolute_leq(const SignedPermutation& u, const SignedPermutation& v);

// Coxeter length and Bruhat order via reduced words (BFS over simples;
// subword test). Desk-scale only.
int b_coxeter_length(const SignedPermutation& w);
bool b_bruhat_leq(const SignedPermutation& x, const SignedPermutation& y);

// [e, c] in absolute order; binom(2n, n) elements.
std::vector<SignedPermutation> enumerate_Pc_B(int n);

// Positive roots of B_n: e_i - e_j, e_i + e_j (i < j) and e_i.
struct RootB {
  enum class Kind { e_minus_e, e, e_plus_e };
  Kind kind = Kind::e;
  int i = 0;
  int j = 0;  // unused for kind e
  friend bool operator==(const RootB&, const RootB&) = default;
  friend auto operator<=>(const RootB&, const RootB&) = default;
};

// ht(e_i - e_j) = j-i, ht(e_i) = n-i+1, ht(e_i + e_j) = 2n-i-j+2.
int b_height(RootB r, int n);
std::vector<int> b_simple_coords(RootB r, int n);
bool b_root_leq(RootB a, RootB b, int n);
std::vector<RootB> b_positive_roots(int n);
std::vector<RootB> b_simple_roots(int n);

class OrderIdealB {
 public:
  OrderIdealB() = default;
  explicit OrderIdealB(int n) : n_(n) {}
  OrderIdealB(int n, std::vector<RootB> roots);  // validates downward closure

  int n() const { return n_; }
  const std::vector<RootB>& roots() const { return roots_; }
  int size() const { return static_cast<int>(roots_.size()); }
  bool contains(RootB r) const;

  friend bool operator==(const OrderIdealB&, const OrderIdealB&) = default;
  friend auto operator<=>(const OrderIdealB&, const OrderIdealB&) = default;

 private:
  int n_ = 0;
  std::vector<RootB> roots_;
};

std::vector<OrderIdealB> enumerate_ideals_B(int n);

// Diagonal-style labels: e_i - e_j and e_i and e_i + e_j (j > i+1) all carry
// s_i; the consecutive sum e_i + e_{i+1} carries the word s_i s_{i+1} ... s_n.
Word b_diag_label(RootB r, int n);

// D(p) = (odd-height product)(even-height product)^{-1}; heights increasing,
// roots of equal height by ascending label index.
Word d_b_word(const OrderIdealB& p);
SignedPermutation D_B(const OrderIdealB& p);

// Kreweras action on NN(B_n): split at the least missing simple root, shift
// the initial and final parts, re-add simple roots.
OrderIdealB krew_nn_B(const OrderIdealB& p);

// |{odd-height roots, skipping e_{n-1-2i}+e_{n-2i}}| - |{even-height roots}|.
int lt_B_from_ideal(const OrderIdealB& p);

}  // namespace ncb
