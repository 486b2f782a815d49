#include "ncb/vectors.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncb {
namespace {

// allowed successor values of a under the Prop 5.4 transition table
bool pair_ok(int a, int b) {
  const int d = b - a;
  if (a % 2 == 0 && b % 2 == 0) return d == -2 || d == 0;
  if (a % 2 == 1 && b % 2 == 1) return d == 2 || d == 0;
  return d == 1 || d == -1;
}

}  // namespace

bool componentwise_leq(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] > b[t]) return false;
  return true;
}

IntVector vertical_vector(const OrderIdeal& p) {
  IntVector v(p.rank(), 0);
  for (RootA r : p.roots()) ++v[vert_label(r) - 1];
  return v;
}

IntVector vertical_vector_of_nc(const NoncrossingPartition& x) {
  const DuPair du = du_sets(x);
  IntVector v(x.rank(), 0);
  for (int i = 1; i <= x.rank(); ++i) {
    int nest = 0;
    for (const auto& b : x.blocks())
      for (std::size_t t = 0; t + 1 < b.size(); ++t)
        if (b[t] < i && i < b[t + 1]) {
          ++nest;
          break;
        }
    v[i - 1] = 2 * nest + (std::binary_search(du.d.begin(), du.d.end(), i) ? 1 : 0);
  }
  return v;
}

bool is_vertical_vector(const IntVector& w) {
  int first = -1, last = -1;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (w[t] < 0) return false;
    if (w[t] != 0) {
      if (first < 0) first = static_cast<int>(t);
      last = static_cast<int>(t);
    }
  }
  if (first < 0) return true;  // the zero vector
  if (w[first] != 1) return false;
  if (w[last] != 1 && w[last] != 2) return false;
  for (std::size_t t = 0; t + 1 < w.size(); ++t)
    if (!pair_ok(w[t], w[t + 1])) return false;
  return true;
}

std::vector<IntVector> enumerate_vertical_vectors(int rank) {
  std::vector<IntVector> out;
  IntVector cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == rank) {
      if (is_vertical_vector(cur)) out.push_back(cur);
      return;
    }
    const int a = cur.empty() ? 0 : cur.back();
    int candidates[5] = {a - 2, a - 1, a, a + 1, a + 2};
    for (int b : candidates) {
      if (b < 0) continue;
      if (cur.empty() && b > 1) continue;  // first nonzero entry must be 1
      if (!cur.empty() && !pair_ok(a, b)) continue;
      cur.push_back(b);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IntVector diagonal_vector(const OrderIdeal& p) {
  IntVector v(p.rank(), 0);
  for (RootA r : p.roots()) ++v[diag_label(r) - 1];
  return v;
}

bool is_diagonal_vector(const IntVector& w) {
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (w[t] < 0 || w[t] > static_cast<int>(t) + 1) return false;
    if (t + 1 < w.size() && static_cast<int>(t) + 1 - w[t] > static_cast<int>(t) + 2 - w[t + 1])
      return false;
  }
  return true;
}

std::vector<IntVector> enumerate_diagonal_vectors(int rank) {
  std::vector<IntVector> out;
  IntVector cur;
  auto rec = [&](auto&& self) -> void {
    const int t = static_cast<int>(cur.size());
    if (t == rank) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= t + 1; ++b) {
      // keep i - w_i nondecreasing
      if (t > 0 && t - cur.back() > t + 1 - b) continue;
      cur.push_back(b);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

bool u_membership(const NoncrossingPartition& x, int i) {
  if (i < 2 || i > x.points()) throw std::invalid_argument("need 2 <= i <= n+1");
  const IntVector v = vertical_vector_of_nc(x);
  if (i == x.points()) return v[x.rank() - 1] > 0;
  const int xi = v[i - 1], xp = v[i - 2];
  if (xi % 2 == 1) return xp == xi || xp == xi + 1;
  return xi < xp;
}

}  // namespace ncb
