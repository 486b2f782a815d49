#include "ncb/poset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ncb {

FinitePoset::FinitePoset(std::vector<std::vector<char>> leq) : leq_(std::move(leq)) {
  for (const auto& row : leq_)
    if (row.size() != leq_.size()) throw std::invalid_argument("relation matrix not square");
}

bool FinitePoset::is_partial_order() const {
  const int n = size();
  for (int a = 0; a < n; ++a) {
    if (!leq(a, a)) return false;
    for (int b = 0; b < n; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) return false;
      if (!leq(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (leq(b, c) && !leq(a, c)) return false;
    }
  }
  return true;
}

std::vector<int> FinitePoset::lower_covers(int x) const {
  std::vector<int> below;
  for (int z = 0; z < size(); ++z)
    if (z != x && leq(z, x)) below.push_back(z);
  std::vector<int> out;
  for (int z : below) {
    bool cover = true;
    for (int t : below)
      if (t != z && leq(z, t)) {
        cover = false;
        break;
      }
    if (cover) out.push_back(z);
  }
  return out;
}

std::vector<std::pair<int, int>> FinitePoset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x)
    for (int z : lower_covers(x)) out.emplace_back(z, x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x) {
    bool maximal = true;
    for (int y = 0; y < size(); ++y)
      if (y != x && leq(x, y)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(x);
  }
  return out;
}

bool FinitePoset::is_lattice() const {
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int joins = 0, meets = 0;
      for (int z = 0; z < n; ++z) {
        if (leq(a, z) && leq(b, z)) {  // upper bound; minimal?
          bool minimal = true;
          for (int t = 0; t < n; ++t)
            if (t != z && leq(a, t) && leq(b, t) && leq(t, z)) {
              minimal = false;
              break;
            }
          if (minimal) ++joins;
        }
        if (leq(z, a) && leq(z, b)) {
          bool maximal = true;
          for (int t = 0; t < n; ++t)
            if (t != z && leq(t, a) && leq(t, b) && leq(z, t)) {
              maximal = false;
              break;
            }
          if (maximal) ++meets;
        }
      }
      if (joins != 1 || meets != 1) return false;
    }
  return true;
}

bool FinitePoset::is_distributive_lattice() const {
  const int n = size();
  std::vector<int> irr;
  for (int x = 0; x < n; ++x)
    if (lower_covers(x).size() == 1) irr.push_back(x);
  // down-sets of irreducibles
  std::vector<std::vector<char>> phi(n, std::vector<char>(irr.size(), 0));
  for (int x = 0; x < n; ++x)
    for (std::size_t q = 0; q < irr.size(); ++q) phi[x][q] = leq(irr[q], x);
  std::set<std::vector<char>> distinct(phi.begin(), phi.end());
  if (static_cast<int>(distinct.size()) != n) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool sub = true;
      for (std::size_t q = 0; q < irr.size(); ++q)
        if (phi[x][q] && !phi[y][q]) {
          sub = false;
          break;
        }
      if (leq(x, y) != sub) return false;
    }
  // induced subposet on the irreducibles must have exactly n ideals
  std::vector<std::vector<char>> sub(irr.size(), std::vector<char>(irr.size(), 0));
  for (std::size_t a = 0; a < irr.size(); ++a)
    for (std::size_t b = 0; b < irr.size(); ++b) sub[a][b] = leq(irr[a], irr[b]);
  return FinitePoset(std::move(sub)).count_ideals() == static_cast<std::uint64_t>(n);
}

std::uint64_t FinitePoset::count_ideals() const {
  const int n = size();
  if (n > 64) throw std::invalid_argument("count_ideals supports at most 64 elements");
  std::set<std::uint64_t> seen{0};
  std::vector<std::uint64_t> frontier{0};
  // masks of everything strictly below each element
  std::vector<std::uint64_t> below(n, 0);
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z)
      if (z != x && leq(z, x)) below[x] |= std::uint64_t{1} << z;
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t I : frontier)
      for (int x = 0; x < n; ++x) {
        if (I & (std::uint64_t{1} << x)) continue;
        if ((below[x] & ~I) != 0) continue;
        const std::uint64_t J = I | (std::uint64_t{1} << x);
        if (seen.insert(J).second) next.push_back(J);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace ncb
