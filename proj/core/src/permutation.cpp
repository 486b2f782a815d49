#include "ncb/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncb {

Permutation::Permutation(int points) : img_(points) {
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_one_line(std::vector<int> images) {
  const int m = static_cast<int>(images.size());
  std::vector<char> seen(m + 1, 0);
  for (int x : images) {
    if (x < 1 || x > m || seen[x]) throw std::invalid_argument("not a permutation of [m]");
    seen[x] = 1;
  }
  Permutation w;
  w.img_ = std::move(images);
  return w;
}

Permutation Permutation::from_cycle(std::span<const int> cycle, int points) {
  Permutation w(points);
  if (cycle.size() < 2) return w;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    int a = cycle[k], b = cycle[(k + 1) % cycle.size()];
    if (a < 1 || a > points) throw std::invalid_argument("cycle entry out of range");
    w.img_[a - 1] = b;
  }
  std::vector<char> seen(points + 1, 0);
  for (int x : w.img_) {
    if (seen[x]) throw std::invalid_argument("cycle entries must be distinct");
    seen[x] = 1;
  }
  return w;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (points() != rhs.points()) throw std::invalid_argument("rank mismatch");
  Permutation out;
  out.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) out.img_[x] = img_[rhs.img_[x] - 1];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) out.img_[img_[x] - 1] = static_cast<int>(x) + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != static_cast<int>(x) + 1) return false;
  return true;
}

std::vector<int> Permutation::support() const {
  std::vector<int> out;
  for (int x = 1; x <= points(); ++x)
    if (img_[x - 1] != x) out.push_back(x);
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<char> seen(points() + 1, 0);
  std::vector<std::vector<int>> out;
  for (int a = 1; a <= points(); ++a) {
    if (seen[a] || img_[a - 1] == a) continue;
    std::vector<int> cyc;
    for (int x = a; !seen[x]; x = img_[x - 1]) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return *std::max_element(a.begin(), a.end()) < *std::max_element(b.begin(), b.end());
  });
  return out;
}

Permutation simple_reflection(int i, int points) {
  if (i < 1 || i >= points) throw std::invalid_argument("simple reflection index out of range");
  return transposition(i, i + 1, points);
}

Permutation transposition(int i, int j, int points) {
  if (!(1 <= i && i < j && j <= points)) throw std::invalid_argument("need 1 <= i < j <= m");
  const int cyc[2] = {i, j};
  return Permutation::from_cycle(cyc, points);
}

Permutation long_cycle(int points) {
  std::vector<int> img(points);
  for (int x = 1; x <= points; ++x) img[x - 1] = x % points + 1;
  return Permutation::from_one_line(std::move(img));
}

Permutation evaluate(const Word& word, int rank) {
  Permutation w(rank + 1);
  for (int s : word) {
    if (s < 1 || s > rank) throw std::invalid_argument("word letter out of range");
    w = w * simple_reflection(s, rank + 1);
  }
  return w;
}

int coxeter_length(const Permutation& w) {
  int inv = 0;
  const auto& im = w.one_line();
  for (std::size_t i = 0; i < im.size(); ++i)
    for (std::size_t j = i + 1; j < im.size(); ++j)
      if (im[i] > im[j]) ++inv;
  return inv;
}

int reflection_length(const Permutation& w) {
  const int m = w.points();
  std::vector<char> seen(m + 1, 0);
  int ncycles = 0;
  for (int a = 1; a <= m; ++a) {
    if (seen[a]) continue;
    ++ncycles;
    for (int x = a; !seen[x]; x = w(x)) seen[x] = 1;
  }
  return m - ncycles;
}

bool absolute_leq(const Permutation& u, const Permutation& v) {
  if (u.points() != v.points()) throw std::invalid_argument("rank mismatch");
  return reflection_length(u) + reflection_length(u.inverse() * v) == reflection_length(v);
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
  if (x.points() != y.points()) throw std::invalid_argument("rank mismatch");
  const int m = x.points();
  // running row counts of {a <= i : w(a) >= j}
  std::vector<int> cx(m + 2, 0), cy(m + 2, 0);
  for (int i = 1; i <= m; ++i) {
    for (int j = x(i); j >= 1; --j) ++cx[j];
    for (int j = y(i); j >= 1; --j) ++cy[j];
    for (int j = 1; j <= m; ++j)
      if (cx[j] > cy[j]) return false;
  }
  return true;
}

Permutation Reflection::to_permutation(int points) const { return transposition(i, j, points); }

}  // namespace ncb
