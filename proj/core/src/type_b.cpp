#include "ncb/type_b.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncb {

SignedPermutation::SignedPermutation(int n) : img_(n) {
  for (int i = 0; i < n; ++i) img_[i] = i + 1;
}

SignedPermutation SignedPermutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n + 1, 0);
  for (int x : images) {
    const int a = std::abs(x);
    if (a < 1 || a > n || seen[a]) throw std::invalid_argument("not a signed permutation");
    seen[a] = 1;
  }
  SignedPermutation w;
  w.img_ = std::move(images);
  return w;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& rhs) const {
  if (n() != rhs.n()) throw std::invalid_argument("rank mismatch");
  SignedPermutation out;
  out.img_.resize(img_.size());
  for (int x = 1; x <= n(); ++x) out.img_[x - 1] = (*this)(rhs(x));
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation out;
  out.img_.resize(img_.size());
  for (int x = 1; x <= n(); ++x) {
    const int y = img_[x - 1];
    if (y > 0)
      out.img_[y - 1] = x;
    else
      out.img_[-y - 1] = -x;
  }
  return out;
}

bool SignedPermutation::is_identity() const {
  for (int x = 1; x <= n(); ++x)
    if (img_[x - 1] != x) return false;
  return true;
}

SignedPermutation b_simple(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
  SignedPermutation w(n);
  std::vector<int> img = w.images();
  if (i < n)
    std::swap(img[i - 1], img[i]);
  else
    img[n - 1] = -n;
  return SignedPermutation::from_images(std::move(img));
}

SignedPermutation b_evaluate(const Word& word, int n) {
  SignedPermutation w(n);
  for (int s : word) w = w * b_simple(s, n);
  return w;
}

SignedPermutation b_coxeter(int n) {
  Word word(n);
  for (int s = 1; s <= n; ++s) word[s - 1] = s;
  return b_evaluate(word, n);
}

std::vector<SignedPermutation> b_group(int n) {
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i + 1;
  std::vector<SignedPermutation> out;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> img = base;
      for (int t = 0; t < n; ++t)
        if (mask & (1u << t)) img[t] = -img[t];
      out.push_back(SignedPermutation::from_images(std::move(img)));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPermutation> b_reflections(int n) {
  std::vector<SignedPermutation> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> a(n), b(n);
      for (int t = 0; t < n; ++t) a[t] = b[t] = t + 1;
      a[i - 1] = j, a[j - 1] = i;    // ((i,j))
      b[i - 1] = -j, b[j - 1] = -i;  // ((i,-j))
      out.push_back(SignedPermutation::from_images(std::move(a)));
      out.push_back(SignedPermutation::from_images(std::move(b)));
    }
    std::vector<int> c(n);
    for (int t = 0; t < n; ++t) c[t] = t + 1;
    c[i - 1] = -i;  // (i,-i)
    out.push_back(SignedPermutation::from_images(std::move(c)));
  }
  return out;
}

namespace {

// BFS tables per rank; read-only after construction
const std::map<SignedPermutation, int>& lt_table(int n) {
  static std::map<int, std::map<SignedPermutation, int>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n > 5) throw std::invalid_argument("type B reflection length table limited to n <= 5");
  std::map<SignedPermutation, int> dist;
  const auto refl = b_reflections(n);
  std::vector<SignedPermutation> frontier{SignedPermutation(n)};
  dist[frontier[0]] = 0;
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const auto& w : frontier)
      for (const auto& t : refl) {
        SignedPermutation u = w * t;
        if (dist.emplace(u, dist[w] + 1).second) next.push_back(std::move(u));
      }
    frontier = std::move(next);
  }
  return cache.emplace(n, std::move(dist)).first->second;
}

struct LsEntry {
  int length = 0;
  SignedPermutation parent;
  int letter = 0;
};

const std::map<SignedPermutation, LsEntry>& ls_table(int n) {
  static std::map<int, std::map<SignedPermutation, LsEntry>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n > 5) throw std::invalid_argument("type B length table limited to n <= 5");
  std::map<SignedPermutation, LsEntry> dist;
  std::vector<SignedPermutation> frontier{SignedPermutation(n)};
  dist[frontier[0]] = {0, SignedPermutation(n), 0};
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const auto& w : frontier)
      for (int s = 1; s <= n; ++s) {
        SignedPermutation u = w * b_simple(s, n);
        if (dist.emplace(u, LsEntry{dist[w].length + 1, w, s}).second)
          next.push_back(std::move(u));
      }
    frontier = std::move(next);
  }
  return cache.emplace(n, std::move(dist)).first->second;
}

Word b_reduced_word(const SignedPermutation& w) {
  const auto& table = ls_table(w.n());
  Word out;
  SignedPermutation x = w;
  while (!x.is_identity()) {
    const auto& e = table.at(x);
    out.push_back(e.letter);
    x = e.parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

int b_reflection_length(const SignedPermutation& w) { return lt_table(w.n()).at(w); }

bool b_absolute_leq(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("rank mismatch");
  return b_reflection_length(u) + b_reflection_length(u.inverse() * v) == b_reflection_length(v);
}

int b_coxeter_length(const SignedPermutation& w) { return ls_table(w.n()).at(w).length; }

bool b_bruhat_leq(const SignedPermutation& x, const SignedPermutation& y) {
  if (x.n() != y.n()) throw std::invalid_argument("rank mismatch");
  const Word ry = b_reduced_word(y);
  const int k = static_cast<int>(ry.size());
  if (k > 20) throw std::invalid_argument("b_bruhat_leq is desk-scale only");
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Word sub;
    for (int t = 0; t < k; ++t)
      if (mask & (1u << t)) sub.push_back(ry[t]);
    if (b_evaluate(sub, x.n()) == x) return true;
  }
  return false;
}

std::vector<SignedPermutation> enumerate_Pc_B(int n) {
  const SignedPermutation c = b_coxeter(n);
  std::vector<SignedPermutation> out;
  for (const auto& w : b_group(n))
    if (b_absolute_leq(w, c)) out.push_back(w);
  return out;
}

int b_height(RootB r, int n) {
  switch (r.kind) {
    case RootB::Kind::e_minus_e: return r.j - r.i;
    case RootB::Kind::e: return n - r.i + 1;
    case RootB::Kind::e_plus_e: return 2 * n - r.i - r.j + 2;
  }
  return 0;
}

std::vector<int> b_simple_coords(RootB r, int n) {
  std::vector<int> co(n, 0);
  switch (r.kind) {
    case RootB::Kind::e_minus_e:
      for (int t = r.i; t < r.j; ++t) co[t - 1] = 1;
      break;
    case RootB::Kind::e:
      for (int t = r.i; t <= n; ++t) co[t - 1] = 1;
      break;
    case RootB::Kind::e_plus_e:
      for (int t = r.i; t < r.j; ++t) co[t - 1] = 1;
      for (int t = r.j; t <= n; ++t) co[t - 1] = 2;
      break;
  }
  return co;
}

bool b_root_leq(RootB a, RootB b, int n) {
  const auto ca = b_simple_coords(a, n), cb = b_simple_coords(b, n);
  for (int t = 0; t < n; ++t)
    if (ca[t] > cb[t]) return false;
  return true;
}

std::vector<RootB> b_positive_roots(int n) {
  std::vector<RootB> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.push_back({RootB::Kind::e_minus_e, i, j});
      out.push_back({RootB::Kind::e_plus_e, i, j});
    }
    out.push_back({RootB::Kind::e, i, 0});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootB> b_simple_roots(int n) {
  std::vector<RootB> out;
  for (int i = 1; i < n; ++i) out.push_back({RootB::Kind::e_minus_e, i, i + 1});
  out.push_back({RootB::Kind::e, n, 0});
  return out;
}

OrderIdealB::OrderIdealB(int n, std::vector<RootB> roots) : n_(n) {
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  const auto all = b_positive_roots(n);
  for (RootB r : roots) {
    if (std::find(all.begin(), all.end(), r) == all.end())
      throw std::invalid_argument("not a positive root of B_n");
    for (RootB q : all)
      if (q != r && b_root_leq(q, r, n) && !std::binary_search(roots.begin(), roots.end(), q))
        throw std::invalid_argument("not downward closed");
  }
  roots_ = std::move(roots);
}

bool OrderIdealB::contains(RootB r) const {
  return std::binary_search(roots_.begin(), roots_.end(), r);
}

std::vector<OrderIdealB> enumerate_ideals_B(int n) {
  const auto all = b_positive_roots(n);
  std::vector<std::vector<RootB>> out{{}}, layer{{}}, seen{{}};
  while (!layer.empty()) {
    std::vector<std::vector<RootB>> next;
    for (const auto& I : layer)
      for (RootB r : all) {
        if (std::binary_search(I.begin(), I.end(), r)) continue;
        bool addable = true;
        for (RootB q : all)
          if (q != r && b_root_leq(q, r, n) && !std::binary_search(I.begin(), I.end(), q)) {
            addable = false;
            break;
          }
        if (!addable) continue;
        auto J = I;
        J.insert(std::lower_bound(J.begin(), J.end(), r), r);
        if (!std::binary_search(seen.begin(), seen.end(), J)) {
          seen.insert(std::lower_bound(seen.begin(), seen.end(), J), J);
          next.push_back(J);
          out.push_back(std::move(J));
        }
      }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  std::vector<OrderIdealB> ideals;
  ideals.reserve(out.size());
  for (auto& roots : out) ideals.emplace_back(n, std::move(roots));
  return ideals;
}

Word b_diag_label(RootB r, int n) {
  if (r.kind == RootB::Kind::e_plus_e && r.j == r.i + 1) {
    Word w;
    for (int s = r.i; s <= n; ++s) w.push_back(s);
    return w;
  }
  return {r.i};
}

Word d_b_word(const OrderIdealB& p) {
  const int n = p.n();
  Word odd, even;
  for (int h = 1; h <= 2 * n - 1; ++h) {
    std::vector<RootB> row;
    for (RootB r : p.roots())
      if (b_height(r, n) == h) row.push_back(r);
    std::sort(row.begin(), row.end(),
              [&](RootB a, RootB b) { return b_diag_label(a, n)[0] < b_diag_label(b, n)[0]; });
    auto& block = (h % 2 == 1) ? odd : even;
    for (RootB r : row) {
      const Word lab = b_diag_label(r, n);
      block.insert(block.end(), lab.begin(), lab.end());
    }
  }
  std::reverse(even.begin(), even.end());  // single letters only on even heights
  odd.insert(odd.end(), even.begin(), even.end());
  return odd;
}

SignedPermutation D_B(const OrderIdealB& p) { return b_evaluate(d_b_word(p), p.n()); }

OrderIdealB krew_nn_B(const OrderIdealB& p) {
  const int n = p.n();
  const auto simples = b_simple_roots(n);
  int k = 0;
  while (k < n && p.contains(simples[k])) ++k;
  std::vector<RootB> out, f_added;
  auto add = [&out](RootB r) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  };
  for (RootB r : p.roots()) {
    const bool initial = (k == n) || (r.kind == RootB::Kind::e_minus_e && r.j <= k + 1);
    if (initial) {
      switch (r.kind) {
        case RootB::Kind::e_minus_e:
          if (r.j - 1 > r.i) add({RootB::Kind::e_minus_e, r.i, r.j - 1});
          break;
        case RootB::Kind::e:
          if (r.i < n) add({RootB::Kind::e_minus_e, r.i, n});
          break;
        case RootB::Kind::e_plus_e:
          if (r.j == r.i + 1) {  // e_i + e_{i+1} -> e_i + e_{i+2} and e_{i+1} + e_{i+2}
            if (r.i + 2 <= n) {
              add({RootB::Kind::e_plus_e, r.i, r.i + 2});
              add({RootB::Kind::e_plus_e, r.i + 1, r.i + 2});
            } else {  // e_{n+1} = 0
              add({RootB::Kind::e, r.i, 0});
              add({RootB::Kind::e, r.i + 1, 0});
            }
          } else if (r.j + 1 <= n) {
            add({RootB::Kind::e_plus_e, r.i, r.j + 1});
          } else {
            add({RootB::Kind::e, r.i, 0});
          }
          break;
      }
    } else {  // final part; closure forces r.i >= k+2
      switch (r.kind) {
        case RootB::Kind::e_minus_e:
          add({RootB::Kind::e_minus_e, r.i - 1, r.j});
          break;
        case RootB::Kind::e:
          add({RootB::Kind::e, r.i - 1, 0});
          if (r.i == n) {
            add({RootB::Kind::e_plus_e, n - 1, n});
            f_added.push_back({RootB::Kind::e_plus_e, n - 1, n});
          }
          break;
        case RootB::Kind::e_plus_e:
          add({RootB::Kind::e_plus_e, r.i - 1, r.j});
          f_added.push_back({RootB::Kind::e_plus_e, r.i - 1, r.j});
          break;
      }
    }
  }
  // each e_i + e_{i+2} produced by the final-part shift drags in e_i + e_{i+1}
  for (RootB r : f_added)
    if (r.j == r.i + 2) add({RootB::Kind::e_plus_e, r.i, r.i + 1});
  for (int t = k + 1; t <= n; ++t) add(simples[t - 1]);
  return OrderIdealB(n, std::move(out));
}

int lt_B_from_ideal(const OrderIdealB& p) {
  const int n = p.n();
  int odd = 0, even = 0;
  for (RootB r : p.roots()) {
    if (b_height(r, n) % 2 == 0) {
      ++even;
      continue;
    }
    // skip consecutive sums e_{n-1-2i} + e_{n-2i}
    const bool skipped =
        r.kind == RootB::Kind::e_plus_e && r.j == r.i + 1 && (n - 1 - r.i) % 2 == 0;
    if (!skipped) ++odd;
  }
  return odd - even;
}

}  // namespace ncb
