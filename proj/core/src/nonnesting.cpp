#include "ncb/nonnesting.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncb {

std::vector<RootA> positive_roots(int rank) {
  std::vector<RootA> out;
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 1; j <= rank + 1; ++j) out.push_back({i, j});
  return out;
}

std::vector<std::pair<RootA, RootA>> root_poset_covers(int rank) {
  std::vector<std::pair<RootA, RootA>> out;
  for (RootA r : positive_roots(rank)) {
    if (r.i > 1) out.push_back({r, {r.i - 1, r.j}});
    if (r.j <= rank) out.push_back({r, {r.i, r.j + 1}});
  }
  return out;
}

OrderIdeal::OrderIdeal(int rank, std::vector<RootA> roots) : rank_(rank) {
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (RootA r : roots) {
    if (!(1 <= r.i && r.i < r.j && r.j <= rank + 1))
      throw std::invalid_argument("root out of range");
    // covers downward must be present
    if (r.i + 1 < r.j) {
      if (!std::binary_search(roots.begin(), roots.end(), RootA{r.i + 1, r.j}) ||
          !std::binary_search(roots.begin(), roots.end(), RootA{r.i, r.j - 1}))
        throw std::invalid_argument("not downward closed");
    }
  }
  roots_ = std::move(roots);
}

bool OrderIdeal::contains(RootA r) const {
  return std::binary_search(roots_.begin(), roots_.end(), r);
}

bool OrderIdeal::subset_of(const OrderIdeal& other) const {
  return std::includes(other.roots_.begin(), other.roots_.end(), roots_.begin(), roots_.end());
}

OrderIdeal ideal_of_antichain(int rank, std::span<const RootA> antichain) {
  for (RootA a : antichain)
    for (RootA b : antichain)
      if (a != b && root_leq(a, b)) throw std::invalid_argument("not an antichain");
  std::vector<RootA> roots;
  for (RootA r : positive_roots(rank))
    for (RootA a : antichain)
      if (root_leq(r, a)) {
        roots.push_back(r);
        break;
      }
  return OrderIdeal(rank, std::move(roots));
}

OrderIdeal full_ideal(int rank) { return OrderIdeal(rank, positive_roots(rank)); }

std::vector<OrderIdeal> enumerate_ideals(int rank) {
  // grow ideals one addable root at a time, deduplicating
  const auto all = positive_roots(rank);
  std::vector<std::vector<RootA>> layer{{}};
  std::vector<std::vector<RootA>> out{{}};
  std::vector<std::vector<RootA>> seen{{}};
  while (!layer.empty()) {
    std::vector<std::vector<RootA>> next;
    for (const auto& I : layer) {
      for (RootA r : all) {
        if (std::binary_search(I.begin(), I.end(), r)) continue;
        bool addable = true;
        for (RootA q : all)
          if (q != r && root_leq(q, r) && !std::binary_search(I.begin(), I.end(), q)) {
            addable = false;
            break;
          }
        if (!addable) continue;
        auto J = I;
        J.insert(std::lower_bound(J.begin(), J.end(), r), r);
        if (!std::binary_search(seen.begin(), seen.end(), J)) {
          seen.insert(std::lower_bound(seen.begin(), seen.end(), J), J);
          next.push_back(J);
          out.push_back(J);
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  std::vector<OrderIdeal> ideals;
  ideals.reserve(out.size());
  for (auto& roots : out) ideals.emplace_back(rank, std::move(roots));
  return ideals;
}

DyckPath::DyckPath(std::vector<bool> up_steps) : steps_(std::move(up_steps)) {
  if (steps_.empty() || steps_.size() % 2 != 0) throw std::invalid_argument("bad step count");
  int h = 0;
  for (bool up : steps_) {
    h += up ? 1 : -1;
    if (h < 0) throw std::invalid_argument("path dips below the axis");
  }
  if (h != 0) throw std::invalid_argument("path does not return to zero");
}

DyckPath DyckPath::parse(const std::string& ud) {
  std::vector<bool> steps;
  for (char ch : ud) {
    if (ch == 'u' || ch == 'U')
      steps.push_back(true);
    else if (ch == 'd' || ch == 'D')
      steps.push_back(false);
    else
      throw std::invalid_argument("path characters must be u/d");
  }
  return DyckPath(std::move(steps));
}

std::string DyckPath::to_string() const {
  std::string s;
  for (bool up : steps_) s += up ? 'u' : 'd';
  return s;
}

DyckPath ideal_to_dyck(const OrderIdeal& p) {
  const int n = p.rank(), len = 2 * (n + 1);
  std::vector<int> req(len + 1, 0);
  for (int x = 1; x <= len; x += 2) req[x] = 1;
  for (RootA r : p.roots()) req[r.i + r.j - 1] = std::max(req[r.i + r.j - 1], r.j - r.i + 1);
  std::vector<bool> steps(len);
  int h = 0;
  for (int x = 1; x <= len; ++x) {
    const int next = std::max(req[x], h - 1);
    steps[x - 1] = next > h;
    h = next;
  }
  return DyckPath(std::move(steps));
}

OrderIdeal dyck_to_ideal(const DyckPath& path) {
  const int n = path.rank();
  std::vector<int> h{0};
  for (bool up : path.steps()) h.push_back(h.back() + (up ? 1 : -1));
  std::vector<RootA> roots;
  for (RootA r : positive_roots(n))
    if (h[r.i + r.j - 1] >= r.j - r.i + 1) roots.push_back(r);
  return OrderIdeal(n, std::move(roots));
}

OrderIdeal bumps_to_ideal(int rank, std::span<const RootA> bumps) {
  std::vector<char> starts(rank + 2, 0), ends(rank + 2, 0);
  for (RootA b : bumps) {
    if (!(1 <= b.i && b.i < b.j && b.j <= rank + 1))
      throw std::invalid_argument("bump out of range");
    if (starts[b.i]++ || ends[b.j]++)
      throw std::invalid_argument("two bumps share an endpoint on the same side");
  }
  for (RootA a : bumps)
    for (RootA b : bumps)
      if (a.i < b.i && b.j < a.j) throw std::invalid_argument("bumps nest");
  return ideal_of_antichain(rank, bumps);
}

std::vector<RootA> ideal_to_bumps(const OrderIdeal& p) {
  std::vector<RootA> out;
  for (RootA r : p.roots()) {
    bool maximal = true;
    for (RootA q : p.roots())
      if (q != r && root_leq(r, q)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(r);
  }
  return out;
}

OrderIdeal krew_nn(const OrderIdeal& p) {
  const int n = p.rank();
  int k = 0;
  while (k < n && p.contains({k + 1, k + 2})) ++k;
  std::vector<RootA> out;
  for (RootA r : p.roots()) {
    if (r.j <= k + 1) {  // initial part, inside <s_1..s_k>
      if (r.j - 1 > r.i) out.push_back({r.i, r.j - 1});
    } else {  // final part; downward closure forces r.i >= k+2 here
      out.push_back({r.i - 1, r.j});
    }
  }
  for (int t = k + 1; t <= n; ++t) out.push_back({t, t + 1});
  return OrderIdeal(n, std::move(out));
}

}  // namespace ncb
