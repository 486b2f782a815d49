#include "ncb/bijections.hpp"

#include <algorithm>

namespace ncb {

DyckPath nc_to_dyck(const NoncrossingPartition& pi) {
  const DuPair p = du_sets(pi);
  std::vector<char> ind(pi.points() + 1, 0), inu(pi.points() + 1, 0);
  for (int x : p.d) ind[x] = 1;
  for (int x : p.u) inu[x] = 1;
  std::vector<bool> steps;
  steps.reserve(2 * pi.points());
  for (int x = 1; x <= pi.points(); ++x) {
    if (ind[x] && inu[x])
      steps.insert(steps.end(), {false, true});
    else if (ind[x])
      steps.insert(steps.end(), {true, true});
    else if (inu[x])
      steps.insert(steps.end(), {false, false});
    else
      steps.insert(steps.end(), {true, false});
  }
  return DyckPath(std::move(steps));
}

NoncrossingPartition dyck_to_nc(const DyckPath& path) {
  DuPair p;
  const auto& s = path.steps();
  for (int x = 1; x <= path.rank() + 1; ++x) {
    const bool a = s[2 * x - 2], b = s[2 * x - 1];
    if (!a && b) {
      p.d.push_back(x);
      p.u.push_back(x);
    } else if (a && b) {
      p.d.push_back(x);
    } else if (!a && !b) {
      p.u.push_back(x);
    }
  }
  return du_inverse(path.rank(), p);
}

NoncrossingPartition dyck_map(const OrderIdeal& p) { return dyck_to_nc(ideal_to_dyck(p)); }

namespace {

// labels present at one height, in decreasing order
std::vector<int> row_labels(std::span<const RootA> roots, int height, int (*label)(RootA)) {
  std::vector<int> out;
  for (RootA r : roots)
    if (r.height() == height) out.push_back(label(r));
  std::sort(out.rbegin(), out.rend());
  return out;
}

int vert_label_fn(RootA r) { return vert_label(r); }
int diag_label_fn(RootA r) { return diag_label(r); }

}  // namespace

Word vertical_word(int rank, std::span<const RootA> roots) {
  Word w;
  for (int h = rank; h >= 1; --h) {
    auto row = row_labels(roots, h, vert_label_fn);
    if (h % 2 == 1) std::reverse(row.begin(), row.end());
    w.insert(w.end(), row.begin(), row.end());
  }
  return w;
}

NoncrossingPartition vertical_map(const OrderIdeal& p) {
  return NoncrossingPartition::from_permutation(evaluate(vertical_word(p.rank(), p.roots()), p.rank()));
}

Word diagonal_word(int rank, std::span<const RootA> roots) {
  Word even, odd;
  for (int h = 1; h <= rank; ++h) {
    auto row = row_labels(roots, h, diag_label_fn);
    auto& block = (h % 2 == 0) ? even : odd;
    block.insert(block.end(), row.begin(), row.end());
  }
  std::reverse(odd.begin(), odd.end());  // letters are involutions
  even.insert(even.end(), odd.begin(), odd.end());
  return even;
}

NoncrossingPartition diagonal_map(const OrderIdeal& p) {
  return NoncrossingPartition::from_permutation(evaluate(diagonal_word(p.rank(), p.roots()), p.rank()));
}

Word u_word(int rank, std::span<const RootA> roots) {
  Word w;
  for (int h = 1; h <= rank; ++h) {
    auto row = row_labels(roots, h, diag_label_fn);
    w.insert(w.end(), row.begin(), row.end());
  }
  return w;
}

Permutation u_map(const OrderIdeal& p) { return evaluate(u_word(p.rank(), p.roots()), p.rank()); }

bool check_equivalence(int rank) {
  for (const OrderIdeal& p : enumerate_ideals(rank)) {
    const NoncrossingPartition d = dyck_map(p);
    if (vertical_map(p) != d || diagonal_map(p) != d) return false;
  }
  return true;
}

int lt_from_ideal(const OrderIdeal& p) {
  int odd = 0, even = 0;
  for (RootA r : p.roots()) (r.height() % 2 == 1 ? odd : even)++;
  return odd - even;
}

}  // namespace ncb
