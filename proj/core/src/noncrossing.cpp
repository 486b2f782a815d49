#include "ncb/noncrossing.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncb {
namespace {

std::vector<std::pair<int, int>> bumps_of(const std::vector<std::vector<int>>& blocks) {
  std::vector<std::pair<int, int>> out;
  for (const auto& b : blocks)
    for (std::size_t k = 0; k + 1 < b.size(); ++k) out.emplace_back(b[k], b[k + 1]);
  return out;
}

std::vector<std::vector<int>> normalize_blocks(int rank, std::vector<std::vector<int>> blocks) {
  std::vector<char> seen(rank + 2, 0);
  std::vector<std::vector<int>> out;
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > rank + 1) throw std::invalid_argument("block entry out of range");
      if (seen[x]) throw std::invalid_argument("blocks overlap");
      seen[x] = 1;
    }
    if (b.size() >= 2) out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.back() < b.back(); });
  return out;
}

}  // namespace

NoncrossingPartition::NoncrossingPartition(int rank, std::vector<std::vector<int>> blocks)
    : rank_(rank), blocks_(normalize_blocks(rank, std::move(blocks))) {
  for (auto bs = bumps_of(blocks_); const auto& [i1, i2] : bs)
    for (const auto& [j1, j2] : bs)
      if (i1 < j1 && j1 < i2 && i2 < j2) throw std::invalid_argument("blocks cross");
}

NoncrossingPartition NoncrossingPartition::from_permutation(const Permutation& w) {
  if (!absolute_leq(w, long_cycle(w.points())))
    throw std::invalid_argument("permutation is not below c in absolute order");
  NoncrossingPartition pi;
  pi.rank_ = w.rank();
  for (auto& cyc : w.cycles()) {
    std::sort(cyc.begin(), cyc.end());
    pi.blocks_.push_back(std::move(cyc));
  }
  std::sort(pi.blocks_.begin(), pi.blocks_.end(),
            [](const auto& a, const auto& b) { return a.back() < b.back(); });
  return pi;
}

Permutation NoncrossingPartition::permutation() const {
  Permutation w(points());
  for (const auto& b : blocks_) w = w * Permutation::from_cycle(b, points());
  return w;
}

bool is_noncrossing(int rank, const std::vector<std::vector<int>>& blocks) {
  auto norm = normalize_blocks(rank, blocks);  // throws on overlap
  auto bs = bumps_of(norm);
  for (const auto& [i1, i2] : bs)
    for (const auto& [j1, j2] : bs)
      if (i1 < j1 && j1 < i2 && i2 < j2) return false;
  return true;
}

namespace {

// gap decomposition: the block containing the least point is chosen, the
// remaining points split into independent gaps between its entries
void emit_nc(const std::vector<int>& points, std::vector<std::vector<int>>& blocks,
             std::vector<std::vector<std::vector<int>>>& out) {
  if (points.empty()) {
    out.push_back(blocks);
    return;
  }
  const int first = points[0];
  const int rest = static_cast<int>(points.size()) - 1;
  for (unsigned mask = 0; mask < (1u << rest); ++mask) {
    std::vector<int> blk{first};
    std::vector<std::vector<int>> gaps(1);
    for (int t = 0; t < rest; ++t) {
      if (mask & (1u << t))
        blk.push_back(points[t + 1]), gaps.emplace_back();
      else
        gaps.back().push_back(points[t + 1]);
    }
    // recursively partition the gaps, cartesian-product style
    std::vector<std::vector<std::vector<std::vector<int>>>> sub;
    for (auto& g : gaps) {
      std::vector<std::vector<std::vector<int>>> partial;
      std::vector<std::vector<int>> tmp;
      emit_nc(g, tmp, partial);
      sub.push_back(std::move(partial));
    }
    std::vector<std::size_t> idx(sub.size(), 0);
    while (true) {
      auto combined = blocks;
      if (blk.size() >= 2) combined.push_back(blk);
      for (std::size_t g = 0; g < sub.size(); ++g)
        for (const auto& b : sub[g][idx[g]]) combined.push_back(b);
      out.push_back(std::move(combined));
      std::size_t g = 0;
      while (g < sub.size() && ++idx[g] == sub[g].size()) idx[g++] = 0;
      if (g == sub.size()) break;
    }
  }
}

}  // namespace

std::vector<NoncrossingPartition> enumerate_nc(int rank) {
  if (rank < 0) throw std::invalid_argument("rank must be nonnegative");
  std::vector<NoncrossingPartition> out;
  if (rank <= 6) {
    const Permutation c = long_cycle(rank + 1);
    std::vector<int> img(rank + 1);
    for (int i = 0; i <= rank; ++i) img[i] = i + 1;
    do {
      Permutation w = Permutation::from_one_line(img);
      if (absolute_leq(w, c)) out.push_back(NoncrossingPartition::from_permutation(w));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;  // next_permutation yields lexicographic one-line order
  }
  std::vector<int> pts(rank + 1);
  for (int i = 0; i <= rank; ++i) pts[i] = i + 1;
  std::vector<std::vector<std::vector<int>>> lists;
  std::vector<std::vector<int>> empty;
  emit_nc(pts, empty, lists);
  out.reserve(lists.size());
  for (auto& bl : lists) out.emplace_back(rank, std::move(bl));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.permutation().one_line() < b.permutation().one_line();
  });
  return out;
}

Word syllable(int j, int k) {
  if (!(1 <= j && j < k)) throw std::invalid_argument("syllable needs j < k");
  Word w;
  for (int s = k - 1; s >= j; --s) w.push_back(s);
  for (int s = j + 1; s <= k - 1; ++s) w.push_back(s);
  return w;
}

Word standard_form(const NoncrossingPartition& pi) {
  Word w;
  for (const auto& b : pi.blocks())
    for (std::size_t t = 0; t + 1 < b.size(); ++t) {
      Word syl = syllable(b[t], b[t + 1]);
      w.insert(w.end(), syl.begin(), syl.end());
    }
  return w;
}

DuPair du_sets(const NoncrossingPartition& pi) {
  std::vector<char> ind(pi.points() + 1, 0), inu(pi.points() + 1, 0);
  for (const auto& b : pi.blocks()) {
    for (std::size_t t = 0; t + 1 < b.size(); ++t) ind[b[t]] = 1;
    for (std::size_t t = 1; t < b.size(); ++t) inu[b[t]] = 1;
  }
  DuPair p;
  for (int x = 1; x <= pi.points(); ++x) {
    if (ind[x]) p.d.push_back(x);
    if (inu[x]) p.u.push_back(x);
  }
  return p;
}

NoncrossingPartition du_inverse(int rank, const DuPair& p) {
  if (p.d.size() != p.u.size()) throw std::invalid_argument("|D| != |U|");
  for (std::size_t t = 0; t < p.d.size(); ++t) {
    if (t + 1 < p.d.size() && (p.d[t] >= p.d[t + 1] || p.u[t] >= p.u[t + 1]))
      throw std::invalid_argument("D and U must be strictly increasing");
    if (p.d[t] >= p.u[t]) throw std::invalid_argument("need d_i < u_i");
    if (p.d[t] < 1 || p.u[t] > rank + 1) throw std::invalid_argument("DU entry out of range");
  }
  std::vector<char> ind(rank + 2, 0), inu(rank + 2, 0);
  for (int x : p.d) ind[x] = 1;
  for (int x : p.u) inu[x] = 1;
  std::vector<std::vector<int>> stack, done;
  for (int x = 1; x <= rank + 1; ++x) {
    if (ind[x] && !inu[x]) {
      stack.push_back({x});
    } else if (ind[x] && inu[x]) {
      stack.back().push_back(x);
    } else if (inu[x]) {
      stack.back().push_back(x);
      done.push_back(std::move(stack.back()));
      stack.pop_back();
    }
  }
  return NoncrossingPartition(rank, std::move(done));
}

Word fully_commutative_word(int rank, const DuPair& p) {
  if (p.d.size() != p.u.size()) throw std::invalid_argument("|D| != |U|");
  Word w;
  for (std::size_t m = 0; m < p.d.size(); ++m) {
    const int i = p.u[m] - 1, j = p.d[m];
    if (j > i || j < 1 || i > rank) throw std::invalid_argument("invalid DU pair");
    for (int s = i; s >= j; --s) w.push_back(s);
  }
  return w;
}

NoncrossingPartition kreweras(const NoncrossingPartition& pi) {
  return NoncrossingPartition::from_permutation(pi.permutation().inverse() *
                                                long_cycle(pi.points()));
}

bool refines(const NoncrossingPartition& a, const NoncrossingPartition& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  // block of b containing each point
  std::vector<int> owner(a.points() + 1, -1);
  for (std::size_t t = 0; t < b.blocks().size(); ++t)
    for (int x : b.blocks()[t]) owner[x] = static_cast<int>(t);
  for (const auto& blk : a.blocks()) {
    const int o = owner[blk[0]];
    if (o < 0) return false;
    for (int x : blk)
      if (owner[x] != o) return false;
  }
  return true;
}

}  // namespace ncb
