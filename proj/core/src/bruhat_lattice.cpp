#include "ncb/bruhat_lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncb {

BruhatNcPoset restricted_bruhat_poset(int rank) {
  BruhatNcPoset out;
  out.elements = enumerate_nc(rank);
  const int n = static_cast<int>(out.elements.size());
  std::vector<Permutation> perms;
  perms.reserve(n);
  for (const auto& x : out.elements) perms.push_back(x.permutation());
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a][b] = bruhat_leq(perms[a], perms[b]);
  out.poset = FinitePoset(std::move(leq));
  return out;
}

bool check_main_theorem(int rank) {
  const auto ideals = enumerate_ideals(rank);
  std::vector<NoncrossingPartition> nc;
  std::vector<Permutation> perms;
  std::vector<IntVector> vecs;
  for (const auto& p : ideals) {
    nc.push_back(vertical_map(p));
    perms.push_back(nc.back().permutation());
    vecs.push_back(vertical_vector(p));
  }
  const int n = static_cast<int>(ideals.size());
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const bool br = bruhat_leq(perms[a], perms[b]);
      if (br != componentwise_leq(vecs[a], vecs[b])) return false;
      if (br != ideals[a].subset_of(ideals[b])) return false;
      leq[a][b] = br;
    }
  FinitePoset poset{std::move(leq)};
  if (!poset.is_distributive_lattice()) return false;
  for (auto [lo, hi] : poset.cover_pairs())
    if (coxeter_length(perms[hi]) != coxeter_length(perms[lo]) + 1) return false;
  return true;
}

std::vector<NoncrossingPartition> nc_covers(const NoncrossingPartition& y) {
  std::vector<NoncrossingPartition> out;
  const auto& blocks = y.blocks();
  std::vector<char> used(y.points() + 1, 0);
  for (const auto& b : blocks)
    for (int x : b) used[x] = 1;

  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto& b = blocks[bi];
    // split at a consecutive integer pair
    for (std::size_t k = 0; k + 1 < b.size(); ++k) {
      if (b[k + 1] != b[k] + 1) continue;
      std::vector<std::vector<int>> nb;
      for (std::size_t t = 0; t < blocks.size(); ++t)
        if (t != bi) nb.push_back(blocks[t]);
      nb.emplace_back(b.begin(), b.begin() + k + 1);
      nb.emplace_back(b.begin() + k + 1, b.end());
      out.emplace_back(y.rank(), std::move(nb));
    }
    // insert a nestable fixed point
    for (std::size_t t = 0; t + 1 < b.size(); ++t)
      for (int k = b[t] + 1; k < b[t + 1]; ++k) {
        if (used[k]) continue;
        std::vector<std::vector<int>> nb = blocks;
        nb[bi].insert(nb[bi].begin() + t + 1, k);
        if (is_noncrossing(y.rank(), nb)) out.emplace_back(y.rank(), std::move(nb));
      }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DeletionOutcome deletion_dichotomy(const OrderIdeal& p, RootA alpha) {
  if (!p.contains(alpha)) throw std::invalid_argument("root not in the ideal");
  bool maximal = true;
  for (RootA q : p.roots())
    if (q != alpha && root_leq(alpha, q)) {
      maximal = false;
      break;
    }
  if (maximal) return DeletionOutcome::cover;
  std::vector<RootA> rest;
  for (RootA q : p.roots())
    if (q != alpha) rest.push_back(q);
  const Word w = diagonal_word(p.rank(), rest);
  const Permutation ev = evaluate(w, p.rank());
  if (coxeter_length(ev) != static_cast<int>(w.size())) return DeletionOutcome::not_reduced;
  if (!absolute_leq(ev, long_cycle(p.rank() + 1))) return DeletionOutcome::not_noncrossing;
  throw std::logic_error("non-maximal deletion produced a reduced noncrossing word");
}

}  // namespace ncb
