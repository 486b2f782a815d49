#include "ncb/coxeter_general.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncb {

bool is_coxeter_cycle(std::span<const int> cycle) {
  const int m = static_cast<int>(cycle.size());
  if (m < 2 || cycle[0] != 1) return false;
  std::vector<char> seen(m + 1, 0);
  for (int x : cycle) {
    if (x < 1 || x > m || seen[x]) return false;
    seen[x] = 1;
  }
  int k = 0;
  while (cycle[k] != m) ++k;
  for (int t = 0; t < k; ++t)
    if (cycle[t] >= cycle[t + 1]) return false;
  for (int t = k + 1; t + 1 < m; ++t)
    if (cycle[t] <= cycle[t + 1]) return false;
  return true;
}

namespace {

std::vector<int> cycle_from(const Permutation& w, int start) {
  std::vector<int> seq{start};
  for (int x = w(start); x != start; x = w(x)) seq.push_back(x);
  return seq;
}

}  // namespace

std::vector<CoxeterElement> coxeter_elements(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  std::map<std::vector<int>, Word> found;
  Word word(rank);
  for (int s = 1; s <= rank; ++s) word[s - 1] = s;
  do {
    const Permutation w = evaluate(word, rank);
    auto seq = cycle_from(w, 1);
    if (auto it = found.find(seq); it == found.end()) found.emplace(std::move(seq), word);
  } while (std::next_permutation(word.begin(), word.end()));
  std::vector<CoxeterElement> out;
  out.reserve(found.size());
  for (auto& [cycle, wrd] : found)
    out.push_back({cycle, wrd, Permutation::from_cycle(cycle, rank + 1)});
  return out;
}

std::vector<Permutation> enumerate_nc_general(int rank, const Permutation& cox) {
  if (cox.points() != rank + 1) throw std::invalid_argument("rank mismatch");
  std::vector<int> img(rank + 1);
  for (int i = 0; i <= rank; ++i) img[i] = i + 1;
  std::vector<Permutation> out;
  do {
    Permutation w = Permutation::from_one_line(img);
    if (absolute_leq(w, cox)) out.push_back(std::move(w));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Word cycle_standard_form(const Permutation& cycle, const Permutation& cox) {
  if (!absolute_leq(cycle, cox)) throw std::invalid_argument("cycle not below cox");
  if (cycle.cycles().size() > 1) throw std::invalid_argument("not a single cycle");
  Word prefix, suffix;
  Permutation x = cycle;
  while (true) {
    std::vector<int> supp = x.support();
    if (supp.empty()) break;
    if (supp.size() == 2) {
      Word syl = syllable(supp[0], supp[1]);
      prefix.insert(prefix.end(), syl.begin(), syl.end());
      break;
    }
    const int a = supp[0], b = supp[1];
    const Permutation t = transposition(a, b, x.points());
    const Word syl = syllable(a, b);
    if (x(a) == b) {  // x = (a,b) * y with a removed from the cycle
      prefix.insert(prefix.end(), syl.begin(), syl.end());
      x = t * x;
    } else if (x(b) == a) {  // x = y * (a,b)
      suffix.insert(suffix.begin(), syl.begin(), syl.end());
      x = x * t;
    } else {
      throw std::invalid_argument("two smallest support points are not cyclically adjacent");
    }
  }
  prefix.insert(prefix.end(), suffix.begin(), suffix.end());
  return prefix;
}

Word standard_form_general(const Permutation& x, const Permutation& cox) {
  if (!absolute_leq(x, cox)) throw std::invalid_argument("element not below cox");
  Word w;
  for (const auto& cyc : x.cycles()) {
    const Word part = cycle_standard_form(Permutation::from_cycle(cyc, x.points()), cox);
    w.insert(w.end(), part.begin(), part.end());
  }
  return w;
}

DuPair du_sets_general(const Permutation& x) {
  std::vector<char> ind(x.points() + 1, 0), inu(x.points() + 1, 0);
  for (auto cyc : x.cycles()) {
    std::sort(cyc.begin(), cyc.end());
    for (std::size_t t = 0; t + 1 < cyc.size(); ++t) ind[cyc[t]] = 1;
    for (std::size_t t = 1; t < cyc.size(); ++t) inu[cyc[t]] = 1;
  }
  DuPair p;
  for (int v = 1; v <= x.points(); ++v) {
    if (ind[v]) p.d.push_back(v);
    if (inu[v]) p.u.push_back(v);
  }
  return p;
}

ArcDiagram arc_diagram(const Permutation& x) {
  ArcDiagram d{x.rank(), {}};
  for (auto cyc : x.cycles()) {
    std::sort(cyc.begin(), cyc.end());
    for (std::size_t t = 0; t + 1 < cyc.size(); ++t) d.arcs.emplace_back(cyc[t], cyc[t + 1]);
  }
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

std::vector<std::pair<int, int>> resolve_crossings(ArcDiagram diagram, const CrossingPicker& pick) {
  auto& arcs = diagram.arcs;
  while (true) {
    std::vector<std::array<int, 4>> crossings;
    for (auto [i, k] : arcs)
      for (auto [j, l] : arcs)
        if (i < j && j < k && k < l) crossings.push_back({i, j, k, l});
    if (crossings.empty()) break;
    std::sort(crossings.begin(), crossings.end());
    const auto [i, j, k, l] = crossings[pick ? pick(crossings) : 0];
    std::erase(arcs, std::pair{i, k});
    std::erase(arcs, std::pair{j, l});
    arcs.emplace_back(i, l);
    arcs.emplace_back(j, k);
    std::sort(arcs.begin(), arcs.end());
  }
  return arcs;
}

namespace {

NoncrossingPartition blocks_from_arcs(int rank, std::vector<std::pair<int, int>> arcs) {
  std::map<int, int> next;
  std::vector<char> has_in(rank + 2, 0);
  for (auto [a, b] : arcs) {
    next[a] = b;
    has_in[b] = 1;
  }
  std::vector<std::vector<int>> blocks;
  for (auto [a, b] : arcs) {
    if (has_in[a]) continue;  // chain starts at a point with no incoming arc
    std::vector<int> blk{a};
    for (auto it = next.find(a); it != next.end(); it = next.find(blk.back()))
      blk.push_back(it->second);
    blocks.push_back(std::move(blk));
  }
  return NoncrossingPartition(rank, std::move(blocks));
}

}  // namespace

NoncrossingPartition phi(const Permutation& x, const Permutation& cox) {
  if (!absolute_leq(x, cox)) throw std::invalid_argument("element not below cox");
  return blocks_from_arcs(x.rank(), resolve_crossings(arc_diagram(x)));
}

Permutation phi_general(const Permutation& x, const Permutation& from_cox,
                        const Permutation& to_cox) {
  const NoncrossingPartition image = phi(x, from_cox);
  for (const Permutation& y : enumerate_nc_general(x.rank(), to_cox))
    if (phi(y, to_cox) == image) return y;
  throw std::logic_error("phi image not found in the target interval");
}

IntVector letter_counts(const Word& w, int rank) {
  IntVector v(rank, 0);
  for (int s : w) {
    if (s < 1 || s > rank) throw std::invalid_argument("letter out of range");
    ++v[s - 1];
  }
  return v;
}

InducedOrder induced_order(int rank, const Permutation& cox) {
  InducedOrder out;
  out.elements = enumerate_nc_general(rank, cox);
  for (const auto& x : out.elements)
    out.vectors.push_back(letter_counts(standard_form_general(x, cox), rank));
  const int n = static_cast<int>(out.elements.size());
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a][b] = componentwise_leq(out.vectors[a], out.vectors[b]);
  out.poset = FinitePoset(std::move(leq));
  return out;
}

}  // namespace ncb
