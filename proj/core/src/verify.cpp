#include "ncb/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ncb/coxeter_general.hpp"
#include "ncb/json_io.hpp"
#include "ncb/type_b.hpp"

namespace ncb::verify {

using nlohmann::json;

namespace {

Result make(const std::string& check, int n) {
  Result r;
  r.check = check;
  r.n = n;
  r.pass = true;
  return r;
}

void fail(Result& r, json counterexample) {
  if (r.pass) {
    r.pass = false;
    r.details["counterexample"] = std::move(counterexample);
  }
}

Result check_theorem_6_1(int n) {
  Result r = make("theorem6-1", n);
  const auto ideals = enumerate_ideals(n);
  std::vector<Permutation> perms;
  std::vector<IntVector> vecs;
  for (const auto& p : ideals) {
    perms.push_back(vertical_map(p).permutation());
    vecs.push_back(vertical_vector(p));
  }
  const int count = static_cast<int>(ideals.size());
  std::vector<std::vector<char>> leq(count, std::vector<char>(count, 0));
  for (int a = 0; a < count && r.pass; ++a)
    for (int b = 0; b < count; ++b) {
      const bool br = bruhat_leq(perms[a], perms[b]);
      leq[a][b] = br;
      if (br != componentwise_leq(vecs[a], vecs[b]) || br != ideals[a].subset_of(ideals[b])) {
        fail(r, {{"x", io::to_json(ideals[a])}, {"y", io::to_json(ideals[b])}});
        break;
      }
    }
  if (r.pass) {
    FinitePoset poset{std::move(leq)};
    if (!poset.is_distributive_lattice()) fail(r, "poset is not a distributive lattice");
    for (auto [lo, hi] : poset.cover_pairs())
      if (coxeter_length(perms[hi]) != coxeter_length(perms[lo]) + 1)
        fail(r, "cover does not raise Coxeter length by one");
  }
  r.details["elements"] = count;
  return r;
}

Result check_theorem_4_15(int n) {
  Result r = make("theorem4-15", n);
  int count = 0;
  for (const OrderIdeal& p : enumerate_ideals(n)) {
    ++count;
    const NoncrossingPartition dy = dyck_map(p), v = vertical_map(p), d = diagonal_map(p);
    if (v != dy || d != dy) {
      fail(r, {{"ideal", io::to_json(p)}});
      break;
    }
    if (coxeter_length(v.permutation()) != p.size()) {
      fail(r, {{"ideal", io::to_json(p)}, {"reason", "length mismatch"}});
      break;
    }
  }
  r.details["ideals"] = count;
  return r;
}

Result check_prop_5_4(int n) {
  Result r = make("prop5-4", n);
  std::set<IntVector> from_nc;
  for (const auto& x : enumerate_nc(n)) {
    const IntVector v = vertical_vector_of_nc(x);
    if (!is_vertical_vector(v)) fail(r, {{"nc", io::to_json(x)}, {"vector", io::to_json(v)}});
    if (!from_nc.insert(v).second)
      fail(r, {{"vector", io::to_json(v)}, {"reason", "not injective"}});
    // D-membership parity and Lemma 5.3(5)
    const DuPair du = du_sets(x);
    for (int i = 1; i <= n; ++i) {
      const bool ind = std::binary_search(du.d.begin(), du.d.end(), i);
      if (ind != (v[i - 1] % 2 == 1))
        fail(r, {{"nc", io::to_json(x)}, {"reason", "D parity"}, {"i", i}});
    }
    for (int i = 2; i <= n + 1; ++i) {
      const bool inu = std::binary_search(du.u.begin(), du.u.end(), i);
      if (inu != u_membership(x, i))
        fail(r, {{"nc", io::to_json(x)}, {"reason", "U membership"}, {"i", i}});
    }
    // Lemma 5.3 (1)-(4)
    for (int i = 1; i < n; ++i) {
      const int a = v[i - 1], b = v[i];
      const bool inu = std::binary_search(du.u.begin(), du.u.end(), i + 1);
      if (a % 2 == 0 && b > a && b != a + 1) fail(r, {{"nc", io::to_json(x)}, {"i", i}});
      if (a % 2 == 1 && b > a && b != a + 1 && b != a + 2)
        fail(r, {{"nc", io::to_json(x)}, {"i", i}});
      if (a % 2 == 0 && b < a && (!(b == a - 1 || b == a - 2) || !inu))
        fail(r, {{"nc", io::to_json(x)}, {"i", i}});
      if (a % 2 == 1 && b < a && (b != a - 1 || !inu)) fail(r, {{"nc", io::to_json(x)}, {"i", i}});
    }
  }
  const auto all = enumerate_vertical_vectors(n);
  if (from_nc != std::set<IntVector>(all.begin(), all.end()))
    fail(r, "NC vectors differ from the characterized set");
  r.details["vectors"] = all.size();
  return r;
}

Result check_prop_5_7(int n) {
  Result r = make("prop5-7", n);
  std::set<IntVector> from_ideals;
  for (const auto& p : enumerate_ideals(n)) {
    const IntVector u = diagonal_vector(p);
    if (!is_diagonal_vector(u)) fail(r, {{"ideal", io::to_json(p)}});
    if (!from_ideals.insert(u).second)
      fail(r, {{"vector", io::to_json(u)}, {"reason", "not injective"}});
  }
  const auto all = enumerate_diagonal_vectors(n);
  if (from_ideals != std::set<IntVector>(all.begin(), all.end()))
    fail(r, "ideal vectors differ from the inequality-system set");
  r.details["vectors"] = all.size();
  return r;
}

Result check_lemma_6_6(int n) {
  Result r = make("lemma6-6", n);
  const BruhatNcPoset bp = restricted_bruhat_poset(n);
  for (int y = 0; y < bp.poset.size() && r.pass; ++y) {
    std::vector<NoncrossingPartition> from_poset;
    for (int x : bp.poset.lower_covers(y)) from_poset.push_back(bp.elements[x]);
    std::sort(from_poset.begin(), from_poset.end());
    const auto surgery = nc_covers(bp.elements[y]);
    if (from_poset != surgery) fail(r, {{"y", io::to_json(bp.elements[y])}});
  }
  r.details["elements"] = bp.poset.size();
  return r;
}

Result check_lemma_6_4(int n) {
  Result r = make("lemma6-4", n);
  int deletions = 0;
  for (const OrderIdeal& p : enumerate_ideals(n))
    for (RootA alpha : p.roots()) {
      ++deletions;
      bool maximal = true;
      for (RootA q : p.roots())
        if (q != alpha && root_leq(alpha, q)) {
          maximal = false;
          break;
        }
      const DeletionOutcome out = deletion_dichotomy(p, alpha);  // throws if the lemma fails
      if (maximal != (out == DeletionOutcome::cover))
        fail(r, {{"ideal", io::to_json(p)}, {"root", {alpha.i, alpha.j}}});
    }
  r.details["deletions"] = deletions;
  return r;
}

Result check_phi_suite(int n) {
  Result r = make("phi-suite", n);
  const Permutation c = long_cycle(n + 1);
  const auto coxeters = coxeter_elements(n);
  r.details["coxeter_elements"] = coxeters.size();
  if (static_cast<int>(coxeters.size()) != (1 << (n - 1)))
    fail(r, "coxeter element count is not 2^(n-1)");

  // Lemma 7.2 predicate vs brute force
  {
    std::set<std::vector<int>> brute;
    for (const auto& ce : coxeters) brute.insert(ce.cycle);
    std::vector<int> rest(n);
    for (int t = 0; t < n; ++t) rest[t] = t + 2;
    std::set<std::vector<int>> pred;
    do {
      std::vector<int> seq{1};
      seq.insert(seq.end(), rest.begin(), rest.end());
      if (is_coxeter_cycle(seq)) pred.insert(seq);
    } while (std::next_permutation(rest.begin(), rest.end()));
    if (brute != pred) fail(r, "Lemma 7.2 predicate disagrees with brute force");
  }

  const auto ideals = enumerate_ideals(n);
  std::map<IntVector, const OrderIdeal*> ideal_of_vector;
  for (const auto& p : ideals) ideal_of_vector.emplace(vertical_vector(p), &p);

  for (const auto& ce : coxeters) {
    const auto interval = enumerate_nc_general(n, ce.permutation);
    if (interval.size() != ideals.size()) fail(r, "interval size is not Catalan");
    std::set<NoncrossingPartition> images;
    std::vector<IntVector> vectors;
    for (const Permutation& x : interval) {
      const NoncrossingPartition y = phi(x, ce.permutation);
      const Permutation yp = y.permutation();
      if (!images.insert(y).second)
        fail(r, {{"cox", io::word_to_json(ce.word)}, {"reason", "phi not injective"}});
      if (reflection_length(x) != reflection_length(yp))
        fail(r, {{"cox", io::word_to_json(ce.word)}, {"reason", "l_T not preserved"}});
      if (x.support() != yp.support())
        fail(r, {{"cox", io::word_to_json(ce.word)}, {"reason", "support not preserved"}});
      if (reflection_length(x) == 1 && x != yp)
        fail(r, {{"cox", io::word_to_json(ce.word)}, {"reason", "reflection moved"}});
      if (du_sets_general(x) != du_sets(y))
        fail(r, {{"cox", io::word_to_json(ce.word)}, {"reason", "DU pair not preserved"}});
      const IntVector v = letter_counts(standard_form_general(x, ce.permutation), n);
      if (v != vertical_vector_of_nc(y))
        fail(r, {{"cox", io::word_to_json(ce.word)}, {"reason", "letter counts differ"}});
      vectors.push_back(v);
    }
    // induced order isomorphic to J(Phi+) through the vector map
    for (std::size_t a = 0; a < interval.size() && r.pass; ++a)
      for (std::size_t b = 0; b < interval.size(); ++b) {
        auto ia = ideal_of_vector.find(vectors[a]), ib = ideal_of_vector.find(vectors[b]);
        if (ia == ideal_of_vector.end() || ib == ideal_of_vector.end()) {
          fail(r, {{"cox", io::word_to_json(ce.word)}, {"reason", "vector outside V_n"}});
          break;
        }
        if (componentwise_leq(vectors[a], vectors[b]) != ia->second->subset_of(*ib->second)) {
          fail(r, {{"cox", io::word_to_json(ce.word)}, {"reason", "induced order not J(Phi+)"}});
          break;
        }
      }
  }

  // expected negative at n = 3: Bruhat restricted to NC(S_4, s_1 s_3 s_2)
  if (n == 3) {
    const Permutation cp = evaluate({1, 3, 2}, 3);
    const auto interval = enumerate_nc_general(3, cp);
    const int count = static_cast<int>(interval.size());
    std::vector<std::vector<char>> leq(count, std::vector<char>(count, 0));
    for (int a = 0; a < count; ++a)
      for (int b = 0; b < count; ++b) leq[a][b] = bruhat_leq(interval[a], interval[b]);
    FinitePoset poset{std::move(leq)};
    const auto maxima = poset.maximal_elements();
    r.details["s1s3s2_maximal_elements"] = maxima.size();
    if (maxima.size() != 2) fail(r, "expected exactly two maximal elements for s1s3s2");
    if (poset.is_distributive_lattice())
      fail(r, "Bruhat restriction for s1s3s2 must not be a distributive lattice");
  }
  return r;
}

Result check_type_b_suite(int n) {
  Result r = make("typeB-suite", n);
  const auto ideals = enumerate_ideals_B(n);
  const auto pc = enumerate_Pc_B(n);
  r.details["ideals"] = ideals.size();
  r.details["pc"] = pc.size();
  if (ideals.size() != pc.size()) fail(r, "|NN(B_n)| != |P_c|");

  const SignedPermutation c = b_coxeter(n);
  std::map<SignedPermutation, const OrderIdealB*> image;
  std::map<int, int> census;
  for (const auto& p : ideals) {
    const SignedPermutation w = D_B(p);
    if (!image.emplace(w, &p).second)
      fail(r, {{"ideal", io::to_json(p)}, {"reason", "D_B not injective"}});
    if (!b_absolute_leq(w, c))
      fail(r, {{"ideal", io::to_json(p)}, {"reason", "D_B image not below c"}});
    if (lt_B_from_ideal(p) != b_reflection_length(w))
      fail(r, {{"ideal", io::to_json(p)}, {"reason", "Cor 7.22 rank formula"}});
    ++census[b_reflection_length(w)];
  }
  if (r.pass && image.size() != pc.size()) fail(r, "D_B is not onto P_c");
  {
    // rank census binom(n,k)^2
    auto binom = [](int a, int b) {
      long long v = 1;
      for (int t = 1; t <= b; ++t) v = v * (a - t + 1) / t;
      return v;
    };
    json cj = json::array();
    for (int k = 0; k <= n; ++k) {
      cj.push_back(census[k]);
      if (census[k] != binom(n, k) * binom(n, k)) fail(r, "rank census differs from binom^2");
    }
    r.details["rank_census"] = std::move(cj);
  }
  // Krew: bijection on ideals, equivariant on ideals containing all simples
  {
    std::set<OrderIdealB> krew_images;
    for (const auto& p : ideals) {
      const OrderIdealB q = krew_nn_B(p);  // constructor revalidates closure
      if (!krew_images.insert(q).second)
        fail(r, {{"ideal", io::to_json(p)}, {"reason", "Krew not injective"}});
      bool all_simple = true;
      for (RootB s : b_simple_roots(n))
        if (!p.contains(s)) {
          all_simple = false;
          break;
        }
      if (all_simple && D_B(q) != D_B(p).inverse() * c)
        fail(r, {{"ideal", io::to_json(p)}, {"reason", "Krew equivariance"}});
    }
  }
  // expected negative at n = 2: Bruhat restriction is not a lattice
  if (n == 2) {
    const int count = static_cast<int>(pc.size());
    std::vector<std::vector<char>> leq(count, std::vector<char>(count, 0));
    for (int a = 0; a < count; ++a)
      for (int b = 0; b < count; ++b) leq[a][b] = b_bruhat_leq(pc[a], pc[b]);
    FinitePoset poset{std::move(leq)};
    r.details["b2_is_lattice"] = poset.is_lattice();
    if (poset.is_lattice()) fail(r, "Bruhat restriction on NC(B_2) must not be a lattice");
  }
  return r;
}

Result check_narayana(int n) {
  Result r = make("narayana", n);
  // brute-force census of l_T over NC, via the ideal statistic and group side
  std::vector<long long> census(n + 1, 0);
  for (const auto& x : enumerate_nc(n)) ++census[reflection_length(x.permutation())];
  std::vector<long long> from_ideals(n + 1, 0);
  for (const auto& p : enumerate_ideals(n)) ++from_ideals[lt_from_ideal(p)];
  if (census != from_ideals) fail(r, "ideal statistic disagrees with group-side census");
  r.details["census"] = census;
  // the printed closed form 1/(n+1) C(n+1,k) C(n+1,k-1), evaluated at k
  auto binom = [](long long a, long long b) {
    if (b < 0 || b > a) return 0LL;
    long long v = 1;
    for (long long t = 1; t <= b; ++t) v = v * (a - t + 1) / t;
    return v;
  };
  std::vector<long long> printed(n + 1, 0);
  for (int k = 0; k <= n; ++k) printed[k] = binom(n + 1, k) * binom(n + 1, k - 1) / (n + 1);
  r.details["printed_formula"] = printed;
  const bool discrepancy = printed != census;
  bool shifted = true;
  for (int k = 0; k <= n; ++k)
    if (census[k] != binom(n + 1, k + 1) * binom(n + 1, k) / (n + 1)) shifted = false;
  r.details["printed_formula_matches"] = !discrepancy;
  r.details["index_shift_matches"] = shifted;
  if (!discrepancy)
    fail(r, "expected the printed closed form to disagree with the census (index shift)");
  if (!shifted) fail(r, "shifted closed form no longer matches the census");
  return r;
}

struct CheckInfo {
  Result (*fn)(int);
  int max_n;
};

const std::map<std::string, CheckInfo>& registry() {
  static const std::map<std::string, CheckInfo> reg = {
      {"theorem6-1", {check_theorem_6_1, 7}}, {"theorem4-15", {check_theorem_4_15, 8}},
      {"prop5-4", {check_prop_5_4, 8}},       {"prop5-7", {check_prop_5_7, 8}},
      {"lemma6-6", {check_lemma_6_6, 6}},     {"lemma6-4", {check_lemma_6_4, 5}},
      {"phi-suite", {check_phi_suite, 5}},    {"typeB-suite", {check_type_b_suite, 4}},
      {"narayana", {check_narayana, 6}},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, info] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

int max_rank(const std::string& check) {
  auto it = registry().find(check);
  if (it == registry().end()) throw std::invalid_argument("unknown check: " + check);
  return it->second.max_n;
}

Result run_check(const std::string& check, int n) {
  auto it = registry().find(check);
  if (it == registry().end()) throw std::invalid_argument("unknown check: " + check);
  const int lo = (check == "phi-suite" || check == "typeB-suite") ? 1 : 1;
  if (n < lo || n > it->second.max_n)
    throw std::invalid_argument(check + " supports n in [" + std::to_string(lo) + ", " +
                                std::to_string(it->second.max_n) + "]");
  return it->second.fn(n);
}

json to_json(const Result& r) {
  json j;
  j["schema_version"] = 1;
  j["kind"] = "verdict";
  j["check"] = r.check;
  j["n"] = r.n;
  j["pass"] = r.pass;
  if (!r.details.is_null()) j["details"] = r.details;
  return j;
}

}  // namespace ncb::verify
