// ncb: enumerate, map, verify and export the objects of the noncrossing /
// nonnesting correspondence. Records are JSON, one per line; exit codes are
// 0 (success / verification pass), 1 (verification failure), 2 (usage error).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncb/dot.hpp"
#include "ncb/json_io.hpp"
#include "ncb/verify.hpp"

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ncb::Word parse_coxeter_word(const std::string& text, int rank) {
  ncb::Word word;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      word.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("--coxeter expects comma-separated simple indices, e.g. 2,1,3");
    }
  }
  std::vector<char> seen(rank + 1, 0);
  for (int s : word) {
    if (s < 1 || s > rank || seen[s])
      throw UsageError("--coxeter must use each of s_1..s_n exactly once");
    seen[s] = 1;
  }
  if (static_cast<int>(word.size()) != rank)
    throw UsageError("--coxeter must use each of s_1..s_n exactly once");
  return word;
}

void require_rank(int n, int lo, int hi, const std::string& what) {
  if (n < lo || n > hi)
    throw UsageError(what + " supports --n in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
}

int cmd_enumerate(const std::string& kind, int n, const std::string& coxeter) {
  std::size_t count = 0;
  if (kind == "nc") {
    require_rank(n, 0, 9, "enumerate nc");
    if (coxeter.empty()) {
      for (const auto& x : ncb::enumerate_nc(n)) {
        std::cout << ncb::io::to_json(x) << "\n";
        ++count;
      }
    } else {
      require_rank(n, 1, 7, "enumerate nc --coxeter");
      const ncb::Permutation cox = ncb::evaluate(parse_coxeter_word(coxeter, n), n);
      for (const auto& x : ncb::enumerate_nc_general(n, cox)) {
        json j;
        j["schema_version"] = 1;
        j["kind"] = "nc-element";
        j["n"] = n;
        j["one_line"] = x.one_line();
        j["cycles"] = x.cycles();
        std::cout << j << "\n";
        ++count;
      }
    }
  } else if (kind == "nn") {
    require_rank(n, 1, 9, "enumerate nn");
    for (const auto& p : ncb::enumerate_ideals(n)) {
      std::cout << ncb::io::to_json(p) << "\n";
      ++count;
    }
  } else if (kind == "vectors") {
    require_rank(n, 1, 10, "enumerate vectors");
    for (const auto& v : ncb::enumerate_vertical_vectors(n)) {
      std::cout << ncb::io::to_json(v) << "\n";
      ++count;
    }
  } else if (kind == "coxeter-elements") {
    require_rank(n, 1, 9, "enumerate coxeter-elements");
    for (const auto& ce : ncb::coxeter_elements(n)) {
      json j;
      j["schema_version"] = 1;
      j["kind"] = "coxeter-element";
      j["n"] = n;
      j["cycle"] = ce.cycle;
      j["word"] = ce.word;
      std::cout << j << "\n";
      ++count;
    }
  } else if (kind == "nc-b") {
    require_rank(n, 1, 4, "enumerate nc-b");
    for (const auto& w : ncb::enumerate_Pc_B(n)) {
      std::cout << ncb::io::to_json(w) << "\n";
      ++count;
    }
  } else if (kind == "nn-b") {
    require_rank(n, 1, 5, "enumerate nn-b");
    for (const auto& p : ncb::enumerate_ideals_B(n)) {
      std::cout << ncb::io::to_json(p) << "\n";
      ++count;
    }
  } else {
    throw UsageError("unknown kind: " + kind);
  }
  json tail;
  tail["schema_version"] = 1;
  tail["kind"] = "count";
  tail["count"] = count;
  std::cout << tail << "\n";
  return 0;
}

json read_record(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError(std::string("cannot parse input record: ") + e.what());
  }
  return j;
}

int cmd_map(const std::string& from, const std::string& to, const std::string& via,
            const std::string& coxeter, const std::string& to_coxeter, std::istream& in) {
  const json input = read_record(in);
  if (from == "nn" && to == "nc") {
    const ncb::OrderIdeal p = ncb::io::ideal_from_json(input);
    ncb::NoncrossingPartition out;
    if (via == "dyck")
      out = ncb::dyck_map(p);
    else if (via == "vertical")
      out = ncb::vertical_map(p);
    else if (via == "diagonal")
      out = ncb::diagonal_map(p);
    else
      throw UsageError("nn->nc supports --via dyck|vertical|diagonal");
    std::cout << ncb::io::to_json(out) << "\n";
    return 0;
  }
  if (from == "nc" && to == "nn") {
    const ncb::NoncrossingPartition x = ncb::io::nc_from_json(input);
    if (via != "dyck" && via != "vertical" && via != "diagonal")
      throw UsageError("nc->nn supports --via dyck|vertical|diagonal");
    if (via == "dyck") {
      std::cout << ncb::io::to_json(ncb::dyck_to_ideal(ncb::nc_to_dyck(x))) << "\n";
      return 0;
    }
    for (const auto& p : ncb::enumerate_ideals(x.rank())) {
      const auto image = via == "vertical" ? ncb::vertical_map(p) : ncb::diagonal_map(p);
      if (image == x) {
        std::cout << ncb::io::to_json(p) << "\n";
        return 0;
      }
    }
    throw UsageError("input is not in the image of the chosen map");
  }
  if (from == "nc" && to == "nc" && via == "phi") {
    if (coxeter.empty()) throw UsageError("--via phi needs --coxeter for the source element");
    const ncb::NoncrossingPartition x = ncb::io::nc_from_json(input);
    const int n = x.rank();
    const ncb::Permutation cox = ncb::evaluate(parse_coxeter_word(coxeter, n), n);
    if (to_coxeter.empty()) {
      std::cout << ncb::io::to_json(ncb::phi(x.permutation(), cox)) << "\n";
    } else {
      const ncb::Permutation cox2 = ncb::evaluate(parse_coxeter_word(to_coxeter, n), n);
      const ncb::Permutation y = ncb::phi_general(x.permutation(), cox, cox2);
      json j;
      j["schema_version"] = 1;
      j["kind"] = "nc-element";
      j["n"] = n;
      j["one_line"] = y.one_line();
      j["cycles"] = y.cycles();
      std::cout << j << "\n";
    }
    return 0;
  }
  throw UsageError("unsupported map: " + from + "->" + to + " via " + via);
}

int cmd_verify(const std::string& check, int n) {
  ncb::verify::Result r;
  try {
    r = ncb::verify::run_check(check, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << ncb::verify::to_json(r) << "\n";
  return r.pass ? 0 : 1;
}

int cmd_hasse(const std::string& what, int n, const std::string& coxeter) {
  require_rank(n, 1, 6, "hasse");
  if (what == "ideals") {
    const auto ideals = ncb::enumerate_ideals(n);
    const int count = static_cast<int>(ideals.size());
    std::vector<std::vector<char>> leq(count, std::vector<char>(count, 0));
    std::vector<std::string> labels;
    for (int a = 0; a < count; ++a) {
      for (int b = 0; b < count; ++b) leq[a][b] = ideals[a].subset_of(ideals[b]);
      std::string lab = "{";
      for (std::size_t t = 0; t < ideals[a].roots().size(); ++t) {
        const auto r = ideals[a].roots()[t];
        lab += (t ? " " : "") + std::to_string(r.i) + "-" + std::to_string(r.j);
      }
      labels.push_back(lab + "}");
    }
    std::cout << ncb::hasse_dot(ncb::FinitePoset(std::move(leq)), labels, "ideals");
    return 0;
  }
  if (what == "bruhat-nc") {
    std::vector<ncb::Permutation> elements;
    if (coxeter.empty()) {
      for (const auto& x : ncb::enumerate_nc(n)) elements.push_back(x.permutation());
    } else {
      const ncb::Permutation cox = ncb::evaluate(parse_coxeter_word(coxeter, n), n);
      elements = ncb::enumerate_nc_general(n, cox);
    }
    const int count = static_cast<int>(elements.size());
    std::vector<std::vector<char>> leq(count, std::vector<char>(count, 0));
    std::vector<std::string> labels;
    for (int a = 0; a < count; ++a) {
      for (int b = 0; b < count; ++b) leq[a][b] = ncb::bruhat_leq(elements[a], elements[b]);
      labels.push_back(ncb::cycles_label(elements[a]));
    }
    std::cout << ncb::hasse_dot(ncb::FinitePoset(std::move(leq)), labels, "bruhat-nc");
    return 0;
  }
  if (what == "induced") {
    if (coxeter.empty()) throw UsageError("hasse induced needs --coxeter");
    const ncb::Permutation cox = ncb::evaluate(parse_coxeter_word(coxeter, n), n);
    const ncb::InducedOrder ord = ncb::induced_order(n, cox);
    std::vector<std::string> labels;
    for (const auto& x : ord.elements) labels.push_back(ncb::cycles_label(x));
    std::cout << ncb::hasse_dot(ord.poset, labels, "induced");
    return 0;
  }
  throw UsageError("unknown poset: " + what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noncrossing partitions, nonnesting partitions and Bruhat order"};
  app.require_subcommand(1);

  std::string kind, coxeter, to_coxeter, from, to, via, check, what, input_file;
  int n = 0;

  auto* enumerate = app.add_subcommand("enumerate", "list objects as JSON records");
  enumerate->add_option("kind", kind, "nc | nn | vectors | coxeter-elements | nc-b | nn-b")
      ->required();
  enumerate->add_option("--n", n, "rank")->required();
  enumerate->add_option("--coxeter", coxeter, "Coxeter word, e.g. 2,1,3");

  auto* map = app.add_subcommand("map", "apply a bijection to one record from stdin");
  map->add_option("--from", from)->required();
  map->add_option("--to", to)->required();
  map->add_option("--via", via, "dyck | vertical | diagonal | phi")->required();
  map->add_option("--coxeter", coxeter, "source Coxeter word for phi");
  map->add_option("--to-coxeter", to_coxeter, "target Coxeter word for phi");
  map->add_option("--input", input_file, "read the record from a file instead of stdin");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("check", check)->required();
  verify->add_option("--n", n, "rank")->required();

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram as DOT");
  hasse->add_option("poset", what, "bruhat-nc | ideals | induced")->required();
  hasse->add_option("--n", n, "rank")->required();
  hasse->add_option("--coxeter", coxeter, "Coxeter word");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(kind, n, coxeter);
    if (map->parsed()) {
      if (!input_file.empty()) {
        std::ifstream fin(input_file);
        if (!fin) throw UsageError("cannot open " + input_file);
        return cmd_map(from, to, via, coxeter, to_coxeter, fin);
      }
      return cmd_map(from, to, via, coxeter, to_coxeter, std::cin);
    }
    if (verify->parsed()) return cmd_verify(check, n);
    if (hasse->parsed()) return cmd_hasse(what, n, coxeter);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
