#include "ncb/dot.hpp"

#include <sstream>
#include <stdexcept>

#include "ncb/permutation.hpp"

namespace ncb {

std::string hasse_dot(const FinitePoset& poset, const std::vector<std::string>& labels,
                      const std::string& name) {
  if (static_cast<int>(labels.size()) != poset.size())
    throw std::invalid_argument("one label per element required");
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  rankdir=BT;\n";
  for (int x = 0; x < poset.size(); ++x)
    os << "  n" << x << " [label=\"" << labels[x] << "\"];\n";
  for (auto [lo, hi] : poset.cover_pairs()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string cycles_label(const Permutation& w) {
  if (w.is_identity()) return "e";
  std::ostringstream os;
  for (const auto& cyc : w.cycles()) {
    os << '(';
    for (std::size_t t = 0; t < cyc.size(); ++t) os << (t ? "," : "") << cyc[t];
    os << ')';
  }
  return os.str();
}

}  // namespace ncb
