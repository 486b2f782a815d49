#pragma once

#include <string>
#include <vector>

#include "ncb/poset.hpp"

namespace ncb {

// Hasse diagram as a DOT digraph; node order and edge order follow the
// element order, so output is byte-stable.
std::string hasse_dot(const FinitePoset& poset, const std::vector<std::string>& labels,
                      const std::string& name);

std::string cycles_label(const class Permutation& w);

}  // namespace ncb
