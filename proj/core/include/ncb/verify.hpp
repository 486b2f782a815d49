#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace ncb::verify {

struct Result {
  std::string check;
  int n = 0;
  bool pass = false;
  nlohmann::json details;  // includes "counterexample" on failure
};

// Known checks: theorem6-1, theorem4-15, prop5-4, prop5-7, lemma6-6,
// lemma6-4, phi-suite, typeB-suite, narayana.
const std::vector<std::string>& check_names();
int max_rank(const std::string& check);

// Runs one check; throws std::invalid_argument for unknown names or
// out-of-range n (usage errors).
Result run_check(const std::string& check, int n);

nlohmann::json to_json(const Result& r);

}  // namespace ncb::verify
