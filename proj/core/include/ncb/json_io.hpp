#pragma once

#include <json.hpp>

#include "ncb/coxeter_general.hpp"
#include "ncb/type_b.hpp"

// JSON records, schema_version 1. Shapes:
//   nc-partition   {"n": N, "blocks": [[...], ...]}      blocks by ascending max
//   ideal          {"n": N, "roots": [[i, j], ...]}      sorted pairs
//   ideal-b        {"n": N, "roots": [{"kind": "e-e"|"e+e"|"e", "i": i, "j": j}, ...]}
//   vector         {"entries": [...]}
//   word           {"letters": [...]}
//   signed-permutation {"n": N, "images": [...]}
//   verdict        {"check": ..., "n": ..., "pass": ..., ...}
namespace ncb::io {

nlohmann::json to_json(const NoncrossingPartition& pi);
nlohmann::json to_json(const OrderIdeal& p);
nlohmann::json to_json(const OrderIdealB& p);
nlohmann::json to_json(const IntVector& v);
nlohmann::json word_to_json(const Word& w);
nlohmann::json to_json(const SignedPermutation& w);

NoncrossingPartition nc_from_json(const nlohmann::json& j);
OrderIdeal ideal_from_json(const nlohmann::json& j);
OrderIdealB ideal_b_from_json(const nlohmann::json& j);
IntVector vector_from_json(const nlohmann::json& j);
Word word_from_json(const nlohmann::json& j);
SignedPermutation signed_permutation_from_json(const nlohmann::json& j);

}  // namespace ncb::io
