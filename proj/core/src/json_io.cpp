#include "ncb/json_io.hpp"

#include <json.hpp>

namespace ncb::io {

using nlohmann::json;

namespace {

json base(const char* kind) {
  json j;
  j["schema_version"] = 1;
  j["kind"] = kind;
  return j;
}

void expect_kind(const json& j, const char* kind) {
  if (!j.is_object() || j.value("kind", "") != kind)
    throw std::invalid_argument(std::string("expected a ") + kind + " record");
}

const char* b_kind_name(RootB::Kind k) {
  switch (k) {
    case RootB::Kind::e_minus_e: return "e-e";
    case RootB::Kind::e_plus_e: return "e+e";
    case RootB::Kind::e: return "e";
  }
  return "";
}

}  // namespace

json to_json(const NoncrossingPartition& pi) {
  json j = base("nc-partition");
  j["n"] = pi.rank();
  j["blocks"] = pi.blocks();
  return j;
}

json to_json(const OrderIdeal& p) {
  json j = base("ideal");
  j["n"] = p.rank();
  auto roots = json::array();
  for (RootA r : p.roots()) roots.push_back({r.i, r.j});
  j["roots"] = std::move(roots);
  return j;
}

json to_json(const OrderIdealB& p) {
  json j = base("ideal-b");
  j["n"] = p.n();
  auto roots = json::array();
  for (RootB r : p.roots()) {
    json e;
    e["kind"] = b_kind_name(r.kind);
    e["i"] = r.i;
    if (r.kind != RootB::Kind::e) e["j"] = r.j;
    roots.push_back(std::move(e));
  }
  j["roots"] = std::move(roots);
  return j;
}

json to_json(const IntVector& v) {
  json j = base("vector");
  j["entries"] = v;
  return j;
}

json word_to_json(const Word& w) {
  json j = base("word");
  j["letters"] = w;
  return j;
}

json to_json(const SignedPermutation& w) {
  json j = base("signed-permutation");
  j["n"] = w.n();
  j["images"] = w.images();
  return j;
}

NoncrossingPartition nc_from_json(const json& j) {
  expect_kind(j, "nc-partition");
  return NoncrossingPartition(j.at("n").get<int>(),
                              j.at("blocks").get<std::vector<std::vector<int>>>());
}

OrderIdeal ideal_from_json(const json& j) {
  expect_kind(j, "ideal");
  std::vector<RootA> roots;
  for (const auto& e : j.at("roots")) roots.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return OrderIdeal(j.at("n").get<int>(), std::move(roots));
}

OrderIdealB ideal_b_from_json(const json& j) {
  expect_kind(j, "ideal-b");
  std::vector<RootB> roots;
  for (const auto& e : j.at("roots")) {
    const std::string kind = e.at("kind").get<std::string>();
    RootB r;
    if (kind == "e-e")
      r.kind = RootB::Kind::e_minus_e;
    else if (kind == "e+e")
      r.kind = RootB::Kind::e_plus_e;
    else if (kind == "e")
      r.kind = RootB::Kind::e;
    else
      throw std::invalid_argument("unknown type B root kind");
    r.i = e.at("i").get<int>();
    r.j = r.kind == RootB::Kind::e ? 0 : e.at("j").get<int>();
    roots.push_back(r);
  }
  return OrderIdealB(j.at("n").get<int>(), std::move(roots));
}

IntVector vector_from_json(const json& j) {
  expect_kind(j, "vector");
  return j.at("entries").get<IntVector>();
}

Word word_from_json(const json& j) {
  expect_kind(j, "word");
  return j.at("letters").get<Word>();
}

SignedPermutation signed_permutation_from_json(const json& j) {
  expect_kind(j, "signed-permutation");
  auto w = SignedPermutation::from_images(j.at("images").get<std::vector<int>>());
  if (w.n() != j.at("n").get<int>()) throw std::invalid_argument("n does not match images");
  return w;
}

}  // namespace ncb::io
