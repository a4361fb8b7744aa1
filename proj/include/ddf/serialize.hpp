#ifndef DDF_SERIALIZE_HPP
#define DDF_SERIALIZE_HPP

// JSON encodings of families, designs and invariant reports. Every file that
// carries element indices also carries the group description and the indexing
// convention, so a reader can rebuild the group exactly.

#include <string>
#include <vector>

#include <json.hpp>

#include "designs.hpp"
#include "iso.hpp"
#include "verification.hpp"

namespace ddf {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFieldIndexing = "field: index 0 is zero, index t+1 is alpha^t for the primitive root alpha of the modulus";
inline constexpr const char* kRingIndexing = "ring: index = sum_i c_i (p^2)^i over the coordinates c_i in Z/p^2 of the element in the basis 1, x, ..., x^(r-1)";

inline const char* indexing_note(GroupKind kind) { return kind == GroupKind::Field ? kFieldIndexing : kRingIndexing; }

inline Json to_json(const GroupDescription& d) {
  Json j;
  j["kind"] = d.kind == GroupKind::Field ? "field" : "ring";
  j["p"] = d.p;
  // GF(p^m) and GR(p^2, r)
  j[d.kind == GroupKind::Field ? "m" : "r"] = d.degree;
  j["modulus"] = d.modulus;
  if (d.kind == GroupKind::Ring) j["xi"] = d.xi;
  j["indexing"] = indexing_note(d.kind);
  return j;
}

inline GroupDescription group_description_from_json(const Json& j) {
  GroupDescription d;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "field") {
    d.kind = GroupKind::Field;
    d.degree = j.at("m").get<unsigned>();
  } else if (kind == "ring") {
    d.kind = GroupKind::Ring;
    d.degree = j.at("r").get<unsigned>();
  } else {
    throw Error(ErrorKind::Parse, "unknown group kind '" + kind + "'");
  }
  d.p = j.at("p").get<std::uint32_t>();
  if (j.contains("modulus")) d.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
  if (j.contains("xi")) d.xi = j.at("xi").get<std::vector<std::uint32_t>>();
  return d;
}

inline Json to_json(const BlockFamily& fam) {
  Json j;
  j["label"] = fam.label;
  j["group"] = to_json(fam.group.description());
  j["v"] = fam.v();
  j["k"] = fam.k();
  j["blocks"] = fam.blocks;
  return j;
}

inline BlockFamily family_from_json(const Json& j, std::uint64_t bound = kDefaultSizeBound) {
  BlockFamily fam{group_from_description(group_description_from_json(j.at("group")), bound), {}, j.value("label", "")};
  for (const auto& b : j.at("blocks")) {
    ElementSet s = b.get<ElementSet>();
    for (const auto x : s)
      if (x >= fam.v()) throw Error(ErrorKind::IndexOutOfRange, "element index out of range");
    fam.blocks.push_back(sorted_set(std::move(s)));
  }
  return fam;
}

inline Json to_json(const Design& d) {
  Json j;
  j["origin"] = d.origin;
  if (d.group) j["group"] = to_json(*d.group);
  j["v"] = d.v;
  j["k"] = d.k;
  j["b"] = d.b();
  const PairBalance bal = verify_2design(d);
  if (bal.holds) {
    j["lambda"] = bal.lambda;
  } else {
    j["lambda"] = nullptr;
  }
  j["blocks"] = d.blocks;
  return j;
}

/// Rebuilds a design; when the points are a known group the translations are
/// restored as known automorphisms.
inline Design design_from_json(const Json& j, std::uint64_t bound = kDefaultSizeBound) {
  Design d = make_design(j.at("v").get<std::uint32_t>(), j.at("blocks").get<std::vector<Block>>(), j.value("origin", ""));
  if (j.contains("k") && !d.blocks.empty() && j.at("k").get<std::size_t>() != d.k)
    throw Error(ErrorKind::Parse, "declared k does not match the blocks");
  if (j.contains("group")) {
    const GroupDescription desc = group_description_from_json(j.at("group"));
    const GroupView g = group_from_description(desc, bound);
    if (g.order() != d.v) throw Error(ErrorKind::Parse, "group order does not match v");
    d.group = g.description();
    for (auto& t : g.translation_generators())
      if (verify_isomorphism(d, d, t)) d.known_automorphisms.push_back(std::move(t));
  }
  return d;
}

inline Json to_json(const IntersectionProfile& prof) {
  Json j;
  Json hist = Json::object();
  for (const auto& [size, count] : prof.histogram) hist[std::to_string(size)] = count;
  j["histogram"] = hist;
  j["support"] = prof.support();
  j["pairs"] = prof.pairs();
  return j;
}

inline IntersectionProfile profile_from_json(const Json& j) {
  IntersectionProfile prof;
  for (const auto& [key, count] : j.at("histogram").items()) prof.histogram[std::stoul(key)] = count.get<std::uint64_t>();
  return prof;
}

inline Json to_json(const Uniformity& u, const std::string& kind, const Json& params) {
  Json j;
  j["kind"] = kind;
  j["params"] = params;
  j["holds"] = u.holds;
  if (u.holds) {
    j["lambda"] = u.lambda;
  } else {
    j["lambda"] = nullptr;
    if (u.witness) j["witness"] = {{"element", *u.witness}, {"multiplicity", u.witness_multiplicity}};
  }
  return j;
}

inline Json to_json(const RdsReport& r, const Json& params) {
  Json j;
  j["kind"] = "rds";
  j["params"] = params;
  j["holds"] = r.holds;
  j["m"] = r.m;
  j["n"] = r.n;
  j["k"] = r.k;
  if (r.holds) {
    j["lambda"] = r.lambda;
  } else {
    j["lambda"] = nullptr;
    if (r.witness) j["witness"] = {{"element", *r.witness}};
  }
  return j;
}

inline Json to_json(const IsoVerdict& v) {
  Json j;
  j["isomorphic"] = v.isomorphic;
  if (v.bijection) j["bijection"] = *v.bijection;
  return j;
}

inline Permutation bijection_from_json(const Json& j) { return j.at("bijection").get<Permutation>(); }

}  // namespace ddf

#endif  // DDF_SERIALIZE_HPP
