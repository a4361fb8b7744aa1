#include <gtest/gtest.h>

#include "ddf/ddf.hpp"
#include "ddf/serialize.hpp"

using namespace ddf;

TEST(Json, GroupDescription) {
  const auto d = wilson_family(2, 4, 3).group.description();
  const Json j = to_json(d);
  EXPECT_EQ(j["kind"], "field");
  EXPECT_EQ(j["p"], 2);
  EXPECT_EQ(j["m"], 4);
  EXPECT_FALSE(j.contains("xi"));
  const auto back = group_description_from_json(j);
  EXPECT_EQ(back.kind, GroupKind::Field);
  EXPECT_EQ(back.degree, 4u);
  EXPECT_EQ(back.modulus, d.modulus);

  const Json r = to_json(davis_family(3, 2).group.description());
  EXPECT_EQ(r["kind"], "ring");
  EXPECT_EQ(r["r"], 2);
  EXPECT_TRUE(r.contains("xi"));

  Json bad = j;
  bad["kind"] = "monoid";
  try {
    group_description_from_json(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
}

TEST(Json, FamilyRoundTrip) {
  for (const auto& f : {wilson_family(3, 4, 10), momihara_family(2, 1), davis_family(5, 1)}) {
    const Json j = to_json(f);
    const auto back = family_from_json(j);
    EXPECT_EQ(back.blocks, f.blocks);
    EXPECT_EQ(back.label, f.label);
    EXPECT_EQ(back.v(), f.v());
    EXPECT_EQ(to_json(back).dump(), j.dump());
  }
}

TEST(Json, FamilyIndexOutOfRange) {
  Json j = to_json(davis_family(3, 1));
  j["blocks"][0][0] = 9;
  try {
    family_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
  }
}

TEST(Json, DesignRoundTrip) {
  const auto d = develop(davis_family(2, 2));
  const Json j = to_json(d);
  EXPECT_EQ(j["lambda"], 2);
  EXPECT_EQ(j["b"], 80);
  const auto back = design_from_json(j);
  EXPECT_EQ(back.blocks, d.blocks);
  EXPECT_EQ(back.known_automorphisms.size(), d.known_automorphisms.size());
  EXPECT_EQ(to_json(back).dump(), j.dump());

  const Json plain = to_json(make_design(4, {{0, 1}, {1, 2}}));
  EXPECT_TRUE(plain["lambda"].is_null());
  EXPECT_FALSE(plain.contains("group"));
}

TEST(Json, DesignMismatches) {
  Json j = to_json(develop(davis_family(3, 1)));
  j["k"] = 3;
  EXPECT_THROW(design_from_json(j), Error);
  j = to_json(develop(davis_family(3, 1)));
  j["v"] = 10;
  j["blocks"][0] = {0, 9};
  EXPECT_THROW(design_from_json(j), Error);
}

TEST(Json, Profile) {
  const auto prof = intersection_profile(develop(davis_family(2, 2)));
  const Json j = to_json(prof);
  EXPECT_EQ(j["histogram"]["0"], 1600);
  EXPECT_EQ(j["histogram"]["2"], 120);
  EXPECT_EQ(j["support"], Json::parse("[0,1,2]"));
  EXPECT_EQ(j["pairs"], 3160);
  EXPECT_EQ(profile_from_json(j), prof);
}

TEST(Json, Verdicts) {
  const Json ok = to_json(is_ddf(davis_family(2, 3)), "ddf", Json::object());
  EXPECT_EQ(ok["lambda"], 6);
  EXPECT_TRUE(ok["holds"].get<bool>());
  EXPECT_FALSE(ok.contains("witness"));

  auto f = wilson_family(2, 4, 3);
  std::swap(f.blocks[0][0], f.blocks[1][0]);
  const Json bad = to_json(is_ddf(f), "ddf", Json::object());
  EXPECT_TRUE(bad["lambda"].is_null());
  EXPECT_TRUE(bad.contains("witness"));

  IsoVerdict v{true, Permutation{1, 0, 2}};
  const Json iv = to_json(v);
  EXPECT_EQ(bijection_from_json(iv), (Permutation{1, 0, 2}));
  EXPECT_FALSE(to_json(IsoVerdict{}).contains("bijection"));
}
