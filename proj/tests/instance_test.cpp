// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace mtk {
namespace {

TEST(Instance, MinimalComplexFile) {
  Instance inst = parse_instance_text(R"({"complex":{"n":2,"maximal_faces":[[0],[1]]}})");
  ASSERT_TRUE(inst.complex.has_value());
  EXPECT_EQ(inst.complex->n(), 2);
  EXPECT_EQ(inst.complex->maximal_faces().size(), 2u);
  EXPECT_FALSE(inst.matroids.has_value());
}

TEST(Instance, TruncatedPlaneSystemRoundTrip) {
  Instance gen = canned("T_k", {{"q", "2"}});
  Instance back = parse_instance_text(emit_instance(gen));
  ASSERT_TRUE(back.matroids.has_value());
  EXPECT_EQ(back.matroids->k(), 3);
  EXPECT_TRUE(back.matroids->all_partition());
  EXPECT_EQ(back.matroids->intersection(), gen.matroids->intersection());
}

TEST(Instance, RandomRoundTrip) {
  for (int i = 0; i < 60; ++i) {
    Rng rng = gen::item_rng(101, "instance", i);
    int n = static_cast<int>(rng.uniform(1, 6));
    Instance inst;
    inst.matroids = gen::random_system(rng, n, static_cast<int>(rng.uniform(1, 3)), false, false);
    inst.complex = inst.matroids->intersection();
    inst.w = gen::random_weights(rng, n, 5, 4);
    inst.h = gen::random_weights(rng, n, 5, 4);
    inst.hypergraph = gen::random_hypergraph(rng, n, 3, 2);
    inst.provenance = "random " + std::to_string(i);
    std::string text = emit_instance(inst);
    Instance back = parse_instance_text(text);
    ASSERT_EQ(emit_instance(back), text);
    ASSERT_EQ(*back.complex, *inst.complex);
    ASSERT_EQ(*back.w, *inst.w);
    ASSERT_EQ(*back.hypergraph, *inst.hypergraph);
    for (int j = 0; j < inst.matroids->k(); ++j) {
      for (SubsetMask s : oracle::all_subsets(n)) {
        ASSERT_EQ(back.matroids->matroids[j].rank(s), inst.matroids->matroids[j].rank(s));
      }
    }
  }
}

TEST(Instance, AllMatroidKindsParse) {
  Instance inst = parse_instance_text(R"({"matroids":[
    {"kind":"gen_partition","parts":[[0,1],[2]],"caps":[1,1]},
    {"kind":"uniform","n":3,"rank":2},
    {"kind":"graphic","vertices":3,"edges":[[0,1],[1,2],[0,2]]},
    {"kind":"explicit","n":3,"maximal":[[0,1],[0,2],[1,2]]}],
    "weights":{"w":["1/2","3",1]}})");
  ASSERT_EQ(inst.matroids->k(), 4);
  for (const auto& m : inst.matroids->matroids) EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ((*inst.w)[0], Rational(1, 2));
  EXPECT_EQ((*inst.w)[2], Rational(1));
}

TEST(Instance, CapViolationIsValidationError) {
  EXPECT_THROW(
      parse_instance_text(R"({"matroids":[{"kind":"gen_partition","parts":[[0]],"caps":[2]}]})"),
      ValidationError);
}

TEST(Instance, Errors) {
  EXPECT_THROW(parse_instance_text("{"), ParseError);
  EXPECT_THROW(parse_instance_text("[]"), ParseError);
  EXPECT_THROW(parse_instance_text(R"({"complex":{"maximal_faces":[]}})"), ParseError);
  EXPECT_THROW(parse_instance_text(R"({"complex":{"n":2,"maximal_faces":[[0,5]]}})"),
               ValidationError);
  EXPECT_THROW(parse_instance_text(R"({"complex":{"n":2,"maximal_faces":[["a"]]}})"),
               ParseError);
  EXPECT_THROW(parse_instance_text(R"({"matroids":[{"kind":"bogus"}]})"), ParseError);
  EXPECT_THROW(parse_instance_text(R"({"weights":{"w":["1/0"]}})"), ParseError);
  EXPECT_THROW(parse_instance_text(R"({"weights":{"w":[0.5]}})"), ParseError);
  EXPECT_THROW(parse_instance_text(R"({"complex":{"n":2,"maximal_faces":[[0]]},
      "matroids":[{"kind":"uniform","n":3,"rank":1}]})"),
               ValidationError);
  EXPECT_THROW(parse_instance("/nonexistent/file.json"), ParseError);
}

TEST(Instance, ParseErrorNamesField) {
  try {
    parse_instance_text(R"({"matroids":[{"kind":"uniform","n":3}]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("matroids[0]"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("rank"), std::string::npos);
  }
}

}  // namespace
}  // namespace mtk
