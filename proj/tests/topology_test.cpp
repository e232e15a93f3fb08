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

TEST(Expansions, RankExpansionMatchesBruteForce) {
  for (int i = 0; i < 60; ++i) {
    Rng rng = gen::item_rng(41, "expansions", i);
    Complex c = gen::random_complex(rng, static_cast<int>(rng.uniform(1, 6)));
    auto e = expansions(c);
    ExtRational want = ExtRational::of(0);
    for (SubsetMask s : oracle::all_subsets(c.n())) {
      if (s.empty()) continue;
      int r = oracle::rank([&](SubsetMask t) { return c.contains(t); }, s);
      want = max(want, divide(Rational(s.size()), ExtEta::of(r)));
    }
    ASSERT_EQ(e.delta_r, want) << "item " << i;
    ASSERT_LE(e.delta_eta, e.delta);
    ASSERT_LE(e.delta_r, e.delta);
  }
}

TEST(Expansions, SimplexAndPentagon) {
  auto s = expansions(Complex::simplex(4));
  EXPECT_EQ(s.delta_r, ExtRational::of(1));
  EXPECT_EQ(s.delta_eta, ExtRational::of(0));
  EXPECT_EQ(s.delta, ExtRational::of(1));
  // I(C_5) is a circle
  Hypergraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  auto e = expansions(independence_complex(c5));
  EXPECT_EQ(e.delta_r, ExtRational::of(Rational(5, 2)));
  // S = {0,1,2} induces {0,2} plus the point 1: disconnected, so 3/1
  EXPECT_EQ(e.delta_eta, ExtRational::of(3));
}

TEST(Expansions, WeightedVariant) {
  Complex c(2, {{0}, {1}});
  auto e = expansions(c, RatVec{Rational(3), Rational(1, 2)});
  // S = {0,1}: 7/2 over min(eta=1, rank=1)
  EXPECT_EQ(e.delta_h, ExtRational::of(Rational(7, 2)));
  EXPECT_THROW(expansions(c, RatVec{Rational(1)}), DomainError);
}

TEST(TopologicalHall, FindsRainbowFace) {
  Complex c = as_complex(Matroid::uniform(4, 2));
  auto r = topological_hall_check(c, {{0, 1}, {2, 3}});
  EXPECT_NE(r.verdict, Verdict::kViolated);
}

}  // namespace
}  // namespace mtk
