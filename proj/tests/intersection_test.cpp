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

TEST(Intersection, MatchesBruteForceMaximum) {
  for (int i = 0; i < 150; ++i) {
    Rng rng = gen::item_rng(21, "intersection", i);
    int n = static_cast<int>(rng.uniform(1, 8));
    Matroid a = gen::random_matroid(rng, n);
    Matroid b = gen::random_matroid(rng, n);
    SubsetMask got = max_common_independent(a, b);
    ASSERT_TRUE(a.independent(got));
    ASSERT_TRUE(b.independent(got));
    int best = 0;
    for (SubsetMask s : oracle::all_subsets(n)) {
      if (a.independent(s) && b.independent(s)) best = std::max(best, s.size());
    }
    ASSERT_EQ(got.size(), best) << "item " << i;
  }
}

TEST(Intersection, BipartiteMatching) {
  // edges of K_{2,3}; two partition matroids, one per side
  // edge (i, j) has index 3i + j
  std::vector<SubsetMask> left{{0, 1, 2}, {3, 4, 5}};
  std::vector<SubsetMask> right{{0, 3}, {1, 4}, {2, 5}};
  Matroid a = Matroid::partition(6, left);
  Matroid b = Matroid::partition(6, right);
  EXPECT_EQ(max_common_independent(a, b).size(), 2);
}

TEST(Intersection, GroundSetsMustAgree) {
  EXPECT_THROW(max_common_independent(Matroid::uniform(3, 1), Matroid::uniform(4, 1)),
               DomainError);
}

}  // namespace
}  // namespace mtk
