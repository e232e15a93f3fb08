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

Complex boundary_of_simplex(int vertices) {
  std::vector<SubsetMask> gens;
  for (int v = 0; v < vertices; ++v) gens.push_back(SubsetMask::full(vertices).without(v));
  return Complex(vertices, gens);
}

// 6-vertex triangulation of the real projective plane
Complex rp2() {
  return Complex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                     {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

TEST(Homology, EulerCharacteristicOracle) {
  for (int i = 0; i < 120; ++i) {
    Rng rng = gen::item_rng(31, "euler", i);
    Complex c = gen::random_complex(rng, static_cast<int>(rng.uniform(1, 8)));
    auto prof = reduced_homology(c);
    long alt = prof.empty_complex ? -1 : 0;
    for (std::size_t d = 0; d < prof.groups.size(); ++d) {
      alt += (d % 2 == 0 ? 1 : -1) * prof.groups[d].free_rank;
    }
    ASSERT_EQ(alt, oracle::reduced_euler(c)) << "item " << i;
  }
}

TEST(Homology, SpheresHaveOneClassAtTop) {
  for (int d = 0; d <= 5; ++d) {
    Complex s = boundary_of_simplex(d + 2);
    auto prof = reduced_homology(s);
    ASSERT_EQ(static_cast<int>(prof.groups.size()), d + 1);
    for (int i = 0; i < d; ++i) EXPECT_TRUE(prof.groups[i].vanishes());
    EXPECT_EQ(prof.groups[d].free_rank, 1);
    EXPECT_EQ(eta_h(s), ExtEta::of(d + 1));
  }
}

TEST(Homology, ProjectivePlaneTorsion) {
  auto prof = reduced_homology(rp2());
  ASSERT_EQ(prof.groups.size(), 3u);
  EXPECT_TRUE(prof.groups[0].vanishes());
  EXPECT_EQ(prof.groups[1].free_rank, 0);
  EXPECT_TRUE(prof.groups[1].torsion);
  EXPECT_TRUE(prof.groups[2].vanishes());
  EXPECT_EQ(eta_h(rp2()), ExtEta::of(2));
}

TEST(Homology, ConesAndSimplicesAreAcyclic) {
  EXPECT_TRUE(eta_h(Complex::simplex(4)).infinite);
  // cone over two points
  EXPECT_TRUE(eta_h(Complex(3, {{0, 2}, {1, 2}})).infinite);
}

TEST(Homology, SmallCases) {
  // only the empty face
  EXPECT_EQ(eta_h(Complex(3, {})), ExtEta::of(0));
  // two points: disconnected
  EXPECT_EQ(eta_h(Complex(2, {{0}, {1}})), ExtEta::of(1));
  // 4-cycle
  EXPECT_EQ(eta_h(Complex(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})), ExtEta::of(2));
}

TEST(Homology, JoinIsAdditive) {
  for (int i = 0; i < 40; ++i) {
    Rng rng = gen::item_rng(32, "join", i);
    Complex a = gen::random_complex(rng, static_cast<int>(rng.uniform(1, 4)));
    Complex b = gen::random_complex(rng, static_cast<int>(rng.uniform(1, 4)));
    ASSERT_EQ(eta_h(join(a, b)), eta_h(a) + eta_h(b)) << "item " << i;
  }
}

TEST(Homology, MatroidComplexes) {
  // U(4,2) has no coloops: eta equals rank
  EXPECT_EQ(eta_h(as_complex(Matroid::uniform(4, 2))), ExtEta::of(2));
  // a coloop makes the complex a cone
  Matroid m = Matroid::gen_partition(3, {{0, 1}, {2}}, {1, 1});
  EXPECT_TRUE(eta_h(as_complex(m)).infinite);
}

}  // namespace
}  // namespace mtk
