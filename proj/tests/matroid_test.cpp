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

// random pool of every matroid kind, including derived ones
std::vector<Matroid> pool(std::uint64_t seed, int count) {
  std::vector<Matroid> out;
  for (int i = 0; i < count; ++i) {
    Rng rng = gen::item_rng(seed, "matroid-test", i);
    int n = static_cast<int>(rng.uniform(1, 7));
    Matroid m = gen::random_matroid(rng, n);
    out.push_back(m);
    switch (i % 4) {
      case 0:
        out.push_back(dual(m));
        break;
      case 1:
        out.push_back(contract_matroid(m, rng.subset(n, 1, 3)));
        break;
      case 2:
        out.push_back(restrict_matroid(m, rng.subset(n)));
        break;
      default:
        break;
    }
  }
  return out;
}

TEST(Matroid, RankMatchesLargestIndependentSubset) {
  for (const auto& m : pool(11, 60)) {
    auto indep = [&](SubsetMask s) { return m.independent(s); };
    for (SubsetMask s : oracle::all_subsets(m.n())) {
      ASSERT_EQ(m.rank(s), oracle::rank(indep, s));
    }
  }
}

TEST(Matroid, EveryKindSatisfiesAxioms) {
  for (const auto& m : pool(12, 60)) {
    EXPECT_TRUE(check_matroid_axioms(as_complex(m)));
  }
}

TEST(Matroid, RankIsSubmodular) {
  for (const auto& m : pool(13, 30)) {
    auto all = oracle::all_subsets(m.n());
    for (SubsetMask a : all) {
      for (SubsetMask b : all) {
        ASSERT_LE(m.rank(a | b) + m.rank(a & b), m.rank(a) + m.rank(b));
      }
    }
  }
}

TEST(Matroid, UniformRank) {
  Matroid u = Matroid::uniform(5, 2);
  EXPECT_EQ(u.rank(SubsetMask{0, 1, 2}), 2);
  EXPECT_EQ(u.rank(SubsetMask{3}), 1);
  EXPECT_THROW(Matroid::uniform(3, 4), ValidationError);
}

TEST(Matroid, GenPartitionCaps) {
  Matroid m = Matroid::gen_partition(5, {{0, 1, 2}, {3, 4}}, {2, 1});
  EXPECT_EQ(m.rank(SubsetMask{0, 1, 2, 3, 4}), 3);
  EXPECT_TRUE(m.independent(SubsetMask{0, 1, 4}));
  EXPECT_FALSE(m.independent(SubsetMask{3, 4}));
  EXPECT_THROW(Matroid::gen_partition(2, {{0, 1}}, {3}), ValidationError);
  EXPECT_THROW(Matroid::gen_partition(3, {{0, 1}}, {1}), ValidationError);
  EXPECT_THROW(Matroid::gen_partition(3, {{0, 1}, {1, 2}}, {1, 1}), ValidationError);
}

TEST(Matroid, GraphicIndependentIffForest) {
  for (int i = 0; i < 40; ++i) {
    Rng rng = gen::item_rng(14, "graphic", i);
    int v = static_cast<int>(rng.uniform(2, 5));
    int e = static_cast<int>(rng.uniform(1, 7));
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < e; ++j) {
      edges.push_back({static_cast<int>(rng.uniform(0, v - 1)),
                       static_cast<int>(rng.uniform(0, v - 1))});
    }
    Matroid m = Matroid::graphic(v, edges);
    for (SubsetMask s : oracle::all_subsets(e)) {
      ASSERT_EQ(m.independent(s), oracle::is_forest(edges, s));
    }
  }
}

TEST(Matroid, DualBasesAreComplements) {
  for (const auto& m : pool(15, 40)) {
    Matroid d = dual(m);
    const SubsetMask all = SubsetMask::full(m.n());
    for (SubsetMask s : oracle::all_subsets(m.n())) {
      bool base = m.independent(s) && s.size() == m.rank();
      bool dual_base = d.independent(all - s) && (all - s).size() == d.rank();
      ASSERT_EQ(base, dual_base);
    }
  }
}

TEST(Matroid, CircuitsAreMinimalDependent) {
  for (const auto& m : pool(16, 40)) {
    auto circ = circuits(m).edges();
    std::set<SubsetMask> got(circ.begin(), circ.end());
    std::set<SubsetMask> want;
    for (SubsetMask s : oracle::all_subsets(m.n())) {
      if (m.independent(s)) continue;
      bool minimal = true;
      s.for_each([&](int v) { minimal = minimal && m.independent(s.without(v)); });
      if (minimal) want.insert(s);
    }
    ASSERT_EQ(got, want);
  }
}

TEST(Matroid, FlatsAreClosedSets) {
  for (const auto& m : pool(17, 40)) {
    auto fl = flats(m);
    std::set<SubsetMask> got(fl.begin(), fl.end());
    std::set<SubsetMask> want;
    for (SubsetMask s : oracle::all_subsets(m.n())) {
      bool closed = true;
      for (int v = 0; v < m.n(); ++v) {
        if (!s.contains(v) && m.rank(s.with(v)) == m.rank(s)) closed = false;
      }
      if (closed) want.insert(s);
    }
    ASSERT_EQ(got, want);
  }
}

TEST(Matroid, LoopsAndColoops) {
  // a loop edge and a bridge
  Matroid m = Matroid::graphic(3, {{0, 0}, {0, 1}, {1, 2}, {1, 2}});
  EXPECT_EQ(loops(m), SubsetMask{0});
  EXPECT_EQ(coloops(m), SubsetMask{1});
  EXPECT_EQ(span(m, SubsetMask{2}), (SubsetMask{0, 2, 3}));
}

TEST(Matroid, ExplicitRejectsNonMatroid) {
  // two disjoint edges: {0,1} and {2,3} fail exchange
  EXPECT_THROW(Matroid::from_complex(Complex(4, {{0, 1}, {2, 3}})), ValidationError);
  EXPECT_NO_THROW(Matroid::from_complex(Complex(3, {{0, 1}, {0, 2}, {1, 2}})));
}

TEST(MatroidSystem, IntersectionIsCommonIndependentSets) {
  Rng rng(5);
  MatroidSystem l = gen::random_system(rng, 6, 3, false, false);
  Complex c = l.intersection();
  for (SubsetMask s : oracle::all_subsets(6)) {
    bool all = true;
    for (const auto& m : l.matroids) all = all && m.independent(s);
    EXPECT_EQ(c.contains(s), all);
  }
  EXPECT_THROW(MatroidSystem({Matroid::uniform(2, 1), Matroid::uniform(3, 1)}),
               ValidationError);
}

}  // namespace
}  // namespace mtk
