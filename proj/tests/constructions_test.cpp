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

TEST(ProjectivePlane, IncidenceAxioms) {
  for (int q : {2, 3, 5}) {
    Hypergraph p = projective_plane(q);
    const int pts = q * q + q + 1;
    ASSERT_EQ(p.n(), pts);
    ASSERT_EQ(p.num_edges(), pts);
    ASSERT_TRUE(p.is_uniform(q + 1));
    for (int a = 0; a < pts; ++a) {
      ASSERT_EQ(p.degree(a), q + 1);
      for (int b = a + 1; b < pts; ++b) {
        int through = 0;
        for (SubsetMask e : p.edges()) through += e.contains(a) && e.contains(b);
        ASSERT_EQ(through, 1);
      }
    }
    for (SubsetMask e : p.edges()) {
      for (SubsetMask f : p.edges()) {
        if (e != f) ASSERT_EQ((e & f).size(), 1);
      }
    }
  }
  EXPECT_THROW(projective_plane(4), Unsupported);
}

TEST(TruncatedPlane, ShapeAndParts) {
  auto t = truncated_projective_plane_parts(2);
  // 6 points, 4 lines of size 3, partite with 3 sides
  EXPECT_EQ(t.h.n(), 6);
  EXPECT_EQ(t.h.num_edges(), 4);
  EXPECT_TRUE(t.h.is_uniform(3));
  EXPECT_EQ(t.parts.size(), 3u);
  for (SubsetMask e : t.h.edges()) {
    for (SubsetMask side : t.parts) EXPECT_EQ((e & side).size(), 1);
  }
  // intersecting: nu = 1
  auto r = hyper_numbers(t.h, RatVec(4, Rational(1)));
  EXPECT_EQ(r.nu, Rational(1));
}

TEST(QK, GridLines) {
  auto q = q_k_parts(3);
  EXPECT_EQ(q.h.n(), 9);
  EXPECT_EQ(q.h.num_edges(), 9);
  EXPECT_TRUE(q.h.is_uniform(3));
  EXPECT_EQ(q.parts.size(), 3u);
}

TEST(Association, RoundTrip) {
  for (int q : {2, 3}) {
    auto t = truncated_projective_plane_parts(q);
    MatroidSystem l = assoc_matroids(t.h, t.parts);
    EXPECT_TRUE(l.all_partition());
    EXPECT_EQ(l.k(), q + 1);
    EXPECT_EQ(l.n(), t.h.num_edges());
    Hypergraph back = assoc_hypergraph(l);
    // same incidence structure up to relabeling: same counts
    EXPECT_EQ(back.num_edges(), t.h.num_edges());
    EXPECT_TRUE(back.is_uniform(q + 1));
    // common independent sets are the matchings
    Complex c = l.intersection();
    for (SubsetMask s : oracle::all_subsets(l.n())) {
      ASSERT_EQ(c.contains(s), t.h.is_matching(s));
    }
  }
}

TEST(Association, Errors) {
  Hypergraph h(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(assoc_matroids(h, {{0, 1}, {2, 3}}), DomainError);
  EXPECT_THROW(assoc_matroids(h, {{0, 2}}), DomainError);
  EXPECT_NO_THROW(assoc_matroids(h, {{0, 2}, {1, 3}}));
  EXPECT_THROW(assoc_hypergraph(MatroidSystem({Matroid::uniform(3, 2)})), Unsupported);
}

TEST(FindPartition, RecoversSides) {
  auto t = truncated_projective_plane_parts(2);
  auto parts = find_k_partition(t.h, 3);
  ASSERT_TRUE(parts.has_value());
  for (SubsetMask e : t.h.edges()) {
    for (SubsetMask side : *parts) EXPECT_EQ((e & side).size(), 1);
  }
  // a triangle is not 2-partite
  EXPECT_FALSE(find_k_partition(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}), 2).has_value());
}

TEST(Canned, AllNamesBuildAndRoundTrip) {
  for (const auto& name : canned_names()) {
    Instance inst = canned(name);
    Instance back = parse_instance_text(emit_instance(inst));
    EXPECT_EQ(emit_instance(back), emit_instance(inst)) << name;
  }
  EXPECT_THROW(canned("nosuch"), DomainError);
  EXPECT_THROW(canned("T_k", {{"q", "x"}}), ParseError);
}

TEST(Canned, AbComplex) {
  Instance inst = canned("ab", {{"a", "1"}, {"m", "3"}});
  ASSERT_TRUE(inst.complex.has_value());
  EXPECT_EQ(inst.complex->n(), 4);
}

}  // namespace
}  // namespace mtk
