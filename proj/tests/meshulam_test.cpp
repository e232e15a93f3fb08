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

TEST(GammaE, GraphMatchesBruteForce) {
  for (int i = 0; i < 150; ++i) {
    Rng rng = gen::item_rng(51, "gamma-graph", i);
    Hypergraph g = gen::random_graph(rng, static_cast<int>(rng.uniform(2, 7)));
    long want = oracle::gamma_e_graph(g);
    ExtEta got = gamma_e_graph(g);
    if (want < 0) {
      ASSERT_TRUE(got.infinite) << "item " << i;
    } else {
      ASSERT_EQ(got, ExtEta::of(want)) << "item " << i;
    }
  }
}

TEST(GammaE, HypergraphMatchesBruteForce) {
  for (int i = 0; i < 80; ++i) {
    Rng rng = gen::item_rng(52, "gamma-hyper", i);
    int n = static_cast<int>(rng.uniform(2, 6));
    Hypergraph h = gen::random_hypergraph(rng, n, static_cast<int>(rng.uniform(1, 5)), 3);
    long want = oracle::gamma_e_hyper(h);
    auto got = gamma_e_hyper_sequence(h);
    if (want < 0) {
      ASSERT_TRUE(got.value.infinite) << "item " << i;
      continue;
    }
    ASSERT_EQ(got.value, ExtEta::of(want)) << "item " << i;
    EXPECT_TRUE(is_frugal(got.edges));
    SubsetMask u;
    for (SubsetMask e : got.edges) u |= e;
    EXPECT_TRUE(is_dominating_union(h, u));
    EXPECT_EQ(sequence_value(got.edges), want);
  }
}

TEST(GammaE, Examples) {
  // two disjoint edges: each one only dominates itself
  Hypergraph m2(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(gamma_e_graph(m2), ExtEta::of(2));
  // isolated vertex: nothing dominates it
  Hypergraph iso(3, {{0, 1}});
  EXPECT_TRUE(gamma_e_graph(iso).infinite);
  // star K_{1,3}: one edge covers the centre
  Hypergraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(gamma_e_graph(star), ExtEta::of(1));
  EXPECT_THROW(gamma_e_graph(Hypergraph(3, {{0, 1, 2}})), DomainError);
}

TEST(Certificate, SitsBetweenGammaAndEta) {
  for (int i = 0; i < 80; ++i) {
    Rng rng = gen::item_rng(53, "certificate", i);
    int n = static_cast<int>(rng.uniform(2, 6));
    Hypergraph h = gen::random_hypergraph(rng, n, static_cast<int>(rng.uniform(1, 6)), 3);
    auto cert = delete_contract_certificate(h);
    ExtEta eta = eta_h(independence_complex(h));
    ASSERT_LE(gamma_e_hyper(h), cert.value) << "item " << i;
    ASSERT_LE(cert.value, eta) << "item " << i;
  }
}

TEST(Certificate, EmptyEdgeRejected) {
  EXPECT_THROW(delete_contract_certificate(Hypergraph(2, {SubsetMask()})), EmptyEdge);
}

}  // namespace
}  // namespace mtk
