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

std::vector<RatVec> sorted(std::vector<RatVec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Vertices, PIsFaceIndicators) {
  Complex c(3, {{0, 1}, {2}});
  auto vs = vertices(PolytopeRef::P(c));
  EXPECT_EQ(vs.size(), 5u);  // {}, 0, 1, 01, 2
}

TEST(Vertices, QMatchesTightSubsystemEnumeration) {
  for (int i = 0; i < 40; ++i) {
    Rng rng = gen::item_rng(81, "vertices-q", i);
    Complex c = gen::random_complex(rng, static_cast<int>(rng.uniform(1, 4)));
    auto got = sorted(vertices(PolytopeRef::Q(c)));
    auto want = oracle::rank_polytope_vertices(c.n(), [&](SubsetMask s) { return c.rank(s); });
    ASSERT_EQ(got, want) << "item " << i;
  }
}

TEST(Vertices, RMatchesTightSubsystemEnumeration) {
  for (int i = 0; i < 30; ++i) {
    Rng rng = gen::item_rng(82, "vertices-r", i);
    int n = static_cast<int>(rng.uniform(1, 4));
    MatroidSystem l = gen::random_system(rng, n, static_cast<int>(rng.uniform(1, 3)), false, false);
    auto got = sorted(vertices(PolytopeRef::R(l)));
    auto want = oracle::rank_polytope_vertices(n, [&](SubsetMask s) {
      int r = n;
      for (const auto& m : l.matroids) r = std::min(r, m.rank(s));
      return r;
    });
    ASSERT_EQ(got, want) << "item " << i;
  }
}

TEST(Membership, ContainmentChain) {
  for (int i = 0; i < 40; ++i) {
    Rng rng = gen::item_rng(83, "member", i);
    int n = static_cast<int>(rng.uniform(2, 5));
    MatroidSystem l = gen::random_system(rng, n, 2, false, false);
    Complex c = l.intersection();
    for (int j = 0; j < 10; ++j) {
      RatVec x = gen::random_weights(rng, n, 2, 3);
      bool p = member(PolytopeRef::P(c), x);
      bool q = member(PolytopeRef::Q(c), x);
      bool r = member(PolytopeRef::R(l), x);
      ASSERT_TRUE(!p || q);
      ASSERT_TRUE(!q || r);
    }
  }
}

TEST(Membership, RejectsBadVectors) {
  Complex c(2, {{0}, {1}});
  EXPECT_THROW(member(PolytopeRef::Q(c), RatVec{Rational(1)}), DomainError);
  EXPECT_THROW(member(PolytopeRef::Q(c), RatVec{Rational(-1), Rational(0)}), DomainError);
  EXPECT_TRUE(member(PolytopeRef::P(c), RatVec{Rational(1, 2), Rational(1, 2)}));
  EXPECT_FALSE(member(PolytopeRef::P(c), RatVec{Rational(1, 2), Rational(2, 3)}));
}

TEST(Gauge, PGaugeIsFractionalChromaticNumber) {
  for (int i = 0; i < 40; ++i) {
    Rng rng = gen::item_rng(84, "psi", i);
    int n = static_cast<int>(rng.uniform(1, 5));
    Complex c = gen::random_complex(rng, n);
    auto gens = c.maximal_faces();
    for (int v = 0; v < n; ++v) gens.push_back(SubsetMask::singleton(v));
    c = Complex(n, gens);
    RatVec h = gen::random_weights(rng, n, 3, 2);
    ASSERT_EQ(psi(PolytopeRef::P(c), h), ExtRational::of(chi_star(c, h).value));
    ASSERT_LE(psi(PolytopeRef::Q(c), h), psi(PolytopeRef::P(c), h));
  }
}

TEST(Gauge, ZeroAndInfinite) {
  Complex c(2, {{0}});
  EXPECT_EQ(psi(PolytopeRef::Q(c), RatVec{Rational(0), Rational(0)}), ExtRational::of(0));
  EXPECT_TRUE(psi(PolytopeRef::Q(c), RatVec{Rational(0), Rational(1)}).infinite);
}

TEST(Ratio, BasicFacts) {
  Complex c = independence_complex(Hypergraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}));
  EXPECT_EQ(ratio(PolytopeRef::P(c), PolytopeRef::P(c)), ExtRational::of(1));
  EXPECT_GE(ratio(PolytopeRef::Q(c), PolytopeRef::P(c)), ExtRational::of(1));
}

TEST(FSpan, MatchesDefinition) {
  for (int i = 0; i < 80; ++i) {
    Rng rng = gen::item_rng(85, "f-span", i);
    int n = static_cast<int>(rng.uniform(1, 7));
    Matroid m = gen::random_matroid(rng, n);
    RatVec f = gen::random_weights(rng, n, 3, 2);
    RatVec got = f_span(m, f);
    for (int v = 0; v < n; ++v) {
      ASSERT_EQ(got[v], oracle::f_span_at(m, f, v)) << "item " << i << " v " << v;
      ASSERT_GE(got[v], f[v]);
    }
  }
}

TEST(Matroidal, TwoMatroidsMatchIntersectionTheorem) {
  for (int i = 0; i < 40; ++i) {
    Rng rng = gen::item_rng(86, "matroidal", i);
    int n = static_cast<int>(rng.uniform(1, 6));
    MatroidSystem l = gen::random_system(rng, n, 2, false, true);
    auto r = matroidal_numbers(l, RatVec(n, Rational(1)));
    int common = max_common_independent(l.matroids[0], l.matroids[1]).size();
    ASSERT_EQ(r.nu, Rational(common)) << "item " << i;
    ASSERT_EQ(r.tau, Rational(common)) << "item " << i;
    ASSERT_EQ(r.nu_star, r.tau_star);
    ASSERT_TRUE(l.independent(r.nu_witness));
  }
}

TEST(Matroidal, IntegralCoverMatchesBruteForce) {
  for (int i = 0; i < 30; ++i) {
    Rng rng = gen::item_rng(87, "tau", i);
    int n = static_cast<int>(rng.uniform(1, 4));
    MatroidSystem l = gen::random_system(rng, n, 3, false, true);
    RatVec w(n);
    for (auto& x : w) x = Rational(rng.uniform(0, 1));
    SubsetMask need;
    for (int v = 0; v < n; ++v) {
      if (w[v] > 0) need = need.with(v);
    }
    // every useful (matroid, flat) pair, used at most once
    std::vector<std::pair<SubsetMask, int>> fv;
    for (const auto& m : l.matroids) {
      for (SubsetMask f : flats(m)) {
        if (f.intersects(need)) fv.push_back({f, m.rank(f)});
      }
    }
    long best = -1;
    std::function<void(std::size_t, SubsetMask, long)> rec = [&](std::size_t j, SubsetMask cov,
                                                                 long cost) {
      if (best >= 0 && cost >= best) return;
      if (need.subset_of(cov)) {
        best = cost;
        return;
      }
      if (j == fv.size()) return;
      rec(j + 1, cov | fv[j].first, cost + fv[j].second);
      rec(j + 1, cov, cost);
    };
    rec(0, SubsetMask(), 0);
    auto r = matroidal_numbers(l, w);
    ASSERT_EQ(r.tau, Rational(best)) << "item " << i;
  }
}

TEST(Hyper, FanoPlane) {
  Hypergraph fano = projective_plane(2);
  auto r = hyper_numbers(fano, RatVec(7, Rational(1)));
  EXPECT_EQ(r.nu, Rational(1));
  EXPECT_EQ(r.nu_star, Rational(7, 3));
  EXPECT_EQ(r.tau_star, Rational(7, 3));
  EXPECT_EQ(r.tau, Rational(3));
}

TEST(Hyper, MatchingAndCoverBruteForce) {
  for (int i = 0; i < 40; ++i) {
    Rng rng = gen::item_rng(88, "hyper", i);
    int n = static_cast<int>(rng.uniform(2, 6));
    Hypergraph h = gen::random_hypergraph(rng, n, static_cast<int>(rng.uniform(1, 7)), 3);
    auto r = hyper_numbers(h, RatVec(h.num_edges(), Rational(1)));
    int nu = 0, tau = n;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << h.num_edges()); ++b) {
      if (h.is_matching(SubsetMask(b))) nu = std::max(nu, std::popcount(b));
    }
    for (SubsetMask t : oracle::all_subsets(n)) {
      bool cover = true;
      for (SubsetMask e : h.edges()) cover = cover && e.intersects(t);
      if (cover) tau = std::min(tau, t.size());
    }
    ASSERT_EQ(r.nu, Rational(nu)) << "item " << i;
    ASSERT_EQ(r.tau, Rational(tau)) << "item " << i;
    ASSERT_LE(r.nu, r.nu_star);
    ASSERT_EQ(r.nu_star, r.tau_star);
    ASSERT_LE(r.tau_star, r.tau);
  }
}

}  // namespace
}  // namespace mtk
