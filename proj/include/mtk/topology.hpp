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

#pragma once

#include <optional>
#include <vector>

#include "mtk/complex.hpp"
#include "mtk/core.hpp"
#include "mtk/homology.hpp"
#include "mtk/record.hpp"

namespace mtk {

struct Expansions {
  ExtRational delta_r;
  ExtRational delta_eta;
  ExtRational delta;
  ExtRational delta_h;
};

// Max over non-empty S of |S|/rank, |S|/eta_H(C[S]), |S|/min(eta_H, rank) and
// h[S]/min(eta_H, rank). Subsets are visited in Gray-code order.
inline Expansions expansions(const Complex& c,
                             const std::optional<RatVec>& h = std::nullopt) {
  const int n = c.n();
  check_cap(n, kSubsetCap, "expansions");
  RatVec weights = h ? *h : RatVec(n, Rational(1));
  if (static_cast<int>(weights.size()) != n) {
    throw DomainError("expansions: weight vector has wrong length");
  }
  Expansions e{ExtRational::of(0), ExtRational::of(0), ExtRational::of(0),
               ExtRational::of(0)};
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    SubsetMask s(i ^ (i >> 1));
    long rank = c.rank(s);
    ExtEta eta = eta_h(c.induced(s));
    ExtEta bar = min(eta, ExtEta::of(rank));
    Rational size(s.size());
    e.delta_r = max(e.delta_r, divide(size, ExtEta::of(rank)));
    e.delta_eta = max(e.delta_eta, divide(size, eta));
    e.delta = max(e.delta, divide(size, bar));
    e.delta_h = max(e.delta_h, divide(sum_over(weights, s), bar));
  }
  return e;
}

// Topological Hall: if eta_H(C[V_I]) >= |I| for all I then some choice
// function v_i in V_i has image in C.
inline VerificationRecord topological_hall_check(const Complex& c,
                                                 const std::vector<SubsetMask>& sets) {
  const int m = static_cast<int>(sets.size());
  check_cap(m, 12, "topological_hall_check");
  bool hypothesis = true;
  nlohmann::json failing;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << m) && hypothesis; ++i) {
    SubsetMask idx(i);
    SubsetMask u;
    idx.for_each([&](int j) { u |= sets[j]; });
    if (eta_h(c.induced(u)) < ExtEta::of(idx.size())) {
      hypothesis = false;
      failing = idx.elements();
    }
  }
  // rainbow face search; the chosen vertices need not be distinct
  std::vector<int> choice(m, -1);
  bool found = false;
  std::function<void(int, SubsetMask)> rec = [&](int j, SubsetMask img) {
    if (found) return;
    if (j == m) {
      found = true;
      return;
    }
    sets[j].for_each([&](int v) {
      if (found) return;
      SubsetMask next = img.with(v);
      if (c.contains(next)) {
        choice[j] = v;
        rec(j + 1, next);
      }
    });
  };
  rec(0, SubsetMask());
  VerificationRecord r;
  r.claim = "topological-hall";
  r.provenance = "complex on " + std::to_string(c.n()) + " vertices, m=" +
                 std::to_string(m);
  r.lhs = hypothesis ? "hypothesis" : "no-hypothesis";
  r.relation = "implies";
  r.rhs = found ? "rainbow-face" : "no-rainbow-face";
  r.verdict = (!hypothesis || found) ? Verdict::kHolds : Verdict::kViolated;
  r.witness["hypothesis"] = hypothesis;
  r.witness["conclusion"] = found;
  if (found) r.witness["choice"] = choice;
  if (!hypothesis) r.witness["failing_index_set"] = failing;
  return r;
}

}  // namespace mtk
