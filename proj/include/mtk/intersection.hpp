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

#include <deque>
#include <vector>

#include "mtk/core.hpp"
#include "mtk/matroid.hpp"

namespace mtk {

// Result of the exchange-graph algorithm. `reachable` is the set of vertices
// reached from the M1-free elements in the final exchange graph; it yields
// rank1(V - R) + rank2(R) = |common|.
struct IntersectionResult {
  SubsetMask common;
  SubsetMask reachable;
};

// Maximum common independent set of two matroids on [0, n). M1 and M2 need
// rank(SubsetMask) and independent(SubsetMask).
template <class M1, class M2>
IntersectionResult max_common_independent_with_cover(const M1& m1, const M2& m2,
                                                      int n) {
  SubsetMask cur;
  for (int v = 0; v < n; ++v) {
    if (m1.independent(cur.with(v)) && m2.independent(cur.with(v))) {
      cur = cur.with(v);
    }
  }
  const SubsetMask all = SubsetMask::full(n);
  while (true) {
    SubsetMask outside = all - cur;
    SubsetMask x1, x2;
    outside.for_each([&](int x) {
      if (m1.independent(cur.with(x))) x1 = x1.with(x);
      if (m2.independent(cur.with(x))) x2 = x2.with(x);
    });
    // BFS from X1; edges y -> x when cur - y + x in M1 (y in cur, x outside),
    // x -> y when cur - y + x in M2.
    std::vector<int> parent(n, -2);
    std::deque<int> queue;
    x1.for_each([&](int x) {
      parent[x] = -1;
      queue.push_back(x);
    });
    int end = -1;
    while (!queue.empty() && end < 0) {
      int u = queue.front();
      queue.pop_front();
      if (!cur.contains(u) && x2.contains(u)) {
        end = u;
        break;
      }
      if (cur.contains(u)) {
        outside.for_each([&](int x) {
          if (parent[x] == -2 && m1.independent(cur.without(u).with(x))) {
            parent[x] = u;
            queue.push_back(x);
          }
        });
      } else {
        cur.for_each([&](int y) {
          if (parent[y] == -2 && m2.independent(cur.without(y).with(u))) {
            parent[y] = u;
            queue.push_back(y);
          }
        });
      }
    }
    if (end < 0) {
      SubsetMask reach;
      for (int v = 0; v < n; ++v) {
        if (parent[v] != -2) reach = reach.with(v);
      }
      return {cur, reach};
    }
    for (int v = end; v >= 0; v = parent[v]) cur = cur ^ SubsetMask::singleton(v);
  }
}

template <class M1, class M2>
SubsetMask max_common_independent(const M1& m1, const M2& m2, int n) {
  return max_common_independent_with_cover(m1, m2, n).common;
}

inline SubsetMask max_common_independent(const Matroid& m1, const Matroid& m2) {
  if (m1.n() != m2.n()) throw DomainError("matroids on different ground sets");
  return max_common_independent(m1, m2, m1.n());
}

}  // namespace mtk
