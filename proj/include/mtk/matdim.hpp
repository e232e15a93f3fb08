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

#include <functional>
#include <vector>

#include "mtk/coloring.hpp"
#include "mtk/complex.hpp"
#include "mtk/matroid.hpp"

namespace mtk {

struct MatdimBound {
  int value = 0;
  std::vector<Matroid> witness;  // their intersection is C
};

// Edge chromatic number of min_nonfaces(C), with one generalized partition
// matroid per matching: each matching edge e is a part with cap |e| - 1, the
// other vertices are free singletons.
inline MatdimBound matdim_upper(const Complex& c) {
  Hypergraph h = min_nonfaces(c);
  const int n = c.n();
  MatdimBound out;
  if (h.num_edges() == 0) {
    out.value = 1;
    out.witness.push_back(Matroid::uniform(n, n));
    return out;
  }
  std::vector<SubsetMask> cover;
  out.value = chi(matching_complex(h), &cover);
  for (SubsetMask matching : cover) {
    std::vector<SubsetMask> parts;
    std::vector<int> caps;
    SubsetMask used;
    matching.for_each([&](int i) {
      SubsetMask e = h.edges()[i];
      parts.push_back(e);
      caps.push_back(e.size() - 1);
      used |= e;
    });
    (SubsetMask::full(n) - used).for_each([&](int v) {
      parts.push_back(SubsetMask::singleton(v));
      caps.push_back(1);
    });
    out.witness.push_back(Matroid::gen_partition(n, parts, caps));
  }
  return out;
}

namespace detail {

// Calls visit(bases) for every matroid on [0, n) of rank >= rank(C) whose
// bases cover every maximal face of C.
inline void for_each_matroid_containing(
    const Complex& c, const std::function<void(const std::vector<SubsetMask>&)>& visit) {
  const int n = c.n();
  for (int r = c.rank(); r <= n; ++r) {
    std::vector<SubsetMask> rsets;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      if (std::popcount(b) == r) rsets.push_back(SubsetMask(b));
    }
    const int m = static_cast<int>(rsets.size());
    if (m > 24) throw CapExceeded("matdim_exact: too many candidate bases");
    std::unordered_map<SubsetMask, int> index;
    for (int i = 0; i < m; ++i) index[rsets[i]] = i;
    std::vector<std::uint32_t> need;  // one mask of r-sets per maximal face
    for (SubsetMask f : c.maximal_faces()) {
      std::uint32_t mask = 0;
      for (int i = 0; i < m; ++i) {
        if (f.subset_of(rsets[i])) mask |= 1u << i;
      }
      need.push_back(mask);
    }
    // exchange partners: swap[i][x][y] = index of rsets[i] - x + y
    for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << m); ++fam) {
      const std::uint32_t f = static_cast<std::uint32_t>(fam);
      bool covers = true;
      for (std::uint32_t nm : need) {
        if (!(f & nm)) {
          covers = false;
          break;
        }
      }
      if (!covers) continue;
      bool ok = true;
      for (std::uint32_t a = f; a && ok; a &= a - 1) {
        SubsetMask b1 = rsets[std::countr_zero(a)];
        for (std::uint32_t b = f; b && ok; b &= b - 1) {
          SubsetMask b2 = rsets[std::countr_zero(b)];
          (b1 - b2).for_each([&](int x) {
            if (!ok) return;
            bool found = false;
            (b2 - b1).for_each([&](int y) {
              if (!found && ((f >> index[b1.without(x).with(y)]) & 1)) found = true;
            });
            if (!found) ok = false;
          });
        }
      }
      if (!ok) continue;
      std::vector<SubsetMask> bases;
      for (std::uint32_t a = f; a; a &= a - 1) bases.push_back(rsets[std::countr_zero(a)]);
      visit(bases);
    }
  }
}

}  // namespace detail

// Least k with C an intersection of k matroids (n <= 6).
inline int matdim_exact(const Complex& c) {
  check_cap(c.n(), 6, "matdim_exact");
  Hypergraph h = min_nonfaces(c);
  const auto& nf = h.edges();
  if (nf.empty()) return 1;
  std::vector<std::uint64_t> excl;
  detail::for_each_matroid_containing(c, [&](const std::vector<SubsetMask>& bases) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < nf.size(); ++i) {
      bool inside = false;
      for (SubsetMask b : bases) {
        if (nf[i].subset_of(b)) {
          inside = true;
          break;
        }
      }
      if (!inside) mask |= std::uint64_t{1} << i;
    }
    if (mask) excl.push_back(mask);
  });
  {
    std::vector<SubsetMask> tmp;
    for (auto e : excl) tmp.push_back(SubsetMask(e));
    tmp = maximal_members(tmp);
    excl.clear();
    for (auto t : tmp) excl.push_back(t.bits());
  }
  const std::uint64_t all = SubsetMask::full(static_cast<int>(nf.size())).bits();
  std::function<bool(std::uint64_t, int)> rec = [&](std::uint64_t left, int budget) {
    if (left == 0) return true;
    if (budget == 0) return false;
    int v = std::countr_zero(left);
    for (auto e : excl) {
      if (((e >> v) & 1) && rec(left & ~e, budget - 1)) return true;
    }
    return false;
  };
  for (int k = 1;; ++k) {
    if (rec(all, k)) return k;
  }
}

}  // namespace mtk
