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

// Brute-force reference implementations used by the unit tests. They follow
// the textbook definitions directly and share no code paths with the library
// beyond SubsetMask and Rational.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "mtk/mtk.hpp"

namespace oracle {

using mtk::Rational;
using mtk::RatVec;
using mtk::SubsetMask;

using Pred = std::function<bool(SubsetMask)>;

inline std::vector<SubsetMask> all_subsets(int n) {
  std::vector<SubsetMask> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.push_back(SubsetMask(b));
  return out;
}

// largest independent subset of s
inline int rank(const Pred& indep, SubsetMask s) {
  int best = 0;
  mtk::for_each_subset(s, [&](SubsetMask t) {
    if (t.size() > best && indep(t)) best = t.size();
  });
  return best;
}

// an edge set is a forest iff repeatedly stripping leaf edges empties it
inline bool is_forest(const std::vector<std::pair<int, int>>& edges, SubsetMask s) {
  std::vector<std::pair<int, int>> es;
  s.for_each([&](int i) { es.push_back(edges[i]); });
  bool changed = true;
  while (changed && !es.empty()) {
    changed = false;
    std::map<int, int> deg;
    for (auto [a, b] : es) {
      if (a == b) return false;
      ++deg[a];
      ++deg[b];
    }
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (deg[es[i].first] == 1 || deg[es[i].second] == 1) {
        es.erase(es.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return es.empty();
}

// all faces of the complex generated by gens
inline std::set<SubsetMask> faces(const std::vector<SubsetMask>& gens) {
  std::set<SubsetMask> out;
  for (SubsetMask g : gens) mtk::for_each_subset(g, [&](SubsetMask f) { out.insert(f); });
  return out;
}

// least number of faces covering [0, n)
inline int chi(const mtk::Complex& c) {
  const int n = c.n();
  std::vector<SubsetMask> fs;
  for (SubsetMask f : faces(c.maximal_faces())) fs.push_back(f);
  for (int k = 0;; ++k) {
    std::function<bool(int, int, SubsetMask)> rec = [&](int start, int left, SubsetMask cov) {
      if (cov == SubsetMask::full(n)) return true;
      if (left == 0) return false;
      for (std::size_t i = start; i < fs.size(); ++i) {
        if (rec(static_cast<int>(i), left - 1, cov | fs[i])) return true;
      }
      return false;
    };
    if (rec(0, k, SubsetMask())) return k;
  }
}

// reduced Euler characteristic: -1 + sum over non-empty faces of (-1)^dim
inline long reduced_euler(const mtk::Complex& c) {
  long chi = 0;
  for (SubsetMask f : faces(c.maximal_faces())) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

// minimal |F| over edge sets whose union dominates every vertex
inline long gamma_e_graph(const mtk::Hypergraph& g) {
  const int m = g.num_edges();
  long best = -1;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
    SubsetMask u;
    SubsetMask(b).for_each([&](int i) { u |= g.edges()[i]; });
    bool dom = true;
    for (int v = 0; v < g.n() && dom; ++v) {
      bool ok = false;
      for (SubsetMask e : g.edges()) {
        if (e.contains(v) && (e - SubsetMask::singleton(v)).subset_of(u)) ok = true;
      }
      dom = ok;
    }
    if (dom && (best < 0 || std::popcount(b) < best)) best = std::popcount(b);
  }
  return best;
}

// minimal |union K| - |K| over every ordered frugal dominating sequence
inline long gamma_e_hyper(const mtk::Hypergraph& h) {
  const int m = h.num_edges();
  long best = -1;
  std::vector<int> seq;
  std::vector<bool> used(m, false);
  std::function<void(SubsetMask)> rec = [&](SubsetMask u) {
    bool dom = true;
    for (int v = 0; v < h.n() && dom; ++v) {
      if (u.contains(v)) continue;
      bool ok = false;
      for (SubsetMask e : h.edges()) {
        if ((e - u) == SubsetMask::singleton(v)) ok = true;
      }
      dom = ok;
    }
    if (dom) {
      long val = u.size() - static_cast<long>(seq.size());
      if (best < 0 || val < best) best = val;
    }
    for (int i = 0; i < m; ++i) {
      if (used[i] || (h.edges()[i] - u).size() < 2) continue;
      used[i] = true;
      seq.push_back(i);
      rec(u | h.edges()[i]);
      seq.pop_back();
      used[i] = false;
    }
  };
  rec(SubsetMask());
  return best;
}

// Solves a square system over the rationals; empty when singular.
inline std::optional<RatVec> solve_square(std::vector<RatVec> a, RatVec b) {
  const int n = static_cast<int>(a.size());
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r) {
      if (sgn(a[r][c]) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (int j = 0; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Vertices of {x >= 0 : x[S] <= rank(S)} by trying every n-subset of the
// constraints as the tight set.
inline std::vector<RatVec> rank_polytope_vertices(int n, const std::function<int(SubsetMask)>& rk) {
  std::vector<std::pair<RatVec, Rational>> cons;  // a.x <= b
  for (int v = 0; v < n; ++v) {
    RatVec a(n, Rational(0));
    a[v] = -1;
    cons.push_back({a, Rational(0)});
  }
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) {
    cons.push_back({mtk::indicator(n, SubsetMask(b)), Rational(rk(SubsetMask(b)))});
  }
  std::set<RatVec> out;
  const int m = static_cast<int>(cons.size());
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == n) {
      std::vector<RatVec> a;
      RatVec b;
      for (int i : pick) {
        a.push_back(cons[i].first);
        b.push_back(cons[i].second);
      }
      auto x = solve_square(a, b);
      if (!x) return;
      for (const auto& [row, rhs] : cons) {
        if (mtk::dot(row, *x) > rhs) return;
      }
      out.insert(*x);
      return;
    }
    for (int i = start; i < m; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return {out.begin(), out.end()};
}

// f^M(v) straight from the definition, including the value 0
inline Rational f_span_at(const mtk::Matroid& m, const RatVec& f, int v) {
  Rational best = 0;
  for (const auto& a : f) {
    SubsetMask t;
    for (int u = 0; u < m.n(); ++u) {
      if (f[u] >= a) t = t.with(u);
    }
    if (m.rank(t.with(v)) == m.rank(t) && a > best) best = a;
  }
  return best;
}

// Is there a proper list coloring of c from the given lists? Plain search over
// all choices.
inline bool list_colorable(const mtk::Complex& c, const mtk::ListAssignment& lists) {
  const int n = c.n();
  std::vector<int> col(n);
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) {
      std::map<int, SubsetMask> cls;
      for (int u = 0; u < n; ++u) cls[col[u]] = cls[col[u]].with(u);
      for (const auto& [k, s] : cls) {
        if (!c.contains(s)) return false;
      }
      return true;
    }
    for (int x : lists[v]) {
      col[v] = x;
      if (rec(v + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

// p-choosable: every assignment of p-subsets of an n*p color pool works;
// up to renaming colors that is every assignment
inline bool choosable(const mtk::Complex& c, int p) {
  const int n = c.n();
  const int pool = std::max(n * p, 1);
  std::vector<std::vector<int>> options;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << pool); ++b) {
    if (std::popcount(b) == p) options.push_back(SubsetMask(b).elements());
  }
  mtk::ListAssignment lists(n);
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) return list_colorable(c, lists);
    for (const auto& o : options) {
      lists[v] = o;
      if (!rec(v + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

}  // namespace oracle
