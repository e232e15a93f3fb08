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
#include <map>
#include <unordered_set>
#include <vector>

#include "mtk/complex.hpp"
#include "mtk/core.hpp"
#include "mtk/intersection.hpp"
#include "mtk/lp.hpp"
#include "mtk/matroid.hpp"

namespace mtk {

using ListAssignment = std::vector<std::vector<int>>;

// vertex -> color
struct Coloring {
  std::vector<int> color;

  std::map<int, SubsetMask> classes() const {
    std::map<int, SubsetMask> out;
    for (std::size_t v = 0; v < color.size(); ++v) {
      out[color[v]] = out[color[v]].with(static_cast<int>(v));
    }
    return out;
  }
};

inline bool respects(const Complex& c, const Coloring& col) {
  for (const auto& [k, s] : col.classes()) {
    if (!c.contains(s)) return false;
  }
  return true;
}

namespace detail {

inline void require_colorable(const Complex& c) {
  if (c.vertices() != SubsetMask::full(c.n())) {
    throw Uncolorable("some vertex lies in no face");
  }
}

}  // namespace detail

// Minimum number of faces covering the ground set; the cover is written to
// `cover` when given.
inline int chi(const Complex& c, std::vector<SubsetMask>* cover = nullptr) {
  check_cap(c.n(), kSubsetCap, "chi");
  detail::require_colorable(c);
  const SubsetMask all = SubsetMask::full(c.n());
  if (all.empty()) {
    if (cover) cover->clear();
    return 0;
  }
  const auto& faces = c.maximal_faces();
  std::unordered_set<std::uint64_t> failed;  // (uncovered, budget) pairs
  std::vector<SubsetMask> chosen;
  std::function<bool(SubsetMask, int)> rec = [&](SubsetMask left, int budget) {
    if (left.empty()) return true;
    if (budget == 0) return false;
    int best = 0;
    for (SubsetMask f : faces) best = std::max(best, (f & left).size());
    if (static_cast<long>(best) * budget < left.size()) return false;
    std::uint64_t key = left.bits() * 64 + static_cast<std::uint64_t>(budget);
    if (failed.count(key)) return false;
    int v = left.lowest();
    // faces through v, skipping ones whose trace is dominated by another
    std::vector<SubsetMask> traces;
    for (SubsetMask f : faces) {
      if (f.contains(v)) traces.push_back(f & left);
    }
    traces = maximal_members(traces);
    for (SubsetMask t : traces) {
      chosen.push_back(t);
      if (rec(left - t, budget - 1)) return true;
      chosen.pop_back();
    }
    failed.insert(key);
    return false;
  };
  for (int k = 1;; ++k) {
    chosen.clear();
    if (rec(all, k)) {
      if (cover) *cover = chosen;
      return k;
    }
  }
}

// ceil(max |S| / rank(S)).
inline int chi_matroid(const Matroid& m) {
  check_cap(m.n(), kSubsetCap, "chi_matroid");
  if (!loops(m).empty()) throw Uncolorable("matroid has a loop");
  Rational best = 0;
  const std::uint64_t total = std::uint64_t{1} << m.n();
  for (std::uint64_t b = 1; b < total; ++b) {
    SubsetMask s(b);
    Rational q(s.size(), m.rank(s));
    if (q > best) best = q;
  }
  return static_cast<int>(ceil_rational(best).get_num().get_si());
}

struct FractionalColoring {
  Rational value;
  std::vector<std::pair<SubsetMask, Rational>> weights;
};

// min sum f(F) over maximal faces with sum_{F containing v} f(F) >= h(v).
inline FractionalColoring chi_star(const Complex& c, const RatVec& h) {
  check_cap(c.n(), kSubsetCap, "chi_star");
  if (static_cast<int>(h.size()) != c.n()) throw DomainError("chi_star: bad h length");
  const SubsetMask verts = c.vertices();
  for (int v = 0; v < c.n(); ++v) {
    if (sgn(h[v]) < 0) throw DomainError("chi_star: negative weight");
    if (sgn(h[v]) > 0 && !verts.contains(v)) {
      throw Infeasible("chi_star: positive weight on a vertex in no face");
    }
  }
  const auto& faces = c.maximal_faces();
  LPProblem p;
  p.sense = Sense::kMinimize;
  p.objective.assign(faces.size(), Rational(1));
  for (int v = 0; v < c.n(); ++v) {
    if (sgn(h[v]) == 0) continue;
    RatVec row(faces.size(), Rational(0));
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if (faces[j].contains(v)) row[j] = 1;
    }
    p.add_row(std::move(row), Rel::kGe, h[v]);
  }
  LPResult r = solve(p);
  if (r.status != LPStatus::kOptimal) throw Infeasible("chi_star: LP not optimal");
  FractionalColoring out;
  out.value = r.optimum;
  for (std::size_t j = 0; j < faces.size(); ++j) {
    if (sgn(r.primal[j]) != 0) out.weights.push_back({faces[j], r.primal[j]});
  }
  return out;
}

// Color-sum matroid on pairs: K is independent iff, for each color c, the
// vertices paired with c in K are independent in M.
class ColorSumMatroid {
 public:
  ColorSumMatroid(const Matroid& m, std::vector<std::pair<int, int>> pairs,
                  int num_colors)
      : m_(m), pairs_(std::move(pairs)), num_colors_(num_colors) {}

  int rank(SubsetMask k) const {
    std::vector<SubsetMask> by_color(num_colors_);
    k.for_each([&](int e) {
      by_color[pairs_[e].second] = by_color[pairs_[e].second].with(pairs_[e].first);
    });
    int r = 0;
    for (SubsetMask s : by_color) r += m_.rank(s);
    return r;
  }
  bool independent(SubsetMask k) const {
    std::vector<SubsetMask> by_color(num_colors_);
    k.for_each([&](int e) {
      by_color[pairs_[e].second] = by_color[pairs_[e].second].with(pairs_[e].first);
    });
    for (SubsetMask s : by_color) {
      if (!m_.independent(s)) return false;
    }
    return true;
  }

 private:
  const Matroid& m_;
  std::vector<std::pair<int, int>> pairs_;
  int num_colors_;
};

struct ListColoringResult {
  bool success = false;
  Coloring coloring;
  // On failure: T with |T| + sum_c rank_M(F_c \ T) < |V|.
  SubsetMask witness;
  long witness_value = 0;
};

// |T| + sum_c rank_M(F_c \ T), with F_c the vertices whose list has c.
inline long list_hall_value(const Matroid& m, const ListAssignment& lists,
                            SubsetMask t) {
  std::map<int, SubsetMask> fc;
  for (std::size_t v = 0; v < lists.size(); ++v) {
    for (int c : lists[v]) fc[c] = fc[c].with(static_cast<int>(v));
  }
  long total = t.size();
  for (const auto& [c, f] : fc) total += m.rank(f - t);
  return total;
}

// An M-respecting coloring from the lists via two-matroid intersection, or a
// set T violating the Hall-type inequality.
inline ListColoringResult matroid_list_color(const Matroid& m,
                                             const ListAssignment& lists) {
  const int n = m.n();
  if (static_cast<int>(lists.size()) != n) throw DomainError("lists: wrong length");
  std::vector<int> colors;
  for (const auto& l : lists) colors.insert(colors.end(), l.begin(), l.end());
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  std::vector<std::pair<int, int>> pairs;
  std::vector<SubsetMask> stars(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> l = lists[v];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    for (int c : l) {
      int idx = static_cast<int>(std::lower_bound(colors.begin(), colors.end(), c) -
                                 colors.begin());
      stars[v] = stars[v].with(static_cast<int>(pairs.size()));
      pairs.push_back({v, idx});
    }
  }
  const int np = static_cast<int>(pairs.size());
  check_cap(np, kMaxGround, "matroid_list_color pairs");
  std::vector<SubsetMask> parts;
  for (SubsetMask s : stars) {
    if (!s.empty()) parts.push_back(s);
  }
  Matroid p = Matroid::partition(np, parts);
  ColorSumMatroid q(m, pairs, static_cast<int>(colors.size()));
  auto res = max_common_independent_with_cover(p, q, np);
  ListColoringResult out;
  if (res.common.size() == n) {
    out.success = true;
    out.coloring.color.assign(n, -1);
    res.common.for_each([&](int e) {
      out.coloring.color[pairs[e].first] = colors[pairs[e].second];
    });
    return out;
  }
  SubsetMask x = SubsetMask::full(np) - res.reachable;
  SubsetMask t;
  for (int v = 0; v < n; ++v) {
    if (stars[v].intersects(x)) t = t.with(v);
  }
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int v : t.elements()) {
      if (list_hall_value(m, lists, t.without(v)) < n) {
        t = t.without(v);
        shrunk = true;
      }
    }
  }
  out.witness = t;
  out.witness_value = list_hall_value(m, lists, t);
  return out;
}

namespace detail {

// DFS for b-subsets of the lists whose color classes are faces.
inline bool list_colorable(const std::vector<char>& table, int n,
                           const std::vector<std::vector<int>>& lists, int b,
                           int num_colors) {
  std::vector<std::uint64_t> cls(num_colors, 0);
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) return true;
    const auto& l = lists[v];
    std::vector<int> ok;
    for (int c : l) {
      if (table[cls[c] | (std::uint64_t{1} << v)]) ok.push_back(c);
    }
    if (static_cast<int>(ok.size()) < b) return false;
    // choose b of ok
    std::vector<int> pick;
    std::function<bool(std::size_t)> choose = [&](std::size_t from) {
      if (static_cast<int>(pick.size()) == b) {
        for (int c : pick) cls[c] |= std::uint64_t{1} << v;
        bool good = rec(v + 1);
        for (int c : pick) cls[c] &= ~(std::uint64_t{1} << v);
        return good;
      }
      for (std::size_t i = from; i < ok.size(); ++i) {
        if (ok.size() - i < b - pick.size()) break;
        pick.push_back(ok[i]);
        if (choose(i + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    return choose(0);
  };
  return rec(0);
}

// Enumerates list systems with every list of size a, up to renaming colors.
// visit returns false to stop. When private_free is set only systems where
// every color appears in at least two lists are produced.
inline bool for_each_list_system(
    int n, int a, bool private_free,
    const std::function<bool(const std::vector<std::vector<int>>&, int)>& visit) {
  // groups: colors sharing the same set of earlier vertices
  struct Group {
    SubsetMask pattern;
    std::vector<int> colors;
  };
  std::vector<std::vector<int>> lists(n);
  std::function<bool(int, const std::vector<Group>&, int)> rec =
      [&](int v, const std::vector<Group>& groups, int next_color) {
        if (v == n) {
          if (private_free) {
            for (const auto& g : groups) {
              if (g.pattern.size() < 2) return true;
            }
          }
          return visit(lists, next_color);
        }
        if (private_free) {
          int singles = 0;
          for (const auto& g : groups) {
            if (g.pattern.size() == 1) singles += static_cast<int>(g.colors.size());
          }
          if (singles > a * (n - v)) return true;
        }
        std::vector<int> take(groups.size(), 0);
        std::function<bool(std::size_t, int)> pick = [&](std::size_t gi, int used) {
          if (gi == groups.size()) {
            int fresh = a - used;
            if (private_free && v == n - 1 && fresh > 0) return true;
            std::vector<Group> next;
            std::vector<int> list;
            for (std::size_t i = 0; i < groups.size(); ++i) {
              const auto& g = groups[i];
              std::vector<int> in(g.colors.begin(), g.colors.begin() + take[i]);
              std::vector<int> out(g.colors.begin() + take[i], g.colors.end());
              list.insert(list.end(), in.begin(), in.end());
              if (!in.empty()) next.push_back({g.pattern.with(v), in});
              if (!out.empty()) next.push_back({g.pattern, out});
            }
            std::vector<int> fresh_colors;
            for (int i = 0; i < fresh; ++i) fresh_colors.push_back(next_color + i);
            list.insert(list.end(), fresh_colors.begin(), fresh_colors.end());
            if (fresh > 0) next.push_back({SubsetMask::singleton(v), fresh_colors});
            lists[v] = list;
            return rec(v + 1, next, next_color + fresh);
          }
          int cap = std::min<int>(static_cast<int>(groups[gi].colors.size()), a - used);
          for (int t = 0; t <= cap; ++t) {
            take[gi] = t;
            if (!pick(gi + 1, used + t)) return false;
          }
          return true;
        };
        return pick(0, 0);
      };
  return rec(0, {}, 0);
}

// Peels off a vertex lying in fewer than p minimal nonfaces of what is left.
// A minimal nonface N blocks at most one color at v (the one holding N - v),
// so colouring in reverse peeling order never gets stuck.
inline bool greedy_choosable(const Complex& c, int p) {
  Hypergraph nf = min_nonfaces(c);
  SubsetMask left = SubsetMask::full(c.n());
  while (!left.empty()) {
    int found = -1;
    left.for_each([&](int v) {
      if (found >= 0) return;
      int deg = 0;
      for (SubsetMask e : nf.edges()) deg += e.contains(v) && e.subset_of(left);
      if (deg < p) found = v;
    });
    if (found < 0) return false;
    left = left.without(found);
  }
  return true;
}

}  // namespace detail

// Every p-list assignment admits a C-respecting list coloring. Uses the
// reduction to private-color-free assignments on induced subcomplexes: a bad
// assignment restricts, by deleting vertices owning a private color, to a bad
// private-free assignment on some C[W].
inline bool chi_list(const Complex& c, int p) {
  check_cap(c.n(), 8, "chi_list");
  // lists of size >= n always have distinct representatives
  if (p >= c.n() && p > 0) {
    detail::require_colorable(c);
    return true;
  }
  if (p > 5) throw CapExceeded("chi_list: p beyond cap 5");
  detail::require_colorable(c);
  if (p <= 0) return c.n() == 0;
  const std::uint64_t total = std::uint64_t{1} << c.n();
  for (std::uint64_t w = 1; w < total; ++w) {
    // |W| <= p: the lists have a system of distinct representatives
    if (std::popcount(w) <= p) continue;
    auto sub = c.induced_relabeled(SubsetMask(w));
    const Complex& cw = sub.value;
    if (detail::greedy_choosable(cw, p)) continue;
    auto table = cw.face_table();
    bool good = detail::for_each_list_system(
        cw.n(), p, true, [&](const std::vector<std::vector<int>>& lists, int nc) {
          return detail::list_colorable(table, cw.n(), lists, 1, nc);
        });
    if (!good) return false;
  }
  return true;
}

inline int chi_list_number(const Complex& c) {
  int p = chi(c);
  while (!chi_list(c, p)) ++p;
  return p;
}

enum class ABMode { kColorable, kChoosable };

// (a,b)-colorable: b-subsets of {0..a-1} per vertex with face color classes.
// (a,b)-choosable: the same from every system of a-lists.
inline bool ab_check(const Complex& c, int a, int b, ABMode mode) {
  check_cap(c.n(), 6, "ab_check");
  if (a > 6 || b > 3) throw CapExceeded("ab_check: a <= 6, b <= 3");
  if (b <= 0) return true;
  if (c.vertices() != SubsetMask::full(c.n())) return c.n() == 0;
  auto table = c.face_table();
  if (mode == ABMode::kColorable) {
    std::vector<std::vector<int>> lists(c.n());
    for (auto& l : lists) {
      for (int i = 0; i < a; ++i) l.push_back(i);
    }
    return detail::list_colorable(table, c.n(), lists, b, a);
  }
  return detail::for_each_list_system(
      c.n(), a, false, [&](const std::vector<std::vector<int>>& lists, int nc) {
        return detail::list_colorable(table, c.n(), lists, b, nc);
      });
}

}  // namespace mtk
