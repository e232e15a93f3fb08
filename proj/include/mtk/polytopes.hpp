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
#include <numeric>
#include <unordered_map>
#include <vector>

#include "mtk/coloring.hpp"
#include "mtk/complex.hpp"
#include "mtk/core.hpp"
#include "mtk/hypergraph.hpp"
#include "mtk/lp.hpp"
#include "mtk/matroid.hpp"

namespace mtk {

// P(C), Q(C) or R(L).
struct PolytopeRef {
  enum class Kind { kP, kQ, kR };
  Kind kind = Kind::kP;
  Complex complex;
  MatroidSystem system;

  static PolytopeRef P(Complex c) { return {Kind::kP, std::move(c), {}}; }
  static PolytopeRef Q(Complex c) { return {Kind::kQ, std::move(c), {}}; }
  static PolytopeRef R(MatroidSystem l) { return {Kind::kR, Complex(), std::move(l)}; }

  int n() const { return kind == Kind::kR ? system.n() : complex.n(); }
};

namespace detail {

inline void check_nonneg(const RatVec& x, int n, const char* what) {
  if (static_cast<int>(x.size()) != n) {
    throw DomainError(std::string(what) + ": vector has wrong length");
  }
  for (const auto& v : x) {
    if (sgn(v) < 0) throw DomainError(std::string(what) + ": negative coordinate");
  }
}

// max over S of h[S]/rank(S); infinite when some S has rank 0 and h[S] > 0.
template <class RankFn>
ExtRational rank_gauge(int n, const RatVec& h, RankFn rank) {
  check_cap(n, kSubsetCap, "gauge");
  ExtRational best = ExtRational::of(0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t b = 1; b < total; ++b) {
    SubsetMask s(b);
    best = max(best, divide(sum_over(h, s), ExtEta::of(rank(s))));
    if (best.infinite) break;
  }
  return best;
}

}  // namespace detail

inline bool member(const PolytopeRef& z, const RatVec& x) {
  const int n = z.n();
  detail::check_nonneg(x, n, "member");
  switch (z.kind) {
    case PolytopeRef::Kind::kP: {
      const auto& faces = z.complex.maximal_faces();
      LPProblem p;
      p.sense = Sense::kMinimize;
      p.objective.assign(faces.size(), Rational(0));
      p.add_row(RatVec(faces.size(), Rational(1)), Rel::kLe, 1);
      for (int v = 0; v < n; ++v) {
        if (sgn(x[v]) == 0) continue;
        RatVec row(faces.size(), Rational(0));
        for (std::size_t j = 0; j < faces.size(); ++j) {
          if (faces[j].contains(v)) row[j] = 1;
        }
        p.add_row(std::move(row), Rel::kGe, x[v]);
      }
      return solve(p).status == LPStatus::kOptimal;
    }
    case PolytopeRef::Kind::kQ: {
      check_cap(n, kSubsetCap, "member");
      const std::uint64_t total = std::uint64_t{1} << n;
      for (std::uint64_t b = 1; b < total; ++b) {
        SubsetMask s(b);
        if (sum_over(x, s) > z.complex.rank(s)) return false;
      }
      return true;
    }
    case PolytopeRef::Kind::kR: {
      check_cap(n, kSubsetCap, "member");
      const std::uint64_t total = std::uint64_t{1} << n;
      for (const auto& m : z.system.matroids) {
        for (std::uint64_t b = 1; b < total; ++b) {
          SubsetMask s(b);
          if (sum_over(x, s) > m.rank(s)) return false;
        }
      }
      return true;
    }
  }
  return false;
}

// P(C) gauge through the covering dual: max h.y with y[F] <= 1 on maximal F.
inline ExtRational psi_p_dual(const Complex& c, const RatVec& h) {
  const auto& faces = c.maximal_faces();
  LPProblem p;
  p.sense = Sense::kMaximize;
  p.objective = h;
  for (SubsetMask f : faces) {
    p.add_row(indicator(c.n(), f), Rel::kLe, 1);
  }
  LPResult r = solve(p);
  if (r.status == LPStatus::kUnbounded) return ExtRational::inf();
  return ExtRational::of(r.optimum);
}

// min t with h/t in Z; 0 for h = 0.
inline ExtRational psi(const PolytopeRef& z, const RatVec& h) {
  const int n = z.n();
  detail::check_nonneg(h, n, "psi");
  bool zero = std::all_of(h.begin(), h.end(), [](const Rational& v) { return sgn(v) == 0; });
  if (zero) return ExtRational::of(0);
  switch (z.kind) {
    case PolytopeRef::Kind::kP:
      return psi_p_dual(z.complex, h);
    case PolytopeRef::Kind::kQ:
      return detail::rank_gauge(n, h, [&](SubsetMask s) { return z.complex.rank(s); });
    case PolytopeRef::Kind::kR: {
      ExtRational best = ExtRational::of(0);
      for (const auto& m : z.system.matroids) {
        best = max(best, detail::rank_gauge(n, h, [&](SubsetMask s) { return m.rank(s); }));
      }
      return best;
    }
  }
  return ExtRational::of(0);
}

namespace detail {

// Constraint x[support] <= rhs.
struct Halfspace {
  SubsetMask support;
  int rhs;
};

inline int rank_of_rows(std::vector<std::vector<long long>> rows, int d) {
  int rank = 0;
  for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] == 0) continue;
      long long a = rows[rank][col], b = rows[i][col];
      long long g = 0;
      for (int j = 0; j < d; ++j) {
        rows[i][j] = rows[i][j] * a - rows[rank][j] * b;
        g = std::gcd(g, rows[i][j] < 0 ? -rows[i][j] : rows[i][j]);
      }
      if (g > 1) {
        for (int j = 0; j < d; ++j) rows[i][j] /= g;
      }
    }
    ++rank;
  }
  return rank;
}

// Double description from the unit box: vertices of
// {0 <= x <= 1, x[S] <= r for each halfspace}. Inputs must contain the origin
// in their interior relative to the box (r >= 1).
inline std::vector<RatVec> box_double_description(int d,
                                                  const std::vector<Halfspace>& hs) {
  check_cap(d, 12, "vertex enumeration");
  // constraint rows: 0..d-1 are -x_v <= 0, d..2d-1 are x_v <= 1, then hs
  const int total = 2 * d + static_cast<int>(hs.size());
  const int words = (total + 63) / 64;
  auto row_support = [&](int c) -> SubsetMask {
    if (c < d) return SubsetMask::singleton(c);
    if (c < 2 * d) return SubsetMask::singleton(c - d);
    return hs[c - 2 * d].support;
  };
  struct Vertex {
    RatVec x;
    std::vector<std::uint64_t> tight;
  };
  auto set_bit = [](std::vector<std::uint64_t>& t, int c) { t[c / 64] |= std::uint64_t{1} << (c % 64); };
  std::vector<Vertex> verts;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << d); ++b) {
    Vertex v{RatVec(d, Rational(0)), std::vector<std::uint64_t>(words, 0)};
    for (int i = 0; i < d; ++i) {
      if ((b >> i) & 1) {
        v.x[i] = 1;
        set_bit(v.tight, d + i);
      } else {
        set_bit(v.tight, i);
      }
    }
    verts.push_back(std::move(v));
  }
  for (std::size_t h = 0; h < hs.size(); ++h) {
    const int cidx = 2 * d + static_cast<int>(h);
    std::vector<Rational> slack(verts.size());
    std::vector<std::size_t> plus, minus;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      slack[i] = Rational(hs[h].rhs) - sum_over(verts[i].x, hs[h].support);
      int s = sgn(slack[i]);
      if (s > 0) plus.push_back(i);
      if (s < 0) minus.push_back(i);
      if (s == 0) set_bit(verts[i].tight, cidx);
    }
    if (minus.empty()) continue;
    std::vector<Vertex> next;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (sgn(slack[i]) >= 0) next.push_back(verts[i]);
    }
    for (std::size_t pi : plus) {
      for (std::size_t qi : minus) {
        std::vector<std::uint64_t> common(words);
        int cnt = 0;
        for (int w = 0; w < words; ++w) {
          common[w] = verts[pi].tight[w] & verts[qi].tight[w];
          cnt += std::popcount(common[w]);
        }
        if (cnt < d - 1) continue;
        std::vector<std::vector<long long>> rows;
        for (int c = 0; c < total; ++c) {
          if (!((common[c / 64] >> (c % 64)) & 1)) continue;
          std::vector<long long> row(d, 0);
          row_support(c).for_each([&](int v) { row[v] = 1; });
          rows.push_back(std::move(row));
        }
        if (rank_of_rows(rows, d) != d - 1) continue;
        Rational t = slack[pi] / (slack[pi] - slack[qi]);
        Vertex nv{RatVec(d), common};
        for (int i = 0; i < d; ++i) {
          nv.x[i] = verts[pi].x[i] + t * (verts[qi].x[i] - verts[pi].x[i]);
        }
        set_bit(nv.tight, cidx);
        next.push_back(std::move(nv));
      }
    }
    verts = std::move(next);
  }
  std::vector<RatVec> out;
  for (auto& v : verts) out.push_back(std::move(v.x));
  return out;
}

// Vertices of {x >= 0 : x[S] <= r(S)} given the constraints; coordinates with
// r({v}) = 0 are fixed at 0.
inline std::vector<RatVec> rank_polytope_vertices(int n, SubsetMask zero,
                                                  const std::vector<Halfspace>& cons) {
  SubsetMask live = SubsetMask::full(n) - zero;
  auto map = dense_map(live);
  const int d = static_cast<int>(map.size());
  std::vector<Halfspace> hs;
  for (const auto& c : cons) {
    SubsetMask s = compress(c.support & live, map);
    if (s.size() <= c.rhs) continue;  // implied by the box
    hs.push_back({s, c.rhs});
  }
  std::sort(hs.begin(), hs.end(), [](const Halfspace& a, const Halfspace& b) {
    if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
    return a.support < b.support;
  });
  hs.erase(std::unique(hs.begin(), hs.end(),
                       [](const Halfspace& a, const Halfspace& b) {
                         return a.support == b.support && a.rhs == b.rhs;
                       }),
           hs.end());
  auto reduced = box_double_description(d, hs);
  std::vector<RatVec> out;
  for (const auto& r : reduced) {
    RatVec x(n, Rational(0));
    for (int i = 0; i < d; ++i) x[map[i]] = r[i];
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

// Vertices. For P(C) these are the indicators of all faces.
inline std::vector<RatVec> vertices(const PolytopeRef& z) {
  const int n = z.n();
  switch (z.kind) {
    case PolytopeRef::Kind::kP: {
      std::vector<RatVec> out;
      for (SubsetMask f : z.complex.faces()) out.push_back(indicator(n, f));
      std::sort(out.begin(), out.end());
      return out;
    }
    case PolytopeRef::Kind::kQ: {
      check_cap(n, 10, "vertices(Q)");
      std::vector<detail::Halfspace> cons;
      const std::uint64_t total = std::uint64_t{1} << n;
      for (std::uint64_t b = 1; b < total; ++b) {
        SubsetMask s(b);
        cons.push_back({s, z.complex.rank(s)});
      }
      return detail::rank_polytope_vertices(n, SubsetMask::full(n) - z.complex.vertices(),
                                            cons);
    }
    case PolytopeRef::Kind::kR: {
      check_cap(n, 10, "vertices(R)");
      std::vector<detail::Halfspace> cons;
      SubsetMask zero;
      for (const auto& m : z.system.matroids) {
        zero |= loops(m);
        for (SubsetMask f : flats(m)) {
          if (!f.empty()) cons.push_back({f, m.rank(f)});
        }
      }
      return detail::rank_polytope_vertices(n, zero, cons);
    }
  }
  return {};
}

// B:A, the least t with tA containing B.
inline ExtRational ratio(const PolytopeRef& b, const PolytopeRef& a) {
  if (a.n() != b.n()) throw DomainError("ratio: ground sets differ");
  ExtRational best = ExtRational::of(0);
  std::vector<RatVec> pts;
  if (b.kind == PolytopeRef::Kind::kP) {
    // the gauge is monotone on the orthant, so maximal faces suffice
    for (SubsetMask f : b.complex.maximal_faces()) pts.push_back(indicator(b.n(), f));
  } else {
    pts = vertices(b);
  }
  for (const auto& v : pts) best = max(best, psi(a, v));
  return best;
}

// f^M(v) = max{a in values(f) : v in span({u : f(u) >= a})}.
inline RatVec f_span(const Matroid& m, const RatVec& f) {
  const int n = m.n();
  detail::check_nonneg(f, n, "f_span");
  std::vector<Rational> values(f.begin(), f.end());
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  RatVec out(n, Rational(0));
  SubsetMask assigned;
  for (const auto& a : values) {
    SubsetMask t;
    for (int u = 0; u < n; ++u) {
      if (f[u] >= a) t = t.with(u);
    }
    SubsetMask s = span(m, t) - assigned;
    s.for_each([&](int v) { out[v] = a; });
    assigned |= s;
  }
  return out;
}

struct MatroidalNumbers {
  Rational nu;
  Rational nu_star;
  Rational tau_star;
  Rational tau;
  SubsetMask nu_witness;
  // An explicit optimal fractional cover (f_1, ..., f_k) built from the dual
  // LP solution.
  std::vector<RatVec> cover;
};

namespace detail {

struct FlatVar {
  int matroid;
  SubsetMask flat;
  int rank;
};

inline std::vector<FlatVar> flat_vars(const MatroidSystem& l) {
  std::vector<FlatVar> out;
  for (int i = 0; i < l.k(); ++i) {
    const auto& m = l.matroids[i];
    for (SubsetMask f : flats(m)) {
      if (!f.empty()) out.push_back({i, f, m.rank(f)});
    }
  }
  return out;
}

// Uncrosses weights on flats of one matroid into a chain.
inline std::vector<std::pair<SubsetMask, Rational>> uncross(
    const Matroid& m, std::map<SubsetMask, Rational> y) {
  for (int guard = 0; guard < 100000; ++guard) {
    bool changed = false;
    for (auto it = y.begin(); it != y.end() && !changed; ++it) {
      if (sgn(it->second) == 0) continue;
      for (auto jt = std::next(it); jt != y.end(); ++jt) {
        if (sgn(jt->second) == 0) continue;
        SubsetMask a = it->first, b = jt->first;
        if (a.subset_of(b) || b.subset_of(a)) continue;
        Rational e = std::min(it->second, jt->second);
        it->second -= e;
        jt->second -= e;
        y[span(m, a | b)] += e;
        y[a & b] += e;
        changed = true;
        break;
      }
    }
    if (!changed) break;
    std::erase_if(y, [](const auto& kv) { return sgn(kv.second) == 0; });
  }
  std::vector<std::pair<SubsetMask, Rational>> chain;
  for (const auto& [f, w] : y) {
    if (sgn(w) != 0) chain.push_back({f, w});
  }
  std::sort(chain.begin(), chain.end(),
            [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  return chain;
}

// f = sum of weight * 1_B over nested bases B of the chain's flats.
inline RatVec chain_function(const Matroid& m,
                             const std::vector<std::pair<SubsetMask, Rational>>& chain) {
  RatVec f(m.n(), Rational(0));
  SubsetMask basis;
  for (const auto& [flat, w] : chain) {
    for (int v = 0; v < m.n(); ++v) {
      if (flat.contains(v) && !basis.contains(v) && m.independent(basis.with(v))) {
        basis = basis.with(v);
      }
    }
    basis.for_each([&](int v) { f[v] += w; });
  }
  return f;
}

// Least total rank of a multiset of (matroid, flat) pairs covering each v at
// least demand(v) times.
inline long integral_flat_cover(const MatroidSystem& l, std::vector<int> demand) {
  auto vars = flat_vars(l);
  const int n = l.n();
  int maxd = 0;
  for (int d : demand) maxd = std::max(maxd, d);
  const std::uint64_t base = static_cast<std::uint64_t>(maxd) + 1;
  std::unordered_map<std::uint64_t, long> memo;
  std::function<long(std::vector<int>&)> rec = [&](std::vector<int>& d) -> long {
    int v = -1;
    for (int i = 0; i < n; ++i) {
      if (d[i] > 0) {
        v = i;
        break;
      }
    }
    if (v < 0) return 0;
    std::uint64_t key = 0;
    for (int i = n; i-- > 0;) key = key * base + static_cast<std::uint64_t>(d[i]);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long best = std::numeric_limits<long>::max();
    for (const auto& fv : vars) {
      if (!fv.flat.contains(v)) continue;
      std::vector<int> saved = d;
      fv.flat.for_each([&](int u) {
        if (d[u] > 0) --d[u];
      });
      long sub = rec(d);
      d = saved;
      if (sub != std::numeric_limits<long>::max()) best = std::min(best, fv.rank + sub);
    }
    memo[key] = best;
    return best;
  };
  return rec(demand);
}

}  // namespace detail

inline MatroidalNumbers matroidal_numbers(const MatroidSystem& l, const RatVec& w) {
  const int n = l.n();
  check_cap(n, 16, "matroidal_numbers");
  detail::check_nonneg(w, n, "matroidal_numbers");
  MatroidalNumbers out;
  // nu_w by brute force over common independent sets
  check_cap(n, 14, "matroidal_numbers (integral)");
  Complex c = l.intersection();
  out.nu = 0;
  for (SubsetMask f : c.maximal_faces()) {
    Rational s = sum_over(w, f);
    if (s > out.nu) {
      out.nu = s;
      out.nu_witness = f;
    }
  }
  auto vars = detail::flat_vars(l);
  // nu*_w over R(L) using flat constraints
  {
    LPProblem p;
    p.sense = Sense::kMaximize;
    p.objective = w;
    for (const auto& fv : vars) p.add_row(indicator(n, fv.flat), Rel::kLe, fv.rank);
    LPResult r = solve(p);
    if (r.status != LPStatus::kOptimal) throw Error("nu*_w LP not optimal");
    out.nu_star = r.optimum;
  }
  // tau*_w: min sum rank * y over flats covering w
  {
    LPProblem p;
    p.sense = Sense::kMinimize;
    for (const auto& fv : vars) p.objective.push_back(Rational(fv.rank));
    for (int v = 0; v < n; ++v) {
      RatVec row(vars.size(), Rational(0));
      for (std::size_t j = 0; j < vars.size(); ++j) {
        if (vars[j].flat.contains(v)) row[j] = 1;
      }
      p.add_row(std::move(row), Rel::kGe, w[v]);
    }
    LPResult r = solve(p);
    if (r.status != LPStatus::kOptimal) {
      // only when some v with w(v) > 0 is a loop everywhere
      throw Infeasible("tau*_w LP not optimal");
    }
    out.tau_star = r.optimum;
    std::vector<std::map<SubsetMask, Rational>> per(l.k());
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (sgn(r.primal[j]) != 0) per[vars[j].matroid][vars[j].flat] += r.primal[j];
    }
    for (int i = 0; i < l.k(); ++i) {
      auto chain = detail::uncross(l.matroids[i], per[i]);
      out.cover.push_back(detail::chain_function(l.matroids[i], chain));
    }
  }
  std::vector<int> demand(n);
  for (int v = 0; v < n; ++v) {
    demand[v] = static_cast<int>(ceil_rational(w[v]).get_num().get_si());
  }
  out.tau = Rational(detail::integral_flat_cover(l, demand));
  return out;
}

// max over U of nu*(L_U) / nu(L_U).
inline ExtRational ratio_rq_formula(const MatroidSystem& l) {
  const int n = l.n();
  check_cap(n, 12, "ratio_rq_formula");
  Complex c = l.intersection();
  ExtRational best = ExtRational::of(0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t b = 1; b < total; ++b) {
    SubsetMask u(b);
    int nu = c.rank(u);
    if (nu == 0) continue;  // then nu*(L_U) = 0 as well
    MatroidSystem lu = l.restricted(u);
    auto vars = detail::flat_vars(lu);
    LPProblem p;
    p.sense = Sense::kMaximize;
    p.objective = indicator(n, u);
    for (const auto& fv : vars) p.add_row(indicator(n, fv.flat), Rel::kLe, fv.rank);
    LPResult r = solve(p);
    best = max(best, ExtRational::of(r.optimum / Rational(nu)));
  }
  return best;
}

struct HyperNumbers {
  Rational nu;
  Rational nu_star;
  Rational tau;
  Rational tau_star;
  Rational width_star;
};

inline HyperNumbers hyper_numbers(const Hypergraph& h, const RatVec& w) {
  const int m = h.num_edges();
  const int n = h.n();
  check_cap(m, 20, "hyper_numbers");
  detail::check_nonneg(w, m, "hyper_numbers");
  const auto& es = h.edges();
  HyperNumbers out;
  // nu_w: max weight matching
  check_cap(m, 14, "hyper_numbers (integral)");
  {
    Rational best = 0;
    std::vector<Rational> suffix(m + 1, Rational(0));
    for (int i = m; i-- > 0;) suffix[i] = suffix[i + 1] + w[i];
    std::function<void(int, SubsetMask, Rational)> rec = [&](int i, SubsetMask used,
                                                            Rational acc) {
      if (acc + suffix[i] <= best) return;
      if (i == m) {
        best = acc;
        return;
      }
      if (!es[i].intersects(used)) rec(i + 1, used | es[i], acc + w[i]);
      rec(i + 1, used, acc);
    };
    rec(0, SubsetMask(), Rational(0));
    out.nu = best;
  }
  {
    LPProblem p;
    p.sense = Sense::kMaximize;
    p.objective = w;
    for (int v = 0; v < n; ++v) {
      RatVec row(m, Rational(0));
      for (int j = 0; j < m; ++j) {
        if (es[j].contains(v)) row[j] = 1;
      }
      p.add_row(std::move(row), Rel::kLe, 1);
    }
    out.nu_star = solve(p).optimum;
  }
  {
    LPProblem p;
    p.sense = Sense::kMinimize;
    p.objective.assign(n, Rational(1));
    for (int j = 0; j < m; ++j) p.add_row(indicator(n, es[j]), Rel::kGe, w[j]);
    LPResult r = solve(p);
    if (r.status != LPStatus::kOptimal) throw Infeasible("tau*_w LP not optimal");
    out.tau_star = r.optimum;
  }
  // tau_w: integral vertex weights; branch on an unmet edge
  {
    std::vector<int> need(m);
    for (int j = 0; j < m; ++j) {
      need[j] = static_cast<int>(ceil_rational(w[j]).get_num().get_si());
      if (need[j] > 0 && es[j].empty()) throw Infeasible("tau_w: empty edge with weight");
    }
    std::map<std::vector<int>, long> memo;
    std::function<long(std::vector<int>&)> rec = [&](std::vector<int>& d) -> long {
      int j = -1;
      for (int i = 0; i < m; ++i) {
        if (d[i] > 0) {
          j = i;
          break;
        }
      }
      if (j < 0) return 0;
      auto it = memo.find(d);
      if (it != memo.end()) return it->second;
      long best = std::numeric_limits<long>::max();
      es[j].for_each([&](int v) {
        std::vector<int> saved = d;
        for (int i = 0; i < m; ++i) {
          if (es[i].contains(v) && d[i] > 0) --d[i];
        }
        best = std::min(best, 1 + rec(d));
        d = saved;
      });
      memo[d] = best;
      return best;
    };
    out.tau = Rational(rec(need));
  }
  {
    LPProblem p;
    p.sense = Sense::kMinimize;
    p.objective.assign(m, Rational(1));
    for (int s = 0; s < m; ++s) {
      RatVec row(m, Rational(0));
      for (int t = 0; t < m; ++t) row[t] = (es[t] & es[s]).size();
      p.add_row(std::move(row), Rel::kGe, 1);
    }
    LPResult r = solve(p);
    if (r.status != LPStatus::kOptimal) throw Infeasible("fractional width LP not optimal");
    out.width_star = r.optimum;
  }
  return out;
}

}  // namespace mtk
