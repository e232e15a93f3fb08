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

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtk/complex.hpp"
#include "mtk/core.hpp"
#include "mtk/hypergraph.hpp"
#include "mtk/instance.hpp"
#include "mtk/matroid.hpp"

namespace mtk {

namespace detail {

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

inline void require_prime(int q, const char* what) {
  if (!is_prime(q)) {
    throw Unsupported(std::string(what) + ": order " + std::to_string(q) + " is not prime");
  }
}

// Nonzero vectors of F_q^3 with first nonzero coordinate 1, in lex order.
inline std::vector<std::array<int, 3>> normalized_points(int q) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        std::array<int, 3> v{a, b, c};
        int lead = a ? a : (b ? b : c);
        if (lead == 1) out.push_back(v);
      }
    }
  }
  return out;
}

}  // namespace detail

// PG(2, q). Points and lines both use the sorted normalized vectors.
inline Hypergraph projective_plane(int q) {
  detail::require_prime(q, "projective_plane");
  auto pts = detail::normalized_points(q);
  const int n = static_cast<int>(pts.size());
  check_cap(n, kMaxGround, "projective_plane");
  std::vector<SubsetMask> lines;
  for (const auto& l : pts) {
    SubsetMask e;
    for (int i = 0; i < n; ++i) {
      int dot = l[0] * pts[i][0] + l[1] * pts[i][1] + l[2] * pts[i][2];
      if (dot % q == 0) e = e.with(i);
    }
    lines.push_back(e);
  }
  return Hypergraph(n, lines);
}

struct PartiteHypergraph {
  Hypergraph h;
  std::vector<SubsetMask> parts;
};

// Drops point 0 and every line through it; the other lines through 0 give the parts.
inline PartiteHypergraph truncated_projective_plane_parts(int q) {
  Hypergraph pg = projective_plane(q);
  const int n = pg.n();
  SubsetMask keep = SubsetMask::full(n).without(0);
  std::vector<int> old_of_new = dense_map(keep);
  std::vector<SubsetMask> edges, parts;
  for (SubsetMask l : pg.edges()) {
    if (l.contains(0)) {
      parts.push_back(compress(l.without(0), old_of_new));
    } else {
      edges.push_back(compress(l, old_of_new));
    }
  }
  return {Hypergraph(n - 1, edges), parts};
}

inline Hypergraph truncated_projective_plane(int q) {
  return truncated_projective_plane_parts(q).h;
}

// Affine plane of order q without its vertical class. Point (x, y) is x*q + y;
// the lines y = m x + c are ordered by (m, c). Sides are the vertical lines.
inline PartiteHypergraph q_k_parts(int q) {
  detail::require_prime(q, "q_k");
  check_cap(q * q, kMaxGround, "q_k");
  std::vector<SubsetMask> edges, sides;
  for (int m = 0; m < q; ++m) {
    for (int c = 0; c < q; ++c) {
      SubsetMask e;
      for (int x = 0; x < q; ++x) e = e.with(x * q + (m * x + c) % q);
      edges.push_back(e);
    }
  }
  for (int x = 0; x < q; ++x) {
    SubsetMask s;
    for (int y = 0; y < q; ++y) s = s.with(x * q + y);
    sides.push_back(s);
  }
  return {Hypergraph(q * q, edges), sides};
}

inline Hypergraph q_k(int q) { return q_k_parts(q).h; }

// A partition of the vertex set into k classes met exactly once by every edge.
inline std::optional<std::vector<SubsetMask>> find_k_partition(const Hypergraph& h, int k) {
  const int n = h.n();
  if (k < 1) return std::nullopt;
  for (SubsetMask e : h.edges()) {
    if (e.size() != k) return std::nullopt;
  }
  std::vector<int> color(n, -1);
  std::vector<std::vector<SubsetMask>> at(n);
  for (SubsetMask e : h.edges()) e.for_each([&](int v) { at[v].push_back(e); });
  std::function<bool(int, int)> rec = [&](int v, int used) {
    if (v == n) return true;
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      bool ok = true;
      for (SubsetMask e : at[v]) {
        e.for_each([&](int u) {
          if (u != v && color[u] == c) ok = false;
        });
        if (!ok) break;
      }
      if (!ok) continue;
      color[v] = c;
      if (rec(v + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  if (!rec(0, 0)) return std::nullopt;
  std::vector<SubsetMask> parts(k);
  for (int v = 0; v < n; ++v) parts[color[v]] = parts[color[v]].with(v);
  return parts;
}

// L(H): one partition matroid per side, on the edge set of H. Vertices of
// degree zero give no block.
inline MatroidSystem assoc_matroids(const Hypergraph& h, const std::vector<SubsetMask>& sides) {
  const int m = h.num_edges();
  SubsetMask seen;
  for (SubsetMask s : sides) {
    if (s.intersects(seen)) throw DomainError("assoc_matroids: sides overlap");
    seen |= s;
  }
  if (seen != h.vertex_set()) throw DomainError("assoc_matroids: sides do not cover the vertices");
  std::vector<Matroid> ms;
  for (SubsetMask side : sides) {
    std::vector<SubsetMask> blocks;
    side.for_each([&](int v) {
      SubsetMask block;
      for (int i = 0; i < m; ++i) {
        if (h.edges()[i].contains(v)) block = block.with(i);
      }
      if (!block.empty()) blocks.push_back(block);
    });
    for (int i = 0; i < m; ++i) {
      if ((h.edges()[i] & side).size() != 1) {
        throw DomainError("assoc_matroids: edge " + std::to_string(i) +
                          " does not meet a side exactly once");
      }
    }
    ms.push_back(Matroid::partition(m, blocks));
  }
  return MatroidSystem(std::move(ms));
}

inline MatroidSystem assoc_matroids(const Hypergraph& h) {
  int k = 0;
  for (SubsetMask e : h.edges()) k = std::max(k, e.size());
  auto parts = find_k_partition(h, k);
  if (!parts) throw DomainError("assoc_matroids: hypergraph is not k-partite");
  return assoc_matroids(h, *parts);
}

// K(L): the blocks of all matroids are the vertices, each element becomes the
// edge of the blocks containing it.
inline Hypergraph assoc_hypergraph(const MatroidSystem& l) {
  if (!l.all_partition()) throw Unsupported("assoc_hypergraph: needs partition matroids");
  const int n = l.n();
  std::vector<SubsetMask> edges(n);
  int v = 0;
  for (const auto& m : l.matroids) {
    for (SubsetMask block : m.parts()) {
      block.for_each([&](int e) { edges[e] = edges[e].with(v); });
      ++v;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (edges[i] == edges[j]) throw DomainError("assoc_hypergraph: repeated edge");
    }
  }
  return Hypergraph(v, edges);
}

using Params = std::map<std::string, std::string>;

namespace detail {

inline int int_param(const Params& p, const std::string& key, int def) {
  auto it = p.find(key);
  if (it == p.end()) return def;
  try {
    std::size_t used = 0;
    int x = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
    return x;
  } catch (const std::exception&) {
    throw ParseError("parameter " + key + " must be an integer");
  }
}

}  // namespace detail

inline Instance canned(const std::string& name, const Params& params = {}) {
  using nlohmann::json;
  Instance inst;
  if (name == "fano") {
    inst.hypergraph = projective_plane(2);
    inst.provenance = "fano";
    inst.annotations = {{"points", 7}, {"lines", 7}};
    return inst;
  }
  if (name == "T_k") {
    int q = detail::int_param(params, "q", 2);
    auto t = truncated_projective_plane_parts(q);
    inst.hypergraph = t.h;
    inst.matroids = assoc_matroids(t.h, t.parts);
    inst.provenance = "T_k q=" + std::to_string(q);
    inst.annotations = {{"k", q + 1}, {"nu", 1}, {"nu_star", q}, {"tau", q}, {"tau_star", q},
                        {"ratio_R_P", std::to_string(q)}};
    return inst;
  }
  if (name == "Q_k") {
    int q = detail::int_param(params, "q", 3);
    auto t = q_k_parts(q);
    inst.hypergraph = t.h;
    inst.matroids = assoc_matroids(t.h, t.parts);
    inst.provenance = "Q_k q=" + std::to_string(q);
    inst.annotations = {{"k", q}, {"edges", q * q}, {"delta_eta", q * q}, {"max_delta_r", q}};
    return inst;
  }
  if (name == "ab") {
    int a = detail::int_param(params, "a", 1);
    int m = detail::int_param(params, "m", 3);
    if (a < 1 || m < a) throw DomainError("ab: need 1 <= a <= m");
    check_cap(a + m, kSubsetCap, "ab");
    SubsetMask sa = SubsetMask::full(a);
    SubsetMask sb = SubsetMask::full(a + m) - sa;
    inst.complex = Complex(a + m, {sa, sb});
    inst.provenance = "ab a=" + std::to_string(a) + " m=" + std::to_string(m);
    inst.annotations = {{"matdim", m}};
    return inst;
  }
  if (name == "md-lower") {
    int n = detail::int_param(params, "n", 4);
    if (n < 1) throw DomainError("md-lower: need n >= 1");
    check_cap(n, kSubsetCap, "md-lower");
    const int half = n / 2;
    const int top = n - 1;
    inst.complex = Complex::from_predicate(
        n, [&](SubsetMask s) { return s.size() <= half || !s.contains(top); });
    long b = 1;
    for (int i = 0; i < half; ++i) b = b * (n - 1 - i) / (i + 1);
    inst.provenance = "md-lower n=" + std::to_string(n);
    inst.annotations = {{"matdim_lower", b}};
    return inst;
  }
  if (name == "lambdaPnotQ") {
    int k = detail::int_param(params, "k", 4);
    if (k < 2) throw DomainError("lambdaPnotQ: need k >= 2");
    RatVec v;
    for (int i = 2; i <= k; ++i) {
      for (int j = 0; j < i; ++j) v.push_back(Rational(1, i));
    }
    const int n = static_cast<int>(v.size());
    check_cap(n, kSubsetCap, "lambdaPnotQ");
    inst.complex = Complex::from_predicate(n, [&](SubsetMask s) {
      return sum_over(v, s) <= 1;
    });
    Rational vv = dot(v, v);
    inst.w = v;
    inst.provenance = "lambdaPnotQ k=" + std::to_string(k);
    inst.annotations = {{"n", n}, {"v_dot_v", format_rational(vv)}, {"in_Q", true}, {"in_P", false}};
    return inst;
  }
  if (name == "PnotQpartition") {
    // x1..x9 -> 0..8, y1..y3 -> 9..11, z1..z3 -> 12..14
    auto x = [](int t) { return t - 1; };
    auto y = [](int t) { return 8 + t; };
    auto z = [](int t) { return 11 + t; };
    std::vector<SubsetMask> faces;
    faces.push_back(SubsetMask().with(y(1)).with(y(2)).with(y(3)));
    faces.push_back(SubsetMask().with(z(1)).with(z(2)).with(z(3)));
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        faces.push_back(SubsetMask().with(y(i)).with(x(3 * (i - 1) + j)));
        faces.push_back(SubsetMask().with(z(j)).with(x(3 * (i - 1) + j)));
      }
    }
    inst.complex = Complex(15, faces);
    RatVec w(15, Rational(1, 4));
    for (int t = 1; t <= 9; ++t) w[x(t)] = Rational(1, 9);
    inst.w = w;
    inst.provenance = "PnotQpartition";
    inst.annotations = {{"flag", true}, {"in_Q", true}, {"in_P", false}};
    return inst;
  }
  throw DomainError("unknown construction '" + name + "'");
}

inline std::vector<std::string> canned_names() {
  return {"fano", "T_k", "Q_k", "ab", "md-lower", "lambdaPnotQ", "PnotQpartition"};
}

}  // namespace mtk
