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
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mtk/coloring.hpp"
#include "mtk/constructions.hpp"
#include "mtk/homology.hpp"
#include "mtk/instance.hpp"
#include "mtk/matdim.hpp"
#include "mtk/meshulam.hpp"
#include "mtk/polytopes.hpp"
#include "mtk/random.hpp"
#include "mtk/record.hpp"
#include "mtk/topology.hpp"

namespace mtk {

// count == 0 and max_n == 0 mean the suite default; max_k == 0 likewise.
struct SuiteOptions {
  std::uint64_t seed = 1;
  int max_n = 0;
  int max_k = 0;
  int count = 0;
};

namespace gen {

inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// One stream per (seed, suite, item) so items do not depend on each other.
inline Rng item_rng(std::uint64_t seed, const std::string& salt, std::uint64_t item) {
  std::uint64_t h = mix(seed);
  for (char ch : salt) h = mix(h ^ static_cast<unsigned char>(ch));
  return Rng(mix(h ^ mix(item)));
}

inline std::vector<SubsetMask> random_blocks(Rng& rng, int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<SubsetMask> blocks;
  for (int i = 0; i < n; ++i) {
    if (blocks.empty() || rng.coin(1, 3)) blocks.emplace_back();
    blocks.back() = blocks.back().with(order[i]);
  }
  return blocks;
}

inline Matroid random_partition_matroid(Rng& rng, int n) {
  return Matroid::partition(n, random_blocks(rng, n));
}

inline Matroid random_matroid(Rng& rng, int n, bool allow_dual = true) {
  switch (rng.uniform(0, allow_dual ? 3 : 2)) {
    case 0:
      return Matroid::uniform(n, static_cast<int>(rng.uniform(n > 0 ? 1 : 0, n)));
    case 1: {
      auto blocks = random_blocks(rng, n);
      std::vector<int> caps;
      for (SubsetMask b : blocks) caps.push_back(static_cast<int>(rng.uniform(1, b.size())));
      return Matroid::gen_partition(n, blocks, caps);
    }
    case 2: {
      int verts = static_cast<int>(rng.uniform(2, 5));
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i) {
        int a = static_cast<int>(rng.uniform(0, verts - 1));
        int b = static_cast<int>(rng.uniform(0, verts - 2));
        if (b >= a) ++b;
        edges.push_back({a, b});
      }
      return Matroid::graphic(verts, edges);
    }
    default:
      return dual(random_matroid(rng, n, false));
  }
}

inline Matroid random_loopless_matroid(Rng& rng, int n) {
  for (;;) {
    Matroid m = random_matroid(rng, n);
    if (loops(m).empty()) return m;
  }
}

inline MatroidSystem random_system(Rng& rng, int n, int k, bool partition, bool loopless) {
  std::vector<Matroid> ms;
  for (int i = 0; i < k; ++i) {
    if (partition) {
      ms.push_back(random_partition_matroid(rng, n));
    } else {
      ms.push_back(loopless ? random_loopless_matroid(rng, n) : random_matroid(rng, n));
    }
  }
  return MatroidSystem(std::move(ms));
}

inline RatVec random_weights(Rng& rng, int n, long max_num, long max_den) {
  RatVec w(n);
  for (auto& x : w) x = rng.rational(max_num, max_den);
  return w;
}

inline Complex random_complex(Rng& rng, int n) {
  std::vector<SubsetMask> gens;
  int g = static_cast<int>(rng.uniform(1, 4));
  for (int i = 0; i < g; ++i) gens.push_back(rng.subset(n));
  for (int v = 0; v < n; ++v) gens.push_back(SubsetMask::singleton(v));
  return Complex(n, gens);
}

inline Hypergraph random_graph(Rng& rng, int n) {
  long num = rng.uniform(1, 3);
  std::vector<SubsetMask> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.coin(num, 4)) edges.push_back(SubsetMask().with(a).with(b));
    }
  }
  return Hypergraph(n, edges);
}

inline SubsetMask random_k_subset(Rng& rng, int n, int k) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  SubsetMask s;
  for (int i = 0; i < k; ++i) s = s.with(order[i]);
  return s;
}

inline Hypergraph random_hypergraph(Rng& rng, int n, int m, int max_size) {
  std::vector<SubsetMask> edges;
  for (int i = 0; i < m; ++i) {
    int sz = static_cast<int>(rng.uniform(1, std::min(n, max_size)));
    if (sz == 1 && rng.coin(2, 3)) sz = std::min(n, 2);
    edges.push_back(random_k_subset(rng, n, sz));
  }
  return Hypergraph(n, edges);
}

inline Hypergraph random_uniform_hypergraph(Rng& rng, int n, int m, int k) {
  std::vector<SubsetMask> edges;
  for (int i = 0; i < m; ++i) edges.push_back(random_k_subset(rng, n, k));
  return Hypergraph(n, edges);
}

// k sides of 1..3 vertices each; every edge takes one vertex per side.
inline Hypergraph random_kpartite(Rng& rng, int k, int m) {
  std::vector<int> first(k + 1, 0);
  for (int i = 0; i < k; ++i) first[i + 1] = first[i] + static_cast<int>(rng.uniform(1, 3));
  std::vector<SubsetMask> edges;
  for (int j = 0; j < m; ++j) {
    SubsetMask e;
    for (int i = 0; i < k; ++i) {
      e = e.with(static_cast<int>(rng.uniform(first[i], first[i + 1] - 1)));
    }
    edges.push_back(e);
  }
  return Hypergraph(first[k], edges);
}

}  // namespace gen

namespace detail {

inline VerificationRecord record(std::string claim, std::string prov, std::string lhs,
                                 std::string rel, std::string rhs, bool ok,
                                 const std::function<Instance()>& replay = nullptr) {
  VerificationRecord r = make_record(std::move(claim), std::move(prov), std::move(lhs),
                                     std::move(rel), std::move(rhs), ok);
  if (!ok && replay) r.witness["instance"] = instance_to_json(replay());
  return r;
}

inline VerificationRecord skipped(std::string claim, std::string prov, std::string why) {
  VerificationRecord r;
  r.claim = std::move(claim);
  r.provenance = std::move(prov);
  r.relation = "cap";
  r.verdict = Verdict::kSkipped;
  r.witness["reason"] = std::move(why);
  return r;
}

inline bool ge(const ExtEta& a, const Rational& b) {
  return a.infinite || Rational(a.value) >= b;
}

inline std::string str(const Rational& r) { return format_rational(r); }

inline int pick(int requested, int def) { return requested > 0 ? requested : def; }

// chi(M[F]) by max over S in F of ceil(|S| / rank S); -1 when F holds a loop.
inline int restricted_chi(const Matroid& m, SubsetMask f) {
  if (f.empty()) return 0;
  int best = 1;
  bool loop = false;
  for_each_subset(f, [&](SubsetMask s) {
    if (s.empty() || loop) return;
    int r = m.rank(s);
    if (r == 0) {
      loop = true;
      return;
    }
    best = std::max(best, (s.size() + r - 1) / r);
  });
  return loop ? -1 : best;
}

inline Instance system_instance(const MatroidSystem& l, const std::string& prov) {
  Instance inst;
  inst.matroids = l;
  inst.provenance = prov;
  return inst;
}

inline std::string prov(const std::string& suite, std::uint64_t seed, int i) {
  return suite + " seed=" + std::to_string(seed) + " item=" + std::to_string(i);
}

}  // namespace detail

namespace suites {

using Records = std::vector<VerificationRecord>;
using detail::record;
using detail::str;

// P(M cap N) = P(M) cap P(N), and chi*(M cap N, h) = max of the two.
inline Records edmonds_k2(const SuiteOptions& o) {
  Records out;
  const int pairs = detail::pick(o.count, 200);
  const int max_n = std::min(detail::pick(o.max_n, 8), 8);
  const int points = 50, weights = 50;
  for (int i = 0; i < pairs; ++i) {
    Rng rng = gen::item_rng(o.seed, "edmonds-k2", i);
    int n = static_cast<int>(rng.uniform(std::min(3, max_n), max_n));
    MatroidSystem l({gen::random_matroid(rng, n), gen::random_matroid(rng, n)});
    Complex c = l.intersection();
    std::string pv = detail::prov("edmonds-k2", o.seed, i);
    auto replay = [&] { return detail::system_instance(l, pv); };
    auto pp = PolytopeRef::P(c);
    auto rr = PolytopeRef::R(l);
    std::vector<std::vector<SubsetMask>> pools = {
        c.maximal_faces(), as_complex(l.matroids[0]).maximal_faces(),
        as_complex(l.matroids[1]).maximal_faces()};
    int agree = 0, inside = 0;
    nlohmann::json first_bad;
    for (int t = 0; t < points; ++t) {
      RatVec x(n, Rational(0));
      int which = static_cast<int>(rng.uniform(0, 3));
      if (which == 3) {
        for (auto& v : x) v = make_rational(rng.uniform(0, 4), 4);
      } else {
        const auto& pool = pools[which];
        int parts = static_cast<int>(rng.uniform(1, 3));
        long total = 0;
        for (int j = 0; j < parts; ++j) {
          long cj = rng.uniform(1, 4);
          total += cj;
          SubsetMask f = pool[rng.uniform(0, static_cast<long>(pool.size()) - 1)];
          f.for_each([&](int v) { x[v] += cj; });
        }
        static const long num[] = {1, 1, 9, 5, 3};
        static const long den[] = {1, 1, 8, 4, 4};
        int s = static_cast<int>(rng.uniform(0, 4));
        for (auto& v : x) v = v * num[s] / (total * den[s]);
      }
      bool in_p = member(pp, x), in_r = member(rr, x);
      inside += in_p;
      if (in_p == in_r) {
        ++agree;
      } else if (first_bad.is_null()) {
        first_bad = detail::ratvec_to_json(x);
      }
    }
    auto r = record("edmonds-k2/membership", pv, std::to_string(agree), "==",
                    std::to_string(points), agree == points, replay);
    r.witness["inside"] = inside;
    if (!first_bad.is_null()) r.witness["point"] = first_bad;
    out.push_back(std::move(r));

    SubsetMask dead = loops(l.matroids[0]) | loops(l.matroids[1]);
    Complex cm = as_complex(l.matroids[0]), cn = as_complex(l.matroids[1]);
    int same = 0;
    nlohmann::json bad_h;
    for (int t = 0; t < weights; ++t) {
      RatVec h = gen::random_weights(rng, n, 3, 3);
      dead.for_each([&](int v) { h[v] = 0; });
      Rational lhs = chi_star(c, h).value;
      Rational rhs = std::max(chi_star(cm, h).value, chi_star(cn, h).value);
      if (lhs == rhs) {
        ++same;
      } else if (bad_h.is_null()) {
        bad_h = {{"h", detail::ratvec_to_json(h)}, {"lhs", str(lhs)}, {"rhs", str(rhs)}};
      }
    }
    auto r2 = record("edmonds-k2/chi-star", pv, std::to_string(same), "==",
                     std::to_string(weights), same == weights, replay);
    if (!bad_h.is_null()) r2.witness["example"] = bad_h;
    out.push_back(std::move(r2));
  }
  return out;
}

// Extremal instances: Q_k, T_k, Fano.
inline Records sharpness(const SuiteOptions&) {
  Records out;
  {
    Hypergraph f = projective_plane(2);
    bool ok = f.n() == 7 && f.num_edges() == 7 && f.is_uniform(3);
    for (int a = 0; a < f.n() && ok; ++a) {
      for (int b = a + 1; b < f.n(); ++b) {
        int lines = 0;
        for (SubsetMask e : f.edges()) lines += e.contains(a) && e.contains(b);
        if (lines != 1) ok = false;
      }
    }
    for (SubsetMask e : f.edges()) {
      for (SubsetMask g : f.edges()) {
        if (e != g && (e & g).size() != 1) ok = false;
      }
    }
    out.push_back(record("sharpness/fano-axioms", "fano", ok ? "ok" : "broken", "==", "ok", ok));
  }
  {
    Hypergraph q2 = q_k(2);
    bool c4 = q2.n() == 4 && q2.num_edges() == 4 && q2.is_uniform(2);
    for (int v = 0; v < 4; ++v) c4 = c4 && q2.degree(v) == 2;
    // connected 2-regular on 4 vertices
    SubsetMask reach = SubsetMask::singleton(0);
    for (int round = 0; round < 4; ++round) {
      for (SubsetMask e : q2.edges()) {
        if (e.intersects(reach)) reach |= e;
      }
    }
    c4 = c4 && reach == q2.vertex_set();
    out.push_back(record("sharpness/q2-is-c4", "Q_k q=2", c4 ? "C4" : "other", "==", "C4", c4));
  }
  {
    Instance q3 = canned("Q_k", {{"q", "3"}});
    const auto& l = *q3.matroids;
    Complex c = l.intersection();
    Expansions e = expansions(c);
    ExtRational max_r = ExtRational::of(0);
    for (const auto& m : l.matroids) max_r = max(max_r, expansions(as_complex(m)).delta_r);
    int k = l.k();
    bool eq = !e.delta_eta.infinite && !max_r.infinite &&
              e.delta_eta.value == Rational(k) * max_r.value;
    out.push_back(record("sharpness/q3-delta-eta", q3.provenance, e.delta_eta.str(), "==",
                         q3.annotations["delta_eta"].dump(),
                         e.delta_eta == ExtRational::of(9)));
    out.push_back(record("sharpness/q3-max-delta-r", q3.provenance, max_r.str(), "==",
                         q3.annotations["max_delta_r"].dump(), max_r == ExtRational::of(3)));
    out.push_back(record("sharpness/q3-equality", q3.provenance, e.delta_eta.str(), "==",
                         std::to_string(k) + "*" + max_r.str(), eq));
    Hypergraph back = assoc_hypergraph(l);
    bool iso_edges = back.num_edges() == q3.hypergraph->num_edges() &&
                     matching_complex(back) == c;
    out.push_back(record("sharpness/q3-round-trip", q3.provenance,
                         std::to_string(back.num_edges()), "==",
                         std::to_string(q3.hypergraph->num_edges()), iso_edges));
  }
  {
    Instance t3 = canned("T_k", {{"q", "2"}});
    const auto& h = *t3.hypergraph;
    const auto& l = *t3.matroids;
    HyperNumbers hn = hyper_numbers(h, RatVec(h.num_edges(), Rational(1)));
    MatroidalNumbers mn = matroidal_numbers(l, RatVec(l.n(), Rational(1)));
    const std::string pv = t3.provenance;
    out.push_back(record("sharpness/t3-nu", pv, str(hn.nu), "==", "1", hn.nu == 1));
    out.push_back(record("sharpness/t3-nu-star", pv, str(hn.nu_star), "==", "2", hn.nu_star == 2));
    out.push_back(record("sharpness/t3-tau-star", pv, str(hn.tau_star), "==", "2", hn.tau_star == 2));
    out.push_back(record("sharpness/t3-tau", pv, str(hn.tau), "==", "2", hn.tau == 2));
    out.push_back(record("sharpness/t3-matroidal-nu", pv, str(mn.nu), "==", "1", mn.nu == 1));
    out.push_back(record("sharpness/t3-matroidal-nu-star", pv, str(mn.nu_star), "==", "2",
                         mn.nu_star == 2));
    out.push_back(record("sharpness/t3-matroidal-tau-star", pv, str(mn.tau_star), "==", "2",
                         mn.tau_star == 2));
    out.push_back(record("sharpness/t3-matroidal-tau", pv, str(mn.tau), "==", "2", mn.tau == 2));
    ExtRational rp = ratio(PolytopeRef::R(l), PolytopeRef::P(l.intersection()));
    out.push_back(record("sharpness/t3-ratio-R-P", pv, rp.str(), "==", "2",
                         rp == ExtRational::of(2)));
    bool shape = h.n() == 6 && h.num_edges() == 4 && l.k() == 3;
    for (const auto& m : l.matroids) shape = shape && m.parts().size() == 2;
    out.push_back(record("sharpness/t3-shape", pv, shape ? "ok" : "other", "==", "ok", shape));
  }
  return out;
}

namespace detail_catalog {

inline std::vector<std::pair<std::string, Matroid>> whitney_catalog(int max_n) {
  std::vector<std::pair<std::string, Matroid>> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      out.push_back({"U(" + std::to_string(r) + "," + std::to_string(n) + ")",
                     Matroid::uniform(n, r)});
    }
  }
  // block sizes from integer partitions of n <= 7, caps in {1, s-1, s}
  std::function<void(int, int, std::vector<int>&, std::vector<std::vector<int>>&)> parts =
      [&](int left, int maxp, std::vector<int>& cur, std::vector<std::vector<int>>& acc) {
        if (left == 0) {
          acc.push_back(cur);
          return;
        }
        for (int p = std::min(left, maxp); p >= 1; --p) {
          cur.push_back(p);
          parts(left - p, p, cur, acc);
          cur.pop_back();
        }
      };
  for (int n = 1; n <= std::min(max_n, 7); ++n) {
    std::vector<std::vector<int>> shapes;
    std::vector<int> cur;
    parts(n, n, cur, shapes);
    for (const auto& shape : shapes) {
      for (int mode = 0; mode < 3; ++mode) {
        std::vector<SubsetMask> blocks;
        std::vector<int> caps;
        int at = 0;
        for (std::size_t b = 0; b < shape.size(); ++b) {
          int s = shape[b];
          blocks.push_back(SubsetMask(((std::uint64_t{1} << s) - 1) << at));
          int cap = mode == 0 ? 1 : mode == 1 ? std::max(1, s - 1) : s;
          if (mode == 2 && b % 2 == 1) cap = 1;
          caps.push_back(cap);
          at += s;
        }
        std::string name = "GP[";
        for (std::size_t b = 0; b < shape.size(); ++b) {
          name += (b ? "," : "") + std::to_string(shape[b]) + ":" + std::to_string(caps[b]);
        }
        out.push_back({name + "]", Matroid::gen_partition(n, blocks, caps)});
      }
    }
  }
  // simple graphs on up to 5 vertices, one per isomorphism class, < 10 edges
  for (int verts = 2; verts <= 5; ++verts) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < verts; ++a) {
      for (int b = a + 1; b < verts; ++b) slots.push_back({a, b});
    }
    const int ns = static_cast<int>(slots.size());
    std::vector<int> perm(verts);
    std::set<std::uint64_t> seen;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ns); ++mask) {
      int edges = std::popcount(mask);
      if (edges > max_n) continue;
      std::uint64_t canon = ~std::uint64_t{0};
      for (int i = 0; i < verts; ++i) perm[i] = i;
      do {
        std::uint64_t img = 0;
        for (int s = 0; s < ns; ++s) {
          if (!((mask >> s) & 1)) continue;
          int a = perm[slots[s].first], b = perm[slots[s].second];
          if (a > b) std::swap(a, b);
          for (int t = 0; t < ns; ++t) {
            if (slots[t] == std::make_pair(a, b)) img |= std::uint64_t{1} << t;
          }
        }
        canon = std::min(canon, img);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!seen.insert(canon).second) continue;
      std::vector<std::pair<int, int>> es;
      for (int s = 0; s < ns; ++s) {
        if ((mask >> s) & 1) es.push_back(slots[s]);
      }
      out.push_back({"G" + std::to_string(verts) + ":" + std::to_string(mask),
                     Matroid::graphic(verts, es)});
    }
  }
  return out;
}

}  // namespace detail_catalog

// eta_H of a matroid: rank if coloop-free, else infinite.
inline Records whitney(const SuiteOptions& o) {
  Records out;
  const int max_n = std::min(detail::pick(o.max_n, 9), 9);
  for (const auto& [name, m] : detail_catalog::whitney_catalog(max_n)) {
    ExtEta eta = eta_h(as_complex(m));
    ExtEta want = coloops(m).empty() ? ExtEta::of(m.rank()) : ExtEta::inf();
    out.push_back(record("whitney/eta-rank", name, eta.str(), "==", want.str(), eta == want,
                         [&] {
                           Instance i;
                           i.matroids = MatroidSystem({m});
                           i.provenance = name;
                           return i;
                         }));
  }
  return out;
}

// chi(M) by the rank formula against search, chi*(M,h) against Delta(M,h).
inline Records williams(const SuiteOptions& o) {
  Records out;
  const int count = detail::pick(o.count, 100);
  const int max_n = std::min(detail::pick(o.max_n, 8), 8);
  for (int i = 0; i < count; ++i) {
    Rng rng = gen::item_rng(o.seed, "williams", i);
    int n = static_cast<int>(rng.uniform(1, max_n));
    Matroid m = gen::random_loopless_matroid(rng, n);
    RatVec h = gen::random_weights(rng, n, 4, 3);
    std::string pv = detail::prov("williams", o.seed, i);
    auto replay = [&] {
      Instance inst;
      inst.matroids = MatroidSystem({m});
      inst.h = h;
      inst.provenance = pv;
      return inst;
    };
    Complex c = as_complex(m);
    int a = chi_matroid(m), b = chi(c);
    out.push_back(record("williams/chi", pv, std::to_string(a), "==", std::to_string(b), a == b,
                         replay));
    Rational cs = chi_star(c, h).value;
    ExtRational d = expansions(c, h).delta_h;
    out.push_back(record("williams/chi-star-delta", pv, str(cs), "==", d.str(),
                         d == ExtRational::of(cs), replay));
  }
  return out;
}

// eta_H(I(G)) >= gamma_E(G); hypergraph analogue; the delete/contract
// inequality per minimal edge; the (2k-1) expansion bound.
inline Records meshulam(const SuiteOptions& o) {
  Records out;
  const int graphs = detail::pick(o.count, 500);
  const int hypers = detail::pick(o.count, 200);
  const int systems = detail::pick(o.count, 50);
  const int max_n = detail::pick(o.max_n, 8);
  for (int i = 0; i < graphs; ++i) {
    Rng rng = gen::item_rng(o.seed, "meshulam-graph", i);
    int n = static_cast<int>(rng.uniform(2, std::min(max_n, 7)));
    Hypergraph g = gen::random_graph(rng, n);
    while (g.num_edges() == 0) g = gen::random_graph(rng, n);
    // isolated vertices make I(G) a cone; keep a few of those
    if (i % 10 != 0) g = induced(g, g.edge_union()).value;
    ExtEta eta = eta_h(independence_complex(g));
    ExtEta gam = gamma_e_graph(g);
    std::string pv = detail::prov("meshulam-graph", o.seed, i);
    out.push_back(record("meshulam/graph", pv, eta.str(), ">=", gam.str(), eta >= gam, [&] {
      Instance inst;
      inst.hypergraph = g;
      inst.provenance = pv;
      return inst;
    }));
  }
  for (int i = 0; i < hypers; ++i) {
    Rng rng = gen::item_rng(o.seed, "meshulam-hyper", i);
    int n = static_cast<int>(rng.uniform(2, std::min(max_n, 8)));
    int m = static_cast<int>(rng.uniform(1, 8));
    Hypergraph h = gen::random_hypergraph(rng, n, m, 4);
    if (i % 10 != 0) h = induced(h, h.edge_union()).value;
    std::string pv = detail::prov("meshulam-hyper", o.seed, i);
    auto replay = [&] {
      Instance inst;
      inst.hypergraph = h;
      inst.provenance = pv;
      return inst;
    };
    ExtEta eta = eta_h(independence_complex(h));
    ExtEta gam = gamma_e_hyper(h);
    out.push_back(record("meshulam/hyper", pv, eta.str(), ">=", gam.str(), eta >= gam, replay));
    FrugalSequence cert = delete_contract_certificate(h);
    bool seq_ok = cert.value.infinite ||
                  (is_frugal(cert.edges) && sequence_value(cert.edges) == cert.value.value);
    out.push_back(record("meshulam/certificate", pv, cert.value.str(), "in",
                         "[" + gam.str() + "," + eta.str() + "]",
                         seq_ok && gam <= cert.value && cert.value <= eta, replay));
    const auto& es = h.edges();
    for (SubsetMask e : es) {
      bool minimal = true;
      for (SubsetMask f : es) {
        if (f != e && f.subset_of(e)) minimal = false;
      }
      if (!minimal) continue;
      ExtEta del = eta_h(independence_complex(delete_edge(h, e)));
      ExtEta con = eta_h(independence_complex(contract(h, e).value)) + ExtEta::of(e.size() - 1);
      ExtEta bound = min(del, con);
      out.push_back(record("meshulam/delete-contract", pv + " e=" + to_string(e), eta.str(),
                           ">=", bound.str(), eta >= bound, replay));
    }
  }
  for (int i = 0; i < systems; ++i) {
    Rng rng = gen::item_rng(o.seed, "meshulam-2k", i);
    int n = static_cast<int>(rng.uniform(2, std::min(max_n, 6)));
    int k = static_cast<int>(rng.uniform(1, std::min(detail::pick(o.max_k, 3), 3)));
    MatroidSystem l = gen::random_system(rng, n, k, false, true);
    ExtRational de = expansions(l.intersection()).delta_eta;
    ExtRational dr = ExtRational::of(0);
    for (const auto& m : l.matroids) dr = max(dr, expansions(as_complex(m)).delta_r);
    ExtRational rhs = dr.infinite ? dr : ExtRational::of(Rational(2 * k - 1) * dr.value);
    std::string pv = detail::prov("meshulam-2k", o.seed, i);
    out.push_back(record("meshulam/delta-2k-1", pv, de.str(), "<=", rhs.str(), de <= rhs,
                         [&] { return detail::system_instance(l, pv); }));
  }
  return out;
}

// eta_H(M(H)) >= nu*(H)/k for k-uniform H.
inline Records abm(const SuiteOptions& o) {
  Records out;
  const int count = detail::pick(o.count, 200);
  for (int i = 0; i < count; ++i) {
    Rng rng = gen::item_rng(o.seed, "abm", i);
    int k = static_cast<int>(rng.uniform(2, 3));
    int n = static_cast<int>(rng.uniform(k + 1, k == 2 ? 7 : 8));
    int m = static_cast<int>(rng.uniform(1, 9));
    Hypergraph h = gen::random_uniform_hypergraph(rng, n, m, k);
    ExtEta eta = eta_h(matching_complex(h));
    Rational bound = hyper_numbers(h, RatVec(h.num_edges(), Rational(1))).nu_star / k;
    std::string pv = detail::prov("abm", o.seed, i) + " k=" + std::to_string(k);
    out.push_back(record("abm/eta-nu-star", pv, eta.str(), ">=", str(bound),
                         detail::ge(eta, bound), [&] {
                           Instance inst;
                           inst.hypergraph = h;
                           inst.provenance = pv;
                           return inst;
                         }));
  }
  return out;
}

// chi_l(cap L) against k chi(cap L), k max chi(M_i) (partition) and
// (2k-1) max chi(M_i). A bound B is checked as B-choosability.
inline Records list_coloring(const SuiteOptions& o) {
  Records out;
  const int count = detail::pick(o.count, 60);
  const int max_n = std::min(detail::pick(o.max_n, 6), 6);
  const int max_k = std::min(detail::pick(o.max_k, 3), 3);
  for (int i = 0; i < count; ++i) {
    Rng rng = gen::item_rng(o.seed, "list-coloring", i);
    int n = static_cast<int>(rng.uniform(2, max_n));
    int k = static_cast<int>(rng.uniform(1, max_k));
    bool partition = rng.coin();
    MatroidSystem l = gen::random_system(rng, n, k, partition, true);
    Complex c = l.intersection();
    int chi_c = chi(c);
    int max_chi = 0;
    for (const auto& m : l.matroids) max_chi = std::max(max_chi, chi_matroid(m));
    std::string pv = detail::prov("list-coloring", o.seed, i) + " k=" + std::to_string(k) +
                     (partition ? " partition" : "");
    std::vector<std::pair<std::string, int>> bounds = {{"list/k-chi", k * chi_c}};
    if (partition) bounds.push_back({"list/k-max-chi-partition", k * max_chi});
    bounds.push_back({"list/2k-1-max-chi", (2 * k - 1) * max_chi});
    for (const auto& [claim, b] : bounds) {
      if (b > 5 && b < n) {
        out.push_back(detail::skipped(claim, pv, "bound " + std::to_string(b) + " above p cap 5"));
        continue;
      }
      bool ok = chi_list(c, b);
      out.push_back(record(claim, pv, ok ? "chi_l<=" + std::to_string(b) : "chi_l>" + std::to_string(b),
                           "<=", std::to_string(b), ok,
                           [&] { return detail::system_instance(l, pv); }));
    }
  }
  return out;
}

// Lists with chi(M[F_c]) <= k are colorable by intersection; failure
// witnesses violate the Hall-type inequality.
inline Records seymour(const SuiteOptions& o) {
  Records out;
  const int want = detail::pick(o.count, 100);
  const int max_n = std::min(detail::pick(o.max_n, 8), 8);
  const int max_k = std::min(detail::pick(o.max_k, 3), 3);
  int satisfied = 0;
  for (int i = 0; satisfied < want && i < 50 * want; ++i) {
    Rng rng = gen::item_rng(o.seed, "seymour", i);
    int n = static_cast<int>(rng.uniform(2, max_n));
    int k = static_cast<int>(rng.uniform(1, max_k));
    Matroid m = gen::random_loopless_matroid(rng, n);
    int palette = static_cast<int>(rng.uniform(k, k + 3));
    ListAssignment lists(n);
    for (auto& lv : lists) {
      gen::random_k_subset(rng, palette, k).for_each([&](int c) { lv.push_back(c); });
    }
    std::map<int, SubsetMask> fc;
    for (int v = 0; v < n; ++v) {
      for (int c : lists[v]) fc[c] = fc[c].with(v);
    }
    bool hyp = true;
    for (const auto& [c, f] : fc) {
      int x = detail::restricted_chi(m, f);
      if (x < 0 || x > k) hyp = false;
    }
    std::string pv = detail::prov("seymour", o.seed, i) + " k=" + std::to_string(k);
    auto replay = [&] {
      Instance inst;
      inst.matroids = MatroidSystem({m});
      inst.provenance = pv;
      inst.annotations["lists"] = lists;
      return inst;
    };
    ListColoringResult res = matroid_list_color(m, lists);
    if (res.success) {
      bool valid = static_cast<int>(res.coloring.color.size()) == n;
      std::map<int, SubsetMask> classes;
      for (int v = 0; v < n && valid; ++v) {
        int c = res.coloring.color[v];
        valid = std::find(lists[v].begin(), lists[v].end(), c) != lists[v].end();
        classes[c] = classes[c].with(v);
      }
      for (const auto& [c, s] : classes) valid = valid && m.independent(s);
      out.push_back(record(hyp ? "seymour/colorable" : "seymour/coloring-valid", pv,
                           valid ? "valid" : "invalid", "==", "valid", valid, replay));
    } else if (hyp) {
      out.push_back(record("seymour/colorable", pv, "failed", "==", "valid", false, replay));
    } else {
      // recompute |T| + sum_c rank(F_c - T) directly
      long total = res.witness.size();
      for (const auto& [c, f] : fc) total += m.rank(f - res.witness);
      out.push_back(record("seymour/witness", pv, std::to_string(total), "<",
                           std::to_string(n), total < n, replay));
      out.back().witness["T"] = res.witness.elements();
    }
    if (hyp) ++satisfied;
  }
  if (satisfied < want) {
    out.push_back(detail::skipped("seymour/sample", "seymour",
                                  "only " + std::to_string(satisfied) + " hypothesis instances"));
  }
  return out;
}

inline Rational tau_ratio_bound(int factor, const Rational& nu) { return Rational(factor) * nu; }

// nu_w <= nu*_w = tau*_w <= tau_w, tau*_w <= k nu_w, and (k-1) nu_w for
// partition systems; the explicit cover is checked through f_span.
inline Records duality(const SuiteOptions& o) {
  Records out;
  const int count = detail::pick(o.count, 200);
  const int max_n = std::min(detail::pick(o.max_n, 10), 10);
  const int max_k = std::min(detail::pick(o.max_k, 3), 3);
  for (int i = 0; i < count; ++i) {
    Rng rng = gen::item_rng(o.seed, "duality", i);
    int n = static_cast<int>(rng.uniform(2, max_n));
    int k = static_cast<int>(rng.uniform(1, max_k));
    bool partition = rng.coin();
    MatroidSystem l = gen::random_system(rng, n, k, partition, true);
    RatVec w = gen::random_weights(rng, n, 4, 3);
    if (i % 5 == 0) w.assign(n, Rational(1));
    std::string pv = detail::prov("duality", o.seed, i) + " k=" + std::to_string(k) +
                     (partition ? " partition" : "");
    auto replay = [&] {
      Instance inst = detail::system_instance(l, pv);
      inst.w = w;
      return inst;
    };
    MatroidalNumbers mn = matroidal_numbers(l, w);
    bool chain = mn.nu <= mn.nu_star && mn.nu_star == mn.tau_star && mn.tau_star <= mn.tau;
    out.push_back(record("duality/chain", pv,
                         str(mn.nu) + "," + str(mn.nu_star) + "," + str(mn.tau_star) + "," +
                             str(mn.tau),
                         "<=,==,<=", "", chain, replay));
    Rational kb = tau_ratio_bound(k, mn.nu);
    out.push_back(record("duality/tau-star-k-nu", pv, str(mn.tau_star), "<=", str(kb),
                         mn.tau_star <= kb, replay));
    if (partition && k >= 2) {
      Rational pb = tau_ratio_bound(k - 1, mn.nu);
      out.push_back(record("duality/tau-star-k-1-nu", pv, str(mn.tau_star), "<=", str(pb),
                           mn.tau_star <= pb, replay));
    }
    RatVec spanned(n, Rational(0));
    Rational mass = 0;
    for (int j = 0; j < k; ++j) {
      RatVec s = f_span(l.matroids[j], mn.cover[j]);
      for (int v = 0; v < n; ++v) spanned[v] += s[v];
      for (const auto& x : mn.cover[j]) mass += x;
    }
    bool covers = mass == mn.tau_star;
    for (int v = 0; v < n; ++v) covers = covers && spanned[v] >= w[v];
    out.push_back(record("duality/cover", pv, str(mass), "==", str(mn.tau_star), covers, replay));
  }
  return out;
}

// nu*_w <= (k-1) nu_w for k-partite H; w*(H) >= nu*(H)/k.
inline Records furedi(const SuiteOptions& o) {
  Records out;
  const int count = detail::pick(o.count, 200);
  for (int i = 0; i < count; ++i) {
    Rng rng = gen::item_rng(o.seed, "furedi", i);
    int k = static_cast<int>(rng.uniform(2, 4));
    int m = static_cast<int>(rng.uniform(1, 12));
    Hypergraph h = gen::random_kpartite(rng, k, m);
    RatVec w = i % 3 == 0 ? RatVec(h.num_edges(), Rational(1))
                          : gen::random_weights(rng, h.num_edges(), 4, 3);
    std::string pv = detail::prov("furedi", o.seed, i) + " k=" + std::to_string(k);
    auto replay = [&] {
      Instance inst;
      inst.hypergraph = h;
      inst.w = w;
      inst.provenance = pv;
      return inst;
    };
    HyperNumbers hn = hyper_numbers(h, w);
    Rational b = Rational(k - 1) * hn.nu;
    out.push_back(record("furedi/fks", pv, str(hn.nu_star), "<=", str(b), hn.nu_star <= b,
                         replay));
    HyperNumbers one = hyper_numbers(h, RatVec(h.num_edges(), Rational(1)));
    Rational wb = one.nu_star / k;
    out.push_back(record("furedi/width", pv, str(one.width_star), ">=", str(wb),
                         one.width_star >= wb, replay));
  }
  return out;
}

// Points in Q(C) but not P(C).
inline Records pq_witness(const SuiteOptions&) {
  Records out;
  {
    Instance inst = canned("lambdaPnotQ", {{"k", "4"}});
    const RatVec& v = *inst.w;
    Rational vv = dot(v, v);
    out.push_back(record("pq/lambda-v-dot-v", inst.provenance, str(vv), "==", "13/12",
                         vv == Rational(13, 12)));
    bool in_q = member(PolytopeRef::Q(*inst.complex), v);
    bool in_p = member(PolytopeRef::P(*inst.complex), v);
    out.push_back(record("pq/lambda-in-Q", inst.provenance, in_q ? "in" : "out", "==", "in", in_q));
    out.push_back(record("pq/lambda-not-in-P", inst.provenance, in_p ? "in" : "out", "==", "out",
                         !in_p));
  }
  {
    Instance inst = canned("PnotQpartition");
    const Complex& c = *inst.complex;
    Hypergraph nf = min_nonfaces(c);
    bool flag = std::all_of(nf.edges().begin(), nf.edges().end(),
                            [](SubsetMask e) { return e.size() == 2; });
    out.push_back(record("pq/flag", inst.provenance, flag ? "flag" : "not flag", "==", "flag",
                         flag));
    // one partition matroid per missing edge: the edge is a block, the rest singletons
    std::vector<Matroid> ms;
    for (SubsetMask e : nf.edges()) {
      std::vector<SubsetMask> blocks = {e};
      (SubsetMask::full(c.n()) - e).for_each([&](int v) { blocks.push_back(SubsetMask::singleton(v)); });
      ms.push_back(Matroid::partition(c.n(), blocks));
    }
    bool inter = flag && MatroidSystem(ms).intersection() == c;
    out.push_back(record("pq/partition-intersection", inst.provenance,
                         std::to_string(ms.size()) + " matroids", "==", "C", inter));
    bool in_q = member(PolytopeRef::Q(c), *inst.w);
    bool in_p = member(PolytopeRef::P(c), *inst.w);
    out.push_back(record("pq/partition-in-Q", inst.provenance, in_q ? "in" : "out", "==", "in",
                         in_q));
    out.push_back(record("pq/partition-not-in-P", inst.provenance, in_p ? "in" : "out", "==",
                         "out", !in_p));
  }
  return out;
}

// matdim of the two lower-bound families, and upper >= exact on small complexes.
inline Records matdim(const SuiteOptions& o) {
  Records out;
  {
    Instance ab = canned("ab", {{"m", "3"}});
    int md = matdim_exact(*ab.complex);
    out.push_back(record("matdim/ab", ab.provenance, std::to_string(md), "==", "3", md == 3));
  }
  {
    Instance lo = canned("md-lower", {{"n", "4"}});
    int md = matdim_exact(*lo.complex);
    out.push_back(record("matdim/md-lower", lo.provenance, std::to_string(md), "==",
                         lo.annotations["matdim_lower"].dump(), md == 3));
  }
  std::vector<Instance> pool;
  for (int a = 1; a <= 2; ++a) {
    for (int m = a; a + m <= 5; ++m) {
      pool.push_back(canned("ab", {{"a", std::to_string(a)}, {"m", std::to_string(m)}}));
    }
  }
  for (int n = 1; n <= 5; ++n) pool.push_back(canned("md-lower", {{"n", std::to_string(n)}}));
  const int randoms = detail::pick(o.count, 20);
  for (int i = 0; i < randoms; ++i) {
    Rng rng = gen::item_rng(o.seed, "matdim", i);
    Instance inst;
    inst.complex = gen::random_complex(rng, static_cast<int>(rng.uniform(2, 5)));
    inst.provenance = detail::prov("matdim", o.seed, i);
    pool.push_back(inst);
  }
  for (const auto& inst : pool) {
    const Complex& c = *inst.complex;
    int exact = matdim_exact(c);
    MatdimBound up = matdim_upper(c);
    bool inter = MatroidSystem(up.witness).intersection() == c;
    out.push_back(record("matdim/upper-vs-exact", inst.provenance, std::to_string(up.value), ">=",
                         std::to_string(exact), inter && up.value >= exact,
                         [&] { return inst; }));
  }
  return out;
}

// R:Q by vertices against max_U nu*(L_U)/nu(L_U); k = 3 gives at most 2.
inline Records ratio_rq(const SuiteOptions& o) {
  Records out;
  const int count = detail::pick(o.count, 50);
  const int max_n = std::min(detail::pick(o.max_n, 6), 6);
  const int max_k = std::min(detail::pick(o.max_k, 3), 3);
  for (int i = 0; i < count; ++i) {
    Rng rng = gen::item_rng(o.seed, "ratio-rq", i);
    int n = static_cast<int>(rng.uniform(2, max_n));
    int k = static_cast<int>(rng.uniform(std::min(2, max_k), max_k));
    MatroidSystem l = gen::random_system(rng, n, k, rng.coin(), false);
    Complex c = l.intersection();
    ExtRational byv = ratio(PolytopeRef::R(l), PolytopeRef::Q(c));
    ExtRational byf = ratio_rq_formula(l);
    std::string pv = detail::prov("ratio-rq", o.seed, i) + " k=" + std::to_string(k);
    auto replay = [&] { return detail::system_instance(l, pv); };
    out.push_back(record("ratio-rq/formula", pv, byv.str(), "==", byf.str(), byv == byf, replay));
    if (k == 3) {
      out.push_back(record("ratio-rq/k3", pv, byv.str(), "<=", "2",
                           byv <= ExtRational::of(2), replay));
    }
  }
  return out;
}

// (a,b)-colorable implies chi* <= a/b; choosable implies colorable.
inline Records ab_coloring(const SuiteOptions& o) {
  Records out;
  const int count = detail::pick(o.count, 20);
  const int max_n = std::min(detail::pick(o.max_n, 4), 6);
  for (int i = 0; i < count; ++i) {
    Rng rng = gen::item_rng(o.seed, "ab-coloring", i);
    int n = static_cast<int>(rng.uniform(2, max_n));
    Complex c = gen::random_complex(rng, n);
    Rational cs = chi_star(c, RatVec(n, Rational(1))).value;
    std::string pv = detail::prov("ab-coloring", o.seed, i);
    auto replay = [&] {
      Instance inst;
      inst.complex = c;
      inst.provenance = pv;
      return inst;
    };
    int colorable = 0, checked = 0;
    bool ok = true, impl = true;
    for (int b = 1; b <= 3; ++b) {
      for (int a = b; a <= 6; ++a) {
        bool col = ab_check(c, a, b, ABMode::kColorable);
        if (col) {
          ++colorable;
          ok = ok && cs <= Rational(a, b);
        }
        if (a <= 4 || b == 1) {
          ++checked;
          bool cho = ab_check(c, a, b, ABMode::kChoosable);
          impl = impl && (!cho || col);
        }
      }
    }
    out.push_back(record("ab-coloring/fractional", pv, str(cs), "<=",
                         "a/b for " + std::to_string(colorable) + " colorable pairs", ok, replay));
    out.push_back(record("ab-coloring/choosable", pv, std::to_string(checked) + " pairs", "=>",
                         "colorable", impl, replay));
  }
  return out;
}

}  // namespace suites

using SuiteFn = std::function<std::vector<VerificationRecord>(const SuiteOptions&)>;

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"edmonds-k2", suites::edmonds_k2}, {"sharpness", suites::sharpness},
      {"whitney", suites::whitney},       {"williams", suites::williams},
      {"meshulam", suites::meshulam},     {"abm", suites::abm},
      {"list-coloring", suites::list_coloring},
      {"seymour", suites::seymour},       {"duality", suites::duality},
      {"furedi", suites::furedi},         {"pq-witness", suites::pq_witness},
      {"matdim", suites::matdim},         {"ratio-rq", suites::ratio_rq},
      {"ab-coloring", suites::ab_coloring},
  };
  return table;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suite_table()) out.push_back(name);
  out.push_back("all");
  return out;
}

inline std::vector<VerificationRecord> run_suite(const std::string& name,
                                                 const SuiteOptions& opts = {}) {
  std::vector<VerificationRecord> out;
  bool found = false;
  for (const auto& [n, fn] : suite_table()) {
    if (name == "all" || name == n) {
      found = true;
      auto part = fn(opts);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  if (!found) throw DomainError("unknown suite '" + name + "'");
  return out;
}

inline bool any_violated(const std::vector<VerificationRecord>& rs) {
  return std::any_of(rs.begin(), rs.end(),
                     [](const auto& r) { return r.verdict == Verdict::kViolated; });
}

}  // namespace mtk
