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
#include <unordered_map>
#include <vector>

#include "mtk/core.hpp"
#include "mtk/hypergraph.hpp"

namespace mtk {

struct FrugalSequence {
  std::vector<SubsetMask> edges;
  ExtEta value;
};

// Every prefix adds at least two new vertices.
inline bool is_frugal(const std::vector<SubsetMask>& seq) {
  SubsetMask u;
  for (SubsetMask e : seq) {
    if ((e - u).size() < 2) return false;
    u |= e;
  }
  return true;
}

// Every vertex outside U is the sole remainder of some edge.
inline bool is_dominating_union(const Hypergraph& h, SubsetMask u) {
  SubsetMask dominated;
  for (SubsetMask f : h.edges()) {
    SubsetMask r = f - u;
    if (r.size() == 1) dominated |= r;
  }
  return (h.vertex_set() - u).subset_of(dominated);
}

inline long sequence_value(const std::vector<SubsetMask>& seq) {
  SubsetMask u;
  for (SubsetMask e : seq) u |= e;
  return u.size() - static_cast<long>(seq.size());
}

// Least |F| such that every vertex has a neighbour in the union of F.
inline ExtEta gamma_e_graph(const Hypergraph& g) {
  if (!g.is_uniform(2)) throw DomainError("gamma_e_graph: graph must be 2-uniform");
  const int n = g.n();
  std::vector<SubsetMask> nbr(n);
  for (SubsetMask e : g.edges()) {
    int a = e.lowest(), b = e.highest();
    nbr[a] = nbr[a].with(b);
    nbr[b] = nbr[b].with(a);
  }
  for (int v = 0; v < n; ++v) {
    if (nbr[v].empty()) return ExtEta::inf();
  }
  if (n == 0) return ExtEta::of(0);
  const auto& es = g.edges();
  // Iterative deepening: the lowest undominated vertex needs a neighbour
  // covered by some chosen edge.
  std::function<bool(SubsetMask, int)> feasible = [&](SubsetMask covered,
                                                      int budget) {
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (!nbr[u].intersects(covered)) {
        v = u;
        break;
      }
    }
    if (v < 0) return true;
    if (budget == 0) return false;
    for (SubsetMask e : es) {
      if (e.intersects(nbr[v]) && feasible(covered | e, budget - 1)) return true;
    }
    return false;
  };
  for (int k = 1;; ++k) {
    if (feasible(SubsetMask(), k)) return ExtEta::of(k);
  }
}

namespace detail {

// Longest frugal sequence reaching each union.
struct FrugalTable {
  std::unordered_map<SubsetMask, int> length;
  std::unordered_map<SubsetMask, std::pair<SubsetMask, SubsetMask>> parent;
};

inline FrugalTable frugal_table(const Hypergraph& h) {
  FrugalTable t;
  t.length[SubsetMask()] = 0;
  std::vector<std::vector<SubsetMask>> layer(h.n() + 1);
  layer[0].push_back(SubsetMask());
  for (int s = 0; s <= h.n(); ++s) {
    for (SubsetMask u : layer[s]) {
      int len = t.length[u];
      for (SubsetMask e : h.edges()) {
        if ((e - u).size() < 2) continue;
        SubsetMask w = u | e;
        auto it = t.length.find(w);
        if (it == t.length.end()) {
          t.length[w] = len + 1;
          t.parent[w] = {u, e};
          layer[w.size()].push_back(w);
        } else if (it->second < len + 1) {
          it->second = len + 1;
          t.parent[w] = {u, e};
        }
      }
    }
  }
  return t;
}

}  // namespace detail

// Minimum of |union K| - |K| over frugal dominating sequences K, with one
// optimal sequence.
inline FrugalSequence gamma_e_hyper_sequence(const Hypergraph& h) {
  check_cap(h.num_edges(), 16, "gamma_e_hyper");
  auto t = detail::frugal_table(h);
  FrugalSequence best{{}, ExtEta::inf()};
  SubsetMask best_u;
  std::vector<SubsetMask> keys;
  for (const auto& [u, len] : t.length) keys.push_back(u);
  std::sort(keys.begin(), keys.end());
  for (SubsetMask u : keys) {
    if (!is_dominating_union(h, u)) continue;
    ExtEta v = ExtEta::of(u.size() - t.length[u]);
    if (v < best.value) {
      best.value = v;
      best_u = u;
    }
  }
  if (!best.value.infinite) {
    for (SubsetMask u = best_u; !u.empty();) {
      auto [prev, e] = t.parent.at(u);
      best.edges.push_back(e);
      u = prev;
    }
    std::reverse(best.edges.begin(), best.edges.end());
  }
  return best;
}

inline ExtEta gamma_e_hyper(const Hypergraph& h) {
  return gamma_e_hyper_sequence(h).value;
}

enum class ConStrategy { kExhaustive, kGreedy, kAuto };

namespace detail {

struct GameState {
  SubsetMask verts;
  std::vector<std::pair<SubsetMask, SubsetMask>> edges;  // current, original

  void normalize() {
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const auto& a, const auto& b) {
                              return a.first == b.first;
                            }),
                edges.end());
    while (true) {
      SubsetMask singles;
      for (const auto& e : edges) {
        if (e.first.size() == 1) singles |= e.first;
      }
      if (singles.empty()) break;
      verts -= singles;
      std::erase_if(edges, [&](const auto& e) { return e.first.intersects(singles); });
    }
  }
  std::vector<std::uint64_t> key() const {
    std::vector<std::uint64_t> k{verts.bits()};
    for (const auto& e : edges) k.push_back(e.first.bits());
    return k;
  }
  std::vector<std::size_t> minimal_edges() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < edges.size() && minimal; ++j) {
        if (j != i && edges[j].first.subset_of(edges[i].first)) minimal = false;
      }
      if (minimal) out.push_back(i);
    }
    return out;
  }
  GameState deleted(std::size_t i) const {
    GameState s = *this;
    s.edges.erase(s.edges.begin() + static_cast<long>(i));
    s.normalize();
    return s;
  }
  GameState contracted(std::size_t i) const {
    SubsetMask f = edges[i].first;
    GameState s;
    s.verts = verts - f;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (j == i || edges[j].first.subset_of(f)) continue;
      s.edges.push_back({edges[j].first - f, edges[j].second});
    }
    s.normalize();
    return s;
  }
};

struct GameEntry {
  ExtEta value;
  SubsetMask chosen;  // current edge picked
  bool contract = false;
};

class Game {
 public:
  explicit Game(bool exhaustive) : exhaustive_(exhaustive) {}

  ExtEta value(const GameState& s) {
    if (s.verts.empty()) return ExtEta::of(0);
    if (s.edges.empty()) return ExtEta::inf();
    auto k = s.key();
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second.value;
    GameEntry best{ExtEta::of(0), SubsetMask(), false};
    bool first = true;
    for (std::size_t i : s.minimal_edges()) {
      ExtEta del = value(s.deleted(i));
      ExtEta con = value(s.contracted(i)) +
                   ExtEta::of(s.edges[i].first.size() - 1);
      GameEntry e{min(del, con), s.edges[i].first, con < del};
      if (first || best.value < e.value) best = e;
      first = false;
      if (!exhaustive_) break;
    }
    memo_[k] = best;
    return best.value;
  }

  // Replays the optimal line, collecting original contracted edges.
  std::vector<SubsetMask> line(GameState s) {
    std::vector<SubsetMask> out;
    while (!s.verts.empty() && !s.edges.empty()) {
      value(s);
      const GameEntry& e = memo_.at(s.key());
      std::size_t i = 0;
      while (s.edges[i].first != e.chosen) ++i;
      if (e.contract) {
        out.push_back(s.edges[i].second);
        s = s.contracted(i);
      } else {
        s = s.deleted(i);
      }
    }
    return out;
  }

 private:
  bool exhaustive_;
  std::map<std::vector<std::uint64_t>, GameEntry> memo_;
};

}  // namespace detail

// Plays the delete/contract recursion. The returned value is a lower bound on
// eta_H(I(H)) and, being the value of a frugal dominating sequence, is at
// least gamma_e_hyper(H).
inline FrugalSequence delete_contract_certificate(
    const Hypergraph& h, ConStrategy strategy = ConStrategy::kAuto) {
  bool exhaustive = strategy == ConStrategy::kExhaustive ||
                    (strategy == ConStrategy::kAuto && h.num_edges() <= 12);
  detail::GameState s;
  s.verts = h.vertex_set();
  for (SubsetMask e : h.edges()) {
    if (e.empty()) throw EmptyEdge("delete_contract_certificate: empty edge");
    s.edges.push_back({e, e});
  }
  s.normalize();
  detail::Game game(exhaustive);
  FrugalSequence out;
  out.value = game.value(s);
  out.edges = game.line(s);
  return out;
}

}  // namespace mtk
