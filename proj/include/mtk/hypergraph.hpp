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

#include <unordered_set>
#include <utility>
#include <vector>

#include "mtk/core.hpp"

namespace mtk {

class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, const std::vector<SubsetMask>& edges) : n_(n) {
    if (n < 0 || n > kMaxGround) {
      throw ValidationError("hypergraph ground set size out of range");
    }
    std::unordered_set<SubsetMask> seen;
    for (SubsetMask e : edges) {
      if (!e.subset_of(SubsetMask::full(n))) {
        throw ValidationError("edge " + to_string(e) + " outside ground set");
      }
      if (seen.insert(e).second) edges_.push_back(e);
    }
  }

  int n() const { return n_; }
  const std::vector<SubsetMask>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  SubsetMask vertex_set() const { return SubsetMask::full(n_); }

  SubsetMask edge_union() const {
    SubsetMask u;
    for (SubsetMask e : edges_) u |= e;
    return u;
  }
  bool is_uniform(int k) const {
    for (SubsetMask e : edges_) {
      if (e.size() != k) return false;
    }
    return true;
  }
  int degree(int v) const {
    int d = 0;
    for (SubsetMask e : edges_) d += e.contains(v);
    return d;
  }
  // Edge indices (a subset of [0, |E|)) forming a matching?
  bool is_matching(SubsetMask edge_ids) const {
    SubsetMask used;
    bool ok = true;
    edge_ids.for_each([&](int i) {
      if (edges_[i].intersects(used)) ok = false;
      used |= edges_[i];
    });
    return ok;
  }

  bool operator==(const Hypergraph& o) const {
    if (n_ != o.n_ || edges_.size() != o.edges_.size()) return false;
    std::unordered_set<SubsetMask> a(edges_.begin(), edges_.end());
    for (SubsetMask e : o.edges_) {
      if (!a.count(e)) return false;
    }
    return true;
  }

 private:
  int n_ = 0;
  std::vector<SubsetMask> edges_;
};

// A structure on a relabeled ground set; old_of_new[i] is the original
// index of new vertex i.
template <class T>
struct Relabeled {
  T value;
  std::vector<int> old_of_new;
};

// Dense ascending relabeling of the elements of `keep`.
inline std::vector<int> dense_map(SubsetMask keep) { return keep.elements(); }

inline SubsetMask compress(SubsetMask s, const std::vector<int>& old_of_new) {
  SubsetMask out;
  for (std::size_t i = 0; i < old_of_new.size(); ++i) {
    if (s.contains(old_of_new[i])) out = out.with(static_cast<int>(i));
  }
  return out;
}

inline SubsetMask expand(SubsetMask s, const std::vector<int>& old_of_new) {
  SubsetMask out;
  s.for_each([&](int i) { out = out.with(old_of_new[i]); });
  return out;
}

// H[U]: edges contained in U, over the ground set U.
inline Relabeled<Hypergraph> induced(const Hypergraph& h, SubsetMask u) {
  auto map = dense_map(u & h.vertex_set());
  std::vector<SubsetMask> edges;
  for (SubsetMask e : h.edges()) {
    if (e.subset_of(u)) edges.push_back(compress(e, map));
  }
  return {Hypergraph(static_cast<int>(map.size()), edges), map};
}

// H/X = {f \ X : f not inside X} over V \ X.
inline Relabeled<Hypergraph> contract(const Hypergraph& h, SubsetMask x) {
  auto map = dense_map(h.vertex_set() - x);
  std::vector<SubsetMask> edges;
  for (SubsetMask e : h.edges()) {
    if (e.subset_of(x)) continue;
    edges.push_back(compress(e - x, map));
  }
  return {Hypergraph(static_cast<int>(map.size()), edges), map};
}

// Same-index variants used internally by searches.
inline std::vector<SubsetMask> edges_within(const std::vector<SubsetMask>& edges,
                                            SubsetMask u) {
  std::vector<SubsetMask> out;
  for (SubsetMask e : edges) {
    if (e.subset_of(u)) out.push_back(e);
  }
  return out;
}

inline Hypergraph delete_edge(const Hypergraph& h, SubsetMask e) {
  std::vector<SubsetMask> edges;
  for (SubsetMask f : h.edges()) {
    if (f != e) edges.push_back(f);
  }
  return Hypergraph(h.n(), edges);
}

inline Hypergraph line_graph(const Hypergraph& h) {
  const auto& es = h.edges();
  check_cap(static_cast<int>(es.size()), kMaxGround, "line_graph");
  std::vector<SubsetMask> pairs;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i].empty()) throw EmptyEdge("line_graph: empty edge");
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (es[i].intersects(es[j])) {
        pairs.push_back(SubsetMask{static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  return Hypergraph(static_cast<int>(es.size()), pairs);
}

}  // namespace mtk
