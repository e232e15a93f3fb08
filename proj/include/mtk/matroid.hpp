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

#include <memory>
#include <numeric>
#include <utility>
#include <variant>
#include <vector>

#include "mtk/complex.hpp"
#include "mtk/core.hpp"
#include "mtk/hypergraph.hpp"

namespace mtk {

class Matroid;

namespace detail {

struct UniformKind {
  int r;
};
struct GenPartitionKind {
  std::vector<SubsetMask> parts;
  std::vector<int> caps;
};
struct GraphicKind {
  int vertices;
  std::vector<std::pair<int, int>> edges;
};
struct ExplicitKind {
  Complex bases;
};
struct NCKind {
  SubsetMask u;
};
struct DualKind {
  std::shared_ptr<const Matroid> inner;
};
struct ContractionKind {
  std::shared_ptr<const Matroid> inner;
  SubsetMask x;
};
struct RestrictionKind {
  std::shared_ptr<const Matroid> inner;
  SubsetMask u;
};

inline int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

// Basis exchange on the maximal faces of c.
inline bool bases_exchange(const Complex& c) {
  const auto& bs = c.maximal_faces();
  std::unordered_set<SubsetMask> set(bs.begin(), bs.end());
  for (SubsetMask b : bs) {
    if (b.size() != bs.front().size()) return false;
  }
  for (SubsetMask b1 : bs) {
    for (SubsetMask b2 : bs) {
      bool ok = true;
      (b1 - b2).for_each([&](int x) {
        if (!ok) return;
        bool found = false;
        (b2 - b1).for_each([&](int y) {
          if (!found && set.count(b1.without(x).with(y))) found = true;
        });
        if (!found) ok = false;
      });
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace detail

class Matroid {
 public:
  enum class Kind {
    kUniform,
    kGenPartition,
    kGraphic,
    kExplicit,
    kNC,
    kDual,
    kContraction,
    kRestriction
  };

  static Matroid uniform(int n, int r) {
    if (r < 0 || r > n) throw ValidationError("uniform: rank out of range");
    return Matroid(n, detail::UniformKind{r});
  }
  static Matroid gen_partition(int n, std::vector<SubsetMask> parts,
                               std::vector<int> caps) {
    if (parts.size() != caps.size()) {
      throw ValidationError("gen_partition: parts and caps differ in length");
    }
    SubsetMask seen;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!parts[i].subset_of(SubsetMask::full(n))) {
        throw ValidationError("gen_partition: part outside ground set");
      }
      if (parts[i].intersects(seen)) {
        throw ValidationError("gen_partition: parts overlap");
      }
      if (caps[i] < 0 || caps[i] > parts[i].size()) {
        throw ValidationError("gen_partition: cap " + std::to_string(caps[i]) +
                              " exceeds part size " +
                              std::to_string(parts[i].size()));
      }
      seen |= parts[i];
    }
    if (seen != SubsetMask::full(n)) {
      throw ValidationError("gen_partition: parts do not cover ground set");
    }
    return Matroid(n, detail::GenPartitionKind{std::move(parts), std::move(caps)});
  }
  // Parts with cap 1.
  static Matroid partition(int n, std::vector<SubsetMask> parts) {
    std::vector<int> caps(parts.size(), 1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].empty()) caps[i] = 0;
    }
    return gen_partition(n, std::move(parts), std::move(caps));
  }
  static Matroid graphic(int vertices, std::vector<std::pair<int, int>> edges) {
    if (edges.size() > static_cast<std::size_t>(kMaxGround)) {
      throw CapExceeded("graphic: too many edges");
    }
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= vertices || b >= vertices) {
        throw ValidationError("graphic: edge endpoint out of range");
      }
    }
    int n = static_cast<int>(edges.size());
    return Matroid(n, detail::GraphicKind{vertices, std::move(edges)});
  }
  // Bases (or maximal independent sets) given as a complex; axioms checked.
  static Matroid from_complex(const Complex& c) {
    if (!detail::bases_exchange(c)) {
      throw ValidationError("explicit matroid violates the exchange axiom");
    }
    return Matroid(c.n(), detail::ExplicitKind{c});
  }
  static Matroid nc(int n, SubsetMask u) {
    if (u.empty() || !u.subset_of(SubsetMask::full(n))) {
      throw ValidationError("nc: U must be a non-empty subset of the ground set");
    }
    return Matroid(n, detail::NCKind{u});
  }

  int n() const { return n_; }
  Kind kind() const { return static_cast<Kind>(kind_.index()); }

  int rank(SubsetMask s) const {
    s &= SubsetMask::full(n_);
    return std::visit([&](const auto& k) { return rank_of(k, s); }, kind_);
  }
  int rank() const { return rank(SubsetMask::full(n_)); }
  bool independent(SubsetMask s) const { return rank(s) == s.size(); }

  // Accessors for serialization; valid only for the matching kind.
  int uniform_rank() const { return std::get<detail::UniformKind>(kind_).r; }
  const std::vector<SubsetMask>& parts() const {
    return std::get<detail::GenPartitionKind>(kind_).parts;
  }
  const std::vector<int>& caps() const {
    return std::get<detail::GenPartitionKind>(kind_).caps;
  }
  int graph_vertices() const {
    return std::get<detail::GraphicKind>(kind_).vertices;
  }
  const std::vector<std::pair<int, int>>& graph_edges() const {
    return std::get<detail::GraphicKind>(kind_).edges;
  }
  const Complex& explicit_bases() const {
    return std::get<detail::ExplicitKind>(kind_).bases;
  }
  SubsetMask nc_set() const { return std::get<detail::NCKind>(kind_).u; }

  // True for GenPartition with every cap equal to 1 (or 0 on empty parts).
  bool is_partition() const {
    if (kind() != Kind::kGenPartition) return false;
    for (std::size_t i = 0; i < parts().size(); ++i) {
      if (caps()[i] != std::min(1, parts()[i].size())) return false;
    }
    return true;
  }

 private:
  template <class K>
  Matroid(int n, K k) : n_(n), kind_(std::move(k)) {
    if (n < 0 || n > kMaxGround) throw ValidationError("matroid size out of range");
  }

  friend Matroid dual(const Matroid& m);
  friend Matroid contract_matroid(const Matroid& m, SubsetMask x);
  friend Matroid restrict_matroid(const Matroid& m, SubsetMask u);

  int rank_of(const detail::UniformKind& k, SubsetMask s) const {
    return std::min(s.size(), k.r);
  }
  int rank_of(const detail::GenPartitionKind& k, SubsetMask s) const {
    int r = 0;
    for (std::size_t i = 0; i < k.parts.size(); ++i) {
      r += std::min((k.parts[i] & s).size(), k.caps[i]);
    }
    return r;
  }
  int rank_of(const detail::GraphicKind& k, SubsetMask s) const {
    std::vector<int> parent(k.vertices);
    std::iota(parent.begin(), parent.end(), 0);
    int r = 0;
    s.for_each([&](int e) {
      int a = detail::find_root(parent, k.edges[e].first);
      int b = detail::find_root(parent, k.edges[e].second);
      if (a != b) {
        parent[a] = b;
        ++r;
      }
    });
    return r;
  }
  int rank_of(const detail::ExplicitKind& k, SubsetMask s) const {
    return k.bases.rank(s);
  }
  int rank_of(const detail::NCKind& k, SubsetMask s) const {
    return std::min((s & k.u).size(), k.u.size() - 1) + (s - k.u).size();
  }
  int rank_of(const detail::DualKind& k, SubsetMask s) const {
    SubsetMask all = SubsetMask::full(n_);
    return s.size() + k.inner->rank(all - s) - k.inner->rank(all);
  }
  int rank_of(const detail::ContractionKind& k, SubsetMask s) const {
    SubsetMask rest = SubsetMask::full(n_) - k.x;
    return k.inner->rank((s & k.x) | rest) - k.inner->rank(rest);
  }
  int rank_of(const detail::RestrictionKind& k, SubsetMask s) const {
    return k.inner->rank(s & k.u);
  }

  int n_;
  std::variant<detail::UniformKind, detail::GenPartitionKind, detail::GraphicKind,
               detail::ExplicitKind, detail::NCKind, detail::DualKind,
               detail::ContractionKind, detail::RestrictionKind>
      kind_;
};

inline Matroid dual(const Matroid& m) {
  return Matroid(m.n(), detail::DualKind{std::make_shared<const Matroid>(m)});
}

// M.X on the same ground set; elements outside X become loops.
inline Matroid contract_matroid(const Matroid& m, SubsetMask x) {
  return Matroid(m.n(), detail::ContractionKind{std::make_shared<const Matroid>(m),
                                                x & SubsetMask::full(m.n())});
}

// M[U] on the same ground set; elements outside U become loops.
inline Matroid restrict_matroid(const Matroid& m, SubsetMask u) {
  return Matroid(m.n(), detail::RestrictionKind{std::make_shared<const Matroid>(m),
                                                u & SubsetMask::full(m.n())});
}

inline SubsetMask span(const Matroid& m, SubsetMask a) {
  int r = m.rank(a);
  SubsetMask out = a;
  for (int x = 0; x < m.n(); ++x) {
    if (!a.contains(x) && m.rank(a.with(x)) == r) out = out.with(x);
  }
  return out;
}

inline SubsetMask loops(const Matroid& m) { return span(m, SubsetMask()); }

inline SubsetMask coloops(const Matroid& m) {
  SubsetMask all = SubsetMask::full(m.n());
  int r = m.rank(all);
  SubsetMask out;
  for (int x = 0; x < m.n(); ++x) {
    if (m.rank(all.without(x)) < r) out = out.with(x);
  }
  return out;
}

// The independent sets as a complex.
inline Complex as_complex(const Matroid& m) {
  check_cap(m.n(), kSubsetCap, "as_complex");
  return Complex::from_predicate(m.n(),
                                 [&](SubsetMask s) { return m.independent(s); });
}

inline Hypergraph circuits(const Matroid& m) {
  check_cap(m.n(), kSubsetCap, "circuits");
  std::vector<SubsetMask> out;
  const std::uint64_t total = std::uint64_t{1} << m.n();
  for (std::uint64_t b = 1; b < total; ++b) {
    SubsetMask s(b);
    if (m.rank(s) != s.size() - 1) continue;
    bool minimal = true;
    s.for_each([&](int v) {
      if (minimal && !m.independent(s.without(v))) minimal = false;
    });
    if (minimal) out.push_back(s);
  }
  return Hypergraph(m.n(), out);
}

// All flats, ascending by mask.
inline std::vector<SubsetMask> flats(const Matroid& m) {
  check_cap(m.n(), kSubsetCap, "flats");
  std::vector<SubsetMask> out;
  const std::uint64_t total = std::uint64_t{1} << m.n();
  for (std::uint64_t b = 0; b < total; ++b) {
    SubsetMask s(b);
    int r = m.rank(s);
    bool closed = true;
    for (int x = 0; x < m.n() && closed; ++x) {
      if (!s.contains(x) && m.rank(s.with(x)) == r) closed = false;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

// Exchange axiom checked directly on all pairs of faces; n <= 12.
inline bool check_matroid_axioms(const Complex& c) {
  check_cap(c.n(), 12, "check_matroid_axioms");
  auto t = c.face_table();
  std::vector<std::vector<std::uint64_t>> by_size(c.n() + 2);
  for (std::uint64_t m = 0; m < t.size(); ++m) {
    if (t[m]) by_size[std::popcount(m)].push_back(m);
  }
  // Augmentation between consecutive sizes implies it for all |S| < |T|.
  for (int s = 0; s + 1 <= c.n(); ++s) {
    for (std::uint64_t a : by_size[s]) {
      for (std::uint64_t b : by_size[s + 1]) {
        bool ok = false;
        for (std::uint64_t d = b & ~a; d; d &= d - 1) {
          if (t[a | (d & -d)]) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

struct MatroidSystem {
  std::vector<Matroid> matroids;

  MatroidSystem() = default;
  explicit MatroidSystem(std::vector<Matroid> ms) : matroids(std::move(ms)) {
    if (matroids.empty()) throw ValidationError("matroid system needs k >= 1");
    for (const auto& m : matroids) {
      if (m.n() != matroids.front().n()) {
        throw ValidationError("matroid system: ground sets differ");
      }
    }
  }
  int n() const { return matroids.front().n(); }
  int k() const { return static_cast<int>(matroids.size()); }
  bool independent(SubsetMask s) const {
    for (const auto& m : matroids) {
      if (!m.independent(s)) return false;
    }
    return true;
  }
  bool all_partition() const {
    for (const auto& m : matroids) {
      if (!m.is_partition()) return false;
    }
    return true;
  }
  Complex intersection() const {
    check_cap(n(), kSubsetCap, "intersection");
    return Complex::from_predicate(n(),
                                   [&](SubsetMask s) { return independent(s); });
  }
  // L_U: each matroid restricted to U.
  MatroidSystem restricted(SubsetMask u) const {
    std::vector<Matroid> out;
    for (const auto& m : matroids) out.push_back(restrict_matroid(m, u));
    return MatroidSystem(std::move(out));
  }
};

}  // namespace mtk
