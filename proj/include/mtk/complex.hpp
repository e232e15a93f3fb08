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
#include <unordered_set>
#include <vector>

#include "mtk/core.hpp"
#include "mtk/hypergraph.hpp"

namespace mtk {

// A simplicial complex stored by its maximal faces.
class Complex {
 public:
  Complex() : n_(0), maximal_{SubsetMask()} {}
  // Accepts any generating family; keeps the maximal members. An empty family
  // gives the complex {emptyset}.
  Complex(int n, std::vector<SubsetMask> generators) : n_(n) {
    if (n < 0 || n > kMaxGround) {
      throw ValidationError("complex ground set size out of range");
    }
    for (SubsetMask f : generators) {
      if (!f.subset_of(SubsetMask::full(n))) {
        throw ValidationError("face " + to_string(f) + " outside ground set");
      }
    }
    if (generators.empty()) generators.push_back(SubsetMask());
    maximal_ = maximal_members(std::move(generators));
  }

  static Complex simplex(int n) { return Complex(n, {SubsetMask::full(n)}); }

  // Faces are the sets S with pred(S); pred must be closed under subsets.
  static Complex from_predicate(int n,
                                const std::function<bool(SubsetMask)>& pred) {
    std::vector<SubsetMask> out;
    std::function<void(int, SubsetMask)> rec = [&](int v, SubsetMask s) {
      if (v == n) {
        for (int u = 0; u < n; ++u) {
          if (!s.contains(u) && pred(s.with(u))) return;
        }
        out.push_back(s);
        return;
      }
      if (pred(s.with(v))) rec(v + 1, s.with(v));
      rec(v + 1, s);
    };
    rec(0, SubsetMask());
    return Complex(n, out);
  }

  int n() const { return n_; }
  const std::vector<SubsetMask>& maximal_faces() const { return maximal_; }

  bool contains(SubsetMask s) const {
    for (SubsetMask f : maximal_) {
      if (s.subset_of(f)) return true;
    }
    return false;
  }
  int rank(SubsetMask s) const {
    int r = 0;
    for (SubsetMask f : maximal_) r = std::max(r, (f & s).size());
    return r;
  }
  int rank() const { return rank(SubsetMask::full(n_)); }
  // Vertices lying in some face.
  SubsetMask vertices() const {
    SubsetMask u;
    for (SubsetMask f : maximal_) u |= f;
    return u;
  }
  int dim() const { return rank() - 1; }

  // C[S] on the same ground set.
  Complex induced(SubsetMask s) const {
    std::vector<SubsetMask> gens;
    gens.reserve(maximal_.size());
    for (SubsetMask f : maximal_) gens.push_back(f & s);
    return Complex(n_, gens);
  }
  Relabeled<Complex> induced_relabeled(SubsetMask s) const {
    auto map = dense_map(s & SubsetMask::full(n_));
    std::vector<SubsetMask> gens;
    for (SubsetMask f : maximal_) gens.push_back(compress(f & s, map));
    return {Complex(static_cast<int>(map.size()), gens), map};
  }

  // All faces, sorted by mask value.
  std::vector<SubsetMask> faces(std::size_t cap = kFaceCap) const {
    std::unordered_set<SubsetMask> seen;
    for (SubsetMask f : maximal_) {
      if (f.size() >= 63 || (std::size_t{1} << f.size()) > cap) {
        throw CapExceeded("face enumeration exceeds cap");
      }
      for_each_subset(f, [&](SubsetMask s) { seen.insert(s); });
      if (seen.size() > cap) throw CapExceeded("face enumeration exceeds cap");
    }
    std::vector<SubsetMask> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  // table[S] != 0 iff S is a face; n <= 24.
  std::vector<char> face_table() const {
    check_cap(n_, 24, "face_table");
    std::vector<char> t(std::size_t{1} << n_, 0);
    for (SubsetMask f : maximal_) t[f.bits()] = 1;
    for (int v = 0; v < n_; ++v) {
      std::uint64_t b = std::uint64_t{1} << v;
      for (std::uint64_t m = t.size(); m-- > 0;) {
        if ((m & b) && t[m]) t[m & ~b] = 1;
      }
    }
    return t;
  }

  bool operator==(const Complex& o) const {
    return n_ == o.n_ && maximal_ == o.maximal_;
  }

 private:
  int n_;
  std::vector<SubsetMask> maximal_;
};

// I(H): sets containing no edge.
inline Complex independence_complex(const Hypergraph& h) {
  const auto& es = h.edges();
  return Complex::from_predicate(h.n(), [&](SubsetMask s) {
    for (SubsetMask e : es) {
      if (e.subset_of(s)) return false;
    }
    return true;
  });
}

// M(H) = I(L(H)), on the edge index set.
inline Complex matching_complex(const Hypergraph& h) {
  return independence_complex(line_graph(h));
}

// Inclusion-minimal non-faces.
inline Hypergraph min_nonfaces(const Complex& c) {
  check_cap(c.n(), kSubsetCap, "min_nonfaces");
  const int n = c.n();
  std::vector<SubsetMask> out;
  if (n <= 24) {
    auto t = c.face_table();
    for (std::uint64_t m = 0; m < t.size(); ++m) {
      if (t[m]) continue;
      bool minimal = true;
      for (std::uint64_t b = m; b; b &= b - 1) {
        if (!t[m & ~(b & -b)]) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(SubsetMask(m));
    }
  }
  return Hypergraph(n, out);
}

// Faces A + (B shifted by C.n).
inline Complex join(const Complex& c, const Complex& d) {
  if (c.n() + d.n() > kMaxGround) throw CapExceeded("join: ground set too large");
  std::vector<SubsetMask> gens;
  for (SubsetMask a : c.maximal_faces()) {
    for (SubsetMask b : d.maximal_faces()) {
      gens.push_back(a | SubsetMask(b.bits() << c.n()));
    }
  }
  return Complex(c.n() + d.n(), gens);
}

}  // namespace mtk
