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

#include <cstdlib>
#include <unordered_map>
#include <vector>

#include "mtk/complex.hpp"
#include "mtk/core.hpp"

namespace mtk {

struct HomologyGroup {
  long free_rank = 0;
  bool torsion = false;
  bool vanishes() const { return free_rank == 0 && !torsion; }
};

// Reduced homology in dimensions 0..dim (index i is H~_i).
struct HomologyProfile {
  std::vector<HomologyGroup> groups;
  bool empty_complex = false;  // only the empty face: H~_{-1} = Z
};

namespace detail {

struct Overflow {};

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline long long abs_of(long long a) {
  if (a == std::numeric_limits<long long>::min()) throw Overflow{};
  return a < 0 ? -a : a;
}
inline mpz_class abs_of(const mpz_class& a) { return abs(a); }

template <class T>
T mul(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, long long>) {
    return checked_mul(a, b);
  } else {
    return a * b;
  }
}
template <class T>
T sub(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, long long>) {
    return checked_sub(a, b);
  } else {
    return a - b;
  }
}

struct Diagonal {
  long rank = 0;
  bool nonunit = false;  // some diagonal entry with |d| > 1
};

// Diagonalizes an integer matrix by unimodular row and column operations,
// pivoting on an entry of least absolute value.
template <class T>
Diagonal diagonalize(std::vector<std::vector<T>> a) {
  Diagonal out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t r = 0; r < rows && r < cols; ++r) {
    // global least nonzero entry of the remaining block
    std::size_t pi = rows, pj = cols;
    T best = 0;
    for (std::size_t i = r; i < rows; ++i) {
      for (std::size_t j = r; j < cols; ++j) {
        if (a[i][j] != 0) {
          T v = abs_of(a[i][j]);
          if (pi == rows || v < best) {
            best = v;
            pi = i;
            pj = j;
            if (best == 1) break;
          }
        }
      }
      if (pi != rows && best == 1) break;
    }
    if (pi == rows) break;
    std::swap(a[r], a[pi]);
    for (std::size_t i = r; i < rows; ++i) std::swap(a[i][r], a[i][pj]);
    while (true) {
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][r] == 0) continue;
        T q = a[i][r] / a[r][r];
        if (q != 0) {
          for (std::size_t j = r; j < cols; ++j) {
            if (a[r][j] != 0) a[i][j] = sub(a[i][j], mul(q, a[r][j]));
          }
        }
        if (a[i][r] != 0) clean = false;
      }
      for (std::size_t j = r + 1; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        T q = a[r][j] / a[r][r];
        if (q != 0) {
          for (std::size_t i = r; i < rows; ++i) {
            if (a[i][r] != 0) a[i][j] = sub(a[i][j], mul(q, a[i][r]));
          }
        }
        if (a[r][j] != 0) clean = false;
      }
      if (clean) break;
      // move a smaller remainder into the pivot slot
      std::size_t bi = r, bj = r;
      T b = abs_of(a[r][r]);
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][r] != 0 && abs_of(a[i][r]) < b) {
          b = abs_of(a[i][r]);
          bi = i;
          bj = r;
        }
      }
      for (std::size_t j = r + 1; j < cols; ++j) {
        if (a[r][j] != 0 && abs_of(a[r][j]) < b) {
          b = abs_of(a[r][j]);
          bi = r;
          bj = j;
        }
      }
      if (bi != r) std::swap(a[r], a[bi]);
      if (bj != r) {
        for (std::size_t i = r; i < rows; ++i) std::swap(a[i][r], a[i][bj]);
      }
    }
    ++out.rank;
    if (abs_of(a[r][r]) != 1) out.nonunit = true;
  }
  return out;
}

inline Diagonal diagonalize_exact(const std::vector<std::vector<long long>>& a) {
  try {
    return diagonalize<long long>(a);
  } catch (const Overflow&) {
    std::vector<std::vector<mpz_class>> big(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      big[i].reserve(a[i].size());
      for (long long v : a[i]) big[i].emplace_back(static_cast<long>(v));
    }
    return diagonalize<mpz_class>(std::move(big));
  }
}

// Faces grouped by size, each group in lexicographic order.
inline std::vector<std::vector<SubsetMask>> faces_by_size(const Complex& c,
                                                         int max_size) {
  std::vector<std::vector<SubsetMask>> out(max_size + 1);
  for (SubsetMask f : c.faces()) {
    if (f.size() <= max_size) out[f.size()].push_back(f);
  }
  for (auto& g : out) std::sort(g.begin(), g.end(), lex_less);
  return out;
}

// Boundary from faces of size s to faces of size s-1 (rows index the smaller).
inline std::vector<std::vector<long long>> boundary(
    const std::vector<SubsetMask>& big, const std::vector<SubsetMask>& small) {
  std::unordered_map<SubsetMask, std::size_t> index;
  for (std::size_t i = 0; i < small.size(); ++i) index[small[i]] = i;
  std::vector<std::vector<long long>> m(small.size(),
                                        std::vector<long long>(big.size(), 0));
  for (std::size_t j = 0; j < big.size(); ++j) {
    int pos = 0;
    big[j].for_each([&](int v) {
      m[index.at(big[j].without(v))][j] = (pos % 2 == 0) ? 1 : -1;
      ++pos;
    });
  }
  return m;
}

inline bool is_cone(const Complex& c) {
  SubsetMask common = SubsetMask::full(c.n());
  for (SubsetMask f : c.maximal_faces()) common &= f;
  return !common.empty();
}

}  // namespace detail

// H~_i for i = 0..upto (default: dim C). Stops after the first non-vanishing
// group when stop_early is set.
inline HomologyProfile reduced_homology(const Complex& c, int upto = -1,
                                        bool stop_early = false) {
  HomologyProfile prof;
  int d = c.dim();
  if (d < 0) {
    prof.empty_complex = true;
    return prof;
  }
  if (upto < 0 || upto > d) upto = d;
  auto faces = detail::faces_by_size(c, upto + 2);
  // rank of the augmentation is 1
  long prev_rank = 1;
  for (int i = 0; i <= upto; ++i) {
    const auto& ci = faces[i + 1];
    detail::Diagonal next;
    if (i + 2 < static_cast<int>(faces.size()) && !faces[i + 2].empty()) {
      next = detail::diagonalize_exact(detail::boundary(faces[i + 2], ci));
    }
    HomologyGroup g;
    g.free_rank = static_cast<long>(ci.size()) - prev_rank - next.rank;
    g.torsion = next.nonunit;
    prof.groups.push_back(g);
    prev_rank = next.rank;
    if (stop_early && !g.vanishes()) break;
  }
  return prof;
}

// eta_H = 1 + least i with H~_i != 0; infinity if none; 0 for {emptyset}.
inline ExtEta eta_h(const Complex& c) {
  if (c.dim() < 0) return ExtEta::of(0);
  if (detail::is_cone(c)) return ExtEta::inf();
  auto prof = reduced_homology(c, -1, true);
  for (std::size_t i = 0; i < prof.groups.size(); ++i) {
    if (!prof.groups[i].vanishes()) return ExtEta::of(static_cast<long>(i) + 1);
  }
  return ExtEta::inf();
}

}  // namespace mtk
