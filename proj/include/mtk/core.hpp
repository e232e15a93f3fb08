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

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mtk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};
class ValidationError : public Error {
 public:
  using Error::Error;
};
class CapExceeded : public Error {
 public:
  using Error::Error;
};
class Uncolorable : public Error {
 public:
  using Error::Error;
};
class Infeasible : public Error {
 public:
  using Error::Error;
};
class DomainError : public Error {
 public:
  using Error::Error;
};
class Unsupported : public Error {
 public:
  using Error::Error;
};
class EmptyEdge : public Error {
 public:
  using Error::Error;
};

inline constexpr int kMaxGround = 64;
// Enumeration caps (subsets of the ground set, simplices).
inline constexpr int kSubsetCap = 20;
inline constexpr std::size_t kFaceCap = std::size_t{1} << 20;

inline void check_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": ground set " + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
  }
}

// A subset of {0, ..., 63}.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}
  SubsetMask(std::initializer_list<int> elems) {
    for (int e : elems) bits_ |= bit(e);
  }
  static SubsetMask of(const std::vector<int>& elems) {
    SubsetMask s;
    for (int e : elems) s.bits_ |= bit(e);
    return s;
  }
  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1);
  }
  static constexpr SubsetMask singleton(int v) { return SubsetMask(bit(v)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr SubsetMask with(int v) const { return SubsetMask(bits_ | bit(v)); }
  constexpr SubsetMask without(int v) const {
    return SubsetMask(bits_ & ~bit(v));
  }
  constexpr bool subset_of(SubsetMask o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool intersects(SubsetMask o) const {
    return (bits_ & o.bits_) != 0;
  }
  // Smallest element, or -1.
  constexpr int lowest() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
  }
  constexpr int highest() const {
    return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_);
  }
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) f(std::countr_zero(b));
  }

  constexpr SubsetMask operator|(SubsetMask o) const {
    return SubsetMask(bits_ | o.bits_);
  }
  constexpr SubsetMask operator&(SubsetMask o) const {
    return SubsetMask(bits_ & o.bits_);
  }
  constexpr SubsetMask operator-(SubsetMask o) const {
    return SubsetMask(bits_ & ~o.bits_);
  }
  constexpr SubsetMask operator^(SubsetMask o) const {
    return SubsetMask(bits_ ^ o.bits_);
  }
  SubsetMask& operator|=(SubsetMask o) {
    bits_ |= o.bits_;
    return *this;
  }
  SubsetMask& operator&=(SubsetMask o) {
    bits_ &= o.bits_;
    return *this;
  }
  SubsetMask& operator-=(SubsetMask o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const SubsetMask&) const = default;
  constexpr auto operator<=>(const SubsetMask&) const = default;

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
  std::uint64_t bits_ = 0;
};

// Calls f on every subset of m (including the empty set and m itself).
template <class F>
void for_each_subset(SubsetMask m, F&& f) {
  std::uint64_t s = m.bits();
  while (true) {
    f(SubsetMask(s));
    if (s == 0) break;
    s = (s - 1) & m.bits();
  }
}

// Lexicographic order on sorted element lists.
inline bool lex_less(SubsetMask a, SubsetMask b) {
  auto ea = a.elements();
  auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(),
                                      eb.end());
}

inline std::string to_string(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(v);
  });
  return out + "}";
}

// Keeps the inclusion-maximal members, sorted and deduplicated.
inline std::vector<SubsetMask> maximal_members(std::vector<SubsetMask> sets) {
  std::sort(sets.begin(), sets.end(), [](SubsetMask a, SubsetMask b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<SubsetMask> out;
  for (SubsetMask s : sets) {
    bool dominated = false;
    for (SubsetMask t : out) {
      if (s.subset_of(t)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<SubsetMask> minimal_members(std::vector<SubsetMask> sets) {
  std::sort(sets.begin(), sets.end(), [](SubsetMask a, SubsetMask b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<SubsetMask> out;
  for (SubsetMask s : sets) {
    bool dominated = false;
    for (SubsetMask t : out) {
      if (t.subset_of(s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exact rationals.
using Rational = mpq_class;
using RatVec = std::vector<Rational>;

inline Rational make_rational(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string format_rational(Rational r) {
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational sum_over(const RatVec& f, SubsetMask s) {
  Rational acc = 0;
  s.for_each([&](int v) { acc += f[v]; });
  return acc;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline RatVec indicator(int n, SubsetMask s) {
  RatVec out(n, Rational(0));
  s.for_each([&](int v) { out[v] = 1; });
  return out;
}

inline Rational ceil_rational(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

// Non-negative integer or +infinity.
struct ExtEta {
  bool infinite = false;
  long value = 0;

  static ExtEta inf() { return {true, 0}; }
  static ExtEta of(long v) { return {false, v}; }

  bool operator==(const ExtEta& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
  bool operator<(const ExtEta& o) const {
    if (infinite) return false;
    if (o.infinite) return true;
    return value < o.value;
  }
  bool operator<=(const ExtEta& o) const { return !(o < *this); }
  bool operator>=(const ExtEta& o) const { return !(*this < o); }
  bool operator>(const ExtEta& o) const { return o < *this; }
  ExtEta operator+(const ExtEta& o) const {
    if (infinite || o.infinite) return inf();
    return of(value + o.value);
  }
  std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

inline ExtEta min(ExtEta a, ExtEta b) { return a < b ? a : b; }

// Non-negative rational or +infinity.
struct ExtRational {
  bool infinite = false;
  Rational value = 0;

  static ExtRational inf() { return {true, Rational(0)}; }
  static ExtRational of(const Rational& v) { return {false, v}; }

  bool operator==(const ExtRational& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
  bool operator<(const ExtRational& o) const {
    if (infinite) return false;
    if (o.infinite) return true;
    return value < o.value;
  }
  bool operator<=(const ExtRational& o) const { return !(o < *this); }
  bool operator>(const ExtRational& o) const { return o < *this; }
  bool operator>=(const ExtRational& o) const { return !(*this < o); }
  std::string str() const {
    return infinite ? "inf" : format_rational(value);
  }
};

inline ExtRational max(const ExtRational& a, const ExtRational& b) {
  return a < b ? b : a;
}

// c / d with c/inf = 0 and c/0 = inf for c > 0; 0/0 is taken as 0.
inline ExtRational divide(const Rational& c, const ExtEta& d) {
  if (d.infinite) return ExtRational::of(0);
  if (d.value == 0) return sgn(c) > 0 ? ExtRational::inf() : ExtRational::of(0);
  return ExtRational::of(c / Rational(d.value));
}

}  // namespace mtk

template <>
struct std::hash<mtk::SubsetMask> {
  std::size_t operator()(const mtk::SubsetMask& s) const noexcept {
    return std::hash<std::uint64_t>()(s.bits());
  }
};
