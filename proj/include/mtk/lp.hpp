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

#include <string>
#include <vector>

#include "mtk/core.hpp"

namespace mtk {

enum class Sense { kMinimize, kMaximize };
enum class Rel { kLe, kGe, kEq };
enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

struct LPRow {
  RatVec coeffs;
  Rel rel = Rel::kLe;
  Rational rhs = 0;
};

struct LPProblem {
  Sense sense = Sense::kMinimize;
  RatVec objective;
  std::vector<LPRow> rows;
  // Empty means every variable is non-negative.
  std::vector<bool> nonneg;

  int num_vars() const { return static_cast<int>(objective.size()); }
  bool is_nonneg(int j) const { return nonneg.empty() || nonneg[j]; }
  void add_row(RatVec coeffs, Rel rel, Rational rhs) {
    rows.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

// For a minimization, dual y has y_i >= 0 on >= rows, y_i <= 0 on <= rows,
// and satisfies A^T y <= c (equality on free variables). For a maximization
// the signs flip: y_i >= 0 on <= rows, A^T y >= c. In both cases
// b.y equals the optimum.
struct LPResult {
  LPStatus status = LPStatus::kInfeasible;
  Rational optimum = 0;
  RatVec primal;
  RatVec dual;
};

inline const char* status_name(LPStatus s) {
  switch (s) {
    case LPStatus::kOptimal:
      return "optimal";
    case LPStatus::kInfeasible:
      return "infeasible";
    case LPStatus::kUnbounded:
      return "unbounded";
  }
  return "?";
}

namespace detail {

inline void check_dims(const LPProblem& p) {
  const std::size_t n = p.objective.size();
  if (!p.nonneg.empty() && p.nonneg.size() != n) {
    throw DomainError("lp: non-negativity flags have wrong length");
  }
  for (const auto& r : p.rows) {
    if (r.coeffs.size() != n) throw DomainError("lp: row length mismatch");
  }
}

// Dense two-phase tableau simplex with Bland's rule; minimizes.
class Tableau {
 public:
  explicit Tableau(const LPProblem& p) : p_(p) {
    const int n = p.num_vars();
    const int m = static_cast<int>(p.rows.size());
    // structural columns
    for (int j = 0; j < n; ++j) {
      col_var_.push_back(j);
      col_sign_.push_back(1);
      if (!p.is_nonneg(j)) {
        col_var_.push_back(j);
        col_sign_.push_back(-1);
      }
    }
    num_struct_ = static_cast<int>(col_var_.size());
    flipped_.assign(m, false);
    std::vector<Rel> rel(m);
    for (int i = 0; i < m; ++i) {
      rel[i] = p.rows[i].rel;
      if (sgn(p.rows[i].rhs) < 0) {
        flipped_[i] = true;
        if (rel[i] == Rel::kLe) {
          rel[i] = Rel::kGe;
        } else if (rel[i] == Rel::kGe) {
          rel[i] = Rel::kLe;
        }
      }
    }
    // slack columns then artificial columns
    int cols = num_struct_;
    std::vector<int> slack_col(m, -1);
    for (int i = 0; i < m; ++i) {
      if (rel[i] != Rel::kEq) slack_col[i] = cols++;
    }
    first_art_ = cols;
    init_col_.assign(m, -1);
    for (int i = 0; i < m; ++i) {
      if (rel[i] == Rel::kLe) {
        init_col_[i] = slack_col[i];
      } else {
        init_col_[i] = cols++;
      }
    }
    cols_ = cols;
    t_.assign(m, RatVec(cols_ + 1, Rational(0)));
    for (int i = 0; i < m; ++i) {
      const Rational sign = flipped_[i] ? -1 : 1;
      for (int c = 0; c < num_struct_; ++c) {
        const Rational& a = p.rows[i].coeffs[col_var_[c]];
        if (sgn(a) != 0) t_[i][c] = sign * col_sign_[c] * a;
      }
      if (slack_col[i] >= 0) t_[i][slack_col[i]] = rel[i] == Rel::kLe ? 1 : -1;
      t_[i][init_col_[i]] = 1;
      t_[i][cols_] = sign * p.rows[i].rhs;
    }
    basis_ = init_col_;
    cost_.assign(cols_, Rational(0));
    Rational osign = p.sense == Sense::kMaximize ? -1 : 1;
    for (int c = 0; c < num_struct_; ++c) {
      cost_[c] = osign * col_sign_[c] * p.objective[col_var_[c]];
    }
  }

  LPResult run() {
    LPResult res;
    const int m = static_cast<int>(t_.size());
    // phase 1
    bool any_art = false;
    for (int i = 0; i < m; ++i) any_art |= init_col_[i] >= first_art_;
    if (any_art) {
      RatVec c1(cols_, Rational(0));
      for (int c = first_art_; c < cols_; ++c) c1[c] = 1;
      set_objective(c1);
      iterate();  // bounded below by 0
      if (sgn(z_) != 0) {
        res.status = LPStatus::kInfeasible;
        return res;
      }
      // drive zero-level artificials out of the basis
      for (int i = 0; i < m; ++i) {
        if (basis_[i] < first_art_) continue;
        for (int c = 0; c < first_art_; ++c) {
          if (sgn(t_[i][c]) != 0) {
            pivot(i, c);
            break;
          }
        }
      }
    }
    set_objective(cost_);
    if (!iterate()) {
      res.status = LPStatus::kUnbounded;
      return res;
    }
    res.status = LPStatus::kOptimal;
    const int n = p_.num_vars();
    res.primal.assign(n, Rational(0));
    for (int i = 0; i < m; ++i) {
      int c = basis_[i];
      if (c < num_struct_) res.primal[col_var_[c]] += col_sign_[c] * t_[i][cols_];
    }
    res.dual.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) {
      Rational y = -d_[init_col_[i]];
      if (flipped_[i]) y = -y;
      if (p_.sense == Sense::kMaximize) y = -y;
      res.dual[i] = y;
    }
    res.optimum = 0;
    for (int j = 0; j < n; ++j) res.optimum += p_.objective[j] * res.primal[j];
    return res;
  }

 private:
  void set_objective(const RatVec& c) {
    d_ = c;
    z_ = 0;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      const Rational& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (int k = 0; k < cols_; ++k) {
        if (sgn(t_[i][k]) != 0) d_[k] -= cb * t_[i][k];
      }
      z_ += cb * t_[i][cols_];
    }
  }

  // Returns false when unbounded.
  bool iterate() {
    const int m = static_cast<int>(t_.size());
    while (true) {
      int enter = -1;
      for (int c = 0; c < first_art_; ++c) {
        if (sgn(d_[c]) < 0) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m; ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int r, int c) {
    const int m = static_cast<int>(t_.size());
    Rational inv = 1 / t_[r][c];
    std::vector<int> nz;
    for (int k = 0; k <= cols_; ++k) {
      if (sgn(t_[r][k]) != 0) {
        t_[r][k] *= inv;
        nz.push_back(k);
      }
    }
    Rational f, tmp;
    for (int i = 0; i < m; ++i) {
      if (i == r || sgn(t_[i][c]) == 0) continue;
      f = t_[i][c];
      for (int k : nz) {
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), t_[r][k].get_mpq_t());
        mpq_sub(t_[i][k].get_mpq_t(), t_[i][k].get_mpq_t(), tmp.get_mpq_t());
      }
    }
    if (sgn(d_[c]) != 0) {
      f = d_[c];
      for (int k : nz) {
        if (k == cols_) {
          z_ += f * t_[r][k];
        } else {
          d_[k] -= f * t_[r][k];
        }
      }
    }
    basis_[r] = c;
  }

  const LPProblem& p_;
  std::vector<int> col_var_;
  std::vector<int> col_sign_;
  int num_struct_ = 0;
  int first_art_ = 0;
  int cols_ = 0;
  std::vector<bool> flipped_;
  std::vector<int> init_col_;
  std::vector<RatVec> t_;
  std::vector<int> basis_;
  RatVec cost_;
  RatVec d_;
  Rational z_;
};

inline LPResult solve_direct(const LPProblem& p) {
  Tableau t(p);
  return t.run();
}

// The LP dual, with variables y' where y = sign[i] * y'.
inline LPProblem dual_problem(const LPProblem& p, std::vector<int>& sign) {
  const int n = p.num_vars();
  const int m = static_cast<int>(p.rows.size());
  const bool min = p.sense == Sense::kMinimize;
  LPProblem d;
  d.sense = min ? Sense::kMaximize : Sense::kMinimize;
  d.objective.resize(m);
  d.nonneg.assign(m, true);
  sign.assign(m, 1);
  for (int i = 0; i < m; ++i) {
    Rel r = p.rows[i].rel;
    if (r == Rel::kEq) {
      d.nonneg[i] = false;
    } else if ((min && r == Rel::kLe) || (!min && r == Rel::kGe)) {
      sign[i] = -1;
    }
    d.objective[i] = sign[i] * p.rows[i].rhs;
  }
  for (int j = 0; j < n; ++j) {
    LPRow row;
    row.coeffs.resize(m);
    for (int i = 0; i < m; ++i) row.coeffs[i] = sign[i] * p.rows[i].coeffs[j];
    row.rel = !p.is_nonneg(j) ? Rel::kEq : (min ? Rel::kLe : Rel::kGe);
    row.rhs = p.objective[j];
    d.rows.push_back(std::move(row));
  }
  return d;
}

}  // namespace detail

// Exact post-hoc check of primal feasibility, dual feasibility, equal
// objectives and complementary slackness.
inline bool certify(const LPProblem& p, const LPResult& r) {
  if (r.status != LPStatus::kOptimal) return true;
  const int n = p.num_vars();
  const int m = static_cast<int>(p.rows.size());
  if (static_cast<int>(r.primal.size()) != n || static_cast<int>(r.dual.size()) != m) {
    return false;
  }
  const bool min = p.sense == Sense::kMinimize;
  Rational obj = dot(p.objective, r.primal);
  if (obj != r.optimum) return false;
  Rational dual_obj = 0;
  for (int i = 0; i < m; ++i) {
    const auto& row = p.rows[i];
    Rational lhs = dot(row.coeffs, r.primal);
    Rational slack = lhs - row.rhs;
    if (row.rel == Rel::kLe && sgn(slack) > 0) return false;
    if (row.rel == Rel::kGe && sgn(slack) < 0) return false;
    if (row.rel == Rel::kEq && sgn(slack) != 0) return false;
    const Rational& y = r.dual[i];
    bool pos_row = (row.rel == Rel::kGe) == min;
    if (row.rel != Rel::kEq) {
      if (pos_row && sgn(y) < 0) return false;
      if (!pos_row && sgn(y) > 0) return false;
    }
    if (sgn(y) != 0 && sgn(slack) != 0) return false;
    dual_obj += row.rhs * y;
  }
  for (int j = 0; j < n; ++j) {
    if (p.is_nonneg(j) && sgn(r.primal[j]) < 0) return false;
    Rational aty = 0;
    for (int i = 0; i < m; ++i) {
      if (sgn(p.rows[i].coeffs[j]) != 0) aty += p.rows[i].coeffs[j] * r.dual[i];
    }
    Rational red = p.objective[j] - aty;
    if (!p.is_nonneg(j)) {
      if (sgn(red) != 0) return false;
    } else {
      if (min && sgn(red) < 0) return false;
      if (!min && sgn(red) > 0) return false;
      if (sgn(red) != 0 && sgn(r.primal[j]) != 0) return false;
    }
  }
  return dual_obj == r.optimum;
}

// Solves exactly; tall problems are solved through their dual. Optimal
// results are certified before being returned.
inline LPResult solve(const LPProblem& p) {
  detail::check_dims(p);
  const int n = p.num_vars();
  const int m = static_cast<int>(p.rows.size());
  if (m > 2 * n + 8) {
    std::vector<int> sign;
    LPProblem d = detail::dual_problem(p, sign);
    LPResult dr = detail::solve_direct(d);
    if (dr.status == LPStatus::kOptimal) {
      LPResult r;
      r.status = LPStatus::kOptimal;
      r.primal = dr.dual;
      r.dual.resize(m);
      for (int i = 0; i < m; ++i) r.dual[i] = sign[i] * dr.primal[i];
      r.optimum = dot(p.objective, r.primal);
      if (certify(p, r)) return r;
    } else if (dr.status == LPStatus::kUnbounded) {
      LPResult r;
      r.status = LPStatus::kInfeasible;
      return r;
    }
  }
  LPResult r = detail::solve_direct(p);
  if (!certify(p, r)) throw Error("lp: solution failed certification");
  return r;
}

}  // namespace mtk
