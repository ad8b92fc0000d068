// Copyright 2026 The nncp Authors
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

#include <algorithm>
#include <cmath>
#include <map>

#include "nncp/lp.hpp"

namespace nncp {

std::size_t LinearProgram::add_row(double b) {
  rhs.push_back(b);
  return num_rows++;
}

std::size_t LinearProgram::add_column(double c, double lo, double hi, std::vector<Entry> col,
                                      std::string name) {
  std::map<std::uint32_t, double> merged;
  for (const auto& e : col) {
    if (e.row >= num_rows) fail(ErrorKind::Internal, "column refers to a missing row");
    merged[e.row] += e.value;
  }
  for (auto [r, v] : merged) {
    if (v != 0.0) entries.push_back({r, v});
  }
  col_start.push_back(entries.size());
  cost.push_back(c);
  lower.push_back(lo);
  upper.push_back(hi);
  names.push_back(std::move(name));
  return cost.size() - 1;
}

const char* lp_status_name(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "OPTIMAL";
    case LpStatus::Infeasible: return "INFEASIBLE";
    case LpStatus::Unbounded: return "UNBOUNDED";
    case LpStatus::IterLimit: return "ITER_LIMIT";
  }
  return "?";
}

namespace {

class Simplex {
 public:
  Simplex(const LinearProgram& lp, const SimplexOptions& opt) : lp_(lp), opt_(opt) {
    m_ = lp.num_rows;
    n_ = lp.num_cols();
    if (m_ > kMaxSimplexRows) {
      fail(ErrorKind::Cap, "LP has " + std::to_string(m_) + " rows; the dense simplex handles at most " +
                               std::to_string(kMaxSimplexRows));
    }
    total_ = n_ + m_;
    lo_.assign(lp.lower.begin(), lp.lower.end());
    hi_.assign(lp.upper.begin(), lp.upper.end());
    for (std::size_t j = 0; j < n_; ++j) {
      if (!std::isfinite(lo_[j])) fail(ErrorKind::InvalidArgument, "simplex needs finite lower bounds");
      if (hi_[j] < lo_[j]) fail(ErrorKind::InvalidArgument, "empty variable range");
    }
    lo_.resize(total_, 0.0);
    hi_.resize(total_, kInf);
    x_.assign(total_, 0.0);
    at_upper_.assign(total_, 0);
    for (std::size_t j = 0; j < n_; ++j) x_[j] = lo_[j];

    // Artificial i carries sign so the starting basis is feasible.
    std::vector<double> r = lp.rhs;
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t p = lp.col_start[j]; p < lp.col_start[j + 1]; ++p) {
        r[lp.entries[p].row] -= lp.entries[p].value * x_[j];
      }
    }
    sign_.resize(m_);
    basis_.resize(m_);
    pos_.assign(total_, -1);
    for (std::size_t i = 0; i < m_; ++i) {
      sign_[i] = r[i] < 0 ? -1.0 : 1.0;
      basis_[i] = n_ + i;
      pos_[n_ + i] = static_cast<long>(i);
      x_[n_ + i] = std::abs(r[i]);
    }
    binv_.assign(m_ * m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) binv_[i * m_ + i] = sign_[i];
    limit_ = opt.iteration_limit ? opt.iteration_limit : 200 * (m_ + n_);
  }

  LpSolution run() {
    LpSolution sol;
    cost_.assign(total_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) cost_[n_ + i] = 1.0;
    LpStatus st = optimize();
    if (st == LpStatus::IterLimit) return finish(st);
    double infeas = 0;
    for (std::size_t i = 0; i < m_; ++i) infeas += x_[n_ + i];
    double scale = 1.0;
    for (double b : lp_.rhs) scale = std::max(scale, std::abs(b));
    if (infeas > opt_.feas_tol * scale * static_cast<double>(std::max<std::size_t>(m_, 1))) {
      return finish(LpStatus::Infeasible);
    }
    for (std::size_t i = 0; i < m_; ++i) {
      hi_[n_ + i] = 0.0;
      if (pos_[n_ + i] < 0) x_[n_ + i] = 0.0;
    }
    std::fill(cost_.begin(), cost_.end(), 0.0);
    std::copy(lp_.cost.begin(), lp_.cost.end(), cost_.begin());
    st = optimize();
    return finish(st);
  }

 private:
  void column(std::size_t j, std::vector<double>& out) const {
    std::fill(out.begin(), out.end(), 0.0);
    if (j >= n_) {
      std::size_t i = j - n_;
      for (std::size_t r = 0; r < m_; ++r) out[r] = binv_[r * m_ + i] * sign_[i];
      return;
    }
    for (std::size_t p = lp_.col_start[j]; p < lp_.col_start[j + 1]; ++p) {
      std::size_t c = lp_.entries[p].row;
      double v = lp_.entries[p].value;
      for (std::size_t r = 0; r < m_; ++r) out[r] += binv_[r * m_ + c] * v;
    }
  }

  double reduced_cost(std::size_t j, const std::vector<double>& y) const {
    double d = cost_[j];
    if (j >= n_) return d - y[j - n_] * sign_[j - n_];
    for (std::size_t p = lp_.col_start[j]; p < lp_.col_start[j + 1]; ++p) {
      d -= y[lp_.entries[p].row] * lp_.entries[p].value;
    }
    return d;
  }

  // Gauss-Jordan on the current basis, then recompute basic values.
  void refactor() {
    std::vector<double> B(m_ * m_, 0.0);
    for (std::size_t c = 0; c < m_; ++c) {
      std::size_t j = basis_[c];
      if (j >= n_) {
        B[(j - n_) * m_ + c] = sign_[j - n_];
      } else {
        for (std::size_t p = lp_.col_start[j]; p < lp_.col_start[j + 1]; ++p) {
          B[lp_.entries[p].row * m_ + c] = lp_.entries[p].value;
        }
      }
    }
    std::vector<double> inv(m_ * m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) inv[i * m_ + i] = 1.0;
    for (std::size_t c = 0; c < m_; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < m_; ++r) {
        if (std::abs(B[r * m_ + c]) > std::abs(B[piv * m_ + c])) piv = r;
      }
      if (std::abs(B[piv * m_ + c]) < 1e-14) fail(ErrorKind::Solver, "singular basis");
      if (piv != c) {
        for (std::size_t k = 0; k < m_; ++k) {
          std::swap(B[piv * m_ + k], B[c * m_ + k]);
          std::swap(inv[piv * m_ + k], inv[c * m_ + k]);
        }
      }
      double d = B[c * m_ + c];
      for (std::size_t k = 0; k < m_; ++k) {
        B[c * m_ + k] /= d;
        inv[c * m_ + k] /= d;
      }
      for (std::size_t r = 0; r < m_; ++r) {
        double f = B[r * m_ + c];
        if (r == c || f == 0.0) continue;
        for (std::size_t k = 0; k < m_; ++k) {
          B[r * m_ + k] -= f * B[c * m_ + k];
          inv[r * m_ + k] -= f * inv[c * m_ + k];
        }
      }
    }
    binv_ = std::move(inv);
    std::vector<double> r = lp_.rhs;
    for (std::size_t j = 0; j < total_; ++j) {
      if (pos_[j] >= 0 || x_[j] == 0.0) continue;
      if (j >= n_) {
        r[j - n_] -= sign_[j - n_] * x_[j];
      } else {
        for (std::size_t p = lp_.col_start[j]; p < lp_.col_start[j + 1]; ++p) {
          r[lp_.entries[p].row] -= lp_.entries[p].value * x_[j];
        }
      }
    }
    for (std::size_t i = 0; i < m_; ++i) {
      double v = 0;
      for (std::size_t k = 0; k < m_; ++k) v += binv_[i * m_ + k] * r[k];
      x_[basis_[i]] = v;
    }
  }

  LpStatus optimize() {
    std::vector<double> y(m_), alpha(m_);
    std::size_t degenerate_run = 0;
    std::size_t since_refactor = 0;
    for (;;) {
      if (iterations_ >= limit_) return LpStatus::IterLimit;
      if (since_refactor >= opt_.refactor_every) {
        refactor();
        since_refactor = 0;
      }
      std::fill(y.begin(), y.end(), 0.0);
      for (std::size_t i = 0; i < m_; ++i) {
        double cb = cost_[basis_[i]];
        if (cb == 0.0) continue;
        for (std::size_t k = 0; k < m_; ++k) y[k] += cb * binv_[i * m_ + k];
      }

      const bool bland = degenerate_run > 50;
      std::size_t q = total_;
      double best = 0;
      for (std::size_t j = 0; j < total_; ++j) {
        if (pos_[j] >= 0 || hi_[j] == lo_[j]) continue;
        double d = reduced_cost(j, y);
        bool up = !at_upper_[j] && d < -opt_.opt_tol;
        bool down = at_upper_[j] && d > opt_.opt_tol;
        if (!up && !down) continue;
        if (bland) {
          q = j;
          break;
        }
        if (std::abs(d) > best) {
          best = std::abs(d);
          q = j;
        }
      }
      if (q == total_) return LpStatus::Optimal;

      column(q, alpha);
      const double dir = at_upper_[q] ? -1.0 : 1.0;
      double t_min = kInf;
      long leave = -1;
      bool leave_to_upper = false;
      for (std::size_t i = 0; i < m_; ++i) {
        if (std::abs(alpha[i]) <= opt_.pivot_tol) continue;
        double delta = -dir * alpha[i];
        std::size_t bv = basis_[i];
        double t;
        bool to_upper;
        if (delta < 0) {
          t = (x_[bv] - lo_[bv]) / -delta;
          to_upper = false;
        } else {
          if (!std::isfinite(hi_[bv])) continue;
          t = (hi_[bv] - x_[bv]) / delta;
          to_upper = true;
        }
        t = std::max(t, 0.0);
        bool take = false;
        if (leave < 0 || t < t_min - 1e-12) {
          take = true;
        } else if (t <= t_min + 1e-12) {
          take = bland ? bv < basis_[static_cast<std::size_t>(leave)]
                       : std::abs(alpha[i]) > std::abs(alpha[static_cast<std::size_t>(leave)]);
        }
        if (take) {
          t_min = std::min(t, t_min);
          leave = static_cast<long>(i);
          leave_to_upper = to_upper;
        }
      }
      double flip = hi_[q] - lo_[q];
      if (leave < 0 && !std::isfinite(flip)) return LpStatus::Unbounded;
      ++iterations_;

      if (std::isfinite(flip) && (leave < 0 || flip <= t_min)) {
        for (std::size_t i = 0; i < m_; ++i) x_[basis_[i]] -= dir * alpha[i] * flip;
        at_upper_[q] = !at_upper_[q];
        x_[q] = at_upper_[q] ? hi_[q] : lo_[q];
        degenerate_run = 0;
        continue;
      }

      const std::size_t r = static_cast<std::size_t>(leave);
      const double t = t_min;
      for (std::size_t i = 0; i < m_; ++i) x_[basis_[i]] -= dir * alpha[i] * t;
      x_[q] += dir * t;
      std::size_t out = basis_[r];
      x_[out] = leave_to_upper ? hi_[out] : lo_[out];
      at_upper_[out] = leave_to_upper;
      pos_[out] = -1;
      basis_[r] = q;
      pos_[q] = static_cast<long>(r);
      at_upper_[q] = 0;

      const double piv = alpha[r];
      double* row_r = &binv_[r * m_];
      for (std::size_t k = 0; k < m_; ++k) row_r[k] /= piv;
      for (std::size_t i = 0; i < m_; ++i) {
        if (i == r || alpha[i] == 0.0) continue;
        double f = alpha[i];
        double* row_i = &binv_[i * m_];
        for (std::size_t k = 0; k < m_; ++k) row_i[k] -= f * row_r[k];
      }
      ++since_refactor;
      degenerate_run = t < 1e-12 ? degenerate_run + 1 : 0;
    }
  }

  LpSolution finish(LpStatus st) {
    LpSolution sol;
    sol.status = st;
    sol.iterations = iterations_;
    sol.x.assign(x_.begin(), x_.begin() + static_cast<long>(n_));
    if (st == LpStatus::Optimal) {
      for (std::size_t j = 0; j < n_; ++j) {
        // Snap round-off onto the bounds.
        if (std::abs(sol.x[j] - lo_[j]) < opt_.feas_tol) sol.x[j] = lo_[j];
        if (std::isfinite(hi_[j]) && std::abs(sol.x[j] - hi_[j]) < opt_.feas_tol) sol.x[j] = hi_[j];
      }
    }
    std::vector<double> r = lp_.rhs;
    for (std::size_t j = 0; j < n_; ++j) {
      sol.objective += lp_.cost[j] * sol.x[j];
      for (std::size_t p = lp_.col_start[j]; p < lp_.col_start[j + 1]; ++p) {
        r[lp_.entries[p].row] -= lp_.entries[p].value * sol.x[j];
      }
    }
    for (double v : r) sol.residual = std::max(sol.residual, std::abs(v));
    if (st == LpStatus::Optimal) {
      if (sol.residual > 1e-8) {
        fail(ErrorKind::Solver, "simplex residual " + std::to_string(sol.residual) + " too large");
      }
      for (std::size_t j = 0; j < n_; ++j) {
        if (sol.x[j] < lo_[j] - opt_.feas_tol || sol.x[j] > hi_[j] + opt_.feas_tol) {
          fail(ErrorKind::Solver, "simplex solution violates a bound");
        }
      }
    }
    return sol;
  }

  const LinearProgram& lp_;
  SimplexOptions opt_;
  std::size_t m_ = 0, n_ = 0, total_ = 0;
  std::vector<double> lo_, hi_, x_, cost_, sign_, binv_;
  std::vector<char> at_upper_;
  std::vector<std::size_t> basis_;
  std::vector<long> pos_;
  std::size_t iterations_ = 0;
  std::size_t limit_ = 0;
};

}  // namespace

LpSolution simplex_solve(const LinearProgram& lp, const SimplexOptions& opt) {
  return Simplex(lp, opt).run();
}

}  // namespace nncp
