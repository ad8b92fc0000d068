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

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "nncp/symmetry.hpp"

namespace nncp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kSupportThreshold = 1e-6;
// Dense basis inverse; beyond this many rows the memory cost is prohibitive.
inline constexpr std::size_t kMaxSimplexRows = 20000;

// min c^T x  s.t.  A x = b,  lower <= x <= upper.
struct LinearProgram {
  struct Entry {
    std::uint32_t row;
    double value;
  };
  std::size_t num_rows = 0;
  std::vector<double> rhs;
  std::vector<double> cost, lower, upper;
  std::vector<std::string> names;
  std::vector<std::size_t> col_start{0};  // CSC
  std::vector<Entry> entries;

  std::size_t num_cols() const { return cost.size(); }
  std::size_t add_row(double b);
  // Entries hitting the same row are summed; zero sums are dropped.
  std::size_t add_column(double c, double lo, double hi, std::vector<Entry> col,
                         std::string name = {});
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterLimit };
const char* lp_status_name(LpStatus s);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  double objective = 0;
  std::size_t iterations = 0;
  double residual = 0;  // max |Ax - b|
};

struct SimplexOptions {
  double pivot_tol = 1e-10;
  double feas_tol = 1e-9;
  double opt_tol = 1e-9;
  std::size_t iteration_limit = 0;  // 0 means 200 * (rows + cols)
  std::size_t refactor_every = 100;
};

// Two-phase bounded primal simplex with a dense basis inverse. Dantzig
// pricing, switching to Bland's rule during long degenerate stretches.
LpSolution simplex_solve(const LinearProgram& lp, const SimplexOptions& opt = {});

// Column layout shared by the scaled model and reduced solutions.
//   lambda(k, a)  intra-layer orbital a in layer k
//   theta0(u)     source into orbit u
//   theta(k, u)   out of orbit u after gate k (to t when k = m-1), -1 unless compliant
struct RsppLayout {
  std::size_t m = 0, A = 0, V = 0;
  std::vector<std::size_t> theta_offset;
  std::vector<std::vector<std::int32_t>> slot;  // slot[k][u]

  explicit RsppLayout(const QuotientGraph& q);
  RsppLayout() = default;
  std::size_t lambda(std::size_t k, std::size_t a) const { return k * A + a; }
  std::size_t theta0(std::size_t u) const { return m * A + u; }
  std::int64_t theta(std::size_t k, std::size_t u) const {
    return slot[k][u] < 0 ? -1 : static_cast<std::int64_t>(theta_offset[k]) + slot[k][u];
  }
  std::size_t num_vars() const { return theta_offset.empty() ? m * A + V : theta_offset.back(); }
  std::size_t num_rows() const { return m * V + 2; }
};

LinearProgram build_rspp_scaled(const QuotientGraph& q);

// Generalized flow on the quotient graph. Node 0 is s, node 1 is t, node
// 2 + k*V + u is orbit u in layer k.
struct GnfpModel {
  enum class ArcKind { Source, Cross, Sink, Intra };
  struct Arc {
    ArcKind kind;
    std::size_t tail, head;
    double w, u, p;
    std::size_t rspp_var;  // matching RSPP' column
  };
  std::size_t num_nodes = 0;
  std::vector<Arc> arcs;
};

GnfpModel build_gnfp(const QuotientGraph& q);
// Flow variables per arc: out(s) = 1, sum p*f into t = 1, out = sum p*f in elsewhere.
LinearProgram gnfp_lp(const GnfpModel& g);

struct ReducedSolution {
  long opt = 0;
  double objective = 0;
  bool fast_path = false;
  LpSolution lp;  // empty on the fast path
  RsppLayout layout;
  std::vector<char> support;  // by layout column
};

// Dijkstra on the quotient graph when every multiplier is 1, simplex otherwise.
ReducedSolution solve_reduced(const QuotientGraph& q, const SimplexOptions& opt = {});

struct ModelSizes {
  BigInt reduced_vars, reduced_rows, unreduced_vars, unreduced_rows;
  double var_reduction_pct = 0;
  double row_reduction_pct = 0;
};

ModelSizes model_sizes(const QuotientGraph& q);

// CPLEX LP text with fixed-point coefficients at 12 significant digits.
std::string export_lp(const LinearProgram& lp);

}  // namespace nncp
