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
#include <cstdio>
#include <functional>
#include <queue>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "nncp/lp.hpp"

namespace nncp {

namespace {

// Exact integer to double; coefficients must stay exactly representable.
double exact_double(const BigInt& v) {
  static const BigInt limit = BigInt(1) << 53;
  if (v > limit) fail(ErrorKind::Internal, "LP coefficient " + v.str() + " exceeds 2^53");
  return v.convert_to<double>();
}

double big_to_double(const BigInt& v) {
  double d = v.convert_to<double>();
  return std::isfinite(d) ? d : kInf;
}

}  // namespace

RsppLayout::RsppLayout(const QuotientGraph& q)
    : m(q.m), A(q.arcs().size()), V(q.nodes().size()) {
  slot.assign(m, std::vector<std::int32_t>(V, -1));
  theta_offset.resize(m + 1);
  std::size_t off = m * A + V;
  for (std::size_t k = 0; k < m; ++k) {
    theta_offset[k] = off;
    std::int32_t s = 0;
    for (std::uint32_t u : q.compliant[k]) slot[k][u] = s++;
    off += static_cast<std::size_t>(s);
  }
  theta_offset[m] = off;
}

LinearProgram build_rspp_scaled(const QuotientGraph& q) {
  const RsppLayout L(q);
  const std::size_t m = L.m, V = L.V;
  const auto& nodes = q.nodes();
  const auto& arcs = q.arcs();
  std::vector<double> ratio(V);
  for (std::size_t u = 0; u < V; ++u) ratio[u] = exact_double(nodes[u].ratio);

  LinearProgram lp;
  lp.add_row(1.0);  // source degree
  lp.add_row(1.0);  // sink degree
  for (std::size_t r = 0; r < m * V; ++r) lp.add_row(0.0);
  auto row = [&](std::size_t k, std::size_t u) { return static_cast<std::uint32_t>(2 + k * V + u); };

  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const auto& arc = arcs[a];
      double c = exact_double(nodes[arc.src].ratio * arc.d_out);
      lp.add_column(c, 0.0, kInf,
                    {{row(k, arc.src), -static_cast<double>(arc.d_out)},
                     {row(k, arc.dst), static_cast<double>(arc.d_in)}},
                    "lam_" + std::to_string(k + 1) + "_" + std::to_string(a + 1));
    }
  }
  for (std::size_t u = 0; u < V; ++u) {
    std::vector<LinearProgram::Entry> col{{0, ratio[u]}};
    if (m > 0) col.push_back({row(0, u), 1.0});
    lp.add_column(0.0, 0.0, kInf, std::move(col), "th_0_" + std::to_string(u + 1));
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::uint32_t u : q.compliant[k]) {
      std::vector<LinearProgram::Entry> col{{row(k, u), -1.0}};
      if (k + 1 < m) {
        col.push_back({row(k + 1, u), 1.0});
      } else {
        col.push_back({1, ratio[u]});
      }
      lp.add_column(0.0, 0.0, kInf, std::move(col),
                    "th_" + std::to_string(k + 1) + "_" + std::to_string(u + 1));
    }
  }
  if (lp.num_cols() != L.num_vars() || lp.num_rows != L.num_rows()) {
    fail(ErrorKind::Internal, "RSPP' layout mismatch");
  }
  return lp;
}

GnfpModel build_gnfp(const QuotientGraph& q) {
  const RsppLayout L(q);
  const std::size_t m = L.m, V = L.V;
  const auto& nodes = q.nodes();
  const double aut = big_to_double(q.coupling().aut().order);
  auto node = [&](std::size_t k, std::size_t u) { return 2 + k * V + u; };

  GnfpModel g;
  g.num_nodes = 2 + m * V;
  using K = GnfpModel::ArcKind;
  if (m == 0) return g;
  for (std::size_t u = 0; u < V; ++u) {
    // The flow leaving s is an orbit total while layer flows are per vertex,
    // so the arc into orbit u scales by 1/d^+(Z^0_u) relative to |Aut|.
    double r = exact_double(nodes[u].ratio);
    g.arcs.push_back({K::Source, 0, node(0, u), 0.0, big_to_double(nodes[u].orbit_size), 1.0 / r,
                      L.theta0(u)});
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t a = 0; a < q.arcs().size(); ++a) {
      const auto& arc = q.arcs()[a];
      double w = exact_double(nodes[arc.src].ratio);
      g.arcs.push_back({K::Intra, node(k, arc.src), node(k, arc.dst), w, arc.d_out * aut,
                        static_cast<double>(arc.d_in) / arc.d_out, L.lambda(k, a)});
    }
    for (std::uint32_t u : q.compliant[k]) {
      auto var = static_cast<std::size_t>(L.theta(k, u));
      if (k + 1 < m) {
        g.arcs.push_back({K::Cross, node(k, u), node(k + 1, u), 0.0, aut, 1.0, var});
      } else {
        g.arcs.push_back({K::Sink, node(k, u), 1, 0.0, aut, exact_double(nodes[u].ratio), var});
      }
    }
  }
  return g;
}

LinearProgram gnfp_lp(const GnfpModel& g) {
  LinearProgram lp;
  lp.add_row(1.0);  // out of s
  lp.add_row(1.0);  // into t
  for (std::size_t v = 2; v < g.num_nodes; ++v) lp.add_row(0.0);
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    const auto& a = g.arcs[i];
    std::vector<LinearProgram::Entry> col;
    // Row of node v reads sum p*f(in) - sum f(out) = 0; s and t get their own rows.
    if (a.tail == 0) {
      col.push_back({0, 1.0});
    } else {
      col.push_back({static_cast<std::uint32_t>(a.tail), -1.0});
    }
    col.push_back({static_cast<std::uint32_t>(a.head), a.p});
    lp.add_column(a.w, 0.0, a.u, std::move(col), "f_" + std::to_string(i + 1));
  }
  return lp;
}

ReducedSolution solve_reduced(const QuotientGraph& q, const SimplexOptions& opt) {
  ReducedSolution sol;
  sol.layout = RsppLayout(q);
  const RsppLayout& L = sol.layout;
  sol.support.assign(L.num_vars(), 0);
  const std::size_t m = q.m, V = L.V;
  if (m == 0) {
    sol.fast_path = true;
    return sol;
  }

  if (q.unit_multipliers()) {
    // Layered Dijkstra: one unit per intra-layer orbital, zero across layers.
    sol.fast_path = true;
    const auto& nodes = q.nodes();
    const auto& arcs = q.arcs();
    const std::size_t S = m * V;
    std::vector<long> dist(S, -1);
    std::vector<std::int64_t> via(S, -1);  // arc index, or -2 for a cross arc
    using Item = std::pair<long, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    std::vector<long> best(S, std::numeric_limits<long>::max());
    for (std::size_t u = 0; u < V; ++u) {
      best[u] = 0;
      heap.emplace(0, u);
    }
    std::int64_t goal = -1;
    while (!heap.empty()) {
      auto [d, s] = heap.top();
      heap.pop();
      if (dist[s] >= 0) continue;
      dist[s] = d;
      std::size_t k = s / V, u = s % V;
      if (L.slot[k][u] >= 0) {
        if (k + 1 == m) {
          goal = static_cast<std::int64_t>(s);
          break;
        }
        if (d < best[s + V]) {
          best[s + V] = d;
          via[s + V] = -2;
          heap.emplace(d, s + V);
        }
      }
      const std::uint32_t first = nodes[u].first_arc;
      const std::uint32_t count = static_cast<std::uint32_t>(nodes[u].b.num_classes());
      for (std::uint32_t a = first; a < first + count; ++a) {
        std::size_t t = k * V + arcs[a].dst;
        if (d + 1 < best[t]) {
          best[t] = d + 1;
          via[t] = a;
          heap.emplace(d + 1, t);
        }
      }
    }
    if (goal < 0) fail(ErrorKind::Solver, "quotient graph has no s-t path");
    sol.opt = dist[goal];
    sol.objective = static_cast<double>(sol.opt);
    std::size_t s = static_cast<std::size_t>(goal);
    sol.support[static_cast<std::size_t>(L.theta(m - 1, s % V))] = 1;
    while (true) {
      std::size_t k = s / V, u = s % V;
      if (via[s] == -1) {
        sol.support[L.theta0(u)] = 1;
        break;
      }
      if (via[s] == -2) {
        s -= V;
        sol.support[static_cast<std::size_t>(L.theta(k - 1, u))] = 1;
      } else {
        const auto& arc = arcs[static_cast<std::size_t>(via[s])];
        sol.support[L.lambda(k, static_cast<std::size_t>(via[s]))] = 1;
        s = k * V + arc.src;
      }
    }
    return sol;
  }

  LinearProgram lp = build_rspp_scaled(q);
  sol.lp = simplex_solve(lp, opt);
  if (sol.lp.status != LpStatus::Optimal) {
    fail(ErrorKind::Solver, std::string("simplex ended with status ") + lp_status_name(sol.lp.status));
  }
  sol.objective = sol.lp.objective;
  sol.opt = std::lround(sol.objective);
  if (std::abs(sol.objective - static_cast<double>(sol.opt)) > 1e-6) {
    fail(ErrorKind::Solver, "fractional optimum " + std::to_string(sol.objective));
  }
  // Omitted upper bounds: theta, lambda <= 1 unscaled, i.e. <= |Aut| scaled.
  const double aut = big_to_double(q.coupling().aut().order);
  for (std::size_t j = 0; j < sol.lp.x.size(); ++j) {
    if (sol.lp.x[j] > aut + 1e-6) fail(ErrorKind::Solver, "implied upper bound violated");
    sol.support[j] = sol.lp.x[j] > kSupportThreshold;
  }
  return sol;
}

ModelSizes model_sizes(const QuotientGraph& q) {
  ModelSizes s;
  const RsppLayout L(q);
  const std::size_t n = q.n, m = q.m;
  const std::size_t E = q.coupling().edges().size();
  s.reduced_vars = L.num_vars();
  s.reduced_rows = L.num_rows();
  const BigInt nf = factorial(static_cast<unsigned>(n));
  const BigInt fk = n >= 2 ? BigInt(2 * E) * factorial(static_cast<unsigned>(n - 2)) : BigInt(0);
  s.unreduced_vars = BigInt(m) * nf * E + nf + BigInt(m) * fk;
  s.unreduced_rows = BigInt(m) * nf + 2;
  using boost::multiprecision::cpp_bin_float_50;
  auto pct = [](const BigInt& red, const BigInt& unred) {
    cpp_bin_float_50 r(red), u(unred);
    return static_cast<double>(100 * (1 - r / u));
  };
  s.var_reduction_pct = pct(s.reduced_vars, s.unreduced_vars);
  s.row_reduction_pct = pct(s.reduced_rows, s.unreduced_rows);
  return s;
}

namespace {

std::string fixed12(double v) {
  if (v == 0.0) return "0";
  int mag = static_cast<int>(std::floor(std::log10(std::abs(v))));
  int decimals = std::max(0, 11 - mag);
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

std::string var_name(const LinearProgram& lp, std::size_t j) {
  return lp.names[j].empty() ? "x" + std::to_string(j + 1) : lp.names[j];
}

}  // namespace

std::string export_lp(const LinearProgram& lp) {
  std::vector<std::vector<std::pair<std::size_t, double>>> rows(lp.num_rows);
  for (std::size_t j = 0; j < lp.num_cols(); ++j) {
    for (std::size_t p = lp.col_start[j]; p < lp.col_start[j + 1]; ++p) {
      rows[lp.entries[p].row].emplace_back(j, lp.entries[p].value);
    }
  }
  auto term = [&](bool first, double c, std::size_t j) {
    std::string s = c < 0 ? " - " : (first ? " " : " + ");
    return s + fixed12(std::abs(c)) + " " + var_name(lp, j);
  };
  std::ostringstream out;
  out << "Minimize\n obj:";
  bool first = true;
  for (std::size_t j = 0; j < lp.num_cols(); ++j) {
    if (lp.cost[j] == 0.0) continue;
    out << term(first, lp.cost[j], j);
    first = false;
  }
  if (first) out << " 0 " << (lp.num_cols() ? var_name(lp, 0) : "x1");
  out << "\nSubject To\n";
  for (std::size_t r = 0; r < lp.num_rows; ++r) {
    out << " c" << r + 1 << ":";
    bool f = true;
    for (auto [j, v] : rows[r]) {
      out << term(f, v, j);
      f = false;
    }
    if (f) out << " 0 " << (lp.num_cols() ? var_name(lp, 0) : "x1");
    out << " = " << fixed12(lp.rhs[r]) << "\n";
  }
  out << "Bounds\n";
  for (std::size_t j = 0; j < lp.num_cols(); ++j) {
    out << " " << fixed12(lp.lower[j]) << " <= " << var_name(lp, j);
    if (std::isfinite(lp.upper[j])) out << " <= " << fixed12(lp.upper[j]);
    out << "\n";
  }
  out << "End\n";
  return out.str();
}

}  // namespace nncp
