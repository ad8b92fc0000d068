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

#include "nncp/baseline.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>

#include "nncp/symmetry.hpp"

namespace nncp {

namespace {

std::uint64_t small_factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// All orders of [n] in rank order plus their inverses.
struct OrderTable {
  std::size_t n;
  std::uint64_t count;
  std::vector<std::uint8_t> im, pos;

  explicit OrderTable(std::size_t n_) : n(n_), count(small_factorial(n_)) {
    im.resize(count * n);
    pos.resize(count * n);
    std::vector<Point> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t r = 0;
    do {
      for (std::size_t i = 0; i < n; ++i) {
        im[r * n + i] = static_cast<std::uint8_t>(p[i]);
        pos[r * n + p[i]] = static_cast<std::uint8_t>(i);
      }
      ++r;
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::vector<Point> images(std::uint64_t r) const {
    return {im.begin() + static_cast<long>(r * n), im.begin() + static_cast<long>((r + 1) * n)};
  }
  std::uint64_t swapped(std::uint64_t r, const Transposition& t) const {
    auto v = images(r);
    std::swap(v[t.i], v[t.j]);
    return perm_rank(v);
  }
  bool complies(std::uint64_t r, const TwoQubitGate& gate, const CouplingGraph& g) const {
    return g.adjacent(pos[r * n + gate.q1], pos[r * n + gate.q2]);
  }
};

void check_sizes(const Circuit& c, const CouplingGraph& g, std::size_t max_n) {
  if (c.n != g.n()) fail(ErrorKind::InvalidArgument, "circuit and coupling sizes differ");
  if (c.n > max_n) {
    fail(ErrorKind::Cap, "explicit layered graph limited to n <= " + std::to_string(max_n));
  }
}

}  // namespace

NncpSolution solve_spp(const Circuit& c, const CouplingGraph& g) {
  check_sizes(c, g, kBaselineMaxN);
  NncpSolution sol;
  const std::size_t m = c.m();
  if (m == 0) return sol;
  const OrderTable tab(c.n);
  const std::uint64_t N = tab.count;
  const auto& edges = g.edges();

  std::vector<std::int32_t> dist(m * N, INT32_MAX);
  std::vector<std::int64_t> parent(m * N, -1);
  using Item = std::pair<std::int32_t, std::uint64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (std::uint64_t r = 0; r < N; ++r) {
    dist[r] = 0;
    heap.emplace(0, r);
  }
  std::int64_t goal = -1;
  while (!heap.empty()) {
    auto [d, s] = heap.top();
    heap.pop();
    if (d != dist[s]) continue;
    std::uint64_t k = s / N, r = s % N;
    if (tab.complies(r, c.gates[k], g)) {
      if (k + 1 == m) {
        goal = static_cast<std::int64_t>(s);
        break;
      }
      std::uint64_t t = s + N;
      if (d < dist[t]) {
        dist[t] = d;
        parent[t] = static_cast<std::int64_t>(s);
        heap.emplace(d, t);
      }
    }
    for (const auto& e : edges) {
      std::uint64_t t = k * N + tab.swapped(r, e);
      if (d + 1 < dist[t]) {
        dist[t] = d + 1;
        parent[t] = static_cast<std::int64_t>(s);
        heap.emplace(d + 1, t);
      }
    }
  }
  if (goal < 0) fail(ErrorKind::Solver, "no path through the layered graph");

  std::vector<std::uint64_t> states;
  for (std::int64_t s = goal; s >= 0; s = parent[s]) states.push_back(static_cast<std::uint64_t>(s));
  std::reverse(states.begin(), states.end());
  sol.opt = dist[goal];
  sol.orders.resize(m);
  for (std::size_t idx = 0; idx < states.size(); ++idx) {
    std::uint64_t k = states[idx] / N, r = states[idx] % N;
    bool last_in_layer = idx + 1 == states.size() || states[idx + 1] / N != k;
    if (last_in_layer) sol.orders[k] = Permutation(tab.images(r));
    if (idx + 1 < states.size() && states[idx + 1] / N == k) {
      auto a = tab.images(r), b = tab.images(states[idx + 1] % N);
      Point i = 0, j = 0;
      bool first = true;
      for (Point x = 0; x < c.n; ++x) {
        if (a[x] != b[x]) {
          (first ? i : j) = x;
          first = false;
        }
      }
      sol.swaps.push_back({k, Transposition(i, j)});
    }
  }
  return sol;
}

SppFlow path_indicator(const NncpSolution& sol, const Circuit& c, const CouplingGraph& g) {
  check_sizes(c, g, kBaselineMaxN);
  const std::size_t m = c.m(), E = g.edges().size();
  const std::uint64_t N = small_factorial(c.n);
  SppFlow z;
  z.x.assign(m * N * E, 0.0);
  z.y0.assign(N, 0.0);
  z.y.assign(m * N, 0.0);
  if (m == 0) return z;
  Permutation cur = sol.orders[0];
  z.y0[perm_rank(cur.images())] = 1;
  std::size_t next_swap = 0;
  for (std::size_t k = 0; k < m; ++k) {
    for (; next_swap < sol.swaps.size() && sol.swaps[next_swap].after_gate == k; ++next_swap) {
      const auto& t = sol.swaps[next_swap].swap;
      std::uint64_t r = perm_rank(cur.images());
      z.x[(k * N + r) * E + static_cast<std::size_t>(g.edge_index(t.i, t.j))] += 1;
      cur.swap_positions(t.i, t.j);
    }
    z.y[k * N + perm_rank(cur.images())] += 1;
  }
  return z;
}

ReynoldsReport reynolds_check(const Circuit& c, const CouplingGraph& g, const SppFlow& flow) {
  check_sizes(c, g, kReynoldsMaxN);
  const std::size_t n = c.n, m = c.m(), E = g.edges().size();
  const OrderTable tab(n);
  const std::uint64_t N = tab.count;
  const auto& edges = g.edges();
  const FixingPattern fp = fixing_pattern(c);

  // S_n(F) by brute force over S_n.
  std::vector<Permutation> sub;
  for (std::uint64_t r = 0; r < N; ++r) {
    auto a = tab.images(r);
    bool keeps = true;
    for (Point q = 0; q < n && keeps; ++q) keeps = fp.class_of[a[q]] == fp.class_of[q];
    if (keeps) sub.emplace_back(a);
  }
  const auto& auts = g.aut().elements();

  auto average = [&](const SppFlow& z) {
    SppFlow out{std::vector<double>(z.x.size(), 0.0), std::vector<double>(N, 0.0),
                std::vector<double>(z.y.size(), 0.0)};
    std::vector<std::uint64_t> vmap(N);
    std::vector<std::size_t> emap(E);
    for (const auto& a : sub) {
      for (const auto& b : auts) {
        Permutation binv = inverse(b);
        for (std::uint64_t r = 0; r < N; ++r) {
          Permutation tau(tab.images(r));
          vmap[r] = perm_rank(compose(compose(a, tau), binv).images());
        }
        for (std::size_t e = 0; e < E; ++e) {
          emap[e] = static_cast<std::size_t>(g.edge_index(b(edges[e].i), b(edges[e].j)));
        }
        for (std::uint64_t r = 0; r < N; ++r) {
          out.y0[r] += z.y0[vmap[r]];
          for (std::size_t k = 0; k < m; ++k) {
            out.y[k * N + r] += z.y[k * N + vmap[r]];
            for (std::size_t e = 0; e < E; ++e) {
              out.x[(k * N + r) * E + e] += z.x[(k * N + vmap[r]) * E + emap[e]];
            }
          }
        }
      }
    }
    double inv = 1.0 / static_cast<double>(sub.size() * auts.size());
    for (auto* v : {&out.x, &out.y0, &out.y}) {
      for (double& val : *v) val *= inv;
    }
    return out;
  };

  ReynoldsReport rep;
  rep.group_order = sub.size() * auts.size();
  rep.objective_before = std::accumulate(flow.x.begin(), flow.x.end(), 0.0);
  SppFlow psi = average(flow);
  rep.objective_after = std::accumulate(psi.x.begin(), psi.x.end(), 0.0);

  auto bump = [&](double r) { rep.max_residual = std::max(rep.max_residual, std::abs(r)); };
  if (m > 0) {
    bump(std::accumulate(psi.y0.begin(), psi.y0.end(), 0.0) - 1.0);
    double into_t = 0;
    for (std::uint64_t r = 0; r < N; ++r) into_t += psi.y[(m - 1) * N + r];
    bump(into_t - 1.0);
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::uint64_t r = 0; r < N; ++r) {
      double in = k == 0 ? psi.y0[r] : psi.y[(k - 1) * N + r];
      double out = psi.y[k * N + r];
      if (!tab.complies(r, c.gates[k], g)) bump(out);
      for (std::size_t e = 0; e < E; ++e) {
        out += psi.x[(k * N + r) * E + e];
        in += psi.x[(k * N + tab.swapped(r, edges[e])) * E + e];
      }
      bump(in - out);
    }
  }
  for (const auto* v : {&psi.x, &psi.y0, &psi.y}) {
    for (double val : *v) {
      if (val < 0) bump(val);
      if (val > 1) bump(val - 1);
    }
  }

  SppFlow twice = average(psi);
  auto diff = [&](const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      rep.idempotence = std::max(rep.idempotence, std::abs(a[i] - b[i]));
    }
  };
  diff(psi.x, twice.x);
  diff(psi.y0, twice.y0);
  diff(psi.y, twice.y);

  // Group every variable by its orbital and measure the spread of psi.
  QuotientGraph q = quotient_graph(c, g);
  const std::size_t A = q.arcs().size(), V = q.nodes().size();
  std::vector<double> lo(m * A + V + m * V, INFINITY), hi(lo.size(), -INFINITY);
  auto note = [&](std::size_t id, double v) {
    lo[id] = std::min(lo[id], v);
    hi[id] = std::max(hi[id], v);
  };
  for (std::uint64_t r = 0; r < N; ++r) {
    auto loc = q.layer.locate(Permutation(tab.images(r)));
    const auto& node = q.nodes()[loc.node];
    note(m * A + loc.node, psi.y0[r]);
    for (std::size_t k = 0; k < m; ++k) {
      note(m * A + V + k * V + loc.node, psi.y[k * N + r]);
      for (std::size_t e = 0; e < E; ++e) {
        int moved = g.edge_index(loc.b(edges[e].i), loc.b(edges[e].j));
        std::size_t arc = node.first_arc + node.b.edge_class[static_cast<std::size_t>(moved)];
        note(k * A + arc, psi.x[(k * N + r) * E + e]);
      }
    }
  }
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] >= lo[i]) rep.orbital_spread = std::max(rep.orbital_spread, hi[i] - lo[i]);
  }
  return rep;
}

}  // namespace nncp
