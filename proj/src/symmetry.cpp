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

#include "nncp/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace nncp {

namespace {

BTau trivial_btau(std::size_t num_edges) {
  BTau b;
  b.order = 1;
  b.edge_class.resize(num_edges);
  std::iota(b.edge_class.begin(), b.edge_class.end(), 0);
  b.class_size.assign(num_edges, 1);
  b.class_rep = b.edge_class;
  return b;
}

// Star and biclique: B is the product of symmetric groups on the pieces of
// each side carrying one label.
BTau bipartite_btau(const Labelling& L, const CouplingGraph& g) {
  const std::size_t n = g.n(), M = g.side();
  std::vector<std::uint32_t> cnt_a(n, 0), cnt_b(n, 0);
  for (std::size_t i = 0; i < M; ++i) ++cnt_a[L[i]];
  for (std::size_t i = M; i < n; ++i) ++cnt_b[L[i]];
  BTau b;
  b.order = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (cnt_a[k] > 1) b.order *= factorial(cnt_a[k]);
    if (cnt_b[k] > 1) b.order *= factorial(cnt_b[k]);
  }

  const auto& edges = g.edges();
  b.edge_class.resize(edges.size());
  std::vector<std::int64_t> key_to_class(n * n, -1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    Point u = edges[e].i, v = edges[e].j;  // u on the small side
    std::size_t key = L[u] * n + L[v];
    if (key_to_class[key] < 0) {
      key_to_class[key] = static_cast<std::int64_t>(b.class_size.size());
      b.class_size.push_back(cnt_a[L[u]] * cnt_b[L[v]]);
      b.class_rep.push_back(static_cast<std::uint32_t>(e));
    }
    b.edge_class[e] = static_cast<std::uint32_t>(key_to_class[key]);
  }
  return b;
}

// Filter enumerated automorphisms, then union edges along the survivors.
BTau filtered_btau(const Labelling& L, const CouplingGraph& g) {
  const std::size_t n = g.n();
  const auto& edges = g.edges();
  std::vector<std::uint32_t> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  BTau b;
  b.order = 0;
  for (const auto& el : g.aut().elements()) {
    bool keeps = true;
    for (std::size_t i = 0; i < n && keeps; ++i) keeps = L[el(static_cast<Point>(i))] == L[i];
    if (!keeps) continue;
    b.order += 1;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto img = static_cast<std::uint32_t>(g.edge_index(el(edges[e].i), el(edges[e].j)));
      std::uint32_t ra = find(static_cast<std::uint32_t>(e)), rb = find(img);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  b.edge_class.resize(edges.size());
  std::vector<std::int64_t> root_to_class(edges.size(), -1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::uint32_t r = find(static_cast<std::uint32_t>(e));
    if (root_to_class[r] < 0) {
      root_to_class[r] = static_cast<std::int64_t>(b.class_size.size());
      b.class_size.push_back(0);
      b.class_rep.push_back(static_cast<std::uint32_t>(e));
    }
    b.edge_class[e] = static_cast<std::uint32_t>(root_to_class[r]);
    ++b.class_size[b.edge_class[e]];
  }
  return b;
}

}  // namespace

Labelling labelling(const Permutation& tau, const FixingPattern& fp) {
  Labelling L(tau.size());
  for (std::size_t i = 0; i < L.size(); ++i) L[i] = fp.class_of[tau[i]];
  return L;
}

Permutation rep_from_labelling(const Labelling& L, const FixingPattern& fp) {
  std::vector<std::size_t> next(fp.classes.size(), 0);
  std::vector<Point> im(L.size());
  for (std::size_t i = 0; i < L.size(); ++i) im[i] = fp.classes[L[i]][next[L[i]]++];
  return Permutation(std::move(im));
}

BTau b_tau_labels(const Labelling& L, const FixingPattern& fp, const CouplingGraph& g) {
  switch (g.family()) {
    case Family::Star:
    case Family::Biclique:
      return bipartite_btau(L, g);
    case Family::Cycle:
      // Three fixed locations pin down a dihedral element.
      if (fp.c >= 3) return trivial_btau(g.edges().size());
      return filtered_btau(L, g);
    case Family::General:
      return filtered_btau(L, g);
  }
  fail(ErrorKind::Internal, "unknown family");
}

BTau b_tau(const Permutation& tau, const FixingPattern& fp, const CouplingGraph& g) {
  return b_tau_labels(labelling(tau, fp), fp, g);
}

bool complies(const Permutation& tau, const TwoQubitGate& gate, const CouplingGraph& g) {
  Point l1 = 0, l2 = 0;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (tau[i] == gate.q1) l1 = static_cast<Point>(i);
    if (tau[i] == gate.q2) l2 = static_cast<Point>(i);
  }
  return g.adjacent(l1, l2);
}

LayerQuotient::Located LayerQuotient::locate(const Permutation& tau) const {
  auto [canon, b] = g.canonicalize(labelling(tau, fp));
  auto it = index.find(canon);
  if (it == index.end()) fail(ErrorKind::Internal, "order " + tau.one_line() + " has no orbit");
  return {it->second, std::move(b)};
}

LayerQuotient layer_orbits(const FixingPattern& fp, const CouplingGraph& g,
                           std::size_t node_cap) {
  if (fp.n != g.n()) fail(ErrorKind::InvalidArgument, "circuit and coupling sizes differ");
  const std::size_t n = g.n();
  const auto& edges = g.edges();

  // Breadth-first search over canonical labellings; swaps along every edge
  // class generate all neighbours.
  std::vector<Labelling> found;
  std::unordered_map<Labelling, std::uint32_t, LabellingHash> seen;
  struct RawArc {
    std::uint32_t src, dst, cls, d_out, d_in;
    Transposition edge;
  };
  std::vector<RawArc> raw;
  std::vector<BTau> btaus;

  auto intern = [&](Labelling L) -> std::uint32_t {
    auto [it, fresh] = seen.emplace(std::move(L), static_cast<std::uint32_t>(found.size()));
    if (fresh) {
      if (found.size() >= node_cap) {
        fail(ErrorKind::Cap, "orbit count exceeds cap " + std::to_string(node_cap) +
                                 "; use a more symmetric coupling or a smaller n");
      }
      found.push_back(it->first);
    }
    return it->second;
  };

  intern(g.canonicalize(labelling(Permutation::identity(n), fp)).first);
  for (std::uint32_t u = 0; u < found.size(); ++u) {
    Labelling L = found[u];
    BTau bt = b_tau_labels(L, fp, g);
    for (std::uint32_t k = 0; k < bt.num_classes(); ++k) {
      Transposition e = edges[bt.class_rep[k]];
      Labelling next = L;
      std::swap(next[e.i], next[e.j]);
      // Reverse moves at the concrete neighbour give the in-degree.
      BTau back = b_tau_labels(next, fp, g);
      std::uint32_t d_in = back.class_size[back.edge_class[bt.class_rep[k]]];
      std::uint32_t v = intern(g.canonicalize(next).first);
      raw.push_back({u, v, k, bt.class_size[k], d_in, e});
    }
    btaus.push_back(std::move(bt));
  }

  // Renumber by canonical labelling so the output is independent of search order.
  std::vector<std::uint32_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return found[a] < found[b]; });
  std::vector<std::uint32_t> new_id(found.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) new_id[order[i]] = i;

  LayerQuotient q{fp, g, fp.group_order(), {}, {}, {}};
  const BigInt& aut = g.aut().order;
  q.nodes.reserve(found.size());
  for (std::uint32_t old : order) {
    OrbitNode node;
    node.rep = rep_from_labelling(found[old], fp);
    node.labels = found[old];
    node.b = std::move(btaus[old]);
    if (q.sub_order % node.b.order != 0) fail(ErrorKind::Internal, "|B| does not divide |S_n(F)|");
    node.ratio = q.sub_order / node.b.order;
    node.orbit_size = node.ratio * aut;
    q.index.emplace(node.labels, static_cast<std::uint32_t>(q.nodes.size()));
    q.nodes.push_back(std::move(node));
  }

  std::stable_sort(raw.begin(), raw.end(), [&](const RawArc& a, const RawArc& b) {
    return new_id[a.src] < new_id[b.src];
  });
  q.arcs.reserve(raw.size());
  for (const auto& r : raw) {
    OrbitalArc a;
    a.src = new_id[r.src];
    a.dst = new_id[r.dst];
    a.edge_class = r.cls;
    a.edge_rep = r.edge;
    a.d_out = r.d_out;
    a.d_in = r.d_in;
    a.size = q.nodes[a.src].orbit_size * a.d_out;
    if (a.size != q.nodes[a.dst].orbit_size * a.d_in) {
      fail(ErrorKind::Internal, "orbital size mismatch between endpoints");
    }
    if (a.edge_class == 0) q.nodes[a.src].first_arc = static_cast<std::uint32_t>(q.arcs.size());
    q.arcs.push_back(std::move(a));
  }
  return q;
}

bool QuotientGraph::unit_multipliers() const {
  for (const auto& a : layer.arcs) {
    if (a.d_in != a.d_out) return false;
  }
  return true;
}

QuotientGraph quotient_graph(const Circuit& c, const CouplingGraph& g, std::size_t node_cap) {
  if (c.n != g.n()) {
    fail(ErrorKind::InvalidArgument, "circuit has " + std::to_string(c.n) +
                                         " qubits but coupling graph has " +
                                         std::to_string(g.n()) + " locations");
  }
  QuotientGraph q{c.n, c.m(), c.gates, layer_orbits(fixing_pattern(c), g, node_cap), {}};
  q.compliant.resize(q.m);
  for (std::size_t k = 0; k < q.m; ++k) {
    for (std::uint32_t u = 0; u < q.layer.nodes.size(); ++u) {
      if (complies(q.layer.nodes[u].rep, c.gates[k], g)) q.compliant[k].push_back(u);
    }
  }
  return q;
}

}  // namespace nncp
