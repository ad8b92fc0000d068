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

#include "nncp/coupling.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace nncp {

namespace {

// Closure of the generators under composition, breadth first from id.
std::vector<Permutation> close_group(std::size_t n, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(n);
  seen.insert(id);
  queue.push_back(id);
  std::vector<Permutation> out;
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation y = compose(x, g);
      if (seen.insert(y).second) queue.push_back(y);
    }
    out.push_back(std::move(x));
  }
  return out;
}

// Transposition of two points and a full cycle over [lo, hi).
void add_symmetric_generators(std::size_t n, Point lo, Point hi, std::vector<Permutation>& gens) {
  if (hi - lo < 2) return;
  gens.push_back(Transposition(lo, lo + 1).as_permutation(n));
  if (hi - lo > 2) {
    std::vector<Point> im(n);
    std::iota(im.begin(), im.end(), 0);
    for (Point x = lo; x < hi; ++x) im[x] = (x + 1 < hi) ? x + 1 : lo;
    gens.push_back(Permutation(im));
  }
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
    case Family::Biclique: return "biclique";
    case Family::General: return "general";
  }
  return "?";
}

const std::vector<Permutation>& AutGroup::elements() const {
  if (!enumerable()) {
    fail(ErrorKind::Cap, "automorphism group of order " + order.str() +
                             " exceeds the enumeration cap " + std::to_string(cap_));
  }
  std::call_once(once_, [&] {
    if (!have_elements_) {
      std::size_t n = generators.empty() ? 0 : generators[0].size();
      elements_ = close_group(n, generators);
      if (elements_.size() != order) fail(ErrorKind::Internal, "group closure size mismatch");
      have_elements_ = true;
    }
  });
  return elements_;
}

void CouplingGraph::set_edges(std::size_t n, const std::vector<std::pair<Point, Point>>& edges) {
  n_ = n;
  adj_.assign(n * n, 0);
  eidx_.assign(n * n, -1);
  std::set<Transposition> es;
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) fail(ErrorKind::InvalidArgument, "edge endpoint out of range");
    if (a == b) fail(ErrorKind::InvalidArgument, "self-loop in coupling graph");
    es.insert(Transposition(a, b));
  }
  edges_.assign(es.begin(), es.end());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    auto [i, j] = edges_[k];
    adj_[i * n + j] = adj_[j * n + i] = 1;
    eidx_[i * n + j] = eidx_[j * n + i] = static_cast<int>(k);
  }
  // Connectivity.
  std::vector<char> seen(n, 0);
  std::vector<Point> stack{0};
  if (n) seen[0] = 1;
  std::size_t count = n ? 1 : 0;
  while (!stack.empty()) {
    Point u = stack.back();
    stack.pop_back();
    for (Point v = 0; v < n; ++v) {
      if (adj_[u * n + v] && !seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  if (count != n) fail(ErrorKind::InvalidArgument, "coupling graph is not connected");
}

void CouplingGraph::check_generators() const {
  for (const auto& g : aut_->generators) {
    if (g.size() != n_) fail(ErrorKind::Internal, "generator degree mismatch");
    for (auto [i, j] : edges_) {
      if (!adjacent(g(i), g(j))) fail(ErrorKind::Internal, "generator does not preserve edges");
    }
  }
}

CouplingGraph CouplingGraph::cycle(std::size_t n) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "cycle needs n >= 3");
  CouplingGraph g;
  g.family_ = Family::Cycle;
  std::vector<std::pair<Point, Point>> e;
  for (Point i = 0; i < n; ++i) e.emplace_back(i, static_cast<Point>((i + 1) % n));
  g.set_edges(n, e);
  g.aut_ = std::make_shared<AutGroup>();
  std::vector<Point> rot(n), ref(n);
  for (Point i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    ref[i] = static_cast<Point>((n - i) % n);
  }
  g.aut_->order = 2 * n;
  g.aut_->generators = {Permutation(rot), Permutation(ref)};
  // Rotations first, then reflections; canonicalization ties resolve in this order.
  std::vector<Permutation> els;
  for (Point k = 0; k < n; ++k) {
    std::vector<Point> im(n);
    for (Point i = 0; i < n; ++i) im[i] = static_cast<Point>((i + k) % n);
    els.emplace_back(im);
  }
  for (Point k = 0; k < n; ++k) {
    std::vector<Point> im(n);
    for (Point i = 0; i < n; ++i) im[i] = static_cast<Point>((k + n - i) % n);
    els.emplace_back(im);
  }
  g.aut_->elements_ = std::move(els);
  g.aut_->have_elements_ = true;
  g.check_generators();
  return g;
}

CouplingGraph CouplingGraph::star(std::size_t n) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "star needs at least two leaves");
  CouplingGraph g;
  g.family_ = Family::Star;
  g.side_ = 1;
  std::vector<std::pair<Point, Point>> e;
  for (Point i = 1; i < n; ++i) e.emplace_back(0, i);
  g.set_edges(n, e);
  g.aut_ = std::make_shared<AutGroup>();
  g.aut_->order = factorial(static_cast<unsigned>(n - 1));
  add_symmetric_generators(n, 1, static_cast<Point>(n), g.aut_->generators);
  g.check_generators();
  return g;
}

CouplingGraph CouplingGraph::biclique(std::size_t M, std::size_t N) {
  if (M < 1 || M >= N) fail(ErrorKind::InvalidArgument, "biclique needs 1 <= M < N");
  const std::size_t n = M + N;
  CouplingGraph g;
  g.family_ = Family::Biclique;
  g.side_ = M;
  std::vector<std::pair<Point, Point>> e;
  for (Point u = 0; u < M; ++u) {
    for (Point v = static_cast<Point>(M); v < n; ++v) e.emplace_back(u, v);
  }
  g.set_edges(n, e);
  g.aut_ = std::make_shared<AutGroup>();
  g.aut_->order = factorial(static_cast<unsigned>(M)) * factorial(static_cast<unsigned>(N));
  add_symmetric_generators(n, 0, static_cast<Point>(M), g.aut_->generators);
  add_symmetric_generators(n, static_cast<Point>(M), static_cast<Point>(n), g.aut_->generators);
  g.check_generators();
  return g;
}

CouplingGraph CouplingGraph::general(std::size_t n,
                                     const std::vector<std::pair<Point, Point>>& edges,
                                     std::size_t aut_cap) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "coupling graph needs n >= 2");
  if (n > kGeneralMaxN) {
    fail(ErrorKind::Cap, "general coupling graphs are limited to n <= " +
                             std::to_string(kGeneralMaxN));
  }
  CouplingGraph g;
  g.family_ = Family::General;
  g.set_edges(n, edges);

  std::vector<std::size_t> deg(n, 0);
  for (auto [i, j] : g.edges_) ++deg[i], ++deg[j];
  std::vector<Point> phi(n);
  std::vector<char> used(n, 0);
  std::vector<Permutation> found;
  auto rec = [&](auto&& self, Point u) -> void {
    if (u == n) {
      if (found.size() >= aut_cap) {
        fail(ErrorKind::Cap, "automorphism enumeration exceeds cap " + std::to_string(aut_cap));
      }
      found.emplace_back(phi);
      return;
    }
    for (Point v = 0; v < n; ++v) {
      if (used[v] || deg[v] != deg[u]) continue;
      bool ok = true;
      for (Point w = 0; w < u && ok; ++w) ok = g.adjacent(u, w) == g.adjacent(v, phi[w]);
      if (!ok) continue;
      used[v] = 1;
      phi[u] = v;
      self(self, u + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);

  g.aut_ = std::make_shared<AutGroup>();
  g.aut_->cap_ = aut_cap;
  g.aut_->order = found.size();
  for (const auto& p : found) {
    if (!p.is_identity()) g.aut_->generators.push_back(p);
  }
  g.aut_->elements_ = std::move(found);
  g.aut_->have_elements_ = true;
  g.check_generators();
  return g;
}

CouplingGraph CouplingGraph::from_descriptor(const std::string& desc, std::size_t n,
                                             std::size_t aut_cap) {
  if (desc == "cycle") return cycle(n);
  if (desc == "star") return star(n);
  if (desc.rfind("biclique:", 0) == 0) {
    std::size_t M = 0;
    try {
      M = std::stoul(desc.substr(9));
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "bad biclique descriptor " + desc);
    }
    if (M >= n) fail(ErrorKind::InvalidArgument, "biclique side too large");
    return biclique(M, n - M);
  }
  if (desc.rfind("file:", 0) == 0) {
    std::string path = desc.substr(5);
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Parse, "cannot open edge list " + path);
    std::vector<std::pair<Point, Point>> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      std::istringstream ls(line);
      long a, b;
      if (!(ls >> a)) continue;
      if (!(ls >> b) || a < 1 || b < 1 || static_cast<std::size_t>(a) > n ||
          static_cast<std::size_t>(b) > n) {
        fail(ErrorKind::Parse, path + ":" + std::to_string(line_no) + ": bad edge");
      }
      edges.emplace_back(static_cast<Point>(a - 1), static_cast<Point>(b - 1));
    }
    CouplingGraph g = general(n, edges, aut_cap);
    g.source_ = path;
    return g;
  }
  fail(ErrorKind::InvalidArgument, "unknown coupling descriptor " + desc);
}

std::string CouplingGraph::descriptor() const {
  switch (family_) {
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
    case Family::Biclique: return "biclique:" + std::to_string(side_);
    case Family::General: return source_.empty() ? "general" : "file:" + source_;
  }
  return "?";
}

std::pair<std::vector<Point>, Permutation> CouplingGraph::canonicalize(
    const std::vector<Point>& labels) const {
  if (labels.size() != n_) fail(ErrorKind::InvalidArgument, "labelling has wrong length");
  if (family_ == Family::Star || family_ == Family::Biclique) {
    std::vector<Point> binv(n_);
    std::iota(binv.begin(), binv.end(), 0);
    auto by_label = [&](Point a, Point b) { return labels[a] < labels[b]; };
    std::stable_sort(binv.begin(), binv.begin() + side_, by_label);
    std::stable_sort(binv.begin() + side_, binv.end(), by_label);
    std::vector<Point> canon(n_);
    for (std::size_t i = 0; i < n_; ++i) canon[i] = labels[binv[i]];
    return {std::move(canon), inverse(Permutation(std::move(binv)))};
  }
  const auto& els = aut_->elements();
  std::vector<Point> best, cand(n_);
  const Permutation* arg = nullptr;
  for (const auto& g : els) {
    for (std::size_t i = 0; i < n_; ++i) cand[i] = labels[g(static_cast<Point>(i))];
    if (!arg || cand < best) {
      best = cand;
      arg = &g;
    }
  }
  return {std::move(best), inverse(*arg)};
}

std::pair<Permutation, Permutation> canonical_right(const Permutation& tau,
                                                    const CouplingGraph& g) {
  auto [canon, b] = g.canonicalize(tau.images());
  return {Permutation(std::move(canon)), std::move(b)};
}

}  // namespace nncp
