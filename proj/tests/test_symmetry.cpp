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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "nncp/symmetry.hpp"
#include "oracles.hpp"

using namespace nncp;

namespace {

Circuit make(std::size_t n, const std::vector<std::pair<Point, Point>>& gates) {
  Circuit c;
  c.n = n;
  for (std::size_t q = 0; q < n; ++q) c.qubit_names.push_back("q" + std::to_string(q + 1));
  for (auto [a, b] : gates) c.gates.emplace_back(a, b);
  return c;
}

Circuit path(std::size_t n, std::size_t m) {
  std::vector<std::pair<Point, Point>> g;
  for (std::size_t k = 0; k < m; ++k) {
    Point a = static_cast<Point>(k % (n - 1));
    g.push_back({a, a + 1});
  }
  return make(n, g);
}

}  // namespace

TEST_CASE("B_tau examples") {
  SUBCASE("cycle with connected gate graph is trivial") {
    auto g = CouplingGraph::cycle(6);
    Circuit c = path(6, 5);
    auto fp = fixing_pattern(c);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
      std::vector<Point> im(6);
      std::iota(im.begin(), im.end(), 0);
      std::shuffle(im.begin(), im.end(), rng);
      BTau b = b_tau(Permutation(im), fp, g);
      CHECK(b.order == 1);
      CHECK(b.num_classes() == 6);
    }
  }
  SUBCASE("star K_{1,3} with one gate at the identity") {
    auto g = CouplingGraph::star(4);
    Circuit c = make(4, {{0, 1}});
    BTau b = b_tau(Permutation::identity(4), fixing_pattern(c), g);
    CHECK(b.order == 2);
    auto oc = oracle::fixing_classes(4, c.gates);
    auto brute = oracle::b_tau({0, 1, 2, 3}, oc, oracle::automorphisms(4, oracle::edges_of(g)),
                               oracle::edges_of(g));
    CHECK(b.order == brute.order);
    CHECK(b.num_classes() == brute.edge_classes);
  }
  SUBCASE("trivial pattern gives the trivial group everywhere") {
    for (auto g : {CouplingGraph::cycle(5), CouplingGraph::star(5), CouplingGraph::biclique(2, 3)}) {
      auto fp = fixing_pattern(path(5, 4));
      for (const auto& im : oracle::all_perms(5)) CHECK(b_tau(Permutation(im), fp, g).order == 1);
    }
  }
}

TEST_CASE("B_tau agrees with brute force and divides the stabilizer order") {
  std::mt19937_64 rng(8);
  std::vector<CouplingGraph> gs{CouplingGraph::cycle(5), CouplingGraph::star(5), CouplingGraph::biclique(2, 3),
                                CouplingGraph::cycle(4),
                                CouplingGraph::general(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}})};
  for (const auto& g : gs) {
    auto edges = oracle::edges_of(g);
    auto aut = oracle::automorphisms(g.n(), edges);
    for (int t = 0; t < 6; ++t) {
      Circuit c = oracle::random_circuit(rng, g.n(), 1 + t % 3, t % 2 == 0);
      auto fp = fixing_pattern(c);
      auto oc = oracle::fixing_classes(g.n(), c.gates);
      for (const auto& im : oracle::all_perms(g.n())) {
        BTau b = b_tau(Permutation(im), fp, g);
        auto want = oracle::b_tau(im, oc, aut, edges);
        REQUIRE(b.order == want.order);
        REQUIRE(b.num_classes() == want.edge_classes);
        CHECK(fp.group_order() % b.order == 0);
        std::uint32_t total = 0;
        for (auto s : b.class_size) total += s;
        CHECK(total == g.edges().size());
      }
    }
  }
}

TEST_CASE("layer orbit counts") {
  SUBCASE("star with trivial fixing has n orbits of size (n-1)!") {
    for (std::size_t n : {4, 6, 9}) {
      auto q = layer_orbits(fixing_pattern(path(n, n - 1)), CouplingGraph::star(n));
      CHECK(q.nodes.size() == n);
      for (const auto& v : q.nodes) CHECK(v.orbit_size == factorial(static_cast<unsigned>(n - 1)));
      std::set<Point> centers;
      for (const auto& v : q.nodes) centers.insert(v.rep(0));
      CHECK(centers.size() == n);
    }
  }
  SUBCASE("cycle C6 with trivial fixing") {
    auto q = layer_orbits(fixing_pattern(path(6, 5)), CouplingGraph::cycle(6));
    CHECK(q.nodes.size() == 60);
    CHECK(q.arcs.size() == 360);
    for (std::uint32_t u = 0; u < q.nodes.size(); ++u) CHECK(q.num_arcs(u) == 6);
  }
  SUBCASE("star n=6 trivial fixing has 30 orbitals") {
    auto q = layer_orbits(fixing_pattern(path(6, 5)), CouplingGraph::star(6));
    CHECK(q.arcs.size() == 30);
  }
  SUBCASE("no gates collapses to a single orbit") {
    auto q = layer_orbits(fixing_pattern(make(5, {})), CouplingGraph::star(5));
    REQUIRE(q.nodes.size() == 1);
    CHECK(q.nodes[0].orbit_size == 120);
  }
  SUBCASE("node cap") {
    try {
      layer_orbits(fixing_pattern(path(6, 5)), CouplingGraph::cycle(6), 10);
      FAIL("expected a cap error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Cap);
    }
  }
}

TEST_CASE("quotient graph counts match Burnside sums") {
  std::mt19937_64 rng(17);
  for (std::size_t n : {4, 5}) {
    std::vector<CouplingGraph> gs{CouplingGraph::cycle(n), CouplingGraph::star(n),
                                  CouplingGraph::biclique(n == 4 ? 1 : 2, n == 4 ? 3 : 3)};
    for (const auto& g : gs) {
      for (int t = 0; t < 4; ++t) {
        Circuit c = oracle::random_circuit(rng, n, 2 + t, t % 2 == 1);
        QuotientGraph q = quotient_graph(c, g);
        auto want = oracle::layer_counts(n, c.gates, oracle::edges_of(g));
        CHECK(want.divisible);
        CHECK(q.nodes().size() == want.nodes);
        CHECK(q.arcs().size() == want.arcs);
        for (std::size_t k = 0; k < c.m(); ++k) CHECK(q.compliant[k].size() == want.cross[k]);
      }
    }
  }
}

TEST_CASE("orbit and orbital invariants") {
  std::mt19937_64 rng(23);
  std::vector<CouplingGraph> gs{CouplingGraph::cycle(5), CouplingGraph::star(5), CouplingGraph::biclique(2, 3),
                                CouplingGraph::cycle(6)};
  for (const auto& g : gs) {
    for (int t = 0; t < 4; ++t) {
      Circuit c = oracle::random_circuit(rng, g.n(), 3, t % 2 == 0);
      QuotientGraph q = quotient_graph(c, g);
      const auto& L = q.layer;
      BigInt total = 0;
      for (const auto& v : q.nodes()) total += v.orbit_size;
      CHECK(total == factorial(static_cast<unsigned>(g.n())));
      for (const auto& a : q.arcs()) {
        CHECK(a.size == q.nodes()[a.src].orbit_size * a.d_out);
        CHECK(a.size == q.nodes()[a.dst].orbit_size * a.d_in);
        CHECK(a.d_out == q.nodes()[a.src].b.class_size[a.edge_class]);
      }
      // Every order lands in exactly one orbit; compliance and |B_tau| are
      // constant on orbits; the concrete swap lands in the arc's target.
      auto es = oracle::edge_set(g.n(), oracle::edges_of(g));
      std::map<std::uint32_t, BigInt> counted;
      for (const auto& im : oracle::all_perms(g.n())) {
        Permutation tau(im);
        auto loc = L.locate(tau);
        counted[loc.node] += 1;
        const auto& node = q.nodes()[loc.node];
        CHECK(b_tau(tau, q.fp(), g).order == node.b.order);
        for (std::size_t k = 0; k < c.m(); ++k) {
          bool comp = oracle::complies(im, c.gates[k], es);
          bool listed = std::find(q.compliant[k].begin(), q.compliant[k].end(), loc.node) != q.compliant[k].end();
          CHECK(comp == listed);
        }
        for (const auto& e : g.edges()) {
          int moved = g.edge_index(loc.b(e.i), loc.b(e.j));
          REQUIRE(moved >= 0);
          const auto& arc = q.arcs()[node.first_arc + node.b.edge_class[static_cast<std::size_t>(moved)]];
          Permutation next = tau;
          next.swap_positions(e.i, e.j);
          CHECK(L.locate(next).node == arc.dst);
        }
      }
      for (const auto& [u, cnt] : counted) CHECK(cnt == q.nodes()[u].orbit_size);
    }
  }
}

TEST_CASE("star compliance: two orbits per gate under trivial fixing") {
  for (std::size_t n : {5, 6, 8}) {
    QuotientGraph q = quotient_graph(path(n, n - 1), CouplingGraph::star(n));
    for (const auto& cl : q.compliant) CHECK(cl.size() == 2);
  }
}

TEST_CASE("size mismatch is rejected") {
  CHECK_THROWS_AS(quotient_graph(path(5, 4), CouplingGraph::star(6)), Error);
}
