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

#include <random>

#include "nncp/baseline.hpp"
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

}  // namespace

TEST_CASE("small star instances") {
  auto g = CouplingGraph::star(4);
  CHECK(solve_spp(make(4, {{0, 1}}), g).opt == 0);
  CHECK(solve_spp(make(4, {{0, 1}, {2, 3}}), g).opt == 1);
  CHECK(solve_spp(make(4, {}), g).opt == 0);
}

TEST_CASE("every order compliant means no swaps") {
  // On the 3-cycle every pair of locations is adjacent.
  auto g = CouplingGraph::cycle(3);
  CHECK(solve_spp(make(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}}), g).opt == 0);
}

TEST_CASE("optimum matches the Cayley-distance oracle") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 24; ++t) {
    std::size_t n = 4 + t % 2;
    std::vector<CouplingGraph> gs{CouplingGraph::cycle(n), CouplingGraph::star(n)};
    for (const auto& g : gs) {
      Circuit c = oracle::random_circuit(rng, n, 2 + t % 7, t % 3 != 0);
      NncpSolution s = solve_spp(c, g);
      CHECK(s.opt == oracle::min_swaps(n, c.gates, oracle::edges_of(g)));
      VerifyReport v = verify(s, c, g);
      CHECK_MESSAGE(v.ok, v.message);
    }
  }
}

TEST_CASE("consecutive orders differ by listed edge swaps") {
  std::mt19937_64 rng(2);
  auto g = CouplingGraph::cycle(5);
  Circuit c = oracle::random_circuit(rng, 5, 8, true);
  NncpSolution s = solve_spp(c, g);
  for (const auto& sw : s.swaps) CHECK(g.adjacent(sw.swap.i, sw.swap.j));
  CHECK(verify(s, c, g).ok);
}

TEST_CASE("optimum is invariant under the symmetry group") {
  std::mt19937_64 rng(12);
  auto g = CouplingGraph::cycle(5);
  auto aut = oracle::automorphisms(5, oracle::edges_of(g));
  for (int t = 0; t < 8; ++t) {
    Circuit c = oracle::random_circuit(rng, 5, 6, t % 2 == 0);
    long base = solve_spp(c, g).opt;
    // Relabel qubits by a in S_n(F): the circuit itself maps onto a circuit
    // with the same fixing pattern and the same optimum.
    auto cls = oracle::fixing_classes(5, c.gates);
    auto stab = oracle::stabilizer(5, cls);
    const auto& a = stab[rng() % stab.size()];
    Circuit relabelled = c;
    for (auto& gate : relabelled.gates) gate = TwoQubitGate(a[gate.q1], a[gate.q2]);
    CHECK(solve_spp(relabelled, g).opt == base);
    // A location relabelling by an automorphism maps the coupling onto itself,
    // so solving with permuted edges must give the same optimum.
    const auto& b = aut[rng() % aut.size()];
    std::vector<std::pair<Point, Point>> e;
    for (const auto& tr : g.edges()) e.push_back({b[tr.i], b[tr.j]});
    CHECK(solve_spp(c, CouplingGraph::general(5, e)).opt == base);
  }
}

TEST_CASE("size guard") {
  try {
    solve_spp(make(9, {{0, 1}}), CouplingGraph::star(9));
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Cap);
  }
}

TEST_CASE("Reynolds averaging of an optimal path") {
  std::mt19937_64 rng(5);
  std::vector<CouplingGraph> gs{CouplingGraph::star(4), CouplingGraph::cycle(4), CouplingGraph::star(5),
                                CouplingGraph::cycle(5), CouplingGraph::biclique(2, 3)};
  for (const auto& g : gs) {
    for (int t = 0; t < 3; ++t) {
      Circuit c = oracle::random_circuit(rng, g.n(), 3 + t, t == 1);
      NncpSolution s = solve_spp(c, g);
      SppFlow flow = path_indicator(s, c, g);
      ReynoldsReport r = reynolds_check(c, g, flow);
      CHECK(r.objective_before == doctest::Approx(static_cast<double>(s.opt)));
      CHECK(std::abs(r.objective_after - r.objective_before) <= 1e-9);
      CHECK(r.max_residual <= 1e-9);
      CHECK(r.idempotence <= 1e-12);
      CHECK(r.orbital_spread <= 1e-12);
    }
  }
}
