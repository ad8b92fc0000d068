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

#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include "nncp/coupling.hpp"
#include "oracles.hpp"

using namespace nncp;

namespace {

Permutation random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(im);
}

std::set<std::vector<Point>> as_set(const std::vector<Permutation>& ps) {
  std::set<std::vector<Point>> s;
  for (const auto& p : ps) s.insert(p.images());
  return s;
}

std::set<std::vector<Point>> as_set(const std::vector<oracle::Images>& ps) {
  return {ps.begin(), ps.end()};
}

// Elements of the group generated by gens, via closure in the test.
std::set<std::vector<Point>> closure(const std::vector<Permutation>& gens, std::size_t n) {
  std::set<std::vector<Point>> seen{Permutation::identity(n).images()};
  std::vector<std::vector<Point>> todo{Permutation::identity(n).images()};
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      auto y = oracle::comp(g.images(), x);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("automorphism group orders") {
  CHECK(CouplingGraph::cycle(6).aut().order == 12);
  CHECK(CouplingGraph::star(6).aut().order == 120);
  CHECK(CouplingGraph::biclique(2, 4).aut().order == 48);
  CHECK(CouplingGraph::star(100).aut().order == factorial(99));
}

TEST_CASE("automorphisms agree with exhaustive search") {
  for (std::size_t n = 3; n <= 6; ++n) {
    auto g = CouplingGraph::cycle(n);
    CHECK(as_set(g.aut().elements()) == as_set(oracle::automorphisms(n, oracle::cycle_edges(n))));
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    auto g = CouplingGraph::star(n);
    auto brute = oracle::automorphisms(n, oracle::edges_of(g));
    CHECK(g.aut().order == brute.size());
    CHECK(closure(g.aut().generators, n) == as_set(brute));
  }
  {
    auto g = CouplingGraph::biclique(2, 4);
    auto brute = oracle::automorphisms(6, oracle::biclique_edges(2, 4));
    CHECK(g.aut().order == brute.size());
    CHECK(closure(g.aut().generators, 6) == as_set(brute));
    CHECK(as_set(g.aut().elements()) == as_set(brute));
  }
}

TEST_CASE("transposition sets") {
  auto star = CouplingGraph::star(4);
  std::vector<Transposition> want{{0, 1}, {0, 2}, {0, 3}};
  CHECK(star.transposition_set() == want);
  auto c4 = CouplingGraph::cycle(4);
  std::vector<Transposition> ring{{0, 1}, {0, 3}, {1, 2}, {2, 3}};
  CHECK(c4.transposition_set() == ring);
  for (std::size_t n = 3; n < 9; ++n) {
    auto g = CouplingGraph::cycle(n);
    CHECK(g.edges().size() == n);
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
      const auto& e = g.edges()[k];
      CHECK(g.adjacent(e.i, e.j));
      CHECK(g.adjacent(e.j, e.i));
      CHECK(g.edge_index(e.j, e.i) == static_cast<int>(k));
    }
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(CouplingGraph::cycle(2), Error);
  CHECK_THROWS_AS(CouplingGraph::star(2), Error);
  CHECK_THROWS_AS(CouplingGraph::biclique(3, 3), Error);
  CHECK_THROWS_AS(CouplingGraph::general(4, {{0, 1}, {2, 3}}), Error);
  CHECK_THROWS_AS(CouplingGraph::from_descriptor("torus", 5), Error);
  CHECK_THROWS_AS(CouplingGraph::from_descriptor("biclique:x", 5), Error);
  try {
    CouplingGraph::general(12, {});
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Cap);
  }
}

TEST_CASE("general graphs from an edge-list file") {
  const char* path = "coupling_test_edges.txt";
  {
    std::ofstream f(path);
    f << "# a path 1-2-3-4 with a chord\n1 2\n2 3\n3 4\n\n1 3\n";
  }
  auto g = CouplingGraph::from_descriptor(std::string("file:") + path, 4);
  CHECK(g.family() == Family::General);
  CHECK(g.edges().size() == 4);
  auto brute = oracle::automorphisms(4, oracle::edges_of(g));
  CHECK(g.aut().order == brute.size());
  CHECK(as_set(g.aut().elements()) == as_set(brute));
  {
    std::ofstream f(path);
    f << "1 2\n2 9\n";
  }
  try {
    CouplingGraph::from_descriptor(std::string("file:") + path, 4);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
  std::remove(path);
}

TEST_CASE("canonical_right on the star sorts the leaves") {
  auto g = CouplingGraph::star(4);
  Permutation tau({2, 1, 3, 0});
  auto [canon, b] = canonical_right(tau, g);
  CHECK(canon == Permutation({2, 0, 1, 3}));
  CHECK(compose(tau, inverse(b)) == canon);
  auto [again, id] = canonical_right(canon, g);
  CHECK(again == canon);
  CHECK(id.is_identity());
}

TEST_CASE("canonical form is the least element of the coset") {
  std::mt19937_64 rng(4);
  auto check_family = [&](const CouplingGraph& g) {
    auto brute = oracle::automorphisms(g.n(), oracle::edges_of(g));
    for (int t = 0; t < 30; ++t) {
      Permutation tau = random_perm(rng, g.n());
      auto [canon, b] = canonical_right(tau, g);
      oracle::Images best;
      for (const auto& a : brute) {
        auto cand = oracle::comp(tau.images(), oracle::inv(a));
        if (best.empty() || cand < best) best = cand;
      }
      CHECK(canon.images() == best);
      CHECK(compose(tau, inverse(b)) == canon);
      // Constant on the coset.
      for (int s = 0; s < 5; ++s) {
        const auto& a = brute[rng() % brute.size()];
        Permutation moved = compose(tau, inverse(Permutation(a)));
        CHECK(canonical_right(moved, g).first == canon);
      }
    }
  };
  check_family(CouplingGraph::cycle(5));
  check_family(CouplingGraph::cycle(6));
  check_family(CouplingGraph::star(6));
  check_family(CouplingGraph::biclique(2, 4));
  check_family(CouplingGraph::general(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}}));
}

TEST_CASE("descriptors round-trip") {
  CHECK(CouplingGraph::from_descriptor("cycle", 5).descriptor() == "cycle");
  CHECK(CouplingGraph::from_descriptor("star", 5).descriptor() == "star");
  auto b = CouplingGraph::from_descriptor("biclique:2", 5);
  CHECK(b.descriptor() == "biclique:2");
  CHECK(b.side() == 2);
  CHECK(b.edges().size() == 6);
}
