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

#include <json.hpp>

#include "nncp/baseline.hpp"
#include "nncp/lp.hpp"
#include "nncp/reconstruct.hpp"
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

NncpSolution solve(const Circuit& c, const CouplingGraph& g) {
  QuotientGraph q = quotient_graph(c, g);
  return reconstruct(q, solve_reduced(q));
}

}  // namespace

TEST_CASE("verify accepts a valid schedule and reports the first violation") {
  auto g = CouplingGraph::star(4);
  Circuit c = make(4, {{0, 1}, {2, 3}, {1, 2}, {0, 3}});
  NncpSolution s = solve(c, g);
  REQUIRE(verify(s, c, g).ok);

  SUBCASE("swap not in T") {
    REQUIRE_FALSE(s.swaps.empty());
    NncpSolution bad = s;
    bad.swaps[0].swap = Transposition(1, 2);
    VerifyReport v = verify(bad, c, g);
    CHECK_FALSE(v.ok);
    CHECK(v.message.find("not in T") != std::string::npos);
  }
  SUBCASE("non-compliant order") {
    NncpSolution bad = s;
    // Gate 1 acts on q1 q2; put both on leaves.
    bad.orders[0] = Permutation({2, 0, 1, 3});
    VerifyReport v = verify(bad, c, g);
    CHECK_FALSE(v.ok);
    CHECK(v.message.find("gate 1 non-compliant") != std::string::npos);
  }
  SUBCASE("wrong opt") {
    NncpSolution bad = s;
    bad.opt += 1;
    CHECK_FALSE(verify(bad, c, g).ok);
  }
  SUBCASE("disconnected orders") {
    NncpSolution bad = s;
    bad.swaps.clear();
    bad.opt = 0;
    VerifyReport v = verify(bad, c, g);
    CHECK_FALSE(v.ok);
    CHECK(v.message.find("not connected") != std::string::npos);
  }
  SUBCASE("swap before the first gate") {
    NncpSolution bad = s;
    bad.swaps[0].after_gate = 0;
    CHECK_FALSE(verify(bad, c, g).ok);
  }
}

TEST_CASE("zero-swap instance keeps one order throughout") {
  auto g = CouplingGraph::star(5);
  Circuit c = make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 1}});
  NncpSolution s = solve(c, g);
  CHECK(s.opt == 0);
  CHECK(s.swaps.empty());
  for (const auto& o : s.orders) CHECK(o == s.orders.front());
}

TEST_CASE("fractional optimum still reconstructs an integral schedule") {
  // One repeated gate on the star with free qubits: the simplex path.
  auto g = CouplingGraph::star(5);
  Circuit c = make(5, {{0, 1}, {0, 1}, {2, 3}, {0, 1}});
  QuotientGraph q = quotient_graph(c, g);
  ReducedSolution r = solve_reduced(q);
  CHECK_FALSE(r.fast_path);
  NncpSolution s = reconstruct(q, r);
  CHECK(s.opt == solve_spp(c, g).opt);
  CHECK(static_cast<long>(s.swaps.size()) == s.opt);
  CHECK(verify(s, c, g).ok);
}

TEST_CASE("round trip over random instances") {
  std::mt19937_64 rng(64);
  for (int t = 0; t < 45; ++t) {
    std::size_t n = 4 + t % 3;
    CouplingGraph g = t % 3 == 0 ? CouplingGraph::cycle(n)
                      : t % 3 == 1 ? CouplingGraph::star(n)
                                   : CouplingGraph::biclique(n == 4 ? 1 : 2, n == 4 ? 3 : n - 2);
    Circuit c = oracle::random_circuit(rng, n, 1 + t % 12, t % 2 == 0);
    QuotientGraph q = quotient_graph(c, g);
    ReducedSolution r = solve_reduced(q);
    NncpSolution s = reconstruct(q, r);
    VerifyReport v = verify(s, c, g);
    CHECK_MESSAGE(v.ok, v.message);
    CHECK(std::abs(r.objective - static_cast<double>(s.opt)) <= 1e-6);
    CHECK(s.opt == oracle::min_swaps(n, c.gates, oracle::edges_of(g)));
  }
}

TEST_CASE("solution JSON round trip") {
  auto g = CouplingGraph::cycle(5);
  Circuit c = make(5, {{0, 1}, {2, 4}, {1, 3}, {0, 4}});
  NncpSolution s = solve(c, g);
  std::string text = solution_to_json(s);
  auto j = nlohmann::json::parse(text);
  CHECK(j["schema"] == 1);
  CHECK(j["orders"].size() == 4);
  for (const auto& row : j["orders"]) {
    for (const auto& q : row) CHECK(q.get<int>() >= 1);
  }
  NncpSolution back = solution_from_json(text);
  CHECK(back.opt == s.opt);
  CHECK(back.orders == s.orders);
  CHECK(back.swaps == s.swaps);
  CHECK(verify(back, c, g).ok);
}

TEST_CASE("malformed solution JSON is a parse error") {
  for (const char* text : {"{", "{\"opt\":0}", "{\"opt\":0,\"orders\":[[0,1]],\"swaps\":[]}",
                           "{\"opt\":0,\"orders\":[[1,1]],\"swaps\":[]}"}) {
    try {
      solution_from_json(text);
      FAIL("expected a parse error for " << text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
    }
  }
}
