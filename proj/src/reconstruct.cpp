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

#include "nncp/reconstruct.hpp"

#include <json.hpp>

#include "nncp/lp.hpp"
#include "nncp/symmetry.hpp"

namespace nncp {

using json = nlohmann::json;

VerifyReport verify(const NncpSolution& sol, const Circuit& c, const CouplingGraph& g) {
  auto bad = [](std::string msg) { return VerifyReport{false, std::move(msg)}; };
  const std::size_t m = c.m();
  if (c.n != g.n()) return bad("circuit and coupling sizes differ");
  if (sol.orders.size() != m) {
    return bad("expected " + std::to_string(m) + " orders, got " + std::to_string(sol.orders.size()));
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (sol.orders[k].size() != c.n) return bad("order " + std::to_string(k + 1) + " has wrong size");
    if (!complies(sol.orders[k], c.gates[k], g)) {
      return bad("gate " + std::to_string(k + 1) + " non-compliant");
    }
  }
  std::size_t prev_after = 0;
  for (const auto& s : sol.swaps) {
    if (s.after_gate < 1 || s.after_gate >= m) {
      return bad("swap after gate " + std::to_string(s.after_gate) + " out of range");
    }
    if (s.after_gate < prev_after) return bad("swaps not in execution order");
    prev_after = s.after_gate;
    if (s.swap.j >= g.n() || !g.adjacent(s.swap.i, s.swap.j)) {
      return bad("swap " + s.swap.str() + " not in T");
    }
  }
  if (m > 0) {
    Permutation cur = sol.orders[0];
    std::size_t next = 0;
    for (std::size_t k = 1; k < m; ++k) {
      for (; next < sol.swaps.size() && sol.swaps[next].after_gate == k; ++next) {
        cur.swap_positions(sol.swaps[next].swap.i, sol.swaps[next].swap.j);
      }
      if (!(cur == sol.orders[k])) {
        return bad("orders " + std::to_string(k) + " and " + std::to_string(k + 1) +
                   " not connected by the listed swaps");
      }
    }
  }
  if (static_cast<long>(sol.swaps.size()) != sol.opt) {
    return bad("opt " + std::to_string(sol.opt) + " but " + std::to_string(sol.swaps.size()) +
               " swaps");
  }
  return {};
}

std::string solution_to_json(const NncpSolution& sol) {
  json j;
  j["schema"] = 1;
  j["opt"] = sol.opt;
  j["orders"] = json::array();
  for (const auto& o : sol.orders) {
    json row = json::array();
    for (Point q : o.images()) row.push_back(q + 1);
    j["orders"].push_back(row);
  }
  j["swaps"] = json::array();
  for (const auto& s : sol.swaps) {
    j["swaps"].push_back({{"after_gate", s.after_gate}, {"swap", {s.swap.i + 1, s.swap.j + 1}}});
  }
  return j.dump();
}

NncpSolution solution_from_json(const std::string& text) {
  NncpSolution sol;
  try {
    json j = json::parse(text);
    if (j.is_object() && j.contains("solution")) j = j["solution"];  // a whole solve report
    sol.opt = j.at("opt").get<long>();
    for (const auto& row : j.at("orders")) {
      std::vector<Point> im;
      for (const auto& q : row) {
        long v = q.get<long>();
        if (v < 1) fail(ErrorKind::Parse, "qubit ids are 1-based");
        im.push_back(static_cast<Point>(v - 1));
      }
      sol.orders.emplace_back(std::move(im));
    }
    for (const auto& s : j.at("swaps")) {
      long a = s.at("swap").at(0).get<long>(), b = s.at("swap").at(1).get<long>();
      if (a < 1 || b < 1) fail(ErrorKind::Parse, "locations are 1-based");
      sol.swaps.push_back({s.at("after_gate").get<std::size_t>(),
                           Transposition(static_cast<Point>(a - 1), static_cast<Point>(b - 1))});
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("solution JSON: ") + e.what());
  } catch (const Error& e) {
    fail(ErrorKind::Parse, std::string("solution JSON: ") + e.what());
  }
  return sol;
}

NncpSolution reconstruct(const QuotientGraph& q, const ReducedSolution& sol) {
  NncpSolution out;
  const std::size_t m = q.m;
  if (m == 0) return out;
  const RsppLayout& L = sol.layout;
  const auto& edges = q.coupling().edges();

  auto dead_end = [&](const std::string& why) {
    std::string partial;
    for (const auto& o : out.orders) partial += " " + o.one_line();
    fail(ErrorKind::Internal, why + "; orders so far:" + (partial.empty() ? " none" : partial));
  };

  std::size_t start = L.V;
  for (std::size_t u = 0; u < L.V && start == L.V; ++u) {
    if (sol.support[L.theta0(u)]) start = u;
  }
  if (start == L.V) dead_end("no supported source arc");
  Permutation tau = q.nodes()[start].rep;

  const std::size_t step_cap = L.V * edges.size() + 1;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t steps = 0;; ++steps) {
      if (steps > step_cap) dead_end("support walk does not leave layer " + std::to_string(k + 1));
      auto loc = q.layer.locate(tau);
      std::int64_t th = L.theta(k, loc.node);
      if (th >= 0 && sol.support[static_cast<std::size_t>(th)]) {
        out.orders.push_back(tau);
        break;
      }
      const auto& node = q.nodes()[loc.node];
      const Transposition* pick = nullptr;
      for (const auto& e : edges) {
        int moved = q.coupling().edge_index(loc.b(e.i), loc.b(e.j));
        std::size_t arc = node.first_arc + node.b.edge_class[static_cast<std::size_t>(moved)];
        if (sol.support[L.lambda(k, arc)]) {
          pick = &e;
          break;
        }
      }
      if (!pick) dead_end("no supported arc at " + tau.one_line() + " in layer " + std::to_string(k + 1));
      out.swaps.push_back({k, *pick});
      tau.swap_positions(pick->i, pick->j);
    }
  }
  out.opt = static_cast<long>(out.swaps.size());
  if (out.opt != sol.opt) {
    fail(ErrorKind::Solver, "reconstructed " + std::to_string(out.opt) + " swaps but the optimum is " +
                                std::to_string(sol.opt));
  }
  return out;
}

}  // namespace nncp
