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

#include "nncp/dp.hpp"

#include <array>

namespace nncp {

StarDpResult solve_star_dp(const Circuit& c, std::size_t n) {
  if (c.n != n) fail(ErrorKind::InvalidArgument, "circuit size differs from the star");
  if (n < 3) fail(ErrorKind::InvalidArgument, "star needs n >= 3");
  if (!fixing_pattern(c).trivial()) {
    fail(ErrorKind::InvalidArgument,
         "the star DP needs a trivial fixing pattern; use the reduced solver");
  }
  StarDpResult res;
  const std::size_t m = c.m();
  if (m == 0) return res;

  // Only the two qubits of gate k are finite states of row k.
  struct Cell {
    Point q;
    long cost;
    int prev;  // index into the previous row's cells
  };
  std::vector<std::array<Cell, 2>> rows(m);
  rows[0] = {Cell{c.gates[0].q1, 0, -1}, Cell{c.gates[0].q2, 0, -1}};
  for (std::size_t k = 1; k < m; ++k) {
    const auto& prev = rows[k - 1];
    int cheapest = prev[1].cost < prev[0].cost ? 1 : 0;
    for (int s = 0; s < 2; ++s) {
      Point q = s == 0 ? c.gates[k].q1 : c.gates[k].q2;
      Cell cell{q, prev[cheapest].cost + 1, cheapest};
      for (int t = 0; t < 2; ++t) {
        // Keeping the center wins ties.
        if (prev[t].q == q && prev[t].cost <= cell.cost) cell = {q, prev[t].cost, t};
      }
      rows[k][s] = cell;
    }
  }
  int at = rows[m - 1][1].cost < rows[m - 1][0].cost ? 1 : 0;
  res.opt = rows[m - 1][at].cost;
  res.centers.resize(m);
  for (std::size_t k = m; k-- > 0;) {
    res.centers[k] = rows[k][at].q;
    at = rows[k][at].prev;
  }
  return res;
}

NncpSolution star_schedule(const Circuit& c, const StarDpResult& dp) {
  NncpSolution sol;
  sol.opt = dp.opt;
  if (dp.centers.empty()) return sol;
  std::vector<Point> im{dp.centers[0]};
  for (Point q = 0; q < c.n; ++q) {
    if (q != dp.centers[0]) im.push_back(q);
  }
  Permutation tau(im);
  for (std::size_t k = 0; k < dp.centers.size(); ++k) {
    if (tau[0] != dp.centers[k]) {
      Point loc = 0;
      while (tau[loc] != dp.centers[k]) ++loc;
      sol.swaps.push_back({k, Transposition(0, loc)});
      tau.swap_positions(0, loc);
    }
    sol.orders.push_back(tau);
  }
  return sol;
}

}  // namespace nncp
