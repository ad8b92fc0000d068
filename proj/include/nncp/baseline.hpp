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

#pragma once

#include <vector>

#include "nncp/circuit.hpp"
#include "nncp/coupling.hpp"
#include "nncp/reconstruct.hpp"

namespace nncp {

inline constexpr std::size_t kBaselineMaxN = 8;
inline constexpr std::size_t kReynoldsMaxN = 5;

// Dijkstra over the full layered graph; vertices are (layer, rank of order).
NncpSolution solve_spp(const Circuit& c, const CouplingGraph& g);

// Flow on the explicit layered graph. Vertex v of layer k has rank v.
//   x[(k * n! + v) * |E| + e]  arc (v, v(i j)) for edge e = {i, j}
//   y0[v]                      arc s -> v in layer 0
//   y[k * n! + v]              arc from layer k to k+1, or to t when k = m-1
struct SppFlow {
  std::vector<double> x, y0, y;
};

SppFlow path_indicator(const NncpSolution& sol, const Circuit& c, const CouplingGraph& g);

struct ReynoldsReport {
  double objective_before = 0;
  double objective_after = 0;
  double max_residual = 0;      // conservation, degree rows, bounds
  double idempotence = 0;       // max |psi(psi(z)) - psi(z)|
  double orbital_spread = 0;    // max spread of psi(z) within one orbital
  std::size_t group_order = 0;  // |S_n(F)| * |Aut|
};

// Averages the flow over S_n(F) x Aut by explicit enumeration (n <= 5).
ReynoldsReport reynolds_check(const Circuit& c, const CouplingGraph& g, const SppFlow& flow);

}  // namespace nncp
