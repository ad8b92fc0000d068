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

#include <string>
#include <vector>

#include "nncp/circuit.hpp"
#include "nncp/coupling.hpp"
#include "nncp/perm.hpp"

namespace nncp {

struct SwapStep {
  std::size_t after_gate = 0;  // 1-based; the swap runs between gates k and k+1
  Transposition swap;

  friend bool operator==(const SwapStep&, const SwapStep&) = default;
};

struct NncpSolution {
  long opt = 0;
  std::vector<Permutation> orders;  // orders[k] is in force when gate k+1 runs
  std::vector<SwapStep> swaps;      // execution order
};

struct VerifyReport {
  bool ok = true;
  std::string message;  // first violation
};

VerifyReport verify(const NncpSolution& sol, const Circuit& c, const CouplingGraph& g);

// Solution JSON: {"opt", "orders" (1-based qubits), "swaps": [{"after_gate", "swap"}]}.
std::string solution_to_json(const NncpSolution& sol);
NncpSolution solution_from_json(const std::string& text);

struct QuotientGraph;
struct ReducedSolution;

// Walks one concrete path through the support of a reduced solution.
NncpSolution reconstruct(const QuotientGraph& q, const ReducedSolution& sol);

}  // namespace nncp
