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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nncp/circuit.hpp"
#include "nncp/coupling.hpp"
#include "nncp/lp.hpp"
#include "nncp/reconstruct.hpp"
#include "nncp/symmetry.hpp"

namespace nncp {

enum class Method { Reduced, Baseline, Dp, All };

Method parse_method(const std::string& s);
const char* method_name(Method m);

struct SolveOptions {
  Method method = Method::Reduced;
  std::size_t node_cap = kDefaultNodeCap;
};

struct MethodResult {
  Method method;
  long opt = 0;
  double seconds = 0;
  bool fast_path = false;
  NncpSolution solution;
};

struct SolveReport {
  std::size_t n = 0, m = 0;
  std::string coupling;
  FixingPattern fp;
  std::optional<ModelSizes> sizes;  // when the reduced model was built
  std::size_t orbits = 0, orbitals = 0;
  std::vector<MethodResult> results;

  long opt() const { return results.front().opt; }
  const NncpSolution& solution() const { return results.front().solution; }
};

// Runs the requested methods, verifies every schedule and, for Method::All,
// insists that the optima agree. Failures throw Error.
SolveReport run_solve(const Circuit& c, const CouplingGraph& g, const SolveOptions& opt);

std::string report_json(const SolveReport& r);
std::string report_csv(const SolveReport& r, const std::string& name);
std::string report_human(const SolveReport& r);

std::string stats_json(const QuotientGraph& q);
std::string stats_csv(const QuotientGraph& q, const std::string& name);

// Deterministic generator; Class I draws CNOTs on uniform distinct pairs,
// Class II draws multi-qubit gates left undecomposed in the output.
std::string random_real(int cls, std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace nncp
