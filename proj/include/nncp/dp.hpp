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
#include "nncp/reconstruct.hpp"

namespace nncp {

struct StarDpResult {
  long opt = 0;
  std::vector<Point> centers;  // qubit at the center while gate k runs
};

// States are the center qubit; moving it costs one swap. Requires a trivial
// fixing pattern.
StarDpResult solve_star_dp(const Circuit& c, std::size_t n);

// Concrete orders on the star (center at location 0): leaves start in
// ascending qubit order and each center change swaps the new center in.
NncpSolution star_schedule(const Circuit& c, const StarDpResult& dp);

}  // namespace nncp
