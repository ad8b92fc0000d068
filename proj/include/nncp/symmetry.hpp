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
#include <unordered_map>
#include <vector>

#include "nncp/circuit.hpp"
#include "nncp/coupling.hpp"
#include "nncp/perm.hpp"

namespace nncp {

inline constexpr std::size_t kDefaultNodeCap = 5000000;

// Location i -> fixing class of the qubit stored there. Two orders share a
// left S_n(F)-coset exactly when their labellings agree.
using Labelling = std::vector<Point>;

Labelling labelling(const Permutation& tau, const FixingPattern& fp);
// Smallest order with the given labelling: each class fills its locations in
// ascending qubit order.
Permutation rep_from_labelling(const Labelling& L, const FixingPattern& fp);

// Subgroup of Aut fixing every labelled location set, with its edge orbits.
struct BTau {
  BigInt order;
  std::vector<std::uint32_t> edge_class;  // edge index -> class id
  std::vector<std::uint32_t> class_size;
  std::vector<std::uint32_t> class_rep;  // smallest edge index of each class

  std::size_t num_classes() const { return class_size.size(); }
};

BTau b_tau_labels(const Labelling& L, const FixingPattern& fp, const CouplingGraph& g);
BTau b_tau(const Permutation& tau, const FixingPattern& fp, const CouplingGraph& g);

struct OrbitNode {
  Permutation rep;
  Labelling labels;
  BTau b;
  BigInt orbit_size;
  // orbit_size / |Aut| = |S_n(F)| / |B|, always an integer.
  BigInt ratio;
  std::uint32_t first_arc = 0;  // arcs of a node are contiguous, one per B-class
};

struct OrbitalArc {
  std::uint32_t src = 0;
  std::uint32_t dst = 0;
  std::uint32_t edge_class = 0;
  Transposition edge_rep;
  std::uint32_t d_out = 0;
  std::uint32_t d_in = 0;
  BigInt size;
};

struct LabellingHash {
  std::size_t operator()(const Labelling& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : v) h = (h ^ x) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

// One layer of the quotient graph; every layer has the same shape.
struct LayerQuotient {
  FixingPattern fp;
  CouplingGraph g;
  BigInt sub_order;  // |S_n(F)|
  std::vector<OrbitNode> nodes;
  std::vector<OrbitalArc> arcs;
  std::unordered_map<Labelling, std::uint32_t, LabellingHash> index;

  struct Located {
    std::uint32_t node;
    Permutation b;  // rep = a * tau * b^{-1} for some a in S_n(F)
  };
  Located locate(const Permutation& tau) const;
  std::uint32_t num_arcs(std::uint32_t node) const {
    return static_cast<std::uint32_t>(nodes[node].b.num_classes());
  }
};

LayerQuotient layer_orbits(const FixingPattern& fp, const CouplingGraph& g,
                           std::size_t node_cap = kDefaultNodeCap);

struct QuotientGraph {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<TwoQubitGate> gates;
  LayerQuotient layer;
  // compliant[k] lists the nodes whose members comply with gate k.
  std::vector<std::vector<std::uint32_t>> compliant;

  const FixingPattern& fp() const { return layer.fp; }
  const CouplingGraph& coupling() const { return layer.g; }
  const std::vector<OrbitNode>& nodes() const { return layer.nodes; }
  const std::vector<OrbitalArc>& arcs() const { return layer.arcs; }
  bool unit_multipliers() const;
};

bool complies(const Permutation& tau, const TwoQubitGate& gate, const CouplingGraph& g);

QuotientGraph quotient_graph(const Circuit& c, const CouplingGraph& g,
                             std::size_t node_cap = kDefaultNodeCap);

}  // namespace nncp
