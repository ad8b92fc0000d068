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

#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "nncp/error.hpp"
#include "nncp/perm.hpp"

namespace nncp {

enum class Family { Cycle, Star, Biclique, General };

const char* family_name(Family f);

inline constexpr std::size_t kDefaultAutCap = 50000;
inline constexpr std::size_t kGeneralMaxN = 10;

class AutGroup {
 public:
  BigInt order;
  std::vector<Permutation> generators;

  // Full element list, built on first use. Throws Cap when order > cap.
  const std::vector<Permutation>& elements() const;
  bool enumerable() const { return order <= cap_; }

 private:
  friend class CouplingGraph;
  std::size_t cap_ = kDefaultAutCap;
  mutable std::once_flag once_;
  mutable std::vector<Permutation> elements_;
  mutable bool have_elements_ = false;
};

class CouplingGraph {
 public:
  // Ring 0-1-...-(n-1)-0.
  static CouplingGraph cycle(std::size_t n);
  // Center is location 0, leaves 1..n-1.
  static CouplingGraph star(std::size_t n);
  // Locations 0..M-1 form the small side.
  static CouplingGraph biclique(std::size_t M, std::size_t N);
  // Automorphisms found by backtracking; n <= 10 and at most aut_cap of them.
  static CouplingGraph general(std::size_t n, const std::vector<std::pair<Point, Point>>& edges,
                               std::size_t aut_cap = kDefaultAutCap);
  // "cycle", "star", "biclique:M", "file:<path>" with 1-based "u v" lines.
  static CouplingGraph from_descriptor(const std::string& desc, std::size_t n,
                                       std::size_t aut_cap = kDefaultAutCap);

  std::size_t n() const { return n_; }
  Family family() const { return family_; }
  // Size of the side holding location 0 (star: 1, biclique: M).
  std::size_t side() const { return side_; }
  std::string descriptor() const;

  // Sorted lexicographically; doubles as the transposition set T.
  const std::vector<Transposition>& edges() const { return edges_; }
  const std::vector<Transposition>& transposition_set() const { return edges_; }
  bool adjacent(Point a, Point b) const { return adj_[a * n_ + b] != 0; }
  // Index into edges(), or -1.
  int edge_index(Point a, Point b) const { return eidx_[a * n_ + b]; }

  const AutGroup& aut() const { return *aut_; }

  // Lexicographically least relabelling of a location labelling under Aut.
  // Returns (canon, b) with canon[i] = labels[b^{-1}(i)].
  std::pair<std::vector<Point>, Permutation> canonicalize(const std::vector<Point>& labels) const;

 private:
  CouplingGraph() = default;
  void set_edges(std::size_t n, const std::vector<std::pair<Point, Point>>& edges);
  void check_generators() const;

  std::size_t n_ = 0;
  Family family_ = Family::General;
  std::size_t side_ = 0;
  std::string source_;
  std::vector<Transposition> edges_;
  std::vector<char> adj_;
  std::vector<int> eidx_;
  std::shared_ptr<AutGroup> aut_;
};

// Least element of the coset tau*Aut and b with result = tau * b^{-1}.
std::pair<Permutation, Permutation> canonical_right(const Permutation& tau, const CouplingGraph& g);

}  // namespace nncp
