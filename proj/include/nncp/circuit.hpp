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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nncp/error.hpp"
#include "nncp/perm.hpp"

namespace nncp {

enum class GateKind {
  NOT,
  CNOT,
  SWAP,
  CV,
  CVdag,
  TOFFOLI3,
  TOFFOLI4,
  TOFFOLI5,
  FREDKIN3,
  FREDKIN4,
  PERES,
};

std::size_t gate_arity(GateKind kind);
const char* gate_kind_name(GateKind kind);

struct RawGate {
  GateKind kind;
  std::vector<Point> qubits;  // controls first, targets last
  int line = 0;
};

// Unordered qubit pair, stored with q1 < q2.
struct TwoQubitGate {
  Point q1 = 0;
  Point q2 = 1;

  TwoQubitGate() = default;
  TwoQubitGate(Point a, Point b);

  friend bool operator==(const TwoQubitGate&, const TwoQubitGate&) = default;
  friend auto operator<=>(const TwoQubitGate&, const TwoQubitGate&) = default;
};

struct RealFile {
  std::vector<std::string> variables;
  std::vector<std::pair<std::string, std::string>> metadata;  // directive, rest of line
  std::vector<RawGate> gates;
};

// Gate token to kind. "p3" for Peres is an assumption; callers may add aliases.
using TokenTable = std::map<std::string, GateKind>;
TokenTable default_token_table();

RealFile parse_real(const std::string& text, const TokenTable& tokens = default_token_table());

struct Circuit {
  std::size_t n = 0;
  std::vector<std::string> qubit_names;
  std::vector<TwoQubitGate> gates;

  std::size_t m() const { return gates.size(); }
};

// Pairs in operand order for one raw gate; empty for NOT.
std::vector<TwoQubitGate> decompose_gate(const RawGate& g);
Circuit decompose(const RealFile& file);
Circuit load_circuit(const std::string& text, const TokenTable& tokens = default_token_table());

// Simple graph on the qubits, edges sorted.
std::vector<TwoQubitGate> gate_graph(const Circuit& c);

enum class ClassKind { Singleton, Pair, Free };

struct FixingPattern {
  std::size_t n = 0;
  std::vector<std::vector<Point>> classes;  // sorted by smallest member
  std::vector<ClassKind> kinds;
  std::vector<Point> class_of;  // qubit -> class index
  std::size_t p = 0;
  std::size_t f = 0;
  std::size_t c = 0;

  BigInt group_order() const;  // 2^p * f!
  bool trivial() const { return p == 0 && f <= 1; }
};

FixingPattern fixing_pattern(const Circuit& c);

}  // namespace nncp
