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

#include "nncp/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace nncp {

namespace {

std::string lower(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void parse_error(int line, const std::string& msg) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

// Operand letters a..e index the gate's operand list. Each string lists the
// two-qubit gates left to right.
const char* decomposition_table(GateKind kind) {
  switch (kind) {
    case GateKind::TOFFOLI3:
      return "bc ab bc ab ac";
    case GateKind::PERES:
      return "bc ac ab bc";
    case GateKind::FREDKIN3:
      return "bc ac bc ab bc bc ab";
    case GateKind::TOFFOLI4:
      return "ad ab bd ab bd bc cd ac cd bc cd ac cd";
    case GateKind::FREDKIN4:
      return "cd ad ab bd ab bd bc cd ac cd bc cd ac cd cd";
    case GateKind::TOFFOLI5:
      return "ae ab be ab be bc ce ac ce bc ce ac ce cd de ad de bd de ad de cd de ad de bd "
             "de ad de";
    case GateKind::CNOT:
    case GateKind::SWAP:
    case GateKind::CV:
    case GateKind::CVdag:
      return "ab";
    case GateKind::NOT:
      return "";
  }
  return nullptr;
}

}  // namespace

std::size_t gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::NOT:
      return 1;
    case GateKind::CNOT:
    case GateKind::SWAP:
    case GateKind::CV:
    case GateKind::CVdag:
      return 2;
    case GateKind::TOFFOLI3:
    case GateKind::FREDKIN3:
    case GateKind::PERES:
      return 3;
    case GateKind::TOFFOLI4:
    case GateKind::FREDKIN4:
      return 4;
    case GateKind::TOFFOLI5:
      return 5;
  }
  return 0;
}

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::NOT: return "NOT";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
    case GateKind::CV: return "CV";
    case GateKind::CVdag: return "CVdag";
    case GateKind::TOFFOLI3: return "TOFFOLI3";
    case GateKind::TOFFOLI4: return "TOFFOLI4";
    case GateKind::TOFFOLI5: return "TOFFOLI5";
    case GateKind::FREDKIN3: return "FREDKIN3";
    case GateKind::FREDKIN4: return "FREDKIN4";
    case GateKind::PERES: return "PERES";
  }
  return "?";
}

TwoQubitGate::TwoQubitGate(Point a, Point b) : q1(std::min(a, b)), q2(std::max(a, b)) {
  if (a == b) fail(ErrorKind::InvalidArgument, "two-qubit gate on a single qubit");
}

TokenTable default_token_table() {
  return {
      {"t1", GateKind::NOT},      {"t2", GateKind::CNOT},     {"t3", GateKind::TOFFOLI3},
      {"t4", GateKind::TOFFOLI4}, {"t5", GateKind::TOFFOLI5}, {"f2", GateKind::SWAP},
      {"f3", GateKind::FREDKIN3}, {"f4", GateKind::FREDKIN4}, {"p3", GateKind::PERES},
      {"v", GateKind::CV},        {"v+", GateKind::CVdag},
  };
}

RealFile parse_real(const std::string& text, const TokenTable& tokens) {
  RealFile out;
  std::unordered_map<std::string, Point> var_index;
  long numvars = -1;
  enum { Header, Body, Done } state = Header;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    auto words = split_ws(raw);
    if (words.empty()) continue;

    if (words[0][0] == '.') {
      std::string dir = lower(words[0]);
      if (dir == ".begin") {
        if (state != Header) parse_error(line_no, "unexpected .begin");
        if (numvars >= 0 && static_cast<std::size_t>(numvars) != out.variables.size()) {
          parse_error(line_no, ".numvars does not match .variables");
        }
        state = Body;
      } else if (dir == ".end") {
        if (state != Body) parse_error(line_no, ".end without .begin");
        state = Done;
      } else if (state != Header) {
        parse_error(line_no, "directive " + words[0] + " inside gate section");
      } else if (dir == ".variables") {
        for (std::size_t i = 1; i < words.size(); ++i) {
          if (!var_index.emplace(words[i], static_cast<Point>(out.variables.size())).second) {
            parse_error(line_no, "duplicate variable " + words[i]);
          }
          out.variables.push_back(words[i]);
        }
      } else if (dir == ".numvars") {
        if (words.size() != 2) parse_error(line_no, ".numvars takes one value");
        try {
          numvars = std::stol(words[1]);
        } catch (const std::exception&) {
          parse_error(line_no, "bad .numvars value");
        }
        if (numvars < 0) parse_error(line_no, "bad .numvars value");
      } else {
        std::string rest;
        for (std::size_t i = 1; i < words.size(); ++i) rest += (i > 1 ? " " : "") + words[i];
        out.metadata.emplace_back(dir, rest);
      }
      continue;
    }

    if (state != Body) parse_error(line_no, "gate line outside .begin/.end");
    auto it = tokens.find(lower(words[0]));
    if (it == tokens.end()) parse_error(line_no, "unknown gate token " + words[0]);
    RawGate g{it->second, {}, line_no};
    if (words.size() - 1 != gate_arity(g.kind)) {
      parse_error(line_no, "arity mismatch for " + words[0]);
    }
    for (std::size_t i = 1; i < words.size(); ++i) {
      auto v = var_index.find(words[i]);
      if (v == var_index.end()) parse_error(line_no, "undeclared variable " + words[i]);
      if (std::find(g.qubits.begin(), g.qubits.end(), v->second) != g.qubits.end()) {
        parse_error(line_no, "repeated operand " + words[i]);
      }
      g.qubits.push_back(v->second);
    }
    out.gates.push_back(std::move(g));
  }
  if (state == Header && !out.gates.empty()) parse_error(line_no, "missing .begin");
  if (state == Body) parse_error(line_no, "missing .end");
  return out;
}

std::vector<TwoQubitGate> decompose_gate(const RawGate& g) {
  const char* table = decomposition_table(g.kind);
  if (!table) fail(ErrorKind::Parse, std::string("unsupported gate ") + gate_kind_name(g.kind));
  if (g.qubits.size() != gate_arity(g.kind)) {
    fail(ErrorKind::Parse, std::string("arity mismatch for ") + gate_kind_name(g.kind));
  }
  std::vector<TwoQubitGate> out;
  for (const auto& word : split_ws(table)) {
    out.emplace_back(g.qubits[word[0] - 'a'], g.qubits[word[1] - 'a']);
  }
  return out;
}

Circuit decompose(const RealFile& file) {
  Circuit c;
  c.n = file.variables.size();
  c.qubit_names = file.variables;
  for (const auto& g : file.gates) {
    auto pairs = decompose_gate(g);
    c.gates.insert(c.gates.end(), pairs.begin(), pairs.end());
  }
  return c;
}

Circuit load_circuit(const std::string& text, const TokenTable& tokens) {
  return decompose(parse_real(text, tokens));
}

std::vector<TwoQubitGate> gate_graph(const Circuit& c) {
  std::set<TwoQubitGate> edges(c.gates.begin(), c.gates.end());
  return {edges.begin(), edges.end()};
}

BigInt FixingPattern::group_order() const {
  BigInt r = factorial(static_cast<unsigned>(f));
  r <<= p;
  return r;
}

FixingPattern fixing_pattern(const Circuit& c) {
  const std::size_t n = c.n;
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> touched(n, 0);
  for (const auto& g : c.gates) {
    if (g.q2 >= n) fail(ErrorKind::InvalidArgument, "gate qubit out of range");
    touched[g.q1] = touched[g.q2] = 1;
    parent[find(g.q1)] = find(g.q2);
  }
  std::vector<std::vector<Point>> comps(n);
  for (Point q = 0; q < n; ++q) comps[find(q)].push_back(q);

  FixingPattern fp;
  fp.n = n;
  std::vector<Point> free_set;
  for (Point q = 0; q < n; ++q) {
    if (!touched[q]) {
      free_set.push_back(q);
      continue;
    }
    if (find(q) != q) continue;
    auto& comp = comps[q];
    if (comp.size() == 2) {
      fp.classes.push_back(comp);
      fp.kinds.push_back(ClassKind::Pair);
      ++fp.p;
    } else {
      for (Point v : comp) {
        fp.classes.push_back({v});
        fp.kinds.push_back(ClassKind::Singleton);
        ++fp.c;
      }
    }
  }
  fp.f = free_set.size();
  if (!free_set.empty()) {
    fp.classes.push_back(free_set);
    fp.kinds.push_back(ClassKind::Free);
  }

  std::vector<std::size_t> order(fp.classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return fp.classes[a][0] < fp.classes[b][0]; });
  std::vector<std::vector<Point>> classes;
  std::vector<ClassKind> kinds;
  for (auto i : order) {
    classes.push_back(fp.classes[i]);
    kinds.push_back(fp.kinds[i]);
  }
  fp.classes = std::move(classes);
  fp.kinds = std::move(kinds);
  fp.class_of.assign(n, 0);
  for (std::size_t k = 0; k < fp.classes.size(); ++k) {
    for (Point q : fp.classes[k]) fp.class_of[q] = static_cast<Point>(k);
  }
  return fp;
}

}  // namespace nncp
