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

#include "nncp/nncp.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "nncp/pipeline.hpp"

struct nncp_circuit {
  nncp::Circuit circuit;
};

struct nncp_coupling {
  nncp::CouplingGraph graph;
};

struct nncp_report {
  nncp::SolveReport report;
};

namespace {

thread_local std::string last_error;

nncp_status record(nncp_status st, const std::string& msg) {
  last_error = msg;
  return st;
}

// Runs f, translating exceptions into status codes.
template <typename F>
nncp_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return NNCP_OK;
  } catch (const nncp::Error& e) {
    return record(static_cast<nncp_status>(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return record(NNCP_ERR_CAP, "out of memory");
  } catch (const std::exception& e) {
    return record(NNCP_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) nncp::fail(nncp::ErrorKind::InvalidArgument, std::string(what) + " is NULL");
}

nncp::GateKind kind_from_name(const std::string& s) {
  using nncp::GateKind;
  for (GateKind k : {GateKind::NOT, GateKind::CNOT, GateKind::SWAP, GateKind::CV, GateKind::CVdag,
                     GateKind::TOFFOLI3, GateKind::TOFFOLI4, GateKind::TOFFOLI5, GateKind::FREDKIN3,
                     GateKind::FREDKIN4, GateKind::PERES}) {
    if (s == nncp::gate_kind_name(k)) return k;
  }
  nncp::fail(nncp::ErrorKind::InvalidArgument, "unknown gate kind " + s);
}

nncp::SolveOptions solve_options(const nncp_options* opt) {
  nncp::SolveOptions so;
  if (opt) {
    switch (opt->method) {
      case NNCP_METHOD_REDUCED: so.method = nncp::Method::Reduced; break;
      case NNCP_METHOD_BASELINE: so.method = nncp::Method::Baseline; break;
      case NNCP_METHOD_DP: so.method = nncp::Method::Dp; break;
      case NNCP_METHOD_ALL: so.method = nncp::Method::All; break;
      default: nncp::fail(nncp::ErrorKind::InvalidArgument, "unknown method");
    }
    if (opt->node_cap) so.node_cap = opt->node_cap;
  }
  return so;
}

}  // namespace

extern "C" {

const char* nncp_version(void) { return "1.0.0"; }

const char* nncp_last_error(void) { return last_error.c_str(); }

void nncp_string_free(char* s) { std::free(s); }

void nncp_options_init(nncp_options* opt) {
  if (!opt) return;
  opt->method = NNCP_METHOD_REDUCED;
  opt->node_cap = nncp::kDefaultNodeCap;
  opt->aut_cap = nncp::kDefaultAutCap;
}

nncp_status nncp_circuit_parse(const char* text, const char* const* alias_tokens,
                               const char* const* alias_kinds, size_t alias_count,
                               nncp_circuit** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    nncp::TokenTable tokens = nncp::default_token_table();
    for (size_t i = 0; i < alias_count; ++i) {
      need(alias_tokens[i], "alias token");
      need(alias_kinds[i], "alias kind");
      std::string tok = alias_tokens[i];
      for (char& ch : tok) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      tokens[tok] = kind_from_name(alias_kinds[i]);
    }
    *out = new nncp_circuit{nncp::load_circuit(text, tokens)};
  });
}

nncp_status nncp_circuit_load(const char* path, nncp_circuit** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    std::ifstream in(path, std::ios::binary);
    if (!in) nncp::fail(nncp::ErrorKind::Parse, std::string("cannot open ") + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    *out = new nncp_circuit{nncp::load_circuit(ss.str())};
  });
}

void nncp_circuit_free(nncp_circuit* c) { delete c; }

size_t nncp_circuit_qubits(const nncp_circuit* c) { return c ? c->circuit.n : 0; }

size_t nncp_circuit_gates(const nncp_circuit* c) { return c ? c->circuit.m() : 0; }

nncp_status nncp_circuit_gate(const nncp_circuit* c, size_t k, uint32_t* q1, uint32_t* q2) {
  return guarded([&] {
    need(c, "circuit");
    need(q1, "q1");
    need(q2, "q2");
    if (k >= c->circuit.m()) nncp::fail(nncp::ErrorKind::InvalidArgument, "gate index out of range");
    *q1 = c->circuit.gates[k].q1 + 1;
    *q2 = c->circuit.gates[k].q2 + 1;
  });
}

nncp_status nncp_circuit_json(const nncp_circuit* c, char** out) {
  return guarded([&] {
    need(c, "circuit");
    need(out, "out");
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = c->circuit.n;
    j["qubits"] = c->circuit.qubit_names;
    j["gates"] = nlohmann::json::array();
    for (const auto& g : c->circuit.gates) j["gates"].push_back({g.q1 + 1, g.q2 + 1});
    *out = dup(j.dump());
  });
}

nncp_status nncp_coupling_create(const char* descriptor, size_t n, const nncp_options* opt,
                                 nncp_coupling** out) {
  return guarded([&] {
    need(descriptor, "descriptor");
    need(out, "out");
    std::size_t cap = opt && opt->aut_cap ? opt->aut_cap : nncp::kDefaultAutCap;
    *out = new nncp_coupling{nncp::CouplingGraph::from_descriptor(descriptor, n, cap)};
  });
}

void nncp_coupling_free(nncp_coupling* g) { delete g; }

nncp_status nncp_stats(const nncp_circuit* c, const nncp_coupling* g, const nncp_options* opt,
                       nncp_format format, const char* name, char** out) {
  return guarded([&] {
    need(c, "circuit");
    need(g, "coupling");
    need(out, "out");
    nncp::SolveOptions so = solve_options(opt);
    nncp::QuotientGraph q = nncp::quotient_graph(c->circuit, g->graph, so.node_cap);
    std::string label = name ? name : "circuit";
    *out = dup(format == NNCP_FORMAT_JSON ? nncp::stats_json(q) : nncp::stats_csv(q, label));
  });
}

nncp_status nncp_solve(const nncp_circuit* c, const nncp_coupling* g, const nncp_options* opt,
                       nncp_report** out) {
  return guarded([&] {
    need(c, "circuit");
    need(g, "coupling");
    need(out, "out");
    *out = new nncp_report{nncp::run_solve(c->circuit, g->graph, solve_options(opt))};
  });
}

void nncp_report_free(nncp_report* r) { delete r; }

long nncp_report_opt(const nncp_report* r) { return r ? r->report.opt() : -1; }

nncp_status nncp_report_format(const nncp_report* r, nncp_format format, const char* name,
                               char** out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    std::string label = name ? name : "circuit";
    switch (format) {
      case NNCP_FORMAT_JSON: *out = dup(nncp::report_json(r->report)); break;
      case NNCP_FORMAT_CSV: *out = dup(nncp::report_csv(r->report, label)); break;
      case NNCP_FORMAT_HUMAN: *out = dup(nncp::report_human(r->report)); break;
      default: nncp::fail(nncp::ErrorKind::InvalidArgument, "unknown format");
    }
  });
}

nncp_status nncp_report_solution(const nncp_report* r, char** out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    *out = dup(nncp::solution_to_json(r->report.solution()));
  });
}

nncp_status nncp_verify(const char* solution_json, const nncp_circuit* c, const nncp_coupling* g,
                        char** out) {
  nncp::VerifyReport v;
  nncp_status st = guarded([&] {
    need(solution_json, "solution");
    need(c, "circuit");
    need(g, "coupling");
    v = nncp::verify(nncp::solution_from_json(solution_json), c->circuit, g->graph);
    if (out) {
      nlohmann::json j{{"schema", 1}, {"ok", v.ok}, {"message", v.message}};
      *out = dup(j.dump());
    }
  });
  if (st != NNCP_OK) return st;
  return v.ok ? NNCP_OK : record(NNCP_ERR_VERIFY, v.message);
}

nncp_status nncp_random(int cls, size_t n, size_t m, uint64_t seed, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = dup(nncp::random_real(cls, n, m, seed));
  });
}

nncp_status nncp_export_lp(const nncp_circuit* c, const nncp_coupling* g, const nncp_options* opt,
                           nncp_model model, char** out) {
  return guarded([&] {
    need(c, "circuit");
    need(g, "coupling");
    need(out, "out");
    nncp::QuotientGraph q = nncp::quotient_graph(c->circuit, g->graph, solve_options(opt).node_cap);
    nncp::LinearProgram lp =
        model == NNCP_MODEL_GNFP ? nncp::gnfp_lp(nncp::build_gnfp(q)) : nncp::build_rspp_scaled(q);
    *out = dup(nncp::export_lp(lp));
  });
}

}  // extern "C"
