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

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "nncp/nncp.h"

namespace {

const char* kCircuit =
    ".version 1.0\n.numvars 6\n.variables a b c d e f\n.begin\n"
    "t2 a b\nt2 b c\nt2 c d\nt2 d e\nt2 e f\n.end\n";

std::string take(char* s) {
  std::string out = s ? s : "";
  nncp_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and options") {
  CHECK(std::string(nncp_version()).size() > 0);
  nncp_options opt;
  nncp_options_init(&opt);
  CHECK(opt.method == NNCP_METHOD_REDUCED);
  CHECK(opt.node_cap > 0);
  CHECK(opt.aut_cap > 0);
}

TEST_CASE("parse, inspect and solve") {
  nncp_circuit* c = nullptr;
  REQUIRE(nncp_circuit_parse(kCircuit, nullptr, nullptr, 0, &c) == NNCP_OK);
  CHECK(nncp_circuit_qubits(c) == 6);
  CHECK(nncp_circuit_gates(c) == 5);
  uint32_t q1 = 0, q2 = 0;
  CHECK(nncp_circuit_gate(c, 1, &q1, &q2) == NNCP_OK);
  CHECK(q1 == 2);
  CHECK(q2 == 3);
  CHECK(nncp_circuit_gate(c, 5, &q1, &q2) == NNCP_ERR_INVALID_ARGUMENT);

  nncp_options opt;
  nncp_options_init(&opt);
  nncp_coupling* g = nullptr;
  REQUIRE(nncp_coupling_create("star", 6, &opt, &g) == NNCP_OK);

  char* text = nullptr;
  REQUIRE(nncp_stats(c, g, &opt, NNCP_FORMAT_JSON, "chain", &text) == NNCP_OK);
  auto stats = nlohmann::json::parse(take(text));
  CHECK(stats["schema"] == 1);
  CHECK(stats["model"]["variables"] == "166");
  CHECK(stats["model"]["constraints"] == "32");

  opt.method = NNCP_METHOD_ALL;
  nncp_report* r = nullptr;
  REQUIRE(nncp_solve(c, g, &opt, &r) == NNCP_OK);
  long best = nncp_report_opt(r);
  CHECK(best >= 0);
  REQUIRE(nncp_report_format(r, NNCP_FORMAT_JSON, "chain", &text) == NNCP_OK);
  auto rep = nlohmann::json::parse(take(text));
  CHECK(rep["opt"] == best);
  CHECK(rep["methods"].size() == 3);
  REQUIRE(nncp_report_format(r, NNCP_FORMAT_CSV, "chain", &text) == NNCP_OK);
  CHECK(take(text).rfind("Benchmark,n,m,OPT", 0) == 0);

  REQUIRE(nncp_report_solution(r, &text) == NNCP_OK);
  std::string sol = take(text);
  CHECK(nncp_verify(sol.c_str(), c, g, &text) == NNCP_OK);
  CHECK(nlohmann::json::parse(take(text))["ok"] == true);

  auto tampered = nlohmann::json::parse(sol);
  tampered["opt"] = best + 1;
  CHECK(nncp_verify(tampered.dump().c_str(), c, g, &text) == NNCP_ERR_VERIFY);
  CHECK(nlohmann::json::parse(take(text))["ok"] == false);
  CHECK(std::string(nncp_last_error()).size() > 0);

  REQUIRE(nncp_export_lp(c, g, &opt, NNCP_MODEL_GNFP, &text) == NNCP_OK);
  CHECK(take(text).find("Subject To") != std::string::npos);

  nncp_report_free(r);
  nncp_coupling_free(g);
  nncp_circuit_free(c);
}

TEST_CASE("error codes") {
  nncp_circuit* c = nullptr;
  CHECK(nncp_circuit_parse(".begin\nt2 a b\n.end\n", nullptr, nullptr, 0, &c) == NNCP_ERR_PARSE);
  CHECK(std::string(nncp_last_error()).find("line 2") != std::string::npos);
  CHECK(c == nullptr);
  CHECK(nncp_circuit_parse(nullptr, nullptr, nullptr, 0, &c) == NNCP_ERR_INVALID_ARGUMENT);
  CHECK(nncp_circuit_load("/nonexistent/file.real", &c) == NNCP_ERR_PARSE);

  nncp_coupling* g = nullptr;
  CHECK(nncp_coupling_create("biclique:3", 6, nullptr, &g) == NNCP_ERR_INVALID_ARGUMENT);
  CHECK(nncp_coupling_create("hexagon", 6, nullptr, &g) == NNCP_ERR_INVALID_ARGUMENT);

  REQUIRE(nncp_circuit_parse(kCircuit, nullptr, nullptr, 0, &c) == NNCP_OK);
  REQUIRE(nncp_coupling_create("cycle", 6, nullptr, &g) == NNCP_OK);
  nncp_options opt;
  nncp_options_init(&opt);
  opt.node_cap = 5;
  nncp_report* r = nullptr;
  CHECK(nncp_solve(c, g, &opt, &r) == NNCP_ERR_CAP);
  opt.node_cap = 0;
  opt.method = NNCP_METHOD_DP;
  CHECK(nncp_solve(c, g, &opt, &r) == NNCP_ERR_INVALID_ARGUMENT);
  nncp_coupling_free(g);

  REQUIRE(nncp_coupling_create("star", 6, nullptr, &g) == NNCP_OK);
  CHECK(nncp_verify("{\"opt\":", c, g, nullptr) == NNCP_ERR_PARSE);
  nncp_coupling_free(g);
  nncp_circuit_free(c);
}

TEST_CASE("gate aliases") {
  const char* text = ".numvars 3\n.variables a b c\n.begin\nperes a b c\n.end\n";
  nncp_circuit* c = nullptr;
  CHECK(nncp_circuit_parse(text, nullptr, nullptr, 0, &c) == NNCP_ERR_PARSE);
  const char* toks[] = {"PERES"};
  const char* kinds[] = {"PERES"};
  REQUIRE(nncp_circuit_parse(text, toks, kinds, 1, &c) == NNCP_OK);
  CHECK(nncp_circuit_gates(c) == 4);
  char* js = nullptr;
  REQUIRE(nncp_circuit_json(c, &js) == NNCP_OK);
  auto j = nlohmann::json::parse(take(js));
  CHECK(j["gates"][0] == nlohmann::json::array({2, 3}));
  nncp_circuit_free(c);
  const char* bad[] = {"TOFFOLI9"};
  CHECK(nncp_circuit_parse(text, toks, bad, 1, &c) == NNCP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("random generator is deterministic") {
  char *a = nullptr, *b = nullptr, *c = nullptr;
  REQUIRE(nncp_random(2, 8, 30, 42, &a) == NNCP_OK);
  REQUIRE(nncp_random(2, 8, 30, 42, &b) == NNCP_OK);
  REQUIRE(nncp_random(2, 8, 30, 43, &c) == NNCP_OK);
  std::string sa = take(a), sb = take(b), sc = take(c);
  CHECK(sa == sb);
  CHECK(sa != sc);
  nncp_circuit* circ = nullptr;
  REQUIRE(nncp_circuit_parse(sa.c_str(), nullptr, nullptr, 0, &circ) == NNCP_OK);
  CHECK(nncp_circuit_gates(circ) >= 30);
  nncp_circuit_free(circ);
  CHECK(nncp_random(2, 4, 3, 1, &a) == NNCP_ERR_INVALID_ARGUMENT);
  CHECK(nncp_random(3, 8, 3, 1, &a) == NNCP_ERR_INVALID_ARGUMENT);
}
