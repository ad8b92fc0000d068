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

// nncp command-line driver. Talks to the library only through nncp.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nncp/nncp.h"

namespace {

// Exit codes: 1 parse/usage, 2 caps, 3 solver, 4 verification.
int exit_code(nncp_status st) {
  switch (st) {
    case NNCP_OK: return 0;
    case NNCP_ERR_INVALID_ARGUMENT: return 1;
    case NNCP_ERR_INTERNAL: return 3;
    default: return static_cast<int>(st);
  }
}

struct Failure {
  nncp_status status;
};

void check(nncp_status st) {
  if (st != NNCP_OK) throw Failure{st};
}

struct CString {
  char* p = nullptr;
  ~CString() { nncp_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using CircuitPtr = std::unique_ptr<nncp_circuit, decltype(&nncp_circuit_free)>;
using CouplingPtr = std::unique_ptr<nncp_coupling, decltype(&nncp_coupling_free)>;
using ReportPtr = std::unique_ptr<nncp_report, decltype(&nncp_report_free)>;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "nncp: cannot open " << path << "\n";
    throw Failure{NNCP_ERR_PARSE};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CircuitPtr load(const std::string& path, const std::vector<std::string>& aliases) {
  std::vector<std::string> toks, kinds;
  for (const auto& a : aliases) {
    auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == a.size()) {
      std::cerr << "nncp: --alias expects TOKEN=KIND, got " << a << "\n";
      throw Failure{NNCP_ERR_INVALID_ARGUMENT};
    }
    toks.push_back(a.substr(0, eq));
    kinds.push_back(a.substr(eq + 1));
  }
  std::vector<const char*> tp, kp;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    tp.push_back(toks[i].c_str());
    kp.push_back(kinds[i].c_str());
  }
  std::string text = slurp(path);
  nncp_circuit* c = nullptr;
  check(nncp_circuit_parse(text.c_str(), tp.data(), kp.data(), toks.size(), &c));
  return CircuitPtr(c, nncp_circuit_free);
}

CouplingPtr coupling(const std::string& desc, std::size_t n, const nncp_options& opt) {
  nncp_coupling* g = nullptr;
  check(nncp_coupling_create(desc.c_str(), n, &opt, &g));
  return CouplingPtr(g, nncp_coupling_free);
}

std::string stem(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.rfind('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "nncp: cannot write " << path << "\n";
    throw Failure{NNCP_ERR_INVALID_ARGUMENT};
  }
  out << text;
}

const std::map<std::string, nncp_method> kMethods{{"reduced", NNCP_METHOD_REDUCED},
                                                  {"baseline", NNCP_METHOD_BASELINE},
                                                  {"dp", NNCP_METHOD_DP},
                                                  {"all", NNCP_METHOD_ALL}};
const std::map<std::string, nncp_format> kFormats{
    {"json", NNCP_FORMAT_JSON}, {"csv", NNCP_FORMAT_CSV}, {"human", NNCP_FORMAT_HUMAN}};
const std::map<std::string, int> kClasses{{"I", 1}, {"II", 2}, {"1", 1}, {"2", 2}};
const std::map<std::string, nncp_model> kModels{{"rspp", NNCP_MODEL_RSPP}, {"gnfp", NNCP_MODEL_GNFP}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact SWAP minimisation for nearest-neighbour qubit layouts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(nncp_version()));

  nncp_options opt;
  nncp_options_init(&opt);
  std::string circuit_path, coupling_desc, method = "reduced", format = "json", out_path;
  std::string solution_path, cls = "I", model = "rspp", name;
  std::vector<std::string> aliases;
  std::uint64_t seed = 1;
  std::size_t n = 0, m = 0;

  auto add_circuit = [&](CLI::App* sub) {
    sub->add_option("--circuit", circuit_path, ".real circuit file")->required();
    sub->add_option("--alias", aliases, "extra gate token, e.g. peres=PERES");
  };
  auto add_coupling = [&](CLI::App* sub) {
    sub->add_option("--coupling", coupling_desc, "cycle | star | biclique:M | file:PATH")->required();
    sub->add_option("--node-cap", opt.node_cap, "orbit cap for the quotient graph");
    sub->add_option("--aut-cap", opt.aut_cap, "element cap for general automorphism groups");
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", format, "json | csv | human")->check(CLI::IsMember(kFormats));
    sub->add_option("-o,--output", out_path, "write to a file instead of stdout");
    sub->add_option("--name", name, "benchmark label for CSV rows");
  };

  auto* solve = app.add_subcommand("solve", "compute a minimum-SWAP schedule");
  add_circuit(solve);
  add_coupling(solve);
  add_out(solve);
  solve->add_option("--method", method, "reduced | baseline | dp | all")->check(CLI::IsMember(kMethods));
  solve->add_option("--seed", seed, "accepted for symmetry with random; solving is deterministic");

  auto* stats = app.add_subcommand("stats", "report model sizes without solving");
  add_circuit(stats);
  add_coupling(stats);
  add_out(stats);

  auto* decomp = app.add_subcommand("decompose", "print the two-qubit gate sequence");
  add_circuit(decomp);
  decomp->add_option("-o,--output", out_path, "write to a file instead of stdout");

  auto* ver = app.add_subcommand("verify", "check a schedule against a circuit");
  ver->add_option("--solution", solution_path, "solution JSON")->required();
  add_circuit(ver);
  add_coupling(ver);

  auto* rnd = app.add_subcommand("random", "generate a random .real circuit");
  rnd->add_option("--class", cls, "I | II")->check(CLI::IsMember(kClasses));
  rnd->add_option("--n", n, "qubits")->required();
  rnd->add_option("--m", m, "gates")->required();
  rnd->add_option("--seed", seed, "generator seed");
  rnd->add_option("-o,--output", out_path, "write to a file instead of stdout");

  auto* lp = app.add_subcommand("export-lp", "write the reduced model in CPLEX LP format");
  add_circuit(lp);
  add_coupling(lp);
  lp->add_option("--model", model, "rspp | gnfp")->check(CLI::IsMember(kModels));
  lp->add_option("-o,--output", out_path, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*rnd) {
      CString s;
      check(nncp_random(kClasses.at(cls), n, m, seed, &s.p));
      emit(s.str(), out_path);
      return 0;
    }

    CircuitPtr c = load(circuit_path, aliases);
    if (name.empty()) name = stem(circuit_path);

    if (*decomp) {
      CString s;
      check(nncp_circuit_json(c.get(), &s.p));
      emit(s.str(), out_path);
      return 0;
    }

    CouplingPtr g = coupling(coupling_desc, nncp_circuit_qubits(c.get()), opt);
    if (*stats) {
      CString s;
      nncp_format f = kFormats.at(format) == NNCP_FORMAT_JSON ? NNCP_FORMAT_JSON : NNCP_FORMAT_CSV;
      check(nncp_stats(c.get(), g.get(), &opt, f, name.c_str(), &s.p));
      emit(s.str(), out_path);
    } else if (*solve) {
      opt.method = kMethods.at(method);
      nncp_report* raw = nullptr;
      check(nncp_solve(c.get(), g.get(), &opt, &raw));
      ReportPtr r(raw, nncp_report_free);
      CString s;
      check(nncp_report_format(r.get(), kFormats.at(format), name.c_str(), &s.p));
      emit(s.str(), out_path);
    } else if (*ver) {
      std::string text = slurp(solution_path);
      CString s;
      nncp_status st = nncp_verify(text.c_str(), c.get(), g.get(), &s.p);
      if (s.p) std::cout << s.str() << "\n";
      check(st);
    } else if (*lp) {
      CString s;
      check(nncp_export_lp(c.get(), g.get(), &opt, kModels.at(model), &s.p));
      emit(s.str(), out_path);
    }
    return 0;
  } catch (const Failure& f) {
    const char* msg = nncp_last_error();
    if (msg && *msg) std::cerr << "nncp: " << msg << "\n";
    return exit_code(f.status);
  }
}
