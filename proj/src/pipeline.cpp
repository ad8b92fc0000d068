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

#include "nncp/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include <json.hpp>

#include "nncp/baseline.hpp"
#include "nncp/dp.hpp"

namespace nncp {

using json = nlohmann::json;

Method parse_method(const std::string& s) {
  if (s == "reduced") return Method::Reduced;
  if (s == "baseline") return Method::Baseline;
  if (s == "dp") return Method::Dp;
  if (s == "all") return Method::All;
  fail(ErrorKind::InvalidArgument, "unknown method " + s);
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Reduced: return "reduced";
    case Method::Baseline: return "baseline";
    case Method::Dp: return "dp";
    case Method::All: return "all";
  }
  return "?";
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json fixing_json(const FixingPattern& fp) {
  return {{"p", fp.p}, {"f", fp.f}, {"c", fp.c}, {"group_order", fp.group_order().str()}};
}

json sizes_json(const ModelSizes& s) {
  return {{"variables", s.reduced_vars.str()},
          {"constraints", s.reduced_rows.str()},
          {"unreduced_variables", s.unreduced_vars.str()},
          {"unreduced_constraints", s.unreduced_rows.str()},
          {"variable_reduction_pct", s.var_reduction_pct},
          {"constraint_reduction_pct", s.row_reduction_pct}};
}

std::string pct2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

SolveReport run_solve(const Circuit& c, const CouplingGraph& g, const SolveOptions& opt) {
  SolveReport r;
  r.n = c.n;
  r.m = c.m();
  r.coupling = g.descriptor();
  r.fp = fixing_pattern(c);

  std::vector<Method> plan;
  switch (opt.method) {
    case Method::All:
      plan.push_back(Method::Reduced);
      if (c.n <= kBaselineMaxN) plan.push_back(Method::Baseline);
      if (g.family() == Family::Star && r.fp.trivial()) plan.push_back(Method::Dp);
      break;
    case Method::Dp:
      if (g.family() != Family::Star) fail(ErrorKind::InvalidArgument, "method dp needs the star coupling");
      plan.push_back(Method::Dp);
      break;
    default:
      plan.push_back(opt.method);
  }

  for (Method m : plan) {
    MethodResult res;
    res.method = m;
    auto t0 = std::chrono::steady_clock::now();
    if (m == Method::Reduced) {
      QuotientGraph q = quotient_graph(c, g, opt.node_cap);
      r.sizes = model_sizes(q);
      r.orbits = q.nodes().size();
      r.orbitals = q.arcs().size();
      ReducedSolution rs = solve_reduced(q);
      res.fast_path = rs.fast_path;
      res.solution = reconstruct(q, rs);
    } else if (m == Method::Baseline) {
      res.solution = solve_spp(c, g);
    } else {
      res.solution = star_schedule(c, solve_star_dp(c, g.n()));
    }
    res.opt = res.solution.opt;
    res.seconds = seconds_since(t0);
    VerifyReport v = verify(res.solution, c, g);
    if (!v.ok) fail(ErrorKind::Verify, std::string(method_name(m)) + " schedule fails verification: " + v.message);
    r.results.push_back(std::move(res));
  }
  for (const auto& res : r.results) {
    if (res.opt != r.results.front().opt) {
      fail(ErrorKind::Verify, std::string("optima disagree: ") + method_name(r.results.front().method) +
                                  "=" + std::to_string(r.results.front().opt) + ", " +
                                  method_name(res.method) + "=" + std::to_string(res.opt));
    }
  }
  return r;
}

std::string report_json(const SolveReport& r) {
  json j;
  j["schema"] = 1;
  j["n"] = r.n;
  j["m"] = r.m;
  j["coupling"] = r.coupling;
  j["fixing"] = fixing_json(r.fp);
  if (r.sizes) {
    j["model"] = sizes_json(*r.sizes);
    j["model"]["orbits"] = r.orbits;
    j["model"]["orbitals"] = r.orbitals;
  }
  j["methods"] = json::array();
  for (const auto& res : r.results) {
    json mj{{"method", method_name(res.method)}, {"opt", res.opt}, {"seconds", res.seconds}};
    if (res.method == Method::Reduced) mj["fast_path"] = res.fast_path;
    j["methods"].push_back(mj);
  }
  j["opt"] = r.opt();
  j["solution"] = json::parse(solution_to_json(r.solution()));
  return j.dump(2);
}

std::string report_csv(const SolveReport& r, const std::string& name) {
  std::ostringstream out;
  out << "Benchmark,n,m,OPT,#var (RSPP'),#const (RSPP'),reduction #var (%),reduction #const (%),"
         "method,time (s)\n";
  for (const auto& res : r.results) {
    out << name << ',' << r.n << ',' << r.m << ',' << res.opt << ',';
    if (r.sizes) {
      out << r.sizes->reduced_vars << ',' << r.sizes->reduced_rows << ','
          << pct2(r.sizes->var_reduction_pct) << ',' << pct2(r.sizes->row_reduction_pct);
    } else {
      out << ",,,";
    }
    out << ',' << method_name(res.method) << ',' << res.seconds << '\n';
  }
  return out.str();
}

std::string report_human(const SolveReport& r) {
  std::ostringstream out;
  out << "n=" << r.n << " m=" << r.m << " coupling=" << r.coupling << " fixing p=" << r.fp.p
      << " f=" << r.fp.f << " c=" << r.fp.c << "\n";
  if (r.sizes) {
    out << "RSPP': " << r.sizes->reduced_vars << " variables, " << r.sizes->reduced_rows
        << " constraints (" << pct2(r.sizes->var_reduction_pct) << "% / "
        << pct2(r.sizes->row_reduction_pct) << "% smaller)\n";
  }
  for (const auto& res : r.results) {
    out << method_name(res.method) << ": opt " << res.opt << " in " << res.seconds << " s";
    if (res.method == Method::Reduced) out << (res.fast_path ? " (shortest path)" : " (simplex)");
    out << "\n";
  }
  const auto& sol = r.solution();
  std::size_t next = 0;
  for (std::size_t k = 0; k < sol.orders.size(); ++k) {
    for (; next < sol.swaps.size() && sol.swaps[next].after_gate == k; ++next) {
      out << "  SWAP " << sol.swaps[next].swap.str() << "\n";
    }
    out << "  gate " << k + 1 << " under " << sol.orders[k].one_line() << "\n";
  }
  return out.str();
}

std::string stats_json(const QuotientGraph& q) {
  ModelSizes s = model_sizes(q);
  json j;
  j["schema"] = 1;
  j["n"] = q.n;
  j["m"] = q.m;
  j["coupling"] = {{"family", family_name(q.coupling().family())},
                   {"descriptor", q.coupling().descriptor()},
                   {"edges", q.coupling().edges().size()},
                   {"aut_order", q.coupling().aut().order.str()}};
  j["fixing"] = fixing_json(q.fp());
  j["layer"] = {{"orbits", q.nodes().size()}, {"orbitals", q.arcs().size()}};
  json cross = json::array();
  for (const auto& c : q.compliant) cross.push_back(c.size());
  j["cross"] = cross;
  j["model"] = sizes_json(s);
  return j.dump(2);
}

std::string stats_csv(const QuotientGraph& q, const std::string& name) {
  ModelSizes s = model_sizes(q);
  std::ostringstream out;
  out << "Benchmark,n,m,#var (RSPP'),#const (RSPP'),reduction #var (%),reduction #const (%)\n";
  out << name << ',' << q.n << ',' << q.m << ',' << s.reduced_vars << ',' << s.reduced_rows << ','
      << pct2(s.var_reduction_pct) << ',' << pct2(s.row_reduction_pct) << '\n';
  return out.str();
}

namespace {

// Unbiased draw from [0, bound) by rejection; the standard distributions are
// implementation-defined and would break cross-platform reproducibility.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

}  // namespace

std::string random_real(int cls, std::size_t n, std::size_t m, std::uint64_t seed) {
  if (cls != 1 && cls != 2) fail(ErrorKind::InvalidArgument, "class must be I or II");
  if (cls == 1 && n < 2) fail(ErrorKind::InvalidArgument, "class I needs n >= 2");
  if (cls == 2 && n < 5) fail(ErrorKind::InvalidArgument, "class II needs n >= 5");
  std::mt19937_64 rng(seed);
  std::ostringstream out;
  out << "# random class " << (cls == 1 ? "I" : "II") << " n=" << n << " m=" << m << " seed=" << seed
      << "\n.version 1.0\n.numvars " << n << "\n";
  std::string vars;
  for (std::size_t q = 1; q <= n; ++q) vars += " x" + std::to_string(q);
  out << ".variables" << vars << "\n.inputs" << vars << "\n.outputs" << vars << "\n.begin\n";

  struct Kind {
    const char* token;
    std::size_t arity;
  };
  static const Kind multi[] = {{"t3", 3}, {"t4", 4}, {"t5", 5}, {"f3", 3}, {"f4", 4}, {"p3", 3}};
  static const char* two[] = {"t2", "f2", "v", "v+"};
  for (std::size_t k = 0; k < m; ++k) {
    Kind kind{"t2", 2};
    if (cls == 2) {
      std::uint64_t pick = draw(rng, 7);
      kind = pick < 6 ? multi[pick] : Kind{two[draw(rng, 4)], 2};
    }
    std::vector<std::size_t> qs;
    // A collision redraws the whole qubit tuple; the kind stays.
    for (;;) {
      qs.clear();
      for (std::size_t i = 0; i < kind.arity; ++i) qs.push_back(draw(rng, n));
      std::vector<std::size_t> sorted = qs;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) break;
    }
    out << kind.token;
    for (auto q : qs) out << " x" << q + 1;
    out << "\n";
  }
  out << ".end\n";
  return out.str();
}

}  // namespace nncp
