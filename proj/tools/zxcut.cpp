// Copyright 2026 The zxcut Authors
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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "zxcut/bench.hpp"
#include "zxcut/circuit.hpp"
#include "zxcut/circuit_gen.hpp"
#include "zxcut/decomposer.hpp"
#include "zxcut/error.hpp"
#include "zxcut/oracle.hpp"
#include "zxcut/procedure.hpp"
#include "zxcut/serialize.hpp"
#include "zxcut/simplify.hpp"

namespace {

using namespace zxcut;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kBudget = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write");
  out << text;
}

bool looks_like_json(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

/// Gate lists become circuit diagrams; diagram documents load as they are.
Diagram load_diagram(const std::string& path) {
  const std::string text = slurp(path);
  if (looks_like_json(text)) return deserialize(text);
  try {
    return build_from_gates(parse_gate_list(text));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Diagram plugged(Diagram d, const std::string& plug) {
  if (plug == "zeros") return plug_zeros(std::move(d));
  if (plug == "plus") return plug_plus(std::move(d));
  return d;
}

std::string complex_str(std::complex<double> c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
  return buf;
}

struct DecomposeArgs {
  std::string in;
  std::string method = "proc";
  std::string mode = "exact";
  std::string plug = "zeros";
  std::string budget = "1048576";
  bool json = false;
};

int run_decompose(const DecomposeArgs& a) {
  Diagram d = plugged(load_diagram(a.in), a.plug);
  if (!d.is_scalar_diagram()) throw InputError("decompose: diagram has open boundaries; use --plug");
  Count budget;
  try {
    budget = Count(a.budget);
  } catch (const std::exception&) {
    throw InputError("--budget: not an integer: " + a.budget);
  }
  if (a.method == "bss") {
    TermSum ts;
    if (a.mode == "exact") {
      DriverOptions o;
      o.budget = budget;
      ts = decompose_bss_driver(d, o);
    } else {
      Diagram g = d;
      full_simplify(g);
      ts = blind_bss(g.t_count());
    }
    if (a.json) {
      std::cout << to_json(ts) << "\n";
    } else {
      std::cout << "method bss\nmode " << a.mode << "\nt_initial " << ts.t_initial << "\nterms " << ts.count << "\n";
      if (auto al = effective_alpha(ts.count, ts.t_initial)) std::cout << "alpha " << *al << "\n";
      if (ts.mode == CountMode::Exact) std::cout << "value " << complex_str(ts.sum) << "\n";
    }
    return kOk;
  }
  ProcedureOptions o;
  o.max_terms = budget;
  const ProcedureMode m = a.mode == "exact" ? ProcedureMode::Exact : ProcedureMode::Blind;
  ProcedureReport r = run_procedure(d, m, o);
  if (a.json) {
    std::cout << to_json(r) << "\n";
  } else {
    std::cout << "method proc\nmode " << a.mode << "\nt_start " << r.t_start << "\ncuts " << r.cuts.size()
              << "\nresidual_t " << r.residual_t << "\nterms " << r.terms << "\n";
    if (r.alpha) std::cout << "alpha " << *r.alpha << "\n";
    if (r.value) std::cout << "value " << complex_str(*r.value) << "\n";
    if (!r.complete) std::cout << "incomplete " << r.incomplete_reason << "\n";
  }
  if (!r.complete && r.incomplete_reason.find("budget") != std::string::npos) return kBudget;
  return kOk;
}

int run_gen(const GenSpec& s, const std::string& out) {
  const std::string text = format_gate_list(generate(s));
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    spit(out, text);
  }
  return kOk;
}

int run_verify_small(int trials, std::uint64_t seed, unsigned threads) {
  GenSpec s;
  s.qubits = 3;
  s.sandwiches = 2;
  s.cnots = 2;
  s.phase_gates = 2;
  s.seed = seed;
  OptimalityStudy st = optimality_study(trials, s, 16, threads);
  std::cout << "index,seed,z_spiders,t_count,proc_terms,best_terms,success\n";
  for (const auto& r : st.rows) {
    std::cout << r.index << "," << r.seed << "," << r.z_spiders << "," << r.t_count << "," << r.proc_terms << ","
              << r.best_terms << "," << (r.success ? 1 : 0) << "\n";
  }
  std::cout << "# spec qubits=3 sandwiches=2 cnots=2 phase_gates=2 seed=" << seed << "\n";
  std::cout << "# success_rate " << st.success_rate << "\n";
  return kOk;
}

int run_bench(const std::string& sweep, const std::string& out, bool omit_timing, const std::string& plot) {
  SweepConfig cfg = parse_sweep_config(slurp(sweep));
  std::vector<BenchRow> rows = bench_sweep(cfg);
  const std::string csv = bench_csv(rows, !omit_timing);
  if (out.empty() || out == "-") {
    std::cout << csv;
  } else {
    spit(out, csv);
  }
  if (!plot.empty()) spit(plot, plot_data_json(rows));
  return kOk;
}

int run_oracle(const std::string& in, const std::string& plug) {
  Diagram d = plugged(load_diagram(in), plug);
  DenseMap m = evaluate(d);
  if (m.inputs == 0 && m.outputs == 0) {
    std::cout << complex_str(m.at(0, 0)) << "\n";
    return kOk;
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::cout << (c ? " " : "") << complex_str(m.at(r, c));
    std::cout << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zxcut: stabiliser decompositions of Clifford+T circuits via ZX-diagram cutting"};
  app.require_subcommand(1);

  DecomposeArgs dec;
  auto* decompose = app.add_subcommand("decompose", "Count (and sum) stabiliser terms");
  decompose->add_option("--in", dec.in, "Gate list or diagram document")->required();
  decompose->add_option("--method", dec.method)->check(CLI::IsMember({"proc", "bss"}));
  decompose->add_option("--mode", dec.mode)->check(CLI::IsMember({"exact", "blind"}));
  decompose->add_option("--plug", dec.plug, "Boundary plugging")->check(CLI::IsMember({"zeros", "plus", "none"}));
  decompose->add_option("--budget", dec.budget, "Largest exact term count");
  decompose->add_flag("--json", dec.json);

  GenSpec spec;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Random pseudo-structured circuit as a gate list");
  gen->add_option("--qubits", spec.qubits)->required();
  gen->add_option("--sandwiches", spec.sandwiches);
  gen->add_option("--toffolis", spec.toffolis);
  gen->add_option("--cnots", spec.cnots);
  gen->add_option("--phases", spec.phase_gates);
  gen->add_option("--seed", spec.seed);
  gen->add_option("--out", gen_out);

  int trials = 100;
  std::uint64_t small_seed = 1;
  unsigned threads = 0;
  auto* verify = app.add_subcommand("verify-small", "Heuristic against brute force on small instances");
  verify->add_option("--trials", trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", small_seed);
  verify->add_option("--threads", threads);

  std::string sweep, csv_out, plot_out;
  bool omit_timing = false;
  auto* bench = app.add_subcommand("bench", "Benchmark sweep to CSV");
  bench->add_option("--sweep", sweep, "Sweep config (JSON)")->required();
  bench->add_option("--out", csv_out);
  bench->add_option("--plot", plot_out, "Also write plot data (JSON)");
  bench->add_flag("--omit-timing", omit_timing, "Leave wall times out of the CSV");

  std::string oracle_in, oracle_plug = "none";
  auto* oracle = app.add_subcommand("oracle", "Dense tensor evaluation");
  oracle->add_option("--in", oracle_in)->required();
  oracle->add_option("--plug", oracle_plug)->check(CLI::IsMember({"zeros", "plus", "none"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*decompose) return run_decompose(dec);
    if (*gen) return run_gen(spec, gen_out);
    if (*verify) return run_verify_small(trials, small_seed, threads);
    if (*bench) return run_bench(sweep, csv_out, omit_timing, plot_out);
    if (*oracle) return run_oracle(oracle_in, oracle_plug);
  } catch (const BudgetError& e) {
    std::cerr << "zxcut: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "zxcut: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
