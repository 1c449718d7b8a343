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

#include "zxcut/bench.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "zxcut/error.hpp"
#include "zxcut/procedure.hpp"
#include "zxcut/simplify.hpp"

namespace zxcut {
namespace {

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested ? requested : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

/// Runs job(i) for i in [0, n) on a pool of workers.
template <typename Job>
void parallel_for(std::size_t n, unsigned threads, Job job) {
  const unsigned w = worker_count(threads, n);
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex m;
  for (unsigned t = 0; t < w; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(m);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct Candidate {
  Count terms;
  int size;
  std::uint64_t mask;
  bool operator<(const Candidate& o) const {
    return std::tie(terms, size, mask) < std::tie(o.terms, o.size, o.mask);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_double(double x, const char* f = "%.6f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string opt_count(const std::optional<Count>& c) { return c ? c->str() : ""; }
std::string opt_alpha(const std::optional<double>& a) { return a ? fmt_double(*a) : ""; }

}  // namespace

BruteForceResult brute_force_optimal(const Diagram& d, std::size_t cap, unsigned threads) {
  ParamGraph base(d);
  settle(base);
  std::vector<VertexId> cands;
  for (VertexId v : base.diagram.vertices()) {
    if (base.diagram.kind(v) == VertexKind::Z) cands.push_back(v);
  }
  if (cands.size() > cap) {
    throw LimitError("brute_force_optimal: " + std::to_string(cands.size()) + " Z-spiders exceed the cap of " +
                     std::to_string(cap));
  }
  const std::uint64_t total = std::uint64_t{1} << cands.size();
  const std::size_t chunks = std::min<std::uint64_t>(total, 256);
  std::vector<std::optional<Candidate>> best(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    for (std::uint64_t mask = c; mask < total; mask += chunks) {
      ParamGraph pg = base;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if (mask >> i & 1U) pg = param_cut(std::move(pg), cands[i], std::nullopt, PhaseMerge::Lossy);
      }
      settle(pg);
      Candidate cand{parametric_count(pg), std::popcount(mask), mask};
      if (!best[c] || cand < *best[c]) best[c] = cand;
    }
  });
  Candidate winner = *best[0];
  for (const auto& b : best) {
    if (b && *b < winner) winner = *b;
  }
  BruteForceResult r;
  r.best_terms = winner.terms;
  r.candidates = cands.size();
  r.subsets = total;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (winner.mask >> i & 1U) r.best_set.push_back(cands[i]);
  }
  return r;
}

OptimalityRow optimality_trial(const Diagram& d, std::size_t cap, unsigned threads) {
  OptimalityRow row;
  ProcedureReport proc = run_procedure(d, ProcedureMode::Parametric);
  BruteForceResult bf = brute_force_optimal(d, cap, threads);
  row.z_spiders = bf.candidates;
  row.t_count = proc.t_start;
  row.proc_terms = proc.terms;
  row.best_terms = bf.best_terms;
  row.best_set = bf.best_set;
  row.success = proc.terms <= bf.best_terms;
  return row;
}

OptimalityStudy optimality_study(int trials, const GenSpec& spec, std::size_t cap, unsigned threads) {
  OptimalityStudy s;
  int hits = 0;
  for (int i = 0; i < trials; ++i) {
    GenSpec si = spec;
    si.seed = spec.seed + static_cast<std::uint64_t>(i);
    SmallInstance inst = generate_small_verifiable(si, cap);
    OptimalityRow row = optimality_trial(plug_plus(build_from_gates(inst.gates)), cap, threads);
    row.index = i;
    row.seed = inst.seed;
    hits += row.success;
    s.rows.push_back(std::move(row));
  }
  s.success_rate = trials > 0 ? static_cast<double>(hits) / trials : 0.0;
  return s;
}

std::vector<GenSpec> scaled_specs(int qubits, const std::vector<int>& scales, const std::vector<int>& ratio,
                                  int seeds_per_scale, std::uint64_t seed) {
  if (ratio.size() != 4) throw InputError("sweep ratio needs four entries: sandwiches, toffolis, cnots, phases");
  std::vector<GenSpec> out;
  std::uint64_t s = seed;
  for (int scale : scales) {
    for (int i = 0; i < seeds_per_scale; ++i) {
      GenSpec g{qubits, ratio[0] * scale, ratio[1] * scale, ratio[2] * scale, ratio[3] * scale, s++};
      g.validate();
      out.push_back(g);
    }
  }
  return out;
}

SweepConfig parse_sweep_config(std::string_view text) {
  using nlohmann::json;
  SweepConfig cfg;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("sweep config: ") + e.what());
  }
  try {
    if (j.contains("budget")) cfg.budget = Count(j.at("budget").get<std::uint64_t>());
    if (j.contains("exact")) cfg.exact = j.at("exact").get<bool>();
    if (j.contains("blind")) cfg.blind = j.at("blind").get<bool>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<unsigned>();
    if (j.contains("specs")) {
      for (const json& s : j.at("specs")) {
        GenSpec g;
        g.qubits = s.at("qubits").get<int>();
        g.sandwiches = s.value("sandwiches", 0);
        g.toffolis = s.value("toffolis", 0);
        g.cnots = s.value("cnots", 0);
        g.phase_gates = s.value("phase_gates", 0);
        g.seed = s.value("seed", std::uint64_t{0});
        g.validate();
        cfg.specs.push_back(g);
      }
    }
    if (j.contains("sweep")) {
      const json& s = j.at("sweep");
      auto more = scaled_specs(s.at("qubits").get<int>(), s.at("scales").get<std::vector<int>>(),
                               s.value("ratio", std::vector<int>{2, 1, 2, 2}), s.value("seeds", 1),
                               s.value("seed", std::uint64_t{0}));
      cfg.specs.insert(cfg.specs.end(), more.begin(), more.end());
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("sweep config: ") + e.what());
  }
  return cfg;
}

BenchRow bench_one(const GateList& g, std::uint64_t seed, const SweepConfig& cfg) {
  using clock = std::chrono::steady_clock;
  BenchRow row;
  row.seed = seed;
  std::vector<std::string> notes;
  const Diagram plugged = plug_plus(build_from_gates(g));
  Diagram full = plugged;
  full_simplify(full);
  row.t_initial = full.t_count();
  if (row.t_initial == 0) notes.push_back("alpha undefined");

  auto t0 = clock::now();
  row.terms_bss_blind = blind_estimate_bss(row.t_initial);
  row.alpha_bss_blind = effective_alpha(row.terms_bss_blind, row.t_initial);
  row.time_bss_blind = seconds_since(t0);

  t0 = clock::now();
  ProcedureReport blind = run_procedure(plugged, ProcedureMode::Blind);
  row.terms_proc_blind = blind.terms;
  row.alpha_proc_blind = effective_alpha(blind.terms, row.t_initial);
  row.time_proc_blind = seconds_since(t0);

  if (cfg.exact) {
    if (row.terms_bss_blind <= cfg.budget) {
      t0 = clock::now();
      try {
        DriverOptions o;
        o.budget = cfg.budget;
        TermSum ts = decompose_bss_driver(plugged, o);
        row.terms_bss_exact = ts.count;
        row.alpha_bss_exact = effective_alpha(ts.count, row.t_initial);
        row.amplitude_bss = ts.sum;
      } catch (const BudgetError&) {
        notes.push_back("bss exact over budget");
      }
      row.time_bss_exact = seconds_since(t0);
    } else {
      notes.push_back("bss exact skipped");
    }
    if (row.terms_proc_blind <= cfg.budget) {
      t0 = clock::now();
      ProcedureOptions o;
      o.max_terms = cfg.budget;
      ProcedureReport exact = run_procedure(plugged, ProcedureMode::Exact, o);
      if (exact.complete) {
        row.terms_proc_exact = exact.terms;
        row.alpha_proc_exact = effective_alpha(exact.terms, row.t_initial);
        row.amplitude_proc = exact.value;
      } else {
        notes.push_back("proc exact incomplete");
      }
      row.time_proc_exact = seconds_since(t0);
    } else {
      notes.push_back("proc exact skipped");
    }
    if (row.amplitude_bss && row.amplitude_proc && std::abs(*row.amplitude_bss - *row.amplitude_proc) > 1e-7) {
      notes.push_back("amplitude mismatch");
    }
  }
  if (!notes.empty()) {
    row.status.clear();
    for (std::size_t i = 0; i < notes.size(); ++i) row.status += (i ? "; " : "") + notes[i];
  }
  return row;
}

std::vector<BenchRow> bench_sweep(const SweepConfig& cfg) {
  std::vector<BenchRow> rows(cfg.specs.size());
  parallel_for(cfg.specs.size(), cfg.threads, [&](std::size_t i) {
    const GenSpec& spec = cfg.specs[i];
    try {
      rows[i] = bench_one(generate(spec), spec.seed, cfg);
    } catch (const std::exception& e) {
      rows[i] = BenchRow{};
      rows[i].seed = spec.seed;
      rows[i].status = std::string("failed: ") + e.what();
    }
  });
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool timing) {
  std::ostringstream os;
  os << "seed,t_initial,terms_bss_exact,terms_bss_blind,terms_proc_exact,terms_proc_blind,"
        "alpha_bss_exact,alpha_bss_blind,alpha_proc_exact,alpha_proc_blind,";
  if (timing) os << "time_bss_exact,time_bss_blind,time_proc_exact,time_proc_blind,";
  os << "amplitude_bss_re,amplitude_bss_im,amplitude_proc_re,amplitude_proc_im,status\n";
  auto amp = [](const std::optional<std::complex<double>>& a) {
    return a ? fmt_double(a->real(), "%.17g") + "," + fmt_double(a->imag(), "%.17g") : std::string(",");
  };
  for (const BenchRow& r : rows) {
    os << r.seed << ',' << r.t_initial << ',' << opt_count(r.terms_bss_exact) << ',' << r.terms_bss_blind << ','
       << opt_count(r.terms_proc_exact) << ',' << r.terms_proc_blind << ',' << opt_alpha(r.alpha_bss_exact) << ','
       << opt_alpha(r.alpha_bss_blind) << ',' << opt_alpha(r.alpha_proc_exact) << ',' << opt_alpha(r.alpha_proc_blind)
       << ',';
    if (timing) {
      os << fmt_double(r.time_bss_exact) << ',' << fmt_double(r.time_bss_blind) << ',' << fmt_double(r.time_proc_exact)
         << ',' << fmt_double(r.time_proc_blind) << ',';
    }
    os << amp(r.amplitude_bss) << ',' << amp(r.amplitude_proc) << ",\"" << r.status << "\"\n";
  }
  return os.str();
}

std::string plot_data_json(const std::vector<BenchRow>& rows) {
  using nlohmann::json;
  json points = json::array();
  std::size_t t_max = 0;
  auto put = [](json& o, const char* key, const std::optional<Count>& c) {
    o[key] = c ? json(log2_count(*c)) : json(nullptr);
  };
  auto put_alpha = [](json& o, const char* key, const std::optional<double>& a) {
    o[key] = a ? json(*a) : json(nullptr);
  };
  for (const BenchRow& r : rows) {
    t_max = std::max(t_max, r.t_initial);
    json p;
    p["seed"] = r.seed;
    p["t"] = r.t_initial;
    put(p, "log2_terms_bss_exact", r.terms_bss_exact);
    put(p, "log2_terms_bss_blind", r.terms_bss_blind);
    put(p, "log2_terms_proc_exact", r.terms_proc_exact);
    put(p, "log2_terms_proc_blind", r.terms_proc_blind);
    put_alpha(p, "alpha_bss_exact", r.alpha_bss_exact);
    put_alpha(p, "alpha_bss_blind", r.alpha_bss_blind);
    put_alpha(p, "alpha_proc_exact", r.alpha_proc_exact);
    put_alpha(p, "alpha_proc_blind", r.alpha_proc_blind);
    points.push_back(std::move(p));
  }
  json ideal = json::array();
  for (std::size_t t = 0; t <= t_max; ++t) ideal.push_back({{"t", t}, {"log2_terms", 0.468 * static_cast<double>(t)}});
  json out;
  out["points"] = std::move(points);
  out["bss_ideal"] = std::move(ideal);
  return out.dump(2) + "\n";
}

}  // namespace zxcut
