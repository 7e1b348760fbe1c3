// Copyright 2026 The jetcut Authors
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

// Command-line front end: event generation, oracle, QAOA, compilation,
// classical baselines and evaluation.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "jetcut/baselines.hpp"
#include "jetcut/circuit.hpp"
#include "jetcut/evaluation.hpp"
#include "jetcut/event.hpp"
#include "jetcut/graph.hpp"
#include "jetcut/maxcut.hpp"
#include "jetcut/pipeline.hpp"
#include "jetcut/qaoa.hpp"

namespace {

using namespace jetcut;

// Output stream for a path; "-" or empty means stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct QaoaFlags {
  int depth = 1;
  int shots = 1024;
  std::uint64_t seed = 0;
  int max_qubits = kDefaultMaxQubits;
  int max_evals = 200;
  double tolerance = 1e-6;
  std::string init = "interpolate";

  void add_to(CLI::App* cmd, bool with_depth = true) {
    if (with_depth)
      cmd->add_option("--depth", depth, "QAOA depth p")
          ->check(CLI::PositiveNumber);
    cmd->add_option("--shots", shots, "samples drawn from the final state")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "sampling seed; event i uses seed + i");
    cmd->add_option("--max-qubits", max_qubits, "statevector qubit cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-evals", max_evals, "optimizer evaluations per depth")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tolerance", tolerance, "optimizer tolerance on <H_C>");
    cmd->add_option("--init", init, "interpolate, zero-pad or grid")
        ->check(CLI::IsMember({"interpolate", "zero-pad", "grid"}));
  }

  QaoaConfig config(std::size_t event_index) const {
    QaoaConfig cfg;
    cfg.depth = depth;
    cfg.shots = shots;
    cfg.seed = seed + event_index;
    cfg.max_qubits = max_qubits;
    cfg.max_evals = max_evals;
    cfg.tolerance = tolerance;
    cfg.init = parse_init_strategy(init);
    cfg.validate();
    return cfg;
  }
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  for (const auto& item : split_list(s)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 1)
      throw std::invalid_argument(std::string(what) +
                                  ": expected positive integers, got '" + item +
                                  "'");
    out.push_back(v);
  }
  if (out.empty())
    throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

std::vector<MetricRecord> metrics(const std::vector<ResultRow>& rows) {
  std::vector<MetricRecord> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.metric());
  return out;
}

void print_table(const std::map<std::string, AlgorithmSummary>& summary,
                 std::ostream& out) {
  out << std::left << std::setw(10) << "algorithm" << std::right << std::setw(7)
      << "count" << std::setw(7) << "valid" << std::setw(10) << "mean"
      << std::setw(10) << "median" << std::setw(10) << "q1" << std::setw(10)
      << "q3" << '\n';
  out << std::fixed << std::setprecision(4);
  for (const auto& [name, s] : summary) {
    out << std::left << std::setw(10) << name << std::right << std::setw(7)
        << s.count << std::setw(7) << s.valid_count;
    if (s.stats) {
      out << std::setw(10) << s.stats->mean << std::setw(10) << s.stats->median
          << std::setw(10) << s.stats->q1 << std::setw(10) << s.stats->q3;
    } else {
      out << std::setw(10) << "-" << std::setw(10) << "-" << std::setw(10)
          << "-" << std::setw(10) << "-";
    }
    out << '\n';
  }
  out << std::defaultfloat;
}

void write_rows(const std::vector<ResultRow>& rows, std::ostream& out) {
  write_results_header(out);
  for (const auto& r : rows) write_result_row(r, out);
}

// ---- subcommands -----------------------------------------------------------

struct GenerateCmd {
  GeneratorConfig cfg;
  int count = 100;
  std::string out;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("generate", "write toy two-jet events");
    c->add_option("--count", count, "number of events")
        ->check(CLI::PositiveNumber);
    c->add_option("--particles", cfg.n_particles, "particles per event");
    c->add_option("--spread", cfg.angular_spread,
                  "cone half-angle around each axis, radians");
    c->add_option("--emin", cfg.energy_min, "minimum particle energy");
    c->add_option("--emax", cfg.energy_max, "maximum particle energy");
    c->add_option("--seed", cfg.seed, "seed of the first event");
    c->add_option("--out", out, "JSON-lines output (default stdout)");
    c->callback([this] { run(); });
  }

  void run() {
    std::vector<Event> events;
    for (auto& le : generate_sample(cfg, count))
      events.push_back(std::move(le.event));
    Output o(out);
    write_events(events, o.get());
  }
};

struct OracleCmd {
  std::string events;
  int k = 2;
  std::string out;
  std::string dump;
  int max_qubits = kDefaultMaxQubits;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("oracle", "exact max-cut per event");
    c->add_option("--events", events, "JSON-lines event file")->required();
    c->add_option("--k", k, "nearest neighbours per particle")->required();
    c->add_option("--out", out, "CSV output (default stdout)");
    c->add_option("--dump-graph", dump,
                  "also write each graph as 'i j w' lines");
    c->add_option("--max-nodes", max_qubits, "enumeration cap");
    c->callback([this] { run(); });
  }

  void run() {
    const auto evs = read_events(events);
    Output o(out);
    std::unique_ptr<Output> graphs;
    if (!dump.empty()) graphs = std::make_unique<Output>(dump);
    auto& os = o.get();
    os << "event_id,n,edges,c_max,partition\n" << std::setprecision(17);
    for (const auto& ev : evs) {
      const WeightedGraph g = build_graph(ev, k);
      if (graphs) {
        graphs->get() << "# event " << ev.id() << '\n';
        dump_graph(g, graphs->get());
      }
      const CutResult r = brute_force_maxcut(g, max_qubits);
      os << ev.id() << ',' << g.n() << ',' << g.edges().size() << ',' << r.value
         << ',' << r.best.to_string() << '\n';
    }
  }
};

struct QaoaCmd {
  std::string events;
  int k = 2;
  QaoaFlags q;
  std::string out;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("qaoa", "optimize and sample QAOA per event");
    c->add_option("--events", events, "JSON-lines event file")->required();
    c->add_option("--k", k, "nearest neighbours per particle")->required();
    q.add_to(c);
    c->add_option("--out", out, "results CSV (default stdout)");
    c->callback([this] { run(); });
  }

  void run() {
    const auto evs = read_events(events);
    Output o(out);
    write_results_header(o.get());
    for (std::size_t i = 0; i < evs.size(); ++i)
      write_result_row(run_qaoa(evs[i], k, q.config(i), q.max_qubits), o.get());
  }
};

struct CompileCmd {
  std::string events;
  int k = 2;
  QaoaFlags q;
  std::string coupling = "all2all";
  std::string out;
  std::string qasm;
  std::int64_t only = -1;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand(
        "compile", "lower optimized QAOA circuits to gates and route them");
    c->add_option("--events", events, "JSON-lines event file")->required();
    c->add_option("--k", k, "nearest neighbours per particle")->required();
    q.add_to(c);
    c->add_option("--coupling", coupling,
                  "coupling-map file of 'i j' lines, all2all or line");
    c->add_option("--out", out, "gate-list output (default stdout)");
    c->add_option("--qasm", qasm, "also write OpenQASM 2.0");
    c->add_option("--event", only, "compile only the event with this id");
    c->callback([this] { run(); });
  }

  CouplingMap coupling_for(int n) const {
    if (coupling == "all2all") return CouplingMap::all_to_all(n);
    if (coupling == "line") return CouplingMap::line(n);
    std::ifstream in(coupling);
    if (!in) throw std::runtime_error("cannot open '" + coupling + "'");
    return CouplingMap::read(in, n);
  }

  void run() {
    const auto evs = read_events(events);
    Output o(out);
    std::unique_ptr<Output> qo;
    if (!qasm.empty()) qo = std::make_unique<Output>(qasm);
    std::cerr << "event_id,n,edges,cnot,single_qubit,swap,depth\n";
    bool any = false;
    for (std::size_t i = 0; i < evs.size(); ++i) {
      const Event& ev = evs[i];
      if (only >= 0 && ev.id() != only) continue;
      any = true;
      const WeightedGraph g = build_graph(ev, k);
      const QaoaOutcome opt = optimize(g, q.config(i));
      const GateCircuit logical = lower(g, opt.params);
      const RoutedCircuit routed = route(logical, coupling_for(g.n()));
      const CircuitStats st = stats(routed.circuit);

      o.get() << "# event " << ev.id() << " layout";
      for (int p : routed.logical_to_physical) o.get() << ' ' << p;
      o.get() << '\n';
      write_circuit_text(routed.circuit, o.get());
      if (qo) {
        qo->get() << "// event " << ev.id() << '\n';
        write_circuit_qasm(routed.circuit, qo->get());
      }
      std::cerr << ev.id() << ',' << g.n() << ',' << g.edges().size() << ','
                << st.cnot_count << ',' << st.single_qubit_count << ','
                << st.swap_count << ',' << st.depth << '\n';
    }
    if (!any) throw std::invalid_argument("no event selected");
  }
};

struct BaselineCmd {
  std::string algo;
  std::string events;
  std::string out;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("baseline", "classical 2-jet clustering");
    c->add_option("--algo", algo, "kt or kmeans")
        ->required()
        ->check(CLI::IsMember({"kt", "kmeans"}));
    c->add_option("--events", events, "JSON-lines event file")->required();
    c->add_option("--out", out, "results CSV (default stdout)");
    c->callback([this] { run(); });
  }

  void run() {
    const auto evs = read_events(events);
    Output o(out);
    write_results_header(o.get());
    for (const auto& ev : evs)
      write_result_row(run_baseline(ev, algo), o.get());
  }
};

struct EvaluateCmd {
  std::vector<std::string> results;
  std::string out;
  std::string hist;
  AggregateOptions agg;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("evaluate", "summarize results CSV files");
    c->add_option("--results", results, "results CSV files")
        ->required()
        ->expected(1, -1);
    c->add_option("--out", out, "summary JSON (default stdout)");
    c->add_option("--hist", hist, "histogram CSV");
    c->add_option("--bins", agg.bins, "histogram bins")
        ->check(CLI::PositiveNumber);
    c->add_option("--lo", agg.lo, "histogram lower edge");
    c->add_option("--hi", agg.hi, "histogram upper edge");
    c->callback([this] { run(); });
  }

  void run() {
    std::vector<ResultRow> rows;
    for (const auto& path : results) {
      std::ifstream in(path);
      if (!in) throw std::runtime_error("cannot open '" + path + "'");
      try {
        auto part = read_results(in);
        rows.insert(rows.end(), part.begin(), part.end());
      } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
      }
    }
    const auto summary = aggregate(metrics(rows), agg);
    Output o(out);
    write_summary_json(summary, o.get());
    if (!hist.empty()) {
      Output h(hist);
      write_histogram_csv(summary, h.get());
    }
  }
};

struct BenchCmd {
  std::string events;
  int k = 2;
  QaoaFlags q;
  std::string algos = "qaoa,kt,kmeans";
  std::string out;
  std::string summary_path;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand(
        "bench", "run several algorithms on one event file and compare");
    c->add_option("--events", events, "JSON-lines event file")->required();
    c->add_option("--k", k, "nearest neighbours per particle");
    q.add_to(c);
    c->add_option("--algos", algos, "comma list of qaoa, kt, kmeans, random");
    c->add_option("--out", out, "also write the results CSV");
    c->add_option("--summary", summary_path, "also write the summary JSON");
    c->callback([this] { run(); });
  }

  void run() {
    const auto names = split_list(algos);
    for (const auto& a : names)
      if (a != "qaoa" && a != "kt" && a != "kmeans" && a != "random")
        throw std::invalid_argument("--algos: unknown algorithm '" + a + "'");
    const auto evs = read_events(events);
    std::vector<ResultRow> rows;
    for (const auto& a : names) {
      for (std::size_t i = 0; i < evs.size(); ++i) {
        if (a == "qaoa")
          rows.push_back(run_qaoa(evs[i], k, q.config(i), q.max_qubits));
        else if (a == "random")
          rows.push_back(run_random_partition(evs[i], q.seed + i));
        else
          rows.push_back(run_baseline(evs[i], a));
      }
    }
    if (!out.empty()) {
      Output o(out);
      write_rows(rows, o.get());
    }
    const auto summary = aggregate(metrics(rows));
    if (!summary_path.empty()) {
      Output s(summary_path);
      write_summary_json(summary, s.get());
    }
    print_table(summary, std::cout);
  }
};

struct SweepCmd {
  std::string events;
  std::string ks = "2";
  std::string depths = "1";
  QaoaFlags q;
  std::string out;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("sweep", "scan QAOA depth or graph k");
    auto* d = c->add_subcommand("depth", "QAOA at several depths");
    auto* kk = c->add_subcommand("k", "QAOA at several neighbour counts");
    c->require_subcommand(1);
    for (auto* s : {d, kk}) {
      s->add_option("--events", events, "JSON-lines event file")->required();
      s->add_option("--out", out, "results CSV (default stdout)");
    }
    d->add_option("--depths", depths, "comma list, e.g. 1,3,5");
    d->add_option("--k", ks, "nearest neighbours per particle");
    q.add_to(d, false);
    kk->add_option("--ks", ks, "comma list, e.g. 2,4,6,7,8");
    kk->add_option("--depth", depths, "QAOA depth p");
    q.add_to(kk, false);
    d->callback([this] { run(); });
    kk->callback([this] { run(); });
  }

  // One continuation run to the largest depth serves every requested depth.
  void run() {
    const auto k_list = parse_int_list(ks, "k");
    const auto d_list = parse_int_list(depths, "depths");
    const int max_depth = *std::max_element(d_list.begin(), d_list.end());
    const auto evs = read_events(events);
    std::vector<ResultRow> rows;
    for (int k : k_list) {
      for (std::size_t i = 0; i < evs.size(); ++i) {
        QaoaConfig cfg = q.config(i);
        cfg.depth = max_depth;
        const auto all = run_qaoa_depths(evs[i], k, cfg, q.max_qubits);
        for (int p : d_list) rows.push_back(all[p - 1]);
      }
    }
    Output o(out);
    write_rows(rows, o.get());
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jetcut: QAOA max-cut 2-jet clustering toolkit"};
  app.require_subcommand(1);

  GenerateCmd generate;
  OracleCmd oracle;
  QaoaCmd qaoa;
  CompileCmd compile;
  BaselineCmd baseline;
  EvaluateCmd evaluate;
  BenchCmd bench;
  SweepCmd sweep;
  generate.add(app);
  oracle.add(app);
  qaoa.add(app);
  compile.add(app);
  baseline.add(app);
  evaluate.add(app);
  bench.add(app);
  sweep.add(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "jetcut: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
