// Copyright 2026 The qaoa-landscape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qaoa-landscape: graph generation and landscape sweeps.
//
//   qaoa-landscape gen-graphs --n 8,10 --graphs 5 --seed 1 --out graphs.json
//   qaoa-landscape quality  --n 6,8,10,12 --p 5 --out quality.csv
//   qaoa-landscape quality  --n 4,8,12 --p-log-coeff 6 --cutoff 0.95 --out logn.csv
//   qaoa-landscape quantity --n 8 --p 1:8 --out quantity.csv
//   qaoa-landscape radius   --n 8 --p 5 --out radius.csv

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qaoa/experiments.hpp"
#include "qaoa/graph.hpp"

namespace {

// "6,8,10" or "8:16:2" (inclusive range with optional step) or a mix.
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      out.push_back(std::stoi(item));
      continue;
    }
    const auto colon2 = item.find(':', colon + 1);
    const int lo = std::stoi(item.substr(0, colon));
    const int hi = std::stoi(item.substr(colon + 1, colon2 == std::string::npos ? std::string::npos : colon2 - colon - 1));
    const int step = colon2 == std::string::npos ? 1 : std::stoi(item.substr(colon2 + 1));
    if (step < 1) throw std::invalid_argument("range step must be >= 1");
    for (int v = lo; v <= hi; v += step) out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list '" + text + "'");
  return out;
}

struct CommonFlags {
  std::string n_list = "8";
  std::string p_list = "5";
  double p_log_coeff = 0.0;
  double log_base = 2.0;
  double edge_prob = 0.5;
  std::size_t graphs = 10;
  std::size_t inits = 100;
  double cutoff = 0.99;
  std::uint64_t seed = 0;
  double precision = 1e-3;
  double eps = 1e-3;
  std::size_t vectors = 0;
  std::string out;
  unsigned threads = 0;
  bool paper_scale = false;
  bool resume = false;
  bool timing = false;
  std::string graph_file;
  double gtol = 1e-8;
  int max_iter = 1000;
  double max_step = 1.0;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool sweep) {
  cmd->add_option("--n", f.n_list, "Vertex counts, e.g. 6,8,10 or 6:12:2")->capture_default_str();
  cmd->add_option("--edge-prob", f.edge_prob, "Erdos-Renyi edge probability")->capture_default_str();
  cmd->add_option("--graphs", f.graphs, "Graphs per n")->capture_default_str();
  cmd->add_option("--seed", f.seed, "Master seed")->capture_default_str();
  cmd->add_option("--out", f.out, "Output path")->required();
  if (!sweep) return;
  auto* p_opt = cmd->add_option("--p", f.p_list, "QAOA rounds, e.g. 5 or 1:8")->capture_default_str();
  auto* log_opt = cmd->add_option("--p-log-coeff", f.p_log_coeff, "Use p = round(c * log_base(n))");
  p_opt->excludes(log_opt);
  cmd->add_option("--log-base", f.log_base, "Logarithm base for --p-log-coeff")->capture_default_str();
  cmd->add_option("--inits", f.inits, "Random initializations per graph")->capture_default_str();
  cmd->add_option("--cutoff", f.cutoff, "Approximation-ratio cutoff")->capture_default_str();
  cmd->add_option("--precision", f.precision, "Basin-radius bisection precision")->capture_default_str();
  cmd->add_option("--eps", f.eps, "Same-minimum distance threshold")->capture_default_str();
  cmd->add_option("--vectors", f.vectors, "Probe directions per minimum (0 = 2p)")->capture_default_str();
  cmd->add_option("--threads", f.threads, "Worker threads (0 = all cores)")->capture_default_str();
  cmd->add_flag("--paper-scale", f.paper_scale, "Use 40 graphs x 200 inits (1000 inits with --p-log-coeff)");
  cmd->add_flag("--resume", f.resume, "Keep rows already in --out and compute the rest");
  cmd->add_flag("--timing", f.timing, "Fill the wall_seconds column");
  cmd->add_option("--graph-file", f.graph_file, "Use this graph (JSON) instead of sampling");
  cmd->add_option("--gtol", f.gtol, "BFGS gradient tolerance (inf-norm)")->capture_default_str();
  cmd->add_option("--max-iter", f.max_iter, "BFGS iteration cap")->capture_default_str();
  cmd->add_option("--max-step", f.max_step, "Longest trial step of the line search")->capture_default_str();
}

qaoa::SweepConfig make_config(const CLI::App* cmd, const CommonFlags& f, qaoa::SweepMode mode) {
  qaoa::SweepConfig c;
  c.mode = mode;
  c.n_values = parse_int_list(f.n_list);
  const bool log_rule = cmd->count("--p-log-coeff") > 0;
  c.rounds = log_rule ? qaoa::RoundsRule::logarithmic(f.p_log_coeff, f.log_base)
                      : qaoa::RoundsRule::fixed_rounds(parse_int_list(f.p_list));
  c.edge_probability = f.edge_prob;
  c.num_graphs = f.graphs;
  c.num_inits = f.inits;
  if (f.paper_scale) {
    if (cmd->count("--graphs") == 0) c.num_graphs = 40;
    if (cmd->count("--inits") == 0) c.num_inits = log_rule ? 1000 : 200;
  }
  c.cutoff = f.cutoff;
  c.master_seed = f.seed;
  c.precision = f.precision;
  c.eps = f.eps;
  c.num_vectors = f.vectors;
  c.threads = f.threads;
  c.record_timing = f.timing;
  c.bfgs.gradient_tolerance = f.gtol;
  c.bfgs.max_iterations = f.max_iter;
  c.bfgs.max_step = f.max_step;
  if (!f.graph_file.empty()) {
    std::ifstream in(f.graph_file);
    if (!in) throw std::invalid_argument("cannot read graph file " + f.graph_file);
    const auto j = nlohmann::json::parse(in);
    if (j.is_array() && j.size() != 1) {
      throw std::invalid_argument("graph file holds " + std::to_string(j.size()) + " graphs, expected one");
    }
    c.graph_override = qaoa::graph_from_json(j.is_array() ? j[0] : j);
  }
  c.validate();
  return c;
}

int run_gen_graphs(const CommonFlags& f) {
  qaoa::SweepConfig c;
  c.n_values = parse_int_list(f.n_list);
  c.edge_probability = f.edge_prob;
  c.num_graphs = f.graphs;
  c.master_seed = f.seed;
  c.validate();
  nlohmann::json out = nlohmann::json::array();
  for (const auto& g : qaoa::sweep_graphs(c)) out.push_back(g);
  std::ofstream file(f.out);
  if (!file) throw std::runtime_error("cannot write " + f.out);
  file << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QAOA MaxCut landscape sweeps: quality and quantity of local minima"};
  app.require_subcommand(1);

  CommonFlags gen_flags;
  auto* gen = app.add_subcommand("gen-graphs", "Write the Erdos-Renyi graphs a sweep would use");
  add_common(gen, gen_flags, false);

  struct Sweep {
    const char* name;
    const char* help;
    qaoa::SweepMode mode;
    CommonFlags flags;
    CLI::App* cmd = nullptr;
  };
  std::vector<Sweep> sweeps = {
      {"quality", "Fraction of random starts reaching the approximation-ratio cutoff", qaoa::SweepMode::quality, {}},
      {"quantity", "Estimated number of local minima from basin volumes", qaoa::SweepMode::quantity, {}},
      {"radius", "Basin-radius statistics across probe vectors and minima", qaoa::SweepMode::radius_stats, {}},
  };
  for (auto& s : sweeps) {
    s.cmd = app.add_subcommand(s.name, s.help);
    add_common(s.cmd, s.flags, true);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return run_gen_graphs(gen_flags);
    for (auto& s : sweeps) {
      if (!*s.cmd) continue;
      const qaoa::SweepConfig config = make_config(s.cmd, s.flags, s.mode);
      const auto records = qaoa::run_sweep_to_files(config, s.flags.out, s.flags.resume);
      std::cerr << "wrote " << records.size() << " rows to " << s.flags.out << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
