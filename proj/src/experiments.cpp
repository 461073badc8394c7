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

#include "qaoa/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qaoa/simulator.hpp"

namespace qaoa {
namespace {

// Domain tag separating graph seeds from init seeds.
constexpr std::uint64_t kGraphStreamTag = 0x6772617068ULL;  // "graph"

template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("failed to format number");
  return std::string(buf, end);
}

std::string format_optional(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::optional<double> parse_optional(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stod(s);
}

InitRecord run_init(const SweepConfig& config, const std::shared_ptr<const CostTable>& table, int p,
                    std::size_t graph_index, std::size_t init_index, int n) {
  const auto t0 = std::chrono::steady_clock::now();
  std::unique_ptr<Objective> objective = config.objective_override
                                             ? config.objective_override(table, p)
                                             : std::make_unique<QaoaObjective>(table, p);
  InitRecord rec;
  rec.init_index = init_index;
  rec.seed = init_seed(config.master_seed, n, p, graph_index, init_index);
  RandomStream rng(rec.seed);
  const LandscapeSpec spec = LandscapeSpec::full_period(objective->dimension());
  const std::vector<double> start = sample_uniform(spec, rng);
  LocalMinimum m = minimize(*objective, start, config.bfgs);
  rec.converged = m.converged;
  rec.iterations = m.iterations;
  rec.value = m.value;
  rec.approx_ratio = m.approx_ratio;
  rec.grad_norm = m.grad_norm;
  rec.point = m.point;

  if (config.mode != SweepMode::quality && m.converged) {
    BasinOptions opts;
    opts.bfgs = config.bfgs;
    opts.precision = config.precision;
    opts.eps = config.eps;
    opts.num_vectors = config.num_vectors;
    BasinEstimate basin = estimate_basin(*objective, m, rng, opts);
    rec.radii = std::move(basin.radii);
    rec.mean_radius = basin.mean_radius;
    rec.volume = basin.volume;
    rec.failed_probes = basin.failed_probes;
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

// Edgeless draws have no defined approximation ratio; redraw from a derived
// seed. The recorded graph_seed is the one that produced the kept graph.
Graph sample_graph(const SweepConfig& config, int n, std::size_t graph_index) {
  if (config.graph_override) return *config.graph_override;
  std::uint64_t seed = graph_seed(config.master_seed, n, graph_index);
  Graph graph = gen_er(n, config.edge_probability, seed);
  for (std::uint64_t attempt = 1; graph.num_edges() == 0 && n > 1 && config.edge_probability > 0.0; ++attempt) {
    seed = derive_seed(seed, {attempt});
    graph = gen_er(n, config.edge_probability, seed);
  }
  return graph;
}

// Keeps the header and the rows whose (n, p, graph_index) columns are in `keep`.
void filter_rows(const std::filesystem::path& path, std::size_t n_column, const std::set<RecordKey>& keep) {
  if (!std::filesystem::exists(path)) return;
  std::vector<std::string> lines;
  {
    std::ifstream in(path);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
      if (header) {
        lines.push_back(line);
        header = false;
        continue;
      }
      const auto f = split_csv_line(line);
      if (f.size() < n_column + 3) continue;
      const RecordKey key{std::stoi(f[n_column]), std::stoi(f[n_column + 1]), std::stoull(f[n_column + 2])};
      if (keep.count(key)) lines.push_back(line);
    }
  }
  std::ofstream out(path, std::ios::trunc);
  for (const auto& l : lines) out << l << '\n';
}

}  // namespace

std::string_view mode_name(SweepMode mode) {
  switch (mode) {
    case SweepMode::quality: return "quality";
    case SweepMode::quantity: return "quantity";
    case SweepMode::radius_stats: return "radius-stats";
  }
  return "unknown";
}

SweepMode parse_mode(std::string_view name) {
  if (name == "quality") return SweepMode::quality;
  if (name == "quantity") return SweepMode::quantity;
  if (name == "radius-stats" || name == "radius") return SweepMode::radius_stats;
  throw std::invalid_argument("unknown sweep mode '" + std::string(name) + "'");
}

std::vector<int> RoundsRule::rounds_for(int n) const {
  if (kind == Kind::fixed) return fixed;
  const double raw = coefficient * std::log(static_cast<double>(n)) / std::log(log_base);
  return {std::max(1, static_cast<int>(std::lround(raw)))};
}

RoundsRule RoundsRule::fixed_rounds(std::vector<int> values) {
  RoundsRule rule;
  rule.kind = Kind::fixed;
  rule.fixed = std::move(values);
  return rule;
}

RoundsRule RoundsRule::logarithmic(double coefficient, double log_base) {
  RoundsRule rule;
  rule.kind = Kind::logarithmic;
  rule.fixed.clear();
  rule.coefficient = coefficient;
  rule.log_base = log_base;
  return rule;
}

void SweepConfig::validate() const {
  if (n_values.empty()) throw std::invalid_argument("at least one n is required");
  for (int n : n_values) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > kDefaultMaxQubits) {
      throw ResourceError("n = " + std::to_string(n) + " exceeds the qubit cap of " +
                          std::to_string(kDefaultMaxQubits));
    }
  }
  if (rounds.kind == RoundsRule::Kind::fixed) {
    if (rounds.fixed.empty()) throw std::invalid_argument("at least one p is required");
    for (int p : rounds.fixed) {
      if (p < 1) throw std::invalid_argument("p must be >= 1");
    }
  } else {
    if (!(rounds.coefficient > 0.0)) throw std::invalid_argument("log coefficient must be positive");
    if (!(rounds.log_base > 1.0)) throw std::invalid_argument("log base must exceed 1");
  }
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  if (num_graphs < 1) throw std::invalid_argument("graph count must be >= 1");
  if (num_inits < 1) throw std::invalid_argument("init count must be >= 1");
  if (!(cutoff >= 0.0 && cutoff <= 1.0)) throw std::invalid_argument("cutoff must lie in [0, 1]");
  if (!(precision > 0.0)) throw std::invalid_argument("precision must be positive");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (graph_override) {
    for (int n : n_values) {
      if (n != graph_override->num_vertices()) {
        throw std::invalid_argument("override graph has " + std::to_string(graph_override->num_vertices()) +
                                    " vertices but the sweep asks for n = " + std::to_string(n));
      }
    }
  }
}

nlohmann::json config_to_json(const SweepConfig& c) {
  nlohmann::json rounds;
  if (c.rounds.kind == RoundsRule::Kind::fixed) {
    rounds = {{"kind", "fixed"}, {"values", c.rounds.fixed}};
  } else {
    rounds = {{"kind", "log"}, {"coefficient", c.rounds.coefficient}, {"base", c.rounds.log_base}};
  }
  nlohmann::json resolved = nlohmann::json::object();
  for (int n : c.n_values) resolved[std::to_string(n)] = c.rounds.rounds_for(n);
  nlohmann::json j = {
      {"csv_schema_version", kCsvSchemaVersion},
      {"mode", mode_name(c.mode)},
      {"n_values", c.n_values},
      {"rounds", rounds},
      {"rounds_per_n", resolved},
      {"edge_probability", c.edge_probability},
      {"num_graphs", c.num_graphs},
      {"num_inits", c.num_inits},
      {"cutoff", c.cutoff},
      {"master_seed", c.master_seed},
      {"precision", c.precision},
      {"eps", c.eps},
      {"num_vectors", c.num_vectors},
      {"bfgs",
       {{"gradient_tolerance", c.bfgs.gradient_tolerance},
        {"max_iterations", c.bfgs.max_iterations},
        {"c1", c.bfgs.c1},
        {"c2", c.bfgs.c2},
        {"max_step", c.bfgs.max_step},
        {"max_line_search_evaluations", c.bfgs.max_line_search_evaluations}}},
      {"record_timing", c.record_timing},
  };
  if (c.graph_override) j["graph_override"] = *c.graph_override;
  if (c.objective_override) j["objective_override"] = true;
  return j;
}

std::uint64_t graph_seed(std::uint64_t master_seed, int n, std::size_t graph_index) {
  return derive_seed(master_seed, {kGraphStreamTag, static_cast<std::uint64_t>(n), graph_index});
}

std::uint64_t init_seed(std::uint64_t master_seed, int n, int p, std::size_t graph_index, std::size_t init_index) {
  return derive_seed(master_seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(p), graph_index,
                                   init_index});
}

double recompute_quality_fraction(const std::vector<InitRecord>& inits, double cutoff) {
  if (inits.empty()) return 0.0;
  const auto hits = std::count_if(inits.begin(), inits.end(),
                                  [&](const InitRecord& r) { return r.converged && r.approx_ratio >= cutoff; });
  return static_cast<double>(hits) / static_cast<double>(inits.size());
}

double duplicate_rate(const std::vector<InitRecord>& inits, double eps) {
  std::vector<const InitRecord*> seen;
  std::size_t duplicates = 0;
  for (const auto& r : inits) {
    if (!r.converged) continue;
    const bool dup = std::any_of(seen.begin(), seen.end(),
                                 [&](const InitRecord* s) { return same_minimum(s->point, r.point, eps); });
    duplicates += dup;
    seen.push_back(&r);
  }
  return seen.empty() ? 0.0 : static_cast<double>(duplicates) / static_cast<double>(seen.size());
}

double coefficient_of_variation(const std::vector<double>& values) {
  if (values.size() < 2) return 0.0;
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / (n - 1.0)) / mean;
}

void aggregate_record(RunRecord& record, const SweepConfig& config) {
  record.num_inits = record.inits.size();
  record.nonconverged_count = static_cast<std::size_t>(
      std::count_if(record.inits.begin(), record.inits.end(), [](const InitRecord& r) { return !r.converged; }));
  record.quality_fraction = recompute_quality_fraction(record.inits, config.cutoff);
  record.duplicate_rate = duplicate_rate(record.inits, config.eps);

  if (record.mode != SweepMode::quality) {
    std::vector<double> volumes;
    std::vector<double> mean_radii;
    std::vector<double> cv_vectors;
    std::size_t dimension = 0;
    for (const auto& r : record.inits) {
      if (!r.converged || r.radii.empty()) continue;
      volumes.push_back(r.volume);
      mean_radii.push_back(r.mean_radius);
      cv_vectors.push_back(coefficient_of_variation(r.radii));
      dimension = r.point.size();
    }
    if (!volumes.empty()) {
      const double total_volume = LandscapeSpec::full_period(dimension).volume();
      record.num_minima_estimate = minima_count_from_volumes(total_volume, volumes);
      record.mean_radius =
          std::accumulate(mean_radii.begin(), mean_radii.end(), 0.0) / static_cast<double>(mean_radii.size());
      record.radius_cv_vectors =
          std::accumulate(cv_vectors.begin(), cv_vectors.end(), 0.0) / static_cast<double>(cv_vectors.size());
      record.radius_cv_minima = coefficient_of_variation(mean_radii);
    }
  }
  if (config.record_timing) {
    double total = 0.0;
    for (const auto& r : record.inits) total += r.seconds;
    record.wall_seconds = total;
  } else {
    record.wall_seconds.reset();
  }
}

std::vector<Graph> sweep_graphs(const SweepConfig& config) {
  std::vector<Graph> graphs;
  for (int n : config.n_values) {
    for (std::size_t g = 0; g < config.num_graphs; ++g) {
      graphs.push_back(sample_graph(config, n, g));
    }
  }
  return graphs;
}

std::vector<RunRecord> run_sweep(const SweepConfig& config, const RecordSink& sink, const std::set<RecordKey>& skip) {
  config.validate();
  const unsigned threads = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());

  std::vector<RunRecord> records;
  for (int n : config.n_values) {
    for (int p : config.rounds.rounds_for(n)) {
      for (std::size_t g = 0; g < config.num_graphs; ++g) {
        if (skip.count({n, p, g})) continue;
        const Graph graph = sample_graph(config, n, g);
        auto table = std::make_shared<const CostTable>(build_cost_table(graph));

        RunRecord rec;
        rec.mode = config.mode;
        rec.n = n;
        rec.p = p;
        rec.graph_index = g;
        rec.graph_seed = graph.seed().value_or(0);
        rec.num_edges = graph.num_edges();
        rec.optimum = table->optimum;
        if (graph.num_edges() == 0 && !config.objective_override) {
          throw std::invalid_argument("graph " + std::to_string(g) + " at n = " + std::to_string(n) +
                                      " has no edges; the approximation ratio is undefined");
        }
        rec.inits.resize(config.num_inits);
        parallel_for(config.num_inits, threads, [&](std::size_t i) {
          rec.inits[i] = run_init(config, table, p, g, i, n);
        });
        aggregate_record(rec, config);
        if (sink) sink(rec);
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

std::vector<RunRecord> run_quality_sweep(SweepConfig config, const RecordSink& sink) {
  config.mode = SweepMode::quality;
  return run_sweep(config, sink);
}

std::vector<RunRecord> run_quantity_sweep(SweepConfig config, const RecordSink& sink) {
  config.mode = SweepMode::quantity;
  return run_sweep(config, sink);
}

std::vector<RunRecord> run_radius_stats(SweepConfig config, const RecordSink& sink) {
  config.mode = SweepMode::radius_stats;
  return run_sweep(config, sink);
}

void write_summary_row(std::ostream& out, const RunRecord& r) {
  out << mode_name(r.mode) << ',' << r.n << ',' << r.p << ',' << r.graph_index << ',' << r.graph_seed << ','
      << r.num_inits << ',' << format_double(r.quality_fraction) << ',' << format_optional(r.num_minima_estimate)
      << ',' << format_optional(r.mean_radius) << ',' << format_optional(r.radius_cv_vectors) << ','
      << format_optional(r.radius_cv_minima) << ',' << format_double(r.duplicate_rate) << ','
      << r.nonconverged_count << ',' << format_optional(r.wall_seconds) << '\n';
}

void write_endpoint_rows(std::ostream& out, const RunRecord& r) {
  for (const auto& i : r.inits) {
    out << mode_name(r.mode) << ',' << r.n << ',' << r.p << ',' << r.graph_index << ',' << i.init_index << ','
        << i.seed << ',' << (i.converged ? 1 : 0) << ',' << i.iterations << ',' << format_double(i.value) << ','
        << format_double(i.approx_ratio) << ',' << format_double(i.grad_norm) << '\n';
  }
}

void write_radius_rows(std::ostream& out, const RunRecord& r) {
  for (const auto& i : r.inits) {
    for (std::size_t v = 0; v < i.radii.size(); ++v) {
      out << r.n << ',' << r.p << ',' << r.graph_index << ',' << i.init_index << ',' << v << ','
          << format_double(i.radii[v]) << '\n';
    }
  }
}

std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kSummaryHeader) {
    throw std::runtime_error(path.string() + " does not start with the expected summary header");
  }
  std::vector<SummaryRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 14) throw std::runtime_error("malformed summary row: " + line);
    SummaryRow row;
    row.mode = f[0];
    row.n = std::stoi(f[1]);
    row.p = std::stoi(f[2]);
    row.graph_index = std::stoull(f[3]);
    row.graph_seed = std::stoull(f[4]);
    row.num_inits = std::stoull(f[5]);
    row.quality_fraction = std::stod(f[6]);
    row.num_minima_estimate = parse_optional(f[7]);
    row.mean_radius = parse_optional(f[8]);
    row.radius_cv_vectors = parse_optional(f[9]);
    row.radius_cv_minima = parse_optional(f[10]);
    row.duplicate_rate = std::stod(f[11]);
    row.nonconverged_count = std::stoull(f[12]);
    row.wall_seconds = parse_optional(f[13]);
    rows.push_back(std::move(row));
  }
  return rows;
}

SweepOutputs SweepOutputs::for_summary(const std::filesystem::path& summary) {
  SweepOutputs o;
  o.summary = summary;
  auto with_suffix = [&](std::string_view suffix) {
    std::filesystem::path p = summary;
    p.replace_extension();
    p += suffix;
    return p;
  };
  o.sidecar = with_suffix(".json");
  o.endpoints = with_suffix(".endpoints.csv");
  o.radii = with_suffix(".radii.csv");
  return o;
}

std::vector<RunRecord> run_sweep_to_files(const SweepConfig& config, const std::filesystem::path& summary,
                                          bool resume) {
  config.validate();
  const SweepOutputs out = SweepOutputs::for_summary(summary);
  const bool basin_mode = config.mode != SweepMode::quality;
  nlohmann::json sidecar = config_to_json(config);

  std::set<RecordKey> skip;
  const bool appending = resume && std::filesystem::exists(out.summary);
  if (appending) {
    if (std::filesystem::exists(out.sidecar)) {
      std::ifstream in(out.sidecar);
      nlohmann::json previous = nlohmann::json::parse(in);
      previous.erase("record_timing");
      nlohmann::json current = sidecar;
      current.erase("record_timing");
      if (previous != current) {
        throw std::invalid_argument("cannot resume: " + out.sidecar.string() + " was written with a different config");
      }
    }
    for (const auto& row : read_summary_csv(out.summary)) skip.insert({row.n, row.p, row.graph_index});
    // Drop detail rows of a graph that was interrupted before its summary row.
    filter_rows(out.endpoints, 1, skip);
    if (basin_mode) filter_rows(out.radii, 0, skip);
  }

  const auto mode = appending ? std::ios::app : std::ios::trunc;
  std::ofstream summary_out(out.summary, std::ios::out | mode);
  std::ofstream endpoints_out(out.endpoints, std::ios::out | mode);
  std::ofstream radii_out;
  if (basin_mode) radii_out.open(out.radii, std::ios::out | mode);
  if (!summary_out || !endpoints_out || (basin_mode && !radii_out)) {
    throw std::runtime_error("cannot open output files next to " + out.summary.string());
  }
  if (!appending) {
    summary_out << kSummaryHeader << '\n';
    endpoints_out << kEndpointsHeader << '\n';
    if (basin_mode) radii_out << kRadiiHeader << '\n';
    std::ofstream side(out.sidecar);
    side << sidecar.dump(2) << '\n';
  }

  auto sink = [&](const RunRecord& r) {
    write_endpoint_rows(endpoints_out, r);
    endpoints_out.flush();
    if (basin_mode) {
      write_radius_rows(radii_out, r);
      radii_out.flush();
    }
    // Summary last: a row there means the graph is complete.
    write_summary_row(summary_out, r);
    summary_out.flush();
  };
  return run_sweep(config, sink, skip);
}

}  // namespace qaoa
