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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "qaoa/graph.hpp"
#include "qaoa/landscape.hpp"
#include "qaoa/objective.hpp"
#include "qaoa/optimizer.hpp"

namespace qaoa {

enum class SweepMode { quality, quantity, radius_stats };

std::string_view mode_name(SweepMode mode);
SweepMode parse_mode(std::string_view name);

/// How many QAOA rounds to run for a given n.
struct RoundsRule {
  enum class Kind { fixed, logarithmic };
  Kind kind = Kind::fixed;
  std::vector<int> fixed{5};
  /// p = max(1, round(coefficient * log_base(n))), halves rounded away from zero.
  double coefficient = 6.0;
  double log_base = 2.0;

  std::vector<int> rounds_for(int n) const;

  static RoundsRule fixed_rounds(std::vector<int> values);
  static RoundsRule logarithmic(double coefficient, double log_base = 2.0);
};

/// Builds the objective for one (graph, p) job. Used to swap in synthetic
/// landscapes; not serialized.
using ObjectiveFactory = std::function<std::unique_ptr<Objective>(std::shared_ptr<const CostTable>, int rounds)>;

struct SweepConfig {
  SweepMode mode = SweepMode::quality;
  std::vector<int> n_values{8};
  RoundsRule rounds;
  double edge_probability = 0.5;
  std::size_t num_graphs = 10;
  std::size_t num_inits = 100;
  double cutoff = 0.99;
  std::uint64_t master_seed = 0;
  double precision = 1e-3;
  double eps = 1e-3;
  /// Probe directions per minimum; 0 = full parameter dimension 2p.
  std::size_t num_vectors = 0;
  BfgsOptions bfgs;
  /// Worker threads; 0 = hardware concurrency.
  unsigned threads = 0;
  /// When true, wall_seconds is filled in. Off by default so that reruns are
  /// byte-identical.
  bool record_timing = false;
  /// Replaces every sampled graph (its n must be in n_values).
  std::optional<Graph> graph_override;
  ObjectiveFactory objective_override;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

nlohmann::json config_to_json(const SweepConfig& config);

/// Seeds for graph g at size n, and for init i of that graph at depth p.
std::uint64_t graph_seed(std::uint64_t master_seed, int n, std::size_t graph_index);
std::uint64_t init_seed(std::uint64_t master_seed, int n, int p, std::size_t graph_index, std::size_t init_index);

/// Outcome of one start point (and its basin probes, when measured).
struct InitRecord {
  std::size_t init_index = 0;
  std::uint64_t seed = 0;
  bool converged = false;
  int iterations = 0;
  double value = 0.0;
  double approx_ratio = 0.0;
  double grad_norm = 0.0;
  std::vector<double> point;
  /// Per-direction basin radii; empty in quality mode or when not converged.
  std::vector<double> radii;
  double mean_radius = 0.0;
  double volume = 0.0;
  int failed_probes = 0;
  double seconds = 0.0;
};

/// One row of the summary CSV: one graph at one (n, p).
struct RunRecord {
  SweepMode mode = SweepMode::quality;
  int n = 0;
  int p = 0;
  std::size_t graph_index = 0;
  std::uint64_t graph_seed = 0;
  std::size_t num_edges = 0;
  double optimum = 0.0;
  std::size_t num_inits = 0;
  std::vector<InitRecord> inits;
  double quality_fraction = 0.0;
  std::optional<double> num_minima_estimate;
  std::optional<double> mean_radius;
  std::optional<double> radius_cv_vectors;
  std::optional<double> radius_cv_minima;
  double duplicate_rate = 0.0;
  std::size_t nonconverged_count = 0;
  std::optional<double> wall_seconds;
};

/// Fraction of inits with converged endpoint and approx_ratio >= cutoff.
double recompute_quality_fraction(const std::vector<InitRecord>& inits, double cutoff);

/// Fraction of converged endpoints lying within eps of an earlier converged one.
double duplicate_rate(const std::vector<InitRecord>& inits, double eps);

/// Sample coefficient of variation (sd with n-1 over mean); 0 for fewer than two values.
double coefficient_of_variation(const std::vector<double>& values);

/// Fills the derived columns of `record` from its inits.
void aggregate_record(RunRecord& record, const SweepConfig& config);

/// Called once per finished graph, in deterministic order.
using RecordSink = std::function<void(const RunRecord&)>;

/// Graphs whose (n, p, graph_index) is in `skip` are not recomputed.
using RecordKey = std::tuple<int, int, std::size_t>;

std::vector<RunRecord> run_sweep(const SweepConfig& config, const RecordSink& sink = {},
                                 const std::set<RecordKey>& skip = {});

std::vector<RunRecord> run_quality_sweep(SweepConfig config, const RecordSink& sink = {});
std::vector<RunRecord> run_quantity_sweep(SweepConfig config, const RecordSink& sink = {});
std::vector<RunRecord> run_radius_stats(SweepConfig config, const RecordSink& sink = {});

/// Graphs a sweep with this config would sample, in (n, graph_index) order.
std::vector<Graph> sweep_graphs(const SweepConfig& config);

// CSV output. The summary schema is fixed; see kSummaryHeader.
inline constexpr int kCsvSchemaVersion = 1;
inline constexpr std::string_view kSummaryHeader =
    "mode,n,p,graph_index,graph_seed,num_inits,quality_fraction,num_minima_estimate,mean_radius,"
    "radius_cv_vectors,radius_cv_minima,duplicate_rate,nonconverged_count,wall_seconds";
inline constexpr std::string_view kEndpointsHeader =
    "mode,n,p,graph_index,init_index,init_seed,converged,iterations,value,approx_ratio,grad_norm";
inline constexpr std::string_view kRadiiHeader = "n,p,graph_index,init_index,vector_index,radius";

void write_summary_row(std::ostream& out, const RunRecord& record);
void write_endpoint_rows(std::ostream& out, const RunRecord& record);
void write_radius_rows(std::ostream& out, const RunRecord& record);

/// Parsed summary row (used for resume and consistency checks).
struct SummaryRow {
  std::string mode;
  int n = 0;
  int p = 0;
  std::size_t graph_index = 0;
  std::uint64_t graph_seed = 0;
  std::size_t num_inits = 0;
  double quality_fraction = 0.0;
  std::optional<double> num_minima_estimate;
  std::optional<double> mean_radius;
  std::optional<double> radius_cv_vectors;
  std::optional<double> radius_cv_minima;
  double duplicate_rate = 0.0;
  std::size_t nonconverged_count = 0;
  std::optional<double> wall_seconds;
};

std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& path);

/// Paths of the files written next to the summary CSV.
struct SweepOutputs {
  std::filesystem::path summary;
  std::filesystem::path sidecar;
  std::filesystem::path endpoints;
  std::filesystem::path radii;

  static SweepOutputs for_summary(const std::filesystem::path& summary);
};

/// Runs the sweep and writes the summary CSV, endpoints CSV, radii CSV (for
/// basin modes) and JSON sidecar. Rows are flushed as each graph finishes.
/// With `resume`, rows already present in the summary are kept and skipped.
std::vector<RunRecord> run_sweep_to_files(const SweepConfig& config, const std::filesystem::path& summary,
                                          bool resume = false);

}  // namespace qaoa
