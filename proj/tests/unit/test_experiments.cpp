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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "qaoa/experiments.hpp"
#include "qaoa/simulator.hpp"
#include "qaoa/synthetic.hpp"

using namespace qaoa;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qaoa_landscape_tests_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SweepConfig small_config(SweepMode mode) {
  SweepConfig c;
  c.mode = mode;
  c.n_values = {4, 5};
  c.rounds = RoundsRule::fixed_rounds({1, 2});
  c.num_graphs = 2;
  c.num_inits = 6;
  c.master_seed = 99;
  c.threads = 1;
  return c;
}

}  // namespace

TEST_CASE("rounds rules") {
  const RoundsRule log2 = RoundsRule::logarithmic(6.0, 2.0);
  CHECK(log2.rounds_for(8) == std::vector<int>{18});
  CHECK(log2.rounds_for(4) == std::vector<int>{12});
  CHECK(log2.rounds_for(12) == std::vector<int>{22});  // 21.51
  CHECK(log2.rounds_for(1) == std::vector<int>{1});
  CHECK(RoundsRule::logarithmic(1.0, std::exp(1.0)).rounds_for(8) == std::vector<int>{2});
  CHECK(RoundsRule::fixed_rounds({2, 4}).rounds_for(10) == std::vector<int>{2, 4});
}

TEST_CASE("config validation") {
  SweepConfig ok;
  CHECK_NOTHROW(ok.validate());
  auto bad = [](auto mutate) {
    SweepConfig c;
    mutate(c);
    return c;
  };
  CHECK_THROWS_AS(bad([](SweepConfig& c) { c.n_values = {}; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SweepConfig& c) { c.n_values = {0}; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SweepConfig& c) { c.n_values = {30}; }).validate(), ResourceError);
  CHECK_THROWS_AS(bad([](SweepConfig& c) { c.num_inits = 0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SweepConfig& c) { c.num_graphs = 0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SweepConfig& c) { c.cutoff = 1.5; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SweepConfig& c) { c.rounds = RoundsRule::fixed_rounds({0}); }).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(bad([](SweepConfig& c) { c.graph_override = Graph(3, {{0, 1}}); }).validate(),
                  std::invalid_argument);
  CHECK(parse_mode("radius") == SweepMode::radius_stats);
  CHECK_THROWS_AS(parse_mode("bogus"), std::invalid_argument);
}

TEST_CASE("sweep graphs are reconstructible from their recorded seed") {
  SweepConfig c = small_config(SweepMode::quality);
  c.num_inits = 2;
  const auto records = run_sweep(c);
  const auto graphs = sweep_graphs(c);
  REQUIRE(records.size() == 8);  // 2 n x 2 p x 2 graphs
  for (const auto& r : records) {
    const Graph rebuilt = gen_er(r.n, c.edge_probability, r.graph_seed);
    CHECK(rebuilt.num_edges() == r.num_edges);
    const auto idx = static_cast<std::size_t>(r.n == 4 ? 0 : 2) + r.graph_index;
    CHECK(graphs[idx] == rebuilt);
  }
}

TEST_CASE("quality sweep on the single-edge override reaches ratio 1 everywhere") {
  SweepConfig c;
  c.n_values = {2};
  c.rounds = RoundsRule::fixed_rounds({1});
  c.graph_override = Graph(2, {{0, 1}});
  c.num_graphs = 2;
  c.num_inits = 25;
  c.cutoff = 0.99;
  c.threads = 2;
  for (const auto& r : run_quality_sweep(c)) {
    CHECK(r.quality_fraction == 1.0);
    CHECK(r.nonconverged_count == 0);
  }
}

TEST_CASE("zero cutoff gives fraction 1 under full convergence") {
  SweepConfig c = small_config(SweepMode::quality);
  c.cutoff = 0.0;
  for (const auto& r : run_quality_sweep(c)) {
    REQUIRE(r.nonconverged_count == 0);
    CHECK(r.quality_fraction == 1.0);
  }
}

TEST_CASE("quantity sweep with a single-basin override estimates one minimum") {
  SweepConfig c;
  c.n_values = {3};
  c.rounds = RoundsRule::fixed_rounds({1});
  c.num_graphs = 1;
  c.num_inits = 3;
  c.objective_override = [](std::shared_ptr<const CostTable>, int p) {
    return std::make_unique<QuadraticBowl>(std::vector<double>(2 * p, 1.0));
  };
  const auto records = run_quantity_sweep(c);
  REQUIRE(records.size() == 1);
  REQUIRE(records[0].num_minima_estimate.has_value());
  CHECK(*records[0].num_minima_estimate == 1.0);
  CHECK(*records[0].mean_radius == doctest::Approx(2.0 * 3.141592653589793));
  CHECK(records[0].duplicate_rate == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("derived statistics") {
  CHECK(coefficient_of_variation({2.0, 2.0, 2.0}) == 0.0);
  CHECK(coefficient_of_variation({1.0, 3.0}) == doctest::Approx(std::sqrt(2.0) / 2.0));
  CHECK(coefficient_of_variation({5.0}) == 0.0);

  std::vector<InitRecord> inits(4);
  inits[0] = {.converged = true, .approx_ratio = 0.995, .point = {0.0, 0.0}};
  inits[1] = {.converged = true, .approx_ratio = 0.5, .point = {0.0, 0.0005}};
  inits[2] = {.converged = false, .approx_ratio = 0.999, .point = {1.0, 1.0}};
  inits[3] = {.converged = true, .approx_ratio = 0.99, .point = {2.0, 0.0}};
  CHECK(recompute_quality_fraction(inits, 0.99) == doctest::Approx(0.5));
  CHECK(duplicate_rate(inits, 1e-3) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("CSV output is complete, consistent and byte-identical across thread counts") {
  const fs::path dir = scratch_dir("determinism");
  SweepConfig c = small_config(SweepMode::radius_stats);
  c.n_values = {4};
  c.rounds = RoundsRule::fixed_rounds({1});
  c.num_inits = 4;
  c.num_vectors = 1;
  c.precision = 0.05;

  c.threads = 1;
  run_sweep_to_files(c, dir / "one.csv");
  c.threads = 3;
  run_sweep_to_files(c, dir / "three.csv");

  for (const char* suffix : {".csv", ".endpoints.csv", ".radii.csv"}) {
    CHECK(slurp(dir / (std::string("one") + suffix)) == slurp(dir / (std::string("three") + suffix)));
  }
  const auto one = slurp(dir / "one.csv");
  CHECK(one.rfind(std::string(kSummaryHeader) + "\n", 0) == 0);

  // Sidecar carries the full config.
  const auto sidecar = nlohmann::json::parse(slurp(dir / "one.json"));
  CHECK(sidecar.at("csv_schema_version") == kCsvSchemaVersion);
  CHECK(sidecar.at("mode") == "radius-stats");
  CHECK(sidecar.at("master_seed") == 99);

  // quality_fraction recomputed from the endpoints file matches the summary.
  const auto rows = read_summary_csv(dir / "one.csv");
  REQUIRE(rows.size() == 2);
  std::map<std::size_t, std::pair<int, int>> tally;  // graph -> (hits, total)
  std::ifstream endpoints(dir / "one.endpoints.csv");
  std::string line;
  std::getline(endpoints, line);
  CHECK(line == kEndpointsHeader);
  while (std::getline(endpoints, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) f.push_back(field);
    REQUIRE(f.size() == 11);
    auto& t = tally[std::stoull(f[3])];
    t.second += 1;
    t.first += (f[6] == "1" && std::stod(f[9]) >= c.cutoff) ? 1 : 0;
  }
  for (const auto& row : rows) {
    const auto [hits, total] = tally.at(row.graph_index);
    CHECK(total == 4);
    CHECK(row.quality_fraction == doctest::Approx(static_cast<double>(hits) / total).epsilon(1e-15));
    CHECK(row.mean_radius.has_value());
    CHECK_FALSE(row.wall_seconds.has_value());
  }
}

TEST_CASE("resume keeps finished rows and completes the rest identically") {
  const fs::path dir = scratch_dir("resume");
  SweepConfig c = small_config(SweepMode::quality);
  run_sweep_to_files(c, dir / "full.csv");
  const std::string full = slurp(dir / "full.csv");
  const std::string full_endpoints = slurp(dir / "full.endpoints.csv");

  // Simulate an interruption after three graphs, with a partial endpoint block.
  fs::copy_file(dir / "full.json", dir / "part.json");
  {
    std::istringstream in(full);
    std::ofstream out(dir / "part.csv");
    std::string line;
    for (int i = 0; i < 4 && std::getline(in, line); ++i) out << line << '\n';
  }
  {
    std::istringstream in(full_endpoints);
    std::ofstream out(dir / "part.endpoints.csv");
    std::string line;
    for (int i = 0; i < 1 + 3 * 6 + 2 && std::getline(in, line); ++i) out << line << '\n';
  }
  const auto rest = run_sweep_to_files(c, dir / "part.csv", true);
  CHECK(rest.size() == 5);
  CHECK(slurp(dir / "part.csv") == full);
  CHECK(slurp(dir / "part.endpoints.csv") == full_endpoints);

  SweepConfig other = c;
  other.master_seed = 1;
  CHECK_THROWS_AS(run_sweep_to_files(other, dir / "part.csv", true), std::invalid_argument);
}

TEST_CASE("timing column is filled only on request") {
  SweepConfig c = small_config(SweepMode::quality);
  c.n_values = {4};
  c.rounds = RoundsRule::fixed_rounds({1});
  c.num_graphs = 1;
  c.record_timing = true;
  const auto records = run_sweep(c);
  REQUIRE(records[0].wall_seconds.has_value());
  CHECK(*records[0].wall_seconds >= 0.0);
}
