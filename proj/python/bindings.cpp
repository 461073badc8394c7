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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <memory>

#include "qaoa/experiments.hpp"
#include "qaoa/graph.hpp"
#include "qaoa/landscape.hpp"
#include "qaoa/optimizer.hpp"
#include "qaoa/rng.hpp"
#include "qaoa/simulator.hpp"

namespace py = pybind11;
using namespace qaoa;

namespace {

std::shared_ptr<const CostTable> table_for(const Graph& g) {
  return std::make_shared<const CostTable>(build_cost_table(g));
}

BfgsOptions bfgs_options(double gtol, int max_iter, double max_step) {
  BfgsOptions o;
  o.gradient_tolerance = gtol;
  o.max_iterations = max_iter;
  o.max_step = max_step;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "QAOA MaxCut landscape tools";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<Edge>, std::optional<std::uint64_t>>(), py::arg("n"), py::arg("edges"),
           py::arg("seed") = py::none())
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("edges", &Graph::edges)
      .def_property_readonly("seed", &Graph::seed)
      .def("to_json", [](const Graph& g) { return nlohmann::json(g).dump(); })
      .def_static("from_json", [](const std::string& s) { return graph_from_json(nlohmann::json::parse(s)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) + ", num_edges=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("gen_er", &gen_er, py::arg("n"), py::arg("p_edge"), py::arg("seed"));
  m.def("cut_value", py::overload_cast<const Graph&, std::string_view>(&cut_value), py::arg("graph"),
        py::arg("bits"));
  m.def("cost_values", [](const Graph& g) { return build_cost_table(g).values; }, py::arg("graph"));
  m.def("max_cut", [](const Graph& g) { return build_cost_table(g).optimum; }, py::arg("graph"));

  m.def(
      "expectation",
      [](const Graph& g, const std::vector<double>& gammas, const std::vector<double>& betas) {
        return expectation(build_cost_table(g), ParamVector(gammas, betas));
      },
      py::arg("graph"), py::arg("gammas"), py::arg("betas"));
  m.def(
      "gradient",
      [](const Graph& g, const std::vector<double>& gammas, const std::vector<double>& betas) {
        return gradient(build_cost_table(g), ParamVector(gammas, betas));
      },
      py::arg("graph"), py::arg("gammas"), py::arg("betas"),
      "d<C>/d(gamma_1..gamma_p, beta_1..beta_p)");
  m.def(
      "approx_ratio",
      [](const Graph& g, const std::vector<double>& gammas, const std::vector<double>& betas) {
        return approx_ratio(build_cost_table(g), ParamVector(gammas, betas));
      },
      py::arg("graph"), py::arg("gammas"), py::arg("betas"));
  m.def(
      "statevector",
      [](const Graph& g, const std::vector<double>& gammas, const std::vector<double>& betas) {
        const StateVector psi = evolve(build_cost_table(g), ParamVector(gammas, betas));
        return std::vector<Complex>(psi.amplitudes().begin(), psi.amplitudes().end());
      },
      py::arg("graph"), py::arg("gammas"), py::arg("betas"));

  py::class_<LocalMinimum>(m, "LocalMinimum")
      .def_readonly("point", &LocalMinimum::point)
      .def_readonly("value", &LocalMinimum::value)
      .def_readonly("approx_ratio", &LocalMinimum::approx_ratio)
      .def_readonly("grad_norm", &LocalMinimum::grad_norm)
      .def_readonly("start", &LocalMinimum::start)
      .def_readonly("iterations", &LocalMinimum::iterations)
      .def_readonly("evaluations", &LocalMinimum::evaluations)
      .def_readonly("converged", &LocalMinimum::converged);

  py::class_<BasinEstimate>(m, "BasinEstimate")
      .def_readonly("minimum", &BasinEstimate::minimum)
      .def_readonly("radii", &BasinEstimate::radii)
      .def_readonly("mean_radius", &BasinEstimate::mean_radius)
      .def_readonly("volume", &BasinEstimate::volume)
      .def_readonly("probes", &BasinEstimate::probes)
      .def_readonly("failed_probes", &BasinEstimate::failed_probes);

  m.def(
      "minimize",
      [](const Graph& g, int p, const std::vector<double>& start, double gtol, int max_iter, double max_step) {
        QaoaObjective obj(table_for(g), p);
        return minimize(obj, start, bfgs_options(gtol, max_iter, max_step));
      },
      py::arg("graph"), py::arg("p"), py::arg("start"), py::arg("gtol") = 1e-8, py::arg("max_iter") = 1000,
      py::arg("max_step") = 1.0, "BFGS descent on -<C> from `start` = (gammas..., betas...)");

  m.def(
      "quality_fraction",
      [](const Graph& g, int p, std::size_t num_samples, double cutoff, std::uint64_t seed) {
        QaoaObjective obj(table_for(g), p);
        py::gil_scoped_release release;
        return quality_fraction(obj, LandscapeSpec::full_period(2 * static_cast<std::size_t>(p)), num_samples,
                                cutoff, RandomStream(seed))
            .fraction;
      },
      py::arg("graph"), py::arg("p"), py::arg("num_samples"), py::arg("cutoff") = 0.99, py::arg("seed") = 0);

  m.def(
      "estimate_basin",
      [](const Graph& g, int p, const std::vector<double>& start, std::uint64_t seed, double precision,
         double eps, std::size_t num_vectors) {
        QaoaObjective obj(table_for(g), p);
        py::gil_scoped_release release;
        const LocalMinimum min = minimize(obj, start);
        RandomStream rng(seed);
        BasinOptions opts;
        opts.precision = precision;
        opts.eps = eps;
        opts.num_vectors = num_vectors;
        return estimate_basin(obj, min, rng, opts);
      },
      py::arg("graph"), py::arg("p"), py::arg("start"), py::arg("seed") = 0, py::arg("precision") = 1e-3,
      py::arg("eps") = 1e-3, py::arg("num_vectors") = 0,
      "Descends from `start`, then bisects along random orthonormal directions for the basin radius");

  m.def(
      "estimate_num_minima",
      [](const Graph& g, int p, std::size_t num_samples, std::uint64_t seed, double precision, double eps,
         std::size_t num_vectors) {
        QaoaObjective obj(table_for(g), p);
        BasinOptions opts;
        opts.precision = precision;
        opts.eps = eps;
        opts.num_vectors = num_vectors;
        py::gil_scoped_release release;
        return estimate_num_minima(obj, LandscapeSpec::full_period(2 * static_cast<std::size_t>(p)), num_samples,
                                   RandomStream(seed), opts)
            .estimate;
      },
      py::arg("graph"), py::arg("p"), py::arg("num_samples"), py::arg("seed") = 0, py::arg("precision") = 1e-3,
      py::arg("eps") = 1e-3, py::arg("num_vectors") = 0);

  m.def(
      "run_sweep",
      [](const std::string& mode, const std::vector<int>& n_values, std::optional<std::vector<int>> p,
         std::optional<double> p_log_coeff, double log_base, double edge_prob, std::size_t graphs,
         std::size_t inits, double cutoff, std::uint64_t seed, double precision, double eps,
         std::size_t num_vectors, unsigned threads, const std::filesystem::path& out, bool resume) {
        SweepConfig c;
        c.mode = parse_mode(mode);
        c.n_values = n_values;
        if (p_log_coeff) {
          c.rounds = RoundsRule::logarithmic(*p_log_coeff, log_base);
        } else {
          c.rounds = RoundsRule::fixed_rounds(p.value_or(std::vector<int>{5}));
        }
        c.edge_probability = edge_prob;
        c.num_graphs = graphs;
        c.num_inits = inits;
        c.cutoff = cutoff;
        c.master_seed = seed;
        c.precision = precision;
        c.eps = eps;
        c.num_vectors = num_vectors;
        c.threads = threads;
        py::gil_scoped_release release;
        return run_sweep_to_files(c, out, resume).size();
      },
      py::arg("mode"), py::arg("n"), py::arg("p") = py::none(), py::arg("p_log_coeff") = py::none(),
      py::arg("log_base") = 2.0, py::arg("edge_prob") = 0.5, py::arg("graphs") = 10, py::arg("inits") = 100,
      py::arg("cutoff") = 0.99, py::arg("seed") = 0, py::arg("precision") = 1e-3, py::arg("eps") = 1e-3,
      py::arg("vectors") = 0, py::arg("threads") = 0, py::arg("out"), py::arg("resume") = false,
      "Runs a sweep and writes the summary CSV plus sidecar files; returns the number of new rows");

  m.attr("SUMMARY_HEADER") = std::string(kSummaryHeader);
  m.attr("CSV_SCHEMA_VERSION") = kCsvSchemaVersion;
}
