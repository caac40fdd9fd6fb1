// Copyright 2026 The quadqaoa Authors
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

// Python bindings for the main quadqaoa operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "quadqaoa/circuit.hpp"
#include "quadqaoa/cli.hpp"
#include "quadqaoa/errors.hpp"
#include "quadqaoa/io.hpp"
#include "quadqaoa/metrics.hpp"
#include "quadqaoa/pipeline.hpp"
#include "quadqaoa/problems.hpp"
#include "quadqaoa/quadratizer.hpp"
#include "quadqaoa/resources.hpp"
#include "quadqaoa/swap_network.hpp"

namespace py = pybind11;
using namespace quadqaoa;

namespace {

py::dict terms_dict(const ZPolynomial& h) {
  py::dict out;
  for (const auto& [t, w] : h.terms()) out[py::tuple(py::cast(t))] = w;
  return out;
}

ZPolynomial polynomial_from_dict(int n, const py::dict& terms, double constant) {
  ZPolynomial h(n, constant);
  for (const auto& [key, value] : terms) h.add_term(py::cast<Term>(key), py::cast<double>(value));
  return h;
}

CoefficientSource coefficients(std::optional<double> value, std::uint64_t seed) {
  return value ? CoefficientSource::constant(*value) : CoefficientSource::uniform(seed);
}

Graph graph_from_edges(int n, const std::vector<std::tuple<int, int, double>>& edges) {
  Graph g{n, {}};
  for (const auto& [u, v, w] : edges) g.edges.push_back({u, v, w});
  return g;
}

std::vector<std::tuple<int, int, double>> edges_of(const Graph& g) {
  std::vector<std::tuple<int, int, double>> out;
  for (const auto& e : g.edges) out.emplace_back(e.u, e.v, e.weight);
  return out;
}

py::dict spectrum_dict(const Spectrum& s) {
  py::dict d;
  d["e_min"] = s.e_min;
  d["e_max"] = s.e_max;
  d["argmin"] = s.argmin;
  d["exact"] = s.exact;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "QAOA Ansatz quadratization, SWAP-network routing and simulation.";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidSizeError>(m, "InvalidSizeError", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<DegenerateWeightError>(m, "DegenerateWeightError", base.ptr());
  py::register_exception<DegenerateSpectrumError>(m, "DegenerateSpectrumError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<RoutingError>(m, "RoutingError", base.ptr());
  py::register_exception<OutOfRangeError>(m, "OutOfRangeError", base.ptr());

  py::class_<ZPolynomial>(m, "Polynomial")
      .def(py::init<int, double>(), py::arg("num_vars"), py::arg("constant") = 0.0)
      .def(py::init(&polynomial_from_dict), py::arg("num_vars"), py::arg("terms"),
           py::arg("constant") = 0.0)
      .def_property_readonly("num_vars", &ZPolynomial::num_vars)
      .def_property_readonly("constant", &ZPolynomial::constant)
      .def_property_readonly("degree", &ZPolynomial::degree)
      .def_property_readonly("terms", &terms_dict)
      .def("add_term", &ZPolynomial::add_term, py::arg("indices"), py::arg("coefficient"))
      .def("coefficient", &ZPolynomial::coefficient)
      .def("count_terms_of_degree", &ZPolynomial::count_terms_of_degree)
      .def("energy", py::overload_cast<Bitstring>(&ZPolynomial::energy, py::const_),
           py::arg("bits"))
      .def("diagonal", &ZPolynomial::diagonal)
      .def("to_json", [](const ZPolynomial& h) { return to_json(h).dump(); })
      .def_static("from_json", [](const std::string& s) {
        return polynomial_from_json(Json::parse(s));
      })
      .def("__len__", &ZPolynomial::size)
      .def("__eq__", [](const ZPolynomial& a, const ZPolynomial& b) { return a == b; })
      .def("__repr__", [](const ZPolynomial& h) {
        std::ostringstream s;
        s << "Polynomial(num_vars=" << h.num_vars() << ", terms=" << h.size() << ")";
        return s.str();
      });

  m.def("labs", &build_labs, py::arg("n"));
  m.def(
      "h4_full",
      [](int n, std::optional<double> value, std::uint64_t seed) {
        return build_h4_full(n, coefficients(value, seed));
      },
      py::arg("n"), py::arg("value") = std::nullopt, py::arg("seed") = 0);
  m.def(
      "qubo_full",
      [](int n, std::optional<double> value, std::uint64_t seed) {
        return build_qubo_full(n, coefficients(value, seed));
      },
      py::arg("n"), py::arg("value") = std::nullopt, py::arg("seed") = 0);
  m.def(
      "random_regular_graph",
      [](int n, int degree, std::uint64_t seed) {
        return edges_of(random_regular_graph(n, degree, seed));
      },
      py::arg("n"), py::arg("degree"), py::arg("seed") = 0);
  m.def(
      "maxcut",
      [](int n, const std::vector<std::tuple<int, int, double>>& edges) {
        return build_maxcut(graph_from_edges(n, edges));
      },
      py::arg("n"), py::arg("edges"));
  m.def(
      "spectrum", [](const ZPolynomial& h, std::uint64_t seed) {
        return spectrum_dict(problem_spectrum(h, seed));
      },
      py::arg("h"), py::arg("seed") = 0);

  m.def(
      "clique_expand",
      [](const ZPolynomial& h) {
        const CliqueExpansion ce = clique_expand(h);
        py::dict weights;
        for (const auto& [p, e] : ce.edges) weights[py::make_tuple(p.first, p.second)] = e.weight;
        return py::make_tuple(ce.to_polynomial(), weights);
      },
      py::arg("h"));

  m.def(
      "resources",
      [](const ZPolynomial& h, const std::string& topology, int swap_layers,
         double gate_time) {
        const auto est = estimate_resources(h, topology_from_string(topology), swap_layers);
        py::dict d;
        d["topology"] = to_string(est.topology);
        d["two_qubit_gate_count"] = est.two_qubit_gate_count;
        d["two_qubit_depth"] = est.two_qubit_depth;
        d["method"] = est.method;
        d["sampling_rate"] = est.sampling_rate(gate_time);
        return d;
      },
      py::arg("h"), py::arg("topology") = "all-to-all", py::arg("swap_layers") = -1,
      py::arg("gate_time") = 84e-9);

  m.def(
      "reachable_pairs",
      [](int n, int k, std::vector<int> mapping) {
        return ReachableSet(build_schedule(n, k, std::move(mapping))).pairs(k);
      },
      py::arg("n"), py::arg("k"), py::arg("mapping") = std::vector<int>{});
  m.def(
      "required_layers",
      [](const ZPolynomial& h, const std::vector<int>& mapping) {
        return required_layers(h, mapping);
      },
      py::arg("h"), py::arg("mapping"));
  m.def(
      "optimize_mapping",
      [](const ZPolynomial& h, std::uint64_t seed, int restarts, long iterations) {
        const MappingResult r = optimize_mapping(h, {seed, restarts, iterations, 0.0});
        return py::make_tuple(r.mapping, r.required_layers);
      },
      py::arg("h"), py::arg("seed") = 0, py::arg("restarts") = 4,
      py::arg("iterations") = 200000);

  m.def(
      "circuit_text",
      [](const ZPolynomial& h, const std::vector<double>& beta, const std::vector<double>& gamma,
         int swap_layers, bool lowered) {
        const QaoaAngles a{beta, gamma};
        QaoaCircuit c;
        if (swap_layers >= 0) {
          const SwapSchedule s = build_schedule(h.num_vars(), swap_layers);
          c = synthesize_qaoa(h, a, &s);
        } else {
          c = synthesize_qaoa(h, a);
        }
        return to_text(lowered ? lower_to_cz(c) : c);
      },
      py::arg("h"), py::arg("beta"), py::arg("gamma"), py::arg("swap_layers") = -1,
      py::arg("lowered") = false);

  py::class_<TrainedAnsatz>(m, "TrainedAnsatz")
      .def_property_readonly("kind", [](const TrainedAnsatz& a) { return to_string(a.kind); })
      .def_readonly("k", &TrainedAnsatz::k)
      .def_readonly("initial_mapping", &TrainedAnsatz::initial_mapping)
      .def_property_readonly("energy", [](const TrainedAnsatz& a) { return a.result.energy; })
      .def_property_readonly("beta", [](const TrainedAnsatz& a) { return a.result.angles.beta; })
      .def_property_readonly("gamma",
                             [](const TrainedAnsatz& a) { return a.result.angles.gamma; })
      .def_property_readonly("theta", [](const TrainedAnsatz& a) { return a.result.theta; })
      .def_property_readonly("trace", [](const TrainedAnsatz& a) { return a.result.trace; })
      .def_property_readonly("evaluations",
                             [](const TrainedAnsatz& a) { return a.result.evaluations; });

  m.def(
      "train",
      [](const ZPolynomial& h, const std::string& ansatz, int p, int k,
         const std::string& backend, int chi, int grid, std::size_t maxiter, double rhobeg,
         std::size_t joint_maxiter, double joint_rhobeg, int restarts, std::uint64_t seed,
         std::vector<int> mapping) {
        AnsatzOptions o;
        o.kind = ansatz_kind_from_string(ansatz);
        o.p = p;
        o.k = k;
        o.initial_mapping = std::move(mapping);
        o.mapping.seed = seed;
        TrainConfig c;
        c.backend = backend_from_string(backend);
        c.bond_dimension = chi;
        c.grid_points = grid;
        c.refiner.max_evaluations = maxiter;
        c.refiner.rho_begin = rhobeg;
        c.joint_max_evaluations = joint_maxiter;
        c.joint_rho_begin = joint_rhobeg;
        c.random_restarts = restarts;
        c.seed = seed;
        py::gil_scoped_release release;
        return train_ansatz(h, o, c);
      },
      py::arg("h"), py::arg("ansatz") = "standard", py::arg("p") = 1, py::arg("k") = -1,
      py::arg("backend") = "statevector", py::arg("chi") = 20, py::arg("grid") = 15,
      py::arg("maxiter") = 500, py::arg("rhobeg") = 0.1, py::arg("joint_maxiter") = 5000,
      py::arg("joint_rhobeg") = 0.3, py::arg("restarts") = 3, py::arg("seed") = 0,
      py::arg("mapping") = std::vector<int>{});

  py::class_<SampleSet>(m, "SampleSet")
      .def_property_readonly("num_vars", &SampleSet::num_vars)
      .def_property_readonly("total_shots", &SampleSet::total_shots)
      .def_property_readonly("entries",
                             [](const SampleSet& s) {
                               std::vector<std::tuple<Bitstring, std::uint64_t, double>> out;
                               for (const auto& e : s.entries())
                                 out.emplace_back(e.bits, e.count, e.energy);
                               return out;
                             })
      .def("mean_energy", &SampleSet::mean_energy)
      .def("energy_stddev", &SampleSet::energy_stddev)
      .def("to_csv", &SampleSet::to_csv);

  m.def(
      "sample",
      [](const ZPolynomial& h, const TrainedAnsatz& a, std::uint64_t shots, std::uint64_t seed,
         const std::string& backend, int chi, double lam, std::uint64_t trajectories,
         std::uint64_t shots_per_trajectory) {
        SamplingOptions o;
        o.shots = shots;
        o.seed = seed;
        o.backend = backend_from_string(backend);
        o.bond_dimension = chi;
        o.noise = {lam, trajectories, shots_per_trajectory, seed};
        py::gil_scoped_release release;
        return sample_ansatz(h, a, o);
      },
      py::arg("h"), py::arg("trained"), py::arg("shots") = 1000, py::arg("seed") = 0,
      py::arg("backend") = "statevector", py::arg("chi") = 20, py::arg("lam") = 0.0,
      py::arg("trajectories") = 200, py::arg("shots_per_trajectory") = 1);

  m.def("approximation_ratio",
        py::overload_cast<double, double, double>(&approximation_ratio), py::arg("energy"),
        py::arg("e_min"), py::arg("e_max"));
  m.def("best_fraction_mean", &best_fraction_mean, py::arg("samples"), py::arg("alpha"));
  m.def(
      "cvar_ratio",
      [](const SampleSet& s, double alpha, double e_min, double e_max) {
        return cvar_ratio(s, alpha, e_min, e_max);
      },
      py::arg("samples"), py::arg("alpha"), py::arg("e_min"), py::arg("e_max"));
  m.def(
      "fit_alpha",
      [](const SampleSet& s, double target, double e_min, double e_max) {
        const AlphaFit f = fit_alpha(s, target, e_min, e_max);
        py::dict d;
        d["alpha"] = f.alpha;
        d["residual"] = f.residual;
        d["clamped"] = f.clamped;
        return d;
      },
      py::arg("samples"), py::arg("target_r"), py::arg("e_min"), py::arg("e_max"));
  m.def(
      "alpha_theoretical",
      [](int k, int p, std::vector<double> epsilon, int n) {
        return alpha_theoretical(k, p, {std::move(epsilon), 0.0}, n).alpha;
      },
      py::arg("k"), py::arg("p"), py::arg("epsilon"), py::arg("n"));

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"quadqaoa"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
