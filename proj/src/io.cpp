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

#include "quadqaoa/io.hpp"

#include <fstream>
#include <sstream>

#include "quadqaoa/errors.hpp"

namespace quadqaoa {

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const ZPolynomial& h) {
  Json terms = Json::array();
  for (const auto& [q, w] : h.terms()) terms.push_back({{"q", q}, {"w", w}});
  return {{"n", h.num_vars()}, {"constant", h.constant()}, {"terms", std::move(terms)}};
}

ZPolynomial polynomial_from_json(const Json& j) {
  const int n = get<int>(j, "n");
  if (n < 1 || n > kMaxVariables) throw FormatError("'n' must lie in [1, 64]");
  ZPolynomial h(n, j.contains("constant") ? get<double>(j, "constant") : 0.0);
  for (const auto& t : get<Json>(j, "terms")) h.add_term(get<Term>(t, "q"), get<double>(t, "w"));
  return h;
}

Json clique_sidecar(const CliqueExpansion& ce) {
  Json out = Json::array();
  for (const auto& [p, e] : ce.edges)
    out.push_back({{"edge", {p.first, p.second}},
                   {"w", e.weight},
                   {"I", e.direct},
                   {"N", e.higher_order_count}});
  return out;
}

Json to_json(const SwapSchedule& s) {
  Json layers = Json::array();
  for (const auto& layer : s.layers()) {
    Json swaps = Json::array();
    for (const auto& [a, b] : layer.swaps) swaps.push_back({a, b});
    layers.push_back({{"parity", to_string(layer.parity)}, {"swaps", std::move(swaps)}});
  }
  return {{"n", s.num_qubits()},
          {"k", s.num_layers()},
          {"mapping", s.initial_mapping()},
          {"layers", std::move(layers)}};
}

SwapSchedule schedule_from_json(const Json& j) {
  SwapSchedule s(get<int>(j, "n"), get<int>(j, "k"), get<std::vector<int>>(j, "mapping"));
  if (j.contains("layers") && to_json(s)["layers"] != j["layers"])
    throw FormatError("stored layers do not match the odd-even schedule");
  return s;
}

Json to_json(const QaoaCircuit& c) {
  Json gates = Json::array();
  for (const auto& g : c.gates()) {
    Json gj = {{"gate", to_string(g.kind)}, {"qubits", g.qubits}};
    if (g.kind == GateKind::kRX || g.kind == GateKind::kRZ || g.kind == GateKind::kRZZ ||
        g.kind == GateKind::kPhaseGadget)
      gj["angle"] = g.angle;
    gates.push_back(std::move(gj));
  }
  const auto& m = c.metadata();
  return {{"n", c.num_qubits()},
          {"metadata",
           {{"p", m.p},
            {"swap_layers", m.swap_layers},
            {"topology", m.topology},
            {"source", m.source},
            {"lowered", m.lowered}}},
          {"initial_mapping", c.initial_mapping()},
          {"final_mapping", c.final_mapping()},
          {"gates", std::move(gates)}};
}

QaoaCircuit circuit_from_json(const Json& j) {
  QaoaCircuit c(get<int>(j, "n"));
  for (const auto& g : get<Json>(j, "gates")) {
    Gate gate{gate_kind_from_string(get<std::string>(g, "gate")),
              get<std::vector<int>>(g, "qubits"),
              g.contains("angle") ? get<double>(g, "angle") : 0.0};
    c.append(std::move(gate));
  }
  if (j.contains("initial_mapping"))
    c.set_mappings(get<std::vector<int>>(j, "initial_mapping"),
                   get<std::vector<int>>(j, "final_mapping"));
  if (j.contains("metadata")) {
    const auto& mj = j["metadata"];
    auto& m = c.metadata();
    m.p = get<int>(mj, "p");
    m.swap_layers = get<int>(mj, "swap_layers");
    m.topology = get<std::string>(mj, "topology");
    m.source = get<std::string>(mj, "source");
    m.lowered = get<bool>(mj, "lowered");
  }
  return c;
}

Json to_json(const QaoaAngles& a) { return {{"beta", a.beta}, {"gamma", a.gamma}}; }

QaoaAngles angles_from_json(const Json& j) {
  QaoaAngles a{get<std::vector<double>>(j, "beta"), get<std::vector<double>>(j, "gamma")};
  if (a.beta.size() != a.gamma.size()) throw FormatError("beta and gamma lengths differ");
  return a;
}

Json to_json(const TrainResult& r) {
  return {{"angles", to_json(r.angles)}, {"theta", r.theta},
          {"energy", r.energy},          {"grid_energy", r.grid_energy},
          {"evaluations", r.evaluations}, {"restart", r.restart},
          {"trace", r.trace}};
}

TrainResult train_result_from_json(const Json& j) {
  TrainResult r;
  r.angles = angles_from_json(get<Json>(j, "angles"));
  r.theta = get<std::vector<double>>(j, "theta");
  r.energy = get<double>(j, "energy");
  r.grid_energy = get<double>(j, "grid_energy");
  r.evaluations = get<std::size_t>(j, "evaluations");
  r.restart = get<int>(j, "restart");
  r.trace = get<std::vector<double>>(j, "trace");
  return r;
}

std::string trace_csv(const TrainResult& r) {
  std::ostringstream out;
  out.precision(17);
  out << "iteration,energy\n";
  for (std::size_t i = 0; i < r.trace.size(); ++i) out << i << ',' << r.trace[i] << '\n';
  return out.str();
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({e.u, e.v, e.weight});
  return {{"num_nodes", g.num_nodes}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  Graph g;
  g.num_nodes = get<int>(j, "num_nodes");
  for (const auto& e : get<Json>(j, "edges")) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3) throw FormatError("edge must be [u, v, w?]");
    g.edges.push_back({e[0].get<int>(), e[1].get<int>(), e.size() == 3 ? e[2].get<double>() : 1.0});
  }
  validate_simple_graph(g);
  return g;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

Json read_json(const std::filesystem::path& path) {
  try {
    return Json::parse(read_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& j) {
  write_text(path, j.dump(2) + "\n");
}

}  // namespace quadqaoa
