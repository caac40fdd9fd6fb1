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
#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "quadqaoa/circuit.hpp"
#include "quadqaoa/metrics.hpp"
#include "quadqaoa/problems.hpp"
#include "quadqaoa/quadratizer.hpp"
#include "quadqaoa/swap_network.hpp"
#include "quadqaoa/trainer.hpp"
#include "quadqaoa/zpoly.hpp"

namespace quadqaoa {

using Json = nlohmann::ordered_json;

/// {"n", "constant", "terms": [{"q": [...], "w": ...}]}, terms in sorted order.
Json to_json(const ZPolynomial& h);
ZPolynomial polynomial_from_json(const Json& j);

/// Per-edge diagnostics: {"edge": [i, j], "w", "I", "N"}.
Json clique_sidecar(const CliqueExpansion& ce);

/// {"n", "k", "mapping", "layers": [{"parity", "swaps"}]}.
Json to_json(const SwapSchedule& s);
/// Rebuilds the schedule from n, k and mapping, then checks the stored layers.
SwapSchedule schedule_from_json(const Json& j);

Json to_json(const QaoaCircuit& c);
QaoaCircuit circuit_from_json(const Json& j);

Json to_json(const QaoaAngles& a);
QaoaAngles angles_from_json(const Json& j);

Json to_json(const TrainResult& r);
TrainResult train_result_from_json(const Json& j);
/// "iteration,energy" with a header line.
std::string trace_csv(const TrainResult& r);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
Json read_json(const std::filesystem::path& path);
/// Two-space indented dump with a trailing newline.
void write_json(const std::filesystem::path& path, const Json& j);

}  // namespace quadqaoa
