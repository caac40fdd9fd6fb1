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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadqaoa/circuit.hpp"
#include "quadqaoa/sample_set.hpp"
#include "quadqaoa/statevector.hpp"
#include "quadqaoa/swap_network.hpp"
#include "quadqaoa/trainer.hpp"
#include "quadqaoa/zpoly.hpp"

namespace quadqaoa {

enum class AnsatzKind { kStandard, kClique, kVariational, kTruncated };
std::string to_string(AnsatzKind kind);
AnsatzKind ansatz_kind_from_string(const std::string& name);

struct AnsatzOptions {
  AnsatzKind kind = AnsatzKind::kStandard;
  int p = 1;
  /// Truncated only; negative selects the depth that covers every term.
  int k = -1;
  /// Truncated only; empty runs the mapping search.
  std::vector<int> initial_mapping;
  MappingOptions mapping;
};

struct TrainedAnsatz {
  AnsatzKind kind = AnsatzKind::kStandard;
  int k = -1;
  std::vector<int> initial_mapping;
  TrainResult result;
};

TrainedAnsatz train_ansatz(const ZPolynomial& h_cost, const AnsatzOptions& options,
                           const TrainConfig& config);

/// Logical polynomial whose phase each QAOA layer applies.
ZPolynomial phase_polynomial(const ZPolynomial& h_cost, const TrainedAnsatz& ansatz);
/// Abstract circuit, or the line-routed one for the truncated Ansatz.
QaoaCircuit ansatz_circuit(const ZPolynomial& h_cost, const TrainedAnsatz& ansatz);

struct SamplingOptions {
  std::uint64_t shots = 1000;
  std::uint64_t seed = 0;
  Backend backend = Backend::kStatevector;
  int bond_dimension = 20;
  /// lambda > 0 switches to trajectories; shots are then
  /// trajectories x shots_per_trajectory and noise.seed is used.
  NoiseSpec noise;
};

/// Logical samples with energies of h_cost attached.
SampleSet sample_ansatz(const ZPolynomial& h_cost, const TrainedAnsatz& ansatz,
                        const SamplingOptions& options);

/// Best and worst energies found by single-flip descent from random starts.
/// Marked inexact.
Spectrum heuristic_spectrum(const ZPolynomial& h, int restarts, std::uint64_t seed);
/// Brute force up to `exact_cap` variables, heuristic beyond.
Spectrum problem_spectrum(const ZPolynomial& h, std::uint64_t seed = 0, int exact_cap = 22);

}  // namespace quadqaoa
