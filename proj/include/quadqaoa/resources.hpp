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

#include <cstddef>
#include <string>
#include <vector>

#include "quadqaoa/zpoly.hpp"

namespace quadqaoa {

enum class Topology { kAllToAll, kLine };

std::string to_string(Topology t);
Topology topology_from_string(const std::string& name);

/// Two-qubit resources of one cost-evolution block exp(-i gamma H).
struct ResourceEstimate {
  Topology topology = Topology::kAllToAll;
  std::size_t two_qubit_gate_count = 0;
  std::size_t two_qubit_depth = 0;
  /// Where the numbers come from: "formula" or "synthesized".
  std::string method;

  /// Samples per second when the circuit lasts depth * mean_gate_time.
  double sampling_rate(double mean_gate_time) const;
};

/// All-to-all: count 2 (|q| - 1) per term; depth 2 (n - 1) for a complete
/// QUBO, otherwise the ASAP depth of the lowered abstract circuit.
/// Line: quadratic problems are routed through the full SWAP network (or the
/// first `swap_layers` layers when >= 0) and counted after lowering with
/// SWAP/RZZ merging; higher-order terms are applied through a generic
/// routed parity ladder (see synthesize_line_hubo). Throws for degree > 4.
ResourceEstimate estimate_resources(const ZPolynomial& h, Topology topology,
                                    int swap_layers = -1);

/// Extra two-qubit gates of a full SWAP network on a line before merging:
/// 3 * ceil((n - 2) (floor(n/2) + floor((n-1)/2)) / 2).
std::size_t line_swap_overhead(int n);

/// Gate count of a complete QUBO on a line after SWAP/RZZ merging:
/// n (n - 1) + line_swap_overhead(n) / 3.
std::size_t complete_qubo_line_gate_count(int n);

/// Two-qubit depth of the full SWAP network part, 3 (n - 2).
std::size_t complete_qubo_line_depth(int n);

/// rate = 1 / (depth * mean_gate_time). Throws on depth < 1 or time <= 0.
double estimate_sampling_rate(double depth, double mean_gate_time);

}  // namespace quadqaoa
