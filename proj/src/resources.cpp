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

#include "quadqaoa/resources.hpp"

#include <numeric>

#include "quadqaoa/circuit.hpp"
#include "quadqaoa/errors.hpp"
#include "quadqaoa/swap_network.hpp"

namespace quadqaoa {

std::string to_string(Topology t) { return t == Topology::kAllToAll ? "all-to-all" : "line"; }

Topology topology_from_string(const std::string& name) {
  if (name == "all-to-all" || name == "all_to_all" || name == "abstract")
    return Topology::kAllToAll;
  if (name == "line") return Topology::kLine;
  throw FormatError("unknown topology '" + name + "'");
}

double ResourceEstimate::sampling_rate(double mean_gate_time) const {
  return estimate_sampling_rate(static_cast<double>(two_qubit_depth), mean_gate_time);
}

double estimate_sampling_rate(double depth, double mean_gate_time) {
  if (depth < 1.0) throw OutOfRangeError("depth must be at least 1");
  if (mean_gate_time <= 0.0) throw OutOfRangeError("mean gate time must be positive");
  return 1.0 / (depth * mean_gate_time);
}

std::size_t line_swap_overhead(int n) {
  if (n < 2) return 0;
  const std::size_t per_pair_layers = static_cast<std::size_t>(n / 2 + (n - 1) / 2);
  const std::size_t product = static_cast<std::size_t>(n - 2) * per_pair_layers;
  return 3 * ((product + 1) / 2);
}

std::size_t complete_qubo_line_gate_count(int n) {
  return static_cast<std::size_t>(n) * (n - 1) + line_swap_overhead(n) / 3;
}

std::size_t complete_qubo_line_depth(int n) { return n >= 2 ? 3 * static_cast<std::size_t>(n - 2) : 0; }

namespace {

bool is_complete_qubo(const ZPolynomial& h) {
  const int n = h.num_vars();
  return h.degree() <= 2 &&
         h.count_terms_of_degree(2) == static_cast<std::size_t>(n) * (n - 1) / 2;
}

const QaoaAngles kUnitAngles{{0.5}, {0.5}};

}  // namespace

ResourceEstimate estimate_resources(const ZPolynomial& h, Topology topology, int swap_layers) {
  if (h.degree() > 4)
    throw InvalidSizeError("resource estimation supports degree <= 4, got " +
                           std::to_string(h.degree()));
  ResourceEstimate est;
  est.topology = topology;
  const int n = h.num_vars();
  if (topology == Topology::kAllToAll) {
    for (const auto& [q, w] : h.terms()) est.two_qubit_gate_count += 2 * (q.size() - 1);
    if (is_complete_qubo(h) && n >= 2) {
      est.two_qubit_depth = 2 * static_cast<std::size_t>(n - 1);
      est.method = "formula";
    } else {
      est.two_qubit_depth = depth_and_counts(synthesize_abstract(h, kUnitAngles)).two_qubit_depth;
      est.method = "synthesized";
    }
    return est;
  }

  est.method = "synthesized";
  if (n < 2) return est;
  GateCounts counts;
  if (h.degree() <= 2) {
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    const int k = swap_layers >= 0 ? swap_layers : required_layers(h, identity);
    const SwapSchedule schedule(n, k);
    counts = depth_and_counts(synthesize_line(h, kUnitAngles, schedule));
  } else {
    counts = depth_and_counts(synthesize_line_hubo(h, kUnitAngles));
  }
  est.two_qubit_gate_count = counts.two_qubit_count;
  est.two_qubit_depth = counts.two_qubit_depth;
  return est;
}

}  // namespace quadqaoa
