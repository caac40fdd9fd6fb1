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

#include <gtest/gtest.h>

#include "quadqaoa/errors.hpp"
#include "quadqaoa/problems.hpp"
#include "quadqaoa/resources.hpp"
#include "quadqaoa/swap_network.hpp"

namespace quadqaoa {
namespace {

TEST(Resources, CompleteQuboAllToAll) {
  const auto est =
      estimate_resources(build_qubo_full(16, CoefficientSource::constant(1.0)), Topology::kAllToAll);
  EXPECT_EQ(est.two_qubit_gate_count, 240u);
  EXPECT_EQ(est.two_qubit_depth, 30u);
  EXPECT_EQ(est.method, "formula");
}

TEST(Resources, LabsAllToAllCount) {
  const auto est = estimate_resources(build_labs(16), Topology::kAllToAll);
  EXPECT_EQ(est.two_qubit_gate_count, 1624u);
  EXPECT_EQ(est.method, "synthesized");
}

TEST(Resources, SwapOverheadCountsNetworkSwaps) {
  for (int n = 3; n <= 30; ++n) {
    std::size_t swaps = 0;
    const SwapSchedule schedule = build_schedule(n, max_swap_layers(n));
    for (const auto& layer : schedule.layers())
      swaps += layer.swaps.size();
    EXPECT_EQ(line_swap_overhead(n), 3 * swaps) << "n=" << n;
  }
}

TEST(Resources, LineCountMatchesSynthesis) {
  for (int n = 4; n <= 20; ++n) {
    const auto est =
        estimate_resources(build_qubo_full(n, CoefficientSource::constant(1.0)), Topology::kLine);
    EXPECT_EQ(est.two_qubit_gate_count, complete_qubo_line_gate_count(n)) << "n=" << n;
  }
}

TEST(Resources, AsymptoticRatios) {
  double previous_gates = 0.0;
  double previous_depth = 0.0;
  for (int n : {50, 100, 200}) {
    const double gates = static_cast<double>(complete_qubo_line_gate_count(n)) / (n * (n - 1.0));
    const double depth = static_cast<double>(complete_qubo_line_depth(n)) / (2.0 * (n - 1));
    if (previous_gates > 0.0) {
      EXPECT_LT(std::abs(gates - 1.5), std::abs(previous_gates - 1.5));
      EXPECT_LT(std::abs(depth - 1.5), std::abs(previous_depth - 1.5));
    }
    previous_gates = gates;
    previous_depth = depth;
  }
  EXPECT_NEAR(previous_gates, 1.5, 0.075);
  EXPECT_NEAR(previous_depth, 1.5, 0.075);
}

TEST(Resources, TruncationReducesLineCost) {
  const ZPolynomial h = build_maxcut(random_regular_graph(16, 3, 1));
  const auto few = estimate_resources(h, Topology::kLine, 2);
  const auto many = estimate_resources(h, Topology::kLine, 14);
  EXPECT_LT(few.two_qubit_gate_count, many.two_qubit_gate_count);
  EXPECT_LT(few.two_qubit_depth, many.two_qubit_depth);
}

TEST(Resources, SamplingRate) {
  EXPECT_NEAR(estimate_sampling_rate(2978, 84e-9), 1.0 / (2978 * 84e-9), 1e-9);
  EXPECT_NEAR(estimate_sampling_rate(2978, 84e-9), 4.0e3, 5.0);
  EXPECT_THROW(estimate_sampling_rate(0, 84e-9), OutOfRangeError);
  EXPECT_THROW(estimate_sampling_rate(10, 0.0), OutOfRangeError);
}

TEST(Resources, TopologyNames) {
  for (auto t : {Topology::kAllToAll, Topology::kLine})
    EXPECT_EQ(topology_from_string(to_string(t)), t);
  EXPECT_THROW(topology_from_string("ring"), FormatError);
}

}  // namespace
}  // namespace quadqaoa
