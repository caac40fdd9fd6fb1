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

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quadqaoa/circuit.hpp"
#include "quadqaoa/errors.hpp"
#include "quadqaoa/mps.hpp"
#include "quadqaoa/problems.hpp"
#include "quadqaoa/quadratizer.hpp"
#include "quadqaoa/statevector.hpp"
#include "quadqaoa/swap_network.hpp"

namespace quadqaoa {
namespace {

double fidelity(const std::vector<std::complex<double>>& a, const oracle::Vec& b) {
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b(static_cast<std::int64_t>(i));
  return std::norm(s);
}

TEST(Mps, FullBondMatchesStatevector) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 7;
    const QaoaCircuit c = fixture::random_line_circuit(n, 60, rng);
    const MpsState m = apply_circuit(c, 1 << (n / 2));
    EXPECT_GT(fidelity(m.to_dense(), oracle::run(c)), 1.0 - 1e-8) << "n=" << n;
    EXPECT_NEAR(m.norm(), 1.0, 1e-10);
    EXPECT_LT(m.truncation_error(), 1e-20);
  }
}

TEST(Mps, AmplitudesAndZStrings) {
  std::mt19937_64 rng(8);
  const QaoaCircuit c = fixture::random_line_circuit(6, 50, rng);
  const MpsState m = apply_circuit(c, 8);
  const oracle::Vec psi = oracle::run(c);
  for (Bitstring x = 0; x < 64; x += 7) EXPECT_LT(std::abs(m.amplitude(x) - psi(x)), 1e-10);
  const std::vector<int> support{1, 3, 4};
  double expected = 0.0;
  for (Bitstring x = 0; x < 64; ++x)
    expected += std::norm(psi(x)) * oracle::spin(x, 1) * oracle::spin(x, 3) * oracle::spin(x, 4);
  EXPECT_NEAR(m.z_string_expectation(support), expected, 1e-10);
}

TEST(Mps, EnergyUsesLogicalMapping) {
  const ZPolynomial h = build_maxcut(random_regular_graph(8, 3, 2));
  std::mt19937_64 rng(1);
  const auto start = oracle::random_permutation(8, rng);
  const QaoaAngles a{{0.3, 0.5}, {0.6, 0.2}};
  const QaoaCircuit c = synthesize_line(h, a, build_schedule(8, 6, start));
  const MpsState m = apply_circuit(c, 16);
  const StateVector s = simulate_circuit(c);
  double expected = 0.0;
  const auto probs = s.probabilities();
  for (Bitstring y = 0; y < probs.size(); ++y) expected += probs[y] * h.energy(c.to_logical(y));
  EXPECT_NEAR(m.energy(h, c.final_mapping()), expected, 1e-10);
}

TEST(Mps, TruncationIsTrackedAndNormalized) {
  const ZPolynomial q = clique_expand(build_labs(10)).to_polynomial();
  const QaoaCircuit c = synthesize_line(q, {{0.4, 0.3}, {0.2, 0.5}}, build_schedule(10, 8));
  const MpsState m = apply_circuit(c, 2);
  EXPECT_LE(m.largest_bond(), 2);
  EXPECT_GT(m.truncation_error(), 0.0);
  EXPECT_GT(m.truncations(), 0u);
  EXPECT_NEAR(m.norm(), 1.0, 1e-10);
}

TEST(Mps, RejectsDistantGates) {
  MpsState m(4, 4);
  EXPECT_THROW(m.apply(Gate::cz(0, 2)), RoutingError);
  EXPECT_THROW(m.apply(Gate::phase_gadget({0, 1, 2}, 0.1)), RoutingError);
}

TEST(Mps, SamplesFollowBornRule) {
  std::mt19937_64 rng(5);
  const QaoaCircuit c = fixture::random_line_circuit(5, 40, rng);
  MpsState m = apply_circuit(c, 4);
  const oracle::Vec psi = oracle::run(c);
  const std::uint64_t shots = 100000;
  const SampleSet s = m.sample(shots, 9);
  EXPECT_EQ(s.total_shots(), shots);
  for (const auto& e : s.entries()) {
    const double p = std::norm(psi(e.bits));
    EXPECT_NEAR(static_cast<double>(e.count) / shots, p, 5 * std::sqrt(p * (1 - p) / shots) + 1e-6);
  }
}

TEST(Mps, GateMatricesAreUnitary) {
  for (const Gate& g : {Gate::rzz(0, 1, 0.7), Gate::swap(0, 1), Gate::cz(0, 1)}) {
    const Eigen::Matrix4cd u = gate_matrix_2q(g);
    EXPECT_TRUE((u * u.adjoint()).isApprox(Eigen::Matrix4cd::Identity(), 1e-14));
  }
  const Eigen::Matrix2cd rx = gate_matrix_1q(Gate::rx(0, 0.9));
  EXPECT_TRUE(rx.isApprox(oracle::rx(0.9), 1e-14));
}

}  // namespace
}  // namespace quadqaoa
