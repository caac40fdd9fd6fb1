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
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quadqaoa/circuit.hpp"
#include "quadqaoa/errors.hpp"
#include "quadqaoa/problems.hpp"
#include "quadqaoa/quadratizer.hpp"
#include "quadqaoa/swap_network.hpp"

namespace quadqaoa {
namespace {

// Fidelity |<a|b>|^2 between normalized states.
double fidelity(const oracle::Vec& a, const oracle::Vec& b) {
  return std::norm(a.dot(b));
}

// Probabilities of logical bitstrings from a physically ordered state.
std::vector<double> logical_probabilities(const QaoaCircuit& c, const oracle::Vec& psi) {
  std::vector<double> p(static_cast<std::size_t>(psi.size()), 0.0);
  for (std::int64_t y = 0; y < psi.size(); ++y)
    p[c.to_logical(static_cast<Bitstring>(y))] += std::norm(psi(y));
  return p;
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  double tv = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) tv += std::abs(a[i] - b[i]);
  return 0.5 * tv;
}

TEST(AbstractSynthesis, MatchesQaoaDefinition) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    const ZPolynomial h = trial % 2 ? build_labs(6) : fixture::random_quadratic(5, rng);
    const QaoaAngles a = fixture::random_angles(2, rng);
    const oracle::Vec expected = oracle::qaoa_state(h, a.beta, a.gamma);
    const oracle::Vec got = oracle::run(synthesize_abstract(h, a));
    EXPECT_GT(fidelity(expected, got), 1.0 - 1e-12);
  }
}

TEST(AbstractSynthesis, OneLayerLayout) {
  ZPolynomial h(3);
  h.add_term({0, 1}, 0.5);
  h.add_term({2}, 1.0);
  const QaoaCircuit c = synthesize_abstract(h, {{0.3}, {0.7}});
  std::size_t rzz = 0;
  std::size_t rx = 0;
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::kRZZ) {
      ++rzz;
      EXPECT_DOUBLE_EQ(g.angle, 2.0 * 0.7 * 0.5);
    }
    if (g.kind == GateKind::kRX) {
      ++rx;
      EXPECT_DOUBLE_EQ(g.angle, 2.0 * 0.3);
    }
  }
  EXPECT_EQ(rzz, 1u);
  EXPECT_EQ(rx, 3u);
  EXPECT_EQ(c.metadata().p, 1);
}

TEST(AbstractSynthesis, RejectsMismatchedAngles) {
  EXPECT_THROW(synthesize_abstract(build_labs(5), {{0.1, 0.2}, {0.3}}), InvalidSizeError);
}

TEST(LineSynthesis, EquivalentToAbstractUpToPermutation) {
  std::mt19937_64 rng(7);
  for (int n = 3; n <= 8; ++n) {
    const ZPolynomial h = fixture::random_quadratic(n, rng);
    for (int p = 1; p <= 3; ++p) {
      const QaoaAngles a = fixture::random_angles(p, rng);
      const auto start = oracle::random_permutation(n, rng);
      const QaoaCircuit line = synthesize_line(h, a, build_schedule(n, max_swap_layers(n), start));
      for (const auto& g : line.gates())
        if (g.qubits.size() == 2) EXPECT_EQ(std::abs(g.qubits[0] - g.qubits[1]), 1);
      const oracle::Vec reference = oracle::qaoa_state(h, a.beta, a.gamma);
      std::vector<double> expected(reference.size());
      for (std::int64_t x = 0; x < reference.size(); ++x) expected[x] = std::norm(reference(x));
      EXPECT_LT(total_variation(logical_probabilities(line, oracle::run(line)), expected), 1e-10)
          << "n=" << n << " p=" << p;
    }
  }
}

TEST(LineSynthesis, TruncationImplementsReachableTerms) {
  std::mt19937_64 rng(9);
  const int n = 7;
  const ZPolynomial h = fixture::random_quadratic(n, rng);
  const QaoaAngles a = fixture::random_angles(2, rng);
  for (int k = 0; k <= 3; ++k) {
    const auto start = oracle::random_permutation(n, rng);
    const QaoaCircuit line = synthesize_line(h, a, build_schedule(n, k, start));
    const ZPolynomial kept = reachable_terms(h, start, k).terms;
    const oracle::Vec reference = oracle::qaoa_state(kept, a.beta, a.gamma);
    std::vector<double> expected(reference.size());
    for (std::int64_t x = 0; x < reference.size(); ++x) expected[x] = std::norm(reference(x));
    EXPECT_LT(total_variation(logical_probabilities(line, oracle::run(line)), expected), 1e-10);
  }
}

TEST(LineSynthesis, RejectsHigherOrder) {
  EXPECT_THROW(synthesize_line(build_labs(5), {{0.1}, {0.1}}, build_schedule(5, 3)),
               InvalidSizeError);
}

TEST(HuboLineSynthesis, EquivalentToAbstract) {
  std::mt19937_64 rng(4);
  const ZPolynomial h = build_labs(6);
  const QaoaAngles a = fixture::random_angles(2, rng);
  const QaoaCircuit c = synthesize_line_hubo(h, a);
  for (const auto& g : c.gates())
    if (g.qubits.size() == 2) EXPECT_EQ(std::abs(g.qubits[0] - g.qubits[1]), 1);
  const oracle::Vec reference = oracle::qaoa_state(h, a.beta, a.gamma);
  std::vector<double> expected(reference.size());
  for (std::int64_t x = 0; x < reference.size(); ++x) expected[x] = std::norm(reference(x));
  EXPECT_LT(total_variation(logical_probabilities(c, oracle::run(c)), expected), 1e-10);
}

TEST(Lowering, PreservesState) {
  std::mt19937_64 rng(11);
  const int n = 6;
  const ZPolynomial h = fixture::random_quadratic(n, rng);
  const QaoaAngles a = fixture::random_angles(2, rng);
  for (const QaoaCircuit& c :
       {synthesize_abstract(build_labs(n), a),
        synthesize_line(h, a, build_schedule(n, 4, oracle::random_permutation(n, rng)))}) {
    const QaoaCircuit low = lower_to_cz(c);
    EXPECT_TRUE(low.metadata().lowered);
    std::set<GateKind> kinds;
    for (const auto& g : low.gates()) kinds.insert(g.kind);
    for (auto k : kinds)
      EXPECT_TRUE(k == GateKind::kH || k == GateKind::kRX || k == GateKind::kRZ ||
                  k == GateKind::kCZ);
    EXPECT_GT(fidelity(oracle::run(c), oracle::run(low)), 1.0 - 1e-12);
  }
}

TEST(GateCounts, LabsSixteenAbstract) {
  // 252 quartic terms at 6 CZ and 56 quadratic terms at 2 CZ.
  const auto counts = depth_and_counts(synthesize_abstract(build_labs(16), {{0.1}, {0.2}}));
  EXPECT_EQ(counts.two_qubit_count, 252u * 6u + 56u * 2u);
  EXPECT_EQ(counts.two_qubit_count, 1624u);
}

TEST(GateCounts, MergedSwapsOnQuadratizedLabs) {
  const ZPolynomial q = clique_expand(build_labs(12)).to_polynomial();
  const QaoaAngles a{{0.1, 0.2}, {0.3, 0.4}};
  const auto counts = depth_and_counts(synthesize_line(q, a, build_schedule(12, 10)));
  // Per layer: 55 SWAPs, each merged with the RZZ of the pair it swaps
  // (3 CZ), and 11 remaining RZZ (2 CZ).
  EXPECT_EQ(counts.two_qubit_count, 2u * (55u * 3u + 11u * 2u));
  EXPECT_EQ(counts.two_qubit_count, 374u);
}

TEST(Moments, GatesInAMomentAreDisjoint) {
  const QaoaCircuit c = synthesize_line(clique_expand(build_labs(8)).to_polynomial(),
                                        {{0.1}, {0.2}}, build_schedule(8, 6));
  std::size_t total = 0;
  for (const auto& moment : c.moments()) {
    std::set<int> used;
    for (std::size_t i : moment)
      for (int q : c.gates()[i].qubits) EXPECT_TRUE(used.insert(q).second);
    total += moment.size();
  }
  EXPECT_EQ(total, c.gates().size());
}

TEST(Text, ListsEveryGate) {
  const QaoaCircuit c = synthesize_abstract(build_labs(5), {{0.1}, {0.2}});
  const std::string text = to_text(c);
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')),
            c.gates().size());
}

}  // namespace
}  // namespace quadqaoa
