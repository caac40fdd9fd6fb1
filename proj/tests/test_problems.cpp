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

#include <set>

#include "oracles.hpp"
#include "quadqaoa/errors.hpp"
#include "quadqaoa/problems.hpp"

namespace quadqaoa {
namespace {

TEST(Labs, MatchesSymbolicExpansion) {
  for (int n = 4; n <= 18; ++n) {
    const auto expanded = oracle::expand_sidelobe(n);
    const ZPolynomial h = build_labs(n);
    std::size_t nonconstant = 0;
    for (const auto& [term, c] : expanded) {
      if (term.empty()) continue;
      ++nonconstant;
      // The sidelobe energy counts each term twice relative to H_C.
      EXPECT_DOUBLE_EQ(h.coefficient(term), c / 2.0) << "n=" << n;
    }
    EXPECT_EQ(h.size(), nonconstant) << "n=" << n;
  }
}

TEST(Labs, EnergyTracksSidelobe) {
  const int n = 10;
  const ZPolynomial h = build_labs(n);
  for (Bitstring x = 0; x < (1u << n); ++x) {
    const double s = oracle::sidelobe(n, x);
    EXPECT_NEAR(h.energy(x), (s - labs_offset(n)) / 2.0, 1e-12);
    const auto spins = bitstring_to_spins(x, n);
    EXPECT_DOUBLE_EQ(sidelobe_energy(spins), s);
  }
}

TEST(Labs, TermCountsAtSixteen) {
  const ZPolynomial h = build_labs(16);
  EXPECT_EQ(h.count_terms_of_degree(4), 252u);
  EXPECT_EQ(h.count_terms_of_degree(2), 56u);
}

TEST(Labs, GroundEnergyAtTwelve) {
  // The best n = 12 sequence has sidelobe energy 10.
  const Spectrum s = brute_force_spectrum(build_labs(12));
  EXPECT_DOUBLE_EQ(s.e_min, (10.0 - labs_offset(12)) / 2.0);
  EXPECT_DOUBLE_EQ(s.e_min, -28.0);
}

TEST(Labs, RejectsTinyInstances) { EXPECT_THROW(build_labs(3), InvalidSizeError); }

TEST(FullProblems, TermCounts) {
  EXPECT_EQ(build_h4_full(16, CoefficientSource::uniform(1)).size(), 1820u);
  EXPECT_EQ(build_h4_full(4, CoefficientSource::constant(1.0)).size(), 1u);
  EXPECT_EQ(build_qubo_full(16, CoefficientSource::uniform(1)).size(), 120u);
  const auto with_linear =
      build_qubo_full(5, CoefficientSource::constant(1.0), CoefficientSource::constant(0.5));
  EXPECT_EQ(with_linear.count_terms_of_degree(1), 5u);
}

TEST(FullProblems, UniformCoefficientsAreSeededAndBounded) {
  const auto a = build_h4_full(8, CoefficientSource::uniform(4, -2.0, 3.0));
  const auto b = build_h4_full(8, CoefficientSource::uniform(4, -2.0, 3.0));
  const auto c = build_h4_full(8, CoefficientSource::uniform(5, -2.0, 3.0));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  for (const auto& [t, w] : a.terms()) {
    EXPECT_GE(w, -2.0);
    EXPECT_LE(w, 3.0);
  }
}

TEST(Graphs, RandomRegularIsSimpleAndRegular) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_regular_graph(40, 3, seed);
    EXPECT_EQ(g.edges.size(), 60u);
    std::vector<int> degree(40, 0);
    std::set<std::pair<int, int>> seen;
    for (const auto& e : g.edges) {
      EXPECT_NE(e.u, e.v);
      EXPECT_TRUE(seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second);
      ++degree[e.u];
      ++degree[e.v];
    }
    for (int d : degree) EXPECT_EQ(d, 3);
  }
  EXPECT_THROW(random_regular_graph(7, 3, 0), InvalidSizeError);
}

TEST(Graphs, SameSeedSameGraph) {
  const Graph a = random_regular_graph(16, 3, 7);
  const Graph b = random_regular_graph(16, 3, 7);
  ASSERT_EQ(a.edges.size(), b.edges.size());
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    EXPECT_EQ(a.edges[i].u, b.edges[i].u);
    EXPECT_EQ(a.edges[i].v, b.edges[i].v);
  }
}

TEST(Graphs, ValidationCatchesLoopsAndDuplicates) {
  EXPECT_THROW(validate_simple_graph({3, {{0, 0, 1.0}}}), FormatError);
  EXPECT_THROW(validate_simple_graph({3, {{0, 1, 1.0}, {1, 0, 1.0}}}), FormatError);
  EXPECT_THROW(validate_simple_graph({3, {{0, 3, 1.0}}}), FormatError);
}

TEST(MaxCut, EnergyIsAffineInCut) {
  const Graph g = random_regular_graph(10, 3, 2);
  const ZPolynomial h = build_maxcut(g);
  double w = 0.0;
  for (const auto& e : g.edges) w += e.weight;
  for (Bitstring x = 0; x < (1u << 10); ++x) {
    double cut = 0.0;
    for (const auto& e : g.edges)
      if (oracle::bit(x, e.u) != oracle::bit(x, e.v)) cut += e.weight;
    EXPECT_DOUBLE_EQ(maxcut_objective(g, x), cut);
    EXPECT_NEAR(h.energy(x), (w - 2.0 * cut) / 4.0, 1e-12);
  }
}

TEST(MaxCut, HeuristicAndBoundBracketOptimum) {
  const Graph g = random_regular_graph(16, 3, 5);
  double best = 0.0;
  for (Bitstring x = 0; x < (1u << 16); ++x) best = std::max(best, maxcut_objective(g, x));
  const double found = maxcut_objective(g, maxcut_local_search(g, 50, 1));
  EXPECT_LE(found, best);
  EXPECT_GE(found, 0.9 * best);
  EXPECT_GE(maxcut_spectral_upper_bound(g), best - 1e-9);
}

}  // namespace
}  // namespace quadqaoa
