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

#include <numbers>

#include "oracles.hpp"
#include "quadqaoa/errors.hpp"
#include "quadqaoa/problems.hpp"
#include "quadqaoa/quadratizer.hpp"
#include "quadqaoa/swap_network.hpp"
#include "quadqaoa/trainer.hpp"

namespace quadqaoa {
namespace {

ZPolynomial single_edge() {
  ZPolynomial h(2);
  h.add_term({0, 1}, 1.0);
  return h;
}

TEST(EnergyModel, SingleEdgeLandscape) {
  // For H = Z0 Z1 at depth one, <H> = sin(4 beta) sin(2 gamma).
  const ZPolynomial h = single_edge();
  const EnergyModel model(h, h, {});
  for (double b : {0.1, 0.4, 1.1})
    for (double g : {-0.3, 0.2, 0.9})
      EXPECT_NEAR(model({{b}, {g}}), std::sin(4 * b) * std::sin(2 * g), 1e-12);
}

TEST(EnergyModel, MatchesDefinitionForHigherOrder) {
  const ZPolynomial h = build_labs(6);
  const ZPolynomial q = clique_expand(h).to_polynomial();
  const EnergyModel model(q, h, {});
  const QaoaAngles a{{0.2, 0.7}, {0.05, -0.1}};
  EXPECT_NEAR(model(a), oracle::expectation(oracle::qaoa_state(q, a.beta, a.gamma), h), 1e-10);
}

TEST(EnergyModel, MpsAgreesWithStatevector) {
  const ZPolynomial h = build_maxcut(random_regular_graph(10, 3, 3));
  std::mt19937_64 rng(2);
  const auto start = oracle::random_permutation(10, rng);
  const SwapSchedule s = build_schedule(10, 5, start);
  TrainConfig sv;
  TrainConfig mps;
  mps.backend = Backend::kMps;
  mps.bond_dimension = 32;
  const QaoaAngles a{{0.3, 0.1}, {0.4, 0.6}};
  EXPECT_NEAR(EnergyModel(h, h, sv, s)(a), EnergyModel(h, h, mps, s)(a), 1e-9);
  EXPECT_THROW(EnergyModel(h, h, mps), RoutingError);
}

TEST(Training, SingleEdgeReachesGroundState) {
  const ZPolynomial h = single_edge();
  const TrainResult r = train_standard(EnergyModel(h, h, {}), 1, {});
  EXPECT_NEAR(r.energy, -1.0, 1e-8);
  EXPECT_EQ(r.trace.size(), r.evaluations);
  EXPECT_DOUBLE_EQ(r.trace.back(), r.energy);
}

TEST(Training, TransitionNeverWorsens) {
  const ZPolynomial h = build_labs(7);
  const EnergyModel model(h, h, {});
  TrainConfig c;
  c.refiner.max_evaluations = 200;
  TrainResult r = train_depth1(model, c);
  for (int p = 2; p <= 3; ++p) {
    const TrainResult next = train_depth_p_transition(model, r, c);
    EXPECT_EQ(next.angles.depth(), static_cast<std::size_t>(p));
    EXPECT_LE(next.energy, r.energy + 1e-12);
    r = next;
  }
}

TEST(Training, DepthOneBeatsGrid) {
  const ZPolynomial h = build_maxcut(random_regular_graph(8, 3, 1));
  const TrainResult r = train_depth1(h, h, {});
  EXPECT_LE(r.energy, r.grid_energy);
  EXPECT_NEAR(r.energy, EnergyModel(h, h, {})(r.angles), 1e-12);
}

TEST(Training, TruncatedAtFullDepthMatchesStandard) {
  const ZPolynomial h = build_maxcut(random_regular_graph(8, 3, 4));
  std::vector<int> identity(8);
  std::iota(identity.begin(), identity.end(), 0);
  const TrainResult full = train_truncated(h, identity, max_swap_layers(8), 2, {});
  const TrainResult standard = train_standard(EnergyModel(h, h, {}), 2, {});
  EXPECT_NEAR(full.energy, standard.energy, 1e-6);
}

TEST(Training, SweepIsWarmStarted) {
  const ZPolynomial h = build_maxcut(random_regular_graph(8, 3, 6));
  std::vector<int> identity(8);
  std::iota(identity.begin(), identity.end(), 0);
  TrainConfig c;
  c.refiner.max_evaluations = 150;
  const TruncatedSweep s = train_truncated_sweep(h, identity, 4, 2, c);
  ASSERT_EQ(s.results.size(), 5u);
  for (int k = 1; k <= 4; ++k)
    for (int p = 0; p < 2; ++p) {
      // The warm start evaluates the previous optimum on a superset of terms,
      // so only a loose ordering is guaranteed; the results must be finite.
      EXPECT_TRUE(std::isfinite(s.results[k][p].energy));
      EXPECT_EQ(s.results[k][p].angles.depth(), static_cast<std::size_t>(p + 1));
    }
}

TEST(Training, JointQuadratizationImprovesOnClique) {
  const ZPolynomial h = build_labs(6);
  TrainConfig c;
  c.random_restarts = 1;
  c.joint_max_evaluations = 800;
  const TrainResult clique =
      train_standard(EnergyModel(clique_expand(h).to_polynomial(), h, c), 1, c);
  const TrainResult joint = train_joint_quadratization(variational_template(6), h, 1, c);
  EXPECT_LT(joint.energy, clique.energy);
  EXPECT_EQ(joint.theta.size(), variational_template(6).num_parameters());
  const EnergyModel check(variational_template(6).materialize(joint.theta), h, c);
  EXPECT_NEAR(check(joint.angles), joint.energy, 1e-10);
}

TEST(TrainConfig, Validation) {
  TrainConfig c;
  c.grid_points = 0;
  EXPECT_THROW(validate(c), OutOfRangeError);
  TrainConfig d;
  d.grid_high = d.grid_low;
  EXPECT_NO_THROW(validate(d));
  TrainConfig e;
  e.refiner.max_evaluations = 0;
  EXPECT_THROW(validate(e), OutOfRangeError);
  EXPECT_EQ(backend_from_string(to_string(Backend::kMps)), Backend::kMps);
  EXPECT_THROW(backend_from_string("gpu"), FormatError);
}

}  // namespace
}  // namespace quadqaoa
