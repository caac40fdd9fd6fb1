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
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "quadqaoa/circuit.hpp"
#include "quadqaoa/optimizer.hpp"
#include "quadqaoa/quadratizer.hpp"
#include "quadqaoa/swap_network.hpp"
#include "quadqaoa/zpoly.hpp"

namespace quadqaoa {

enum class Backend { kStatevector, kMps };
std::string to_string(Backend b);
Backend backend_from_string(const std::string& name);

struct TrainConfig {
  int grid_points = 15;
  double grid_low = 0.0;
  double grid_high = std::numbers::pi / 2.0;
  OptimizerOptions refiner{};
  /// Evaluation budget of each joint (theta, beta, gamma) refinement.
  std::size_t joint_max_evaluations = 5000;
  /// Initial trust radius of the joint refinement; theta spans [-1, 1].
  double joint_rho_begin = 0.3;
  /// Uniform restarts of theta in [-1, 1] on top of the clique start.
  int random_restarts = 3;
  std::uint64_t seed = 0;
  Backend backend = Backend::kStatevector;
  int bond_dimension = 20;
  int statevector_cap = 24;
};

/// Checks grid and optimizer settings; throws OutOfRangeError.
void validate(const TrainConfig& config);

struct TrainResult {
  QaoaAngles angles;
  /// Quadratic-Ansatz parameters in VariationalQuadratic order (joint mode).
  std::vector<double> theta;
  /// <H_cost> at the returned parameters.
  double energy = 0.0;
  /// Best energy so far after each evaluation; the last entry is `energy`.
  std::vector<double> trace;
  std::size_t evaluations = 0;
  double grid_energy = 0.0;
  int restart = 0;
};

/// <H_cost> after a QAOA circuit whose phase separator is built from h_ansatz.
/// With a schedule, the Ansatz is line-routed (only H_C(k) terms act) and the
/// MPS backend becomes available; the statevector backend uses the diagonal
/// of the truncated polynomial directly.
class EnergyModel {
 public:
  EnergyModel(ZPolynomial h_ansatz, ZPolynomial h_cost, const TrainConfig& config,
              std::optional<SwapSchedule> schedule = {});

  double operator()(const QaoaAngles& angles) const;
  const ZPolynomial& ansatz() const { return ansatz_; }
  const ZPolynomial& cost() const { return cost_; }
  /// Routed circuit for the given angles; requires a schedule.
  QaoaCircuit circuit(const QaoaAngles& angles) const;

 private:
  ZPolynomial ansatz_;
  ZPolynomial cost_;
  std::optional<SwapSchedule> schedule_;
  Backend backend_;
  int chi_;
  std::vector<double> ansatz_diag_;
  std::vector<double> cost_diag_;
};

/// Grid scan of (beta, gamma) followed by local refinement.
TrainResult train_depth1(const ZPolynomial& h_ansatz, const ZPolynomial& h_cost,
                         const TrainConfig& config);
TrainResult train_depth1(const EnergyModel& model, const TrainConfig& config);

/// Depth p + 1 from the transition state (beta*, 0, gamma*, 0).
TrainResult train_depth_p_transition(const ZPolynomial& h_ansatz, const ZPolynomial& h_cost,
                                     const TrainResult& previous, const TrainConfig& config);
TrainResult train_depth_p_transition(const EnergyModel& model, const TrainResult& previous,
                                     const TrainConfig& config);

/// Depth-p training from scratch: depth-1 grid, then transition states.
TrainResult train_standard(const EnergyModel& model, int p, const TrainConfig& config);

/// Joint minimization of <H_cost> over theta and the QAOA angles. Starts
/// from the clique-expansion weights (when h_cost has higher-order terms)
/// and from `random_restarts` uniform draws; depth grows by transition.
TrainResult train_joint_quadratization(const VariationalQuadratic& ansatz_template,
                                       const ZPolynomial& h_cost, int p,
                                       const TrainConfig& config);

/// Truncated Ansatz H_C(k) on a line schedule with the given initial mapping;
/// the objective is the full quadratic h_cost. A warm start (typically the
/// k - 1 optimum) competes with the fresh grid-based run.
TrainResult train_truncated(const ZPolynomial& h_cost, std::span<const int> initial_mapping,
                            int k, int p, const TrainConfig& config,
                            const TrainResult* warm_start = nullptr);

/// Trained truncated Ansatz results indexed [k][p - 1] for k in
/// [0, k_max] and p in [1, p_max]. Each (k, p) competes a transition-state
/// run with a warm start from (k - 1, p).
struct TruncatedSweep {
  std::vector<std::vector<TrainResult>> results;
};
TruncatedSweep train_truncated_sweep(const ZPolynomial& h_cost,
                                     std::span<const int> initial_mapping, int k_max,
                                     int p_max, const TrainConfig& config);

}  // namespace quadqaoa
