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
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace quadqaoa {

using Objective = std::function<double(std::span<const double>)>;

struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;
};

struct OptimizerOptions {
  double rho_begin = 0.1;
  double rho_end = 1e-6;
  std::size_t max_evaluations = 500;
  std::optional<Bounds> bounds;
};

struct OptimizerResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
  /// Best value seen after each evaluation.
  std::vector<double> trace;
  bool converged = false;
};

/// Derivative-free trust-region minimizer driven by linear interpolation
/// models on a simplex of n + 1 points, in the spirit of COBYLA without
/// general constraints. Box bounds, when given, are enforced by clipping.
OptimizerResult minimize_linear_trust_region(const Objective& f, std::vector<double> x0,
                                             const OptimizerOptions& options = {});

}  // namespace quadqaoa
