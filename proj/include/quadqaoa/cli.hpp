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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quadqaoa/io.hpp"
#include "quadqaoa/problems.hpp"
#include "quadqaoa/zpoly.hpp"

namespace quadqaoa {

struct ProblemSpec {
  /// labs | h4full | h2full | maxcut | file
  std::string builder = "labs";
  int n = 12;
  /// Degree of the random regular graph for maxcut.
  int degree = 3;
  /// constant | uniform coefficients for h4full / h2full.
  std::string coefficients = "constant";
  double value = 1.0;
  /// Problem JSON for `file`, optional graph JSON for `maxcut`.
  std::string path;
  std::uint64_t seed = 0;
};

struct ExperimentConfig {
  ProblemSpec problem;
  std::string ansatz = "standard";
  int p = 1;
  int k = -1;
  std::string backend = "statevector";
  int chi = 20;
  double lambda = 0.0;
  std::uint64_t trajectories = 200;
  std::uint64_t shots_per_trajectory = 1;
  std::uint64_t shots = 10000;
  int grid = 15;
  std::size_t maxiter = 500;
  double rhobeg = 0.1;
  double rhoend = 1e-6;
  std::size_t joint_maxiter = 5000;
  double joint_rhobeg = 0.3;
  int restarts = 3;
  long mapping_iterations = 200000;
  int mapping_restarts = 4;
  std::vector<double> alphas = {0.01, 0.05, 0.1};
  /// Optional sweeps for `run`: truncation depths 0..k_max and noise levels.
  int sweep_k_max = -1;
  std::vector<double> sweep_lambda;
  std::uint64_t seed = 0;
  std::string out;
};

/// Canonical nested JSON form; the hash is computed over its compact dump.
Json to_json(const ExperimentConfig& c);
/// Overwrites every field present in `j`; unknown keys are rejected.
void apply_overrides(ExperimentConfig& c, const Json& j);
/// 16 hex digits of the 64-bit FNV-1a hash of the canonical config.
std::string config_hash(const ExperimentConfig& c);

struct BuiltProblem {
  ZPolynomial h;
  std::optional<Graph> graph;
};
BuiltProblem build_problem(const ProblemSpec& spec);

/// Default output root: $QUADQAOA_OUT when set, otherwise ./quadqaoa_out.
std::filesystem::path default_output_root();

/// Entry point of the `quadqaoa` tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quadqaoa
