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

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "quadqaoa/quadratizer.hpp"
#include "quadqaoa/zpoly.hpp"

namespace quadqaoa {

enum class Parity { kEven, kOdd };

std::string to_string(Parity p);

/// One depth-one layer of SWAPs between neighbouring physical qubits. An
/// even layer starts at (0, 1), an odd one at (1, 2).
struct SwapLayer {
  Parity parity;
  std::vector<Pair> swaps;
};

SwapLayer make_swap_layer(int n, Parity parity);

/// Odd-even transposition network on a line, truncated to k layers.
///
/// mapping(t)[logical] is the physical position of a logical qubit after t
/// layers; logical_at(t)[physical] is its inverse. Configuration t = 0 is the
/// initial mapping.
class SwapSchedule {
 public:
  SwapSchedule(int num_qubits, int num_layers, std::vector<int> initial_mapping = {});

  int num_qubits() const { return n_; }
  int num_layers() const { return static_cast<int>(layers_.size()); }
  const std::vector<SwapLayer>& layers() const { return layers_; }
  const std::vector<int>& mapping(int t) const;
  const std::vector<int>& logical_at(int t) const;
  const std::vector<int>& initial_mapping() const { return mapping(0); }
  const std::vector<int>& final_mapping() const { return mapping(num_layers()); }

 private:
  int n_;
  std::vector<SwapLayer> layers_;
  std::vector<std::vector<int>> mappings_;
  std::vector<std::vector<int>> inverses_;
};

/// 0 <= k <= n - 2 (k = 0 is allowed for any n >= 2). Empty mapping means
/// identity. Throws OutOfRangeError otherwise.
SwapSchedule build_schedule(int n, int k, std::vector<int> initial_mapping = {});

/// Largest useful layer count: every pair is adjacent within n - 2 layers.
inline int max_swap_layers(int n) { return n >= 2 ? std::max(0, n - 2) : 0; }

/// For every logical pair, the first configuration t at which it is
/// physically adjacent, or -1 if never within the schedule.
class ReachableSet {
 public:
  explicit ReachableSet(const SwapSchedule& schedule);

  int num_qubits() const { return n_; }
  int max_layers() const { return k_; }
  int first_adjacency(int a, int b) const;
  bool contains(int a, int b, int k) const;
  /// E_k, sorted.
  std::vector<Pair> pairs(int k) const;
  std::size_t size(int k) const;

 private:
  int n_;
  int k_;
  std::vector<int> first_;
};

struct TruncatedHamiltonian {
  /// H_C(k): quadratic terms on E_k plus every linear term and the constant.
  ZPolynomial terms;
  std::vector<Pair> reachable;
};

/// Throws InvalidSizeError when h has degree > 2.
TruncatedHamiltonian reachable_terms(const ZPolynomial& h,
                                     std::span<const int> initial_mapping, int k);

/// Smallest k with every quadratic term of h in E_k under the mapping.
int required_layers(const ZPolynomial& h, std::span<const int> initial_mapping);

/// Number of quadratic terms of h adjacent in the initial configuration.
int initially_adjacent_terms(const ZPolynomial& h, std::span<const int> initial_mapping);

struct MappingOptions {
  std::uint64_t seed = 0;
  int restarts = 4;
  /// Annealing steps per restart.
  long iterations = 200000;
  /// Optional wall-clock cap per restart in seconds; 0 disables it. With a
  /// cap the result is no longer reproducible across machines.
  double time_limit_seconds = 0.0;
};

struct MappingResult {
  std::vector<int> mapping;
  int required_layers = 0;
  int initially_adjacent = 0;
  std::uint64_t seed = 0;
};

/// Simulated annealing over initial mappings. Minimizes required_layers,
/// ties broken by more initially adjacent terms, then by the lower restart
/// seed. Falls back to the identity if nothing beats it.
MappingResult optimize_mapping(const ZPolynomial& h, const MappingOptions& options = {});

}  // namespace quadqaoa
