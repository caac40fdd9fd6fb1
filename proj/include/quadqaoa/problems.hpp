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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "quadqaoa/zpoly.hpp"

namespace quadqaoa {

/// LABS Hamiltonian: coefficient 2 on the quartic terms and 1 on the
/// quadratic terms, no constant. Requires n >= 4.
ZPolynomial build_labs(int n);

/// Constant separating the sidelobe energy from build_labs(n):
/// sidelobe(z) = build_labs(n).energy(x) + labs_offset(n) = ... + n(n-1)/2.
double labs_offset(int n);

/// Sum over k of C_k(z)^2 with C_k = sum_i z_i z_{i+k}. Entries of z are +-1.
double sidelobe_energy(std::span<const int> spins);

/// Where random coefficients come from. A constant source ignores the seed.
struct CoefficientSource {
  enum class Kind { kConstant, kUniform };
  Kind kind = Kind::kUniform;
  double value = 1.0;  // kConstant
  double low = -1.0;   // kUniform
  double high = 1.0;
  std::uint64_t seed = 0;

  static CoefficientSource constant(double v) {
    return {Kind::kConstant, v, 0.0, 0.0, 0};
  }
  static CoefficientSource uniform(std::uint64_t seed, double lo = -1.0,
                                   double hi = 1.0) {
    return {Kind::kUniform, 0.0, lo, hi, seed};
  }
};

/// One quartic term per 4-subset of the n variables.
ZPolynomial build_h4_full(int n, const CoefficientSource& coefficients);

/// All n(n-1)/2 quadratic terms, plus linear terms when `linear` is given.
ZPolynomial build_qubo_full(int n, const CoefficientSource& quadratic,
                            const std::optional<CoefficientSource>& linear = {});

struct WeightedEdge {
  int u;
  int v;
  double weight = 1.0;
};

struct Graph {
  int num_nodes = 0;
  std::vector<WeightedEdge> edges;
};

/// Throws FormatError on self loops, duplicate edges or bad indices.
void validate_simple_graph(const Graph& g);

/// Uniformly random d-regular simple graph via the pairing model with
/// rejection. Unit edge weights.
Graph random_regular_graph(int n, int degree, std::uint64_t seed);

/// Max-Cut Ising Hamiltonian: w_e / 4 on each edge term.
ZPolynomial build_maxcut(const Graph& g);

/// Cut value f(x) = sum_e w_e (1 - z_u z_v) / 2.
double maxcut_objective(const Graph& g, Bitstring x);

/// Best cut found by repeated single-flip local search from random starts.
/// Returns the bitstring; the value is maxcut_objective of it.
Bitstring maxcut_local_search(const Graph& g, int restarts, std::uint64_t seed);

/// Spectral upper bound on the maximum cut, n/4 * lambda_max(Laplacian).
/// Valid for nonnegative weights.
double maxcut_spectral_upper_bound(const Graph& g);

}  // namespace quadqaoa
