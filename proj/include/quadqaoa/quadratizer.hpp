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

#include <map>
#include <utility>
#include <vector>

#include "quadqaoa/zpoly.hpp"

namespace quadqaoa {

using Pair = std::pair<int, int>;

/// Per-edge bookkeeping of a clique expansion.
struct CliqueEdge {
  double weight = 0.0;
  /// 1 when the pair is itself a quadratic term of the source.
  int direct = 0;
  /// Number of hyperedges of size >= 3 that contain the pair.
  int higher_order_count = 0;
  /// sum over hyperedges containing the pair of |w_e| and |w_e| * w_e.
  double abs_weight_sum = 0.0;
  double weighted_target_sum = 0.0;
};

/// Quadratic projection of a hypergraph where every hyperedge spawns a
/// clique and each pair weight is the |w|-weighted mean of the hyperedge
/// weights that contain it.
struct CliqueExpansion {
  Hypergraph source;
  std::map<Pair, CliqueEdge> edges;
  /// Residual of the weighted least-squares objective at `edges`.
  double objective_value = 0.0;
  /// Source terms of degree 1, carried over unchanged.
  std::map<int, double> linear;
  double constant = 0.0;

  /// The induced quadratic polynomial (linear terms and constant included).
  ZPolynomial to_polynomial() const;
};

/// Throws InvalidSizeError when h has no term of degree >= 2.
CliqueExpansion clique_expand(const ZPolynomial& h);

/// Least-squares objective sum_e sum_{pairs in e} a_e (w_ij - w_e)^2 with
/// a_e = |w_e| / sum |w|, evaluated at arbitrary pair weights.
double clique_objective(const Hypergraph& source,
                        const std::map<Pair, double>& pair_weights);

struct CliqueVerification {
  /// max over edges of |closed form - numeric minimizer|.
  double max_deviation = 0.0;
  /// Objective evaluated at the closed-form weights.
  double objective_value = 0.0;
  std::size_t edges_checked = 0;
};

/// Minimizes the objective numerically edge by edge (bisection on the
/// derivative of each 1-D quadratic) and compares against the closed form.
CliqueVerification verify_clique_weights(const CliqueExpansion& ce);

/// H'(theta) = sum_{i<j} theta_ij Z_i Z_j + sum_i theta_i Z_i.
class VariationalQuadratic {
 public:
  explicit VariationalQuadratic(int num_vars);

  int num_vars() const { return n_; }
  /// C(n, 2) pair parameters followed by n linear ones.
  std::size_t num_parameters() const { return pairs_.size() + n_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  /// Position of pair (i, j), i < j, in the parameter vector.
  std::size_t pair_index(int i, int j) const;
  std::size_t linear_index(int i) const { return pairs_.size() + i; }

  ZPolynomial materialize(std::span<const double> theta) const;
  /// Parameter vector reproducing a quadratic polynomial (missing terms 0).
  std::vector<double> parameters_from(const ZPolynomial& quadratic) const;

 private:
  int n_;
  std::vector<Pair> pairs_;
};

VariationalQuadratic variational_template(int n);

}  // namespace quadqaoa
