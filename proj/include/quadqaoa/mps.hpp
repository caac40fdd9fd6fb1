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

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "quadqaoa/circuit.hpp"
#include "quadqaoa/sample_set.hpp"
#include "quadqaoa/zpoly.hpp"

namespace quadqaoa {

/// Singular values below this fraction of the largest are always dropped.
inline constexpr double kMpsRankCutoff = 1e-12;

/// Matrix-product state in mixed-canonical form.
///
/// Site i stores one (left bond x right bond) matrix per physical value.
/// Sites left of center() are left-orthonormal, sites right of it
/// right-orthonormal. Two-qubit gates on neighbouring sites are applied by
/// contracting both sites, applying the gate and splitting with an SVD that
/// keeps at most max_bond() singular values.
class MpsState {
 public:
  using Matrix = Eigen::MatrixXcd;

  /// |0...0> with every bond of dimension 1.
  MpsState(int num_qubits, int max_bond);

  int num_qubits() const { return static_cast<int>(sites_.size()); }
  int max_bond() const { return chi_; }
  int center() const { return center_; }
  /// Bond dimension between site i and i + 1.
  int bond_dimension(int i) const;
  int largest_bond() const;
  /// Sum over all splits of the discarded squared singular values relative
  /// to the kept norm.
  double truncation_error() const { return truncation_error_; }
  std::size_t truncations() const { return truncations_; }

  void apply_single(int q, const Eigen::Matrix2cd& u);
  /// `u` acts on |s_q s_{q+1}> with row index 2 s_q + s_{q+1}.
  void apply_two(int q, const Eigen::Matrix4cd& u);
  void apply(const Gate& g);

  void move_center(int target);

  double norm() const;
  /// <prod_{i in support} Z_i> with `support` sorted physical sites.
  double z_string_expectation(std::span<const int> support) const;
  /// <h> where logical variable i sits on physical site mapping[i]
  /// (identity when mapping is empty).
  double energy(const ZPolynomial& h, std::span<const int> mapping = {}) const;
  /// Amplitude of a physical basis state (for tests).
  std::complex<double> amplitude(Bitstring x) const;
  std::vector<std::complex<double>> to_dense() const;

  /// Sequential conditional sampling of physical bitstrings.
  SampleSet sample(std::uint64_t shots, std::uint64_t seed);

 private:
  std::vector<std::array<Matrix, 2>> sites_;
  int chi_;
  int center_ = 0;
  double truncation_error_ = 0.0;
  std::size_t truncations_ = 0;
};

/// Runs every gate of a line-routed circuit. Throws RoutingError when a
/// multi-qubit gate acts on non-neighbouring qubits. Consecutive two-qubit
/// gates on the same pair are fused before the SVD.
MpsState apply_circuit(const QaoaCircuit& c, int max_bond);

Eigen::Matrix2cd gate_matrix_1q(const Gate& g);
Eigen::Matrix4cd gate_matrix_2q(const Gate& g);

}  // namespace quadqaoa
