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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "quadqaoa/circuit.hpp"
#include "quadqaoa/sample_set.hpp"
#include "quadqaoa/zpoly.hpp"

namespace quadqaoa {

using Amplitude = std::complex<double>;

inline constexpr int kDefaultStatevectorCap = 24;
inline constexpr int kDefaultTrajectoryCap = 20;

/// Dense state over 2^n basis states; amplitude index bit i is qubit i.
class StateVector {
 public:
  explicit StateVector(int num_qubits);  // |0...0>
  static StateVector plus(int num_qubits);
  static StateVector basis(int num_qubits, Bitstring x);
  static StateVector from_amplitudes(int num_qubits, std::vector<Amplitude> amps);

  int num_qubits() const { return n_; }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::vector<Amplitude>& data() { return amps_; }

  void apply(const Gate& g);
  void apply(const QaoaCircuit& c);
  /// Multiplies amplitude x by exp(-i angle * diag[x]).
  void apply_diagonal_phase(std::span<const double> diag, double angle);
  /// 0 = I, 1 = X, 2 = Y, 3 = Z.
  void apply_pauli(int qubit, int pauli);

  double norm() const;
  std::vector<double> probabilities() const;

 private:
  void apply_single(int q, const Amplitude m[4]);
  int n_;
  std::vector<Amplitude> amps_;
};

/// Noiseless QAOA through the diagonal fast path: the cost energies are
/// computed once and each layer is a phase multiply plus RX(2 beta) mixers.
/// Throws CapacityError above `cap` qubits.
StateVector simulate_noiseless(const ZPolynomial& h, const QaoaAngles& angles,
                               int cap = kDefaultStatevectorCap);
/// Same, from precomputed energies (size 2^n).
StateVector simulate_diagonal(std::span<const double> diag, int num_qubits,
                              const QaoaAngles& angles);

/// Gate-by-gate simulation from |0...0>; amplitudes are in physical order.
StateVector simulate_circuit(const QaoaCircuit& c, int cap = kDefaultStatevectorCap);

double expectation(const StateVector& state, const ZPolynomial& h);
double expectation(const StateVector& state, std::span<const double> diag);

/// i.i.d. draws from |psi(x)|^2. Throws when the norm deviates from 1 by
/// more than 1e-8. Energies are left at 0; attach them as needed.
SampleSet sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

/// Two-qubit depolarizing noise unravelled into trajectories.
struct NoiseSpec {
  double lambda = 0.0;
  std::uint64_t trajectories = 1;
  std::uint64_t shots_per_trajectory = 1;
  std::uint64_t seed = 0;
};

/// Runs the (lowered) circuit once per trajectory. After every two-qubit
/// gate, with probability lambda one of the 15 non-identity two-qubit
/// Paulis is applied uniformly at random. Samples are mapped to logical
/// order with the circuit's final mapping. Trajectory t draws from an RNG
/// seeded by (seed, t).
SampleSet simulate_noisy(const QaoaCircuit& c, const NoiseSpec& noise,
                         int cap = kDefaultTrajectoryCap);

struct TrajectoryEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
};

/// Trajectory average of <h> (exact per trajectory, in logical order).
TrajectoryEstimate noisy_expectation(const QaoaCircuit& c, const NoiseSpec& noise,
                                     const ZPolynomial& h, int cap = kDefaultTrajectoryCap);

/// Single trajectory state (physical order), exposed for testing.
StateVector simulate_trajectory(const QaoaCircuit& lowered, double lambda,
                                std::uint64_t seed, std::uint64_t trajectory);

}  // namespace quadqaoa
