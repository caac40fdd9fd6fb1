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
#include <string>
#include <vector>

#include "quadqaoa/swap_network.hpp"
#include "quadqaoa/zpoly.hpp"

namespace quadqaoa {

enum class GateKind { kH, kRX, kRZ, kRZZ, kSwap, kCZ, kPhaseGadget };

std::string to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string& name);

/// Rotation conventions: RX(a) = exp(-i a X / 2), RZ(a) = exp(-i a Z / 2),
/// RZZ(a) = exp(-i a ZZ / 2) and PHASE_GADGET(S, a) = exp(-i a Z_S / 2).
struct Gate {
  GateKind kind;
  std::vector<int> qubits;
  double angle = 0.0;

  static Gate h(int q) { return {GateKind::kH, {q}, 0.0}; }
  static Gate rx(int q, double a) { return {GateKind::kRX, {q}, a}; }
  static Gate rz(int q, double a) { return {GateKind::kRZ, {q}, a}; }
  static Gate rzz(int a, int b, double angle) { return {GateKind::kRZZ, {a, b}, angle}; }
  static Gate swap(int a, int b) { return {GateKind::kSwap, {a, b}, 0.0}; }
  static Gate cz(int a, int b) { return {GateKind::kCZ, {a, b}, 0.0}; }
  static Gate phase_gadget(std::vector<int> support, double a) {
    return {GateKind::kPhaseGadget, std::move(support), a};
  }

  bool is_multi_qubit() const { return qubits.size() >= 2; }
  friend bool operator==(const Gate&, const Gate&) = default;
};

struct QaoaAngles {
  std::vector<double> beta;
  std::vector<double> gamma;

  std::size_t depth() const { return beta.size(); }
};

struct CircuitMetadata {
  int p = 0;
  /// SWAP layers per cost block; -1 for the abstract (all-to-all) topology.
  int swap_layers = -1;
  std::string topology = "abstract";
  std::string source;
  bool lowered = false;

  friend bool operator==(const CircuitMetadata&, const CircuitMetadata&) = default;
};

/// Gate list on physical qubits plus the logical-to-physical mapping in
/// force at the start and at the end of the circuit.
class QaoaCircuit {
 public:
  QaoaCircuit() = default;
  explicit QaoaCircuit(int num_qubits);

  int num_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  /// Validates qubit indices, distinctness and gadget support size.
  void append(Gate g);

  const std::vector<int>& initial_mapping() const { return initial_; }
  const std::vector<int>& final_mapping() const { return final_; }
  void set_mappings(std::vector<int> initial, std::vector<int> final_mapping);

  CircuitMetadata& metadata() { return meta_; }
  const CircuitMetadata& metadata() const { return meta_; }

  /// ASAP layering of all gates; gates within a moment act on disjoint qubits.
  std::vector<std::vector<std::size_t>> moments() const;

  /// Measured physical bitstring to logical bitstring.
  Bitstring to_logical(Bitstring physical) const;

  friend bool operator==(const QaoaCircuit&, const QaoaCircuit&) = default;

 private:
  int n_ = 0;
  std::vector<Gate> gates_;
  std::vector<int> initial_;
  std::vector<int> final_;
  CircuitMetadata meta_;
};

/// QAOA on all-to-all connectivity: Hadamards, then per layer one rotation
/// per term (RZ, RZZ or PHASE_GADGET with angle 2 gamma c) and RX(2 beta)
/// on every qubit.
QaoaCircuit synthesize_abstract(const ZPolynomial& h, const QaoaAngles& angles);

/// QAOA on a line routed by `schedule`. Odd QAOA layers traverse the
/// schedule forward and even ones backward, so every layer implements the
/// same truncated Hamiltonian. A retained quadratic term is applied once per
/// layer at its first adjacency in traversal order; pairs about to be
/// swapped get their RZZ immediately before the SWAP.
QaoaCircuit synthesize_line(const ZPolynomial& h, const QaoaAngles& angles,
                            const SwapSchedule& schedule);

/// Generic line routing for polynomials of any degree over the full SWAP
/// network. Each term is applied at the first configuration minimizing the
/// physical span of its support, as a parity ladder that moves the running
/// parity with CNOTs across support qubits and SWAPs across the others.
/// Linear and quadratic-adjacent terms reduce to RZ and RZZ.
QaoaCircuit synthesize_line_hubo(const ZPolynomial& h, const QaoaAngles& angles);

/// Abstract topology when `schedule` is null, otherwise line routing.
QaoaCircuit synthesize_qaoa(const ZPolynomial& h, const QaoaAngles& angles,
                            const SwapSchedule* schedule = nullptr);

/// Rewrites into {H, RX, RZ, CZ}. RZZ -> 2 CZ, SWAP -> 3 CZ, a gadget on s
/// qubits -> 2(s - 1) CZ via a CNOT ladder, and an RZZ and a SWAP on the
/// same pair with nothing between them on either wire -> 3 CZ.
QaoaCircuit lower_to_cz(const QaoaCircuit& c);

struct GateCounts {
  std::size_t two_qubit_count = 0;
  std::size_t two_qubit_depth = 0;
};

/// Counts over the lowered circuit (lowering first if needed); depth is
/// the ASAP depth of two-qubit gates with single-qubit gates ignored.
GateCounts depth_and_counts(const QaoaCircuit& c);

/// One gate per line, e.g. "rzz 0 1 0.5".
std::string to_text(const QaoaCircuit& c);

}  // namespace quadqaoa
