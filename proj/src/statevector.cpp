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

#include "quadqaoa/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "quadqaoa/errors.hpp"

namespace quadqaoa {

namespace {

constexpr Amplitude kI{0.0, 1.0};

void check_width(int n, int cap) {
  if (n < 1) throw InvalidSizeError("state needs at least one qubit");
  if (n > cap)
    throw CapacityError("statevector simulation limited to " + std::to_string(cap) +
                        " qubits, got " + std::to_string(n));
}

std::mt19937_64 trajectory_rng(std::uint64_t seed, std::uint64_t trajectory) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trajectory),
                    static_cast<std::uint32_t>(trajectory >> 32)};
  return std::mt19937_64(seq);
}

bool is_primitive(const QaoaCircuit& c) {
  return std::all_of(c.gates().begin(), c.gates().end(), [](const Gate& g) {
    return g.kind == GateKind::kH || g.kind == GateKind::kRX || g.kind == GateKind::kRZ ||
           g.kind == GateKind::kCZ;
  });
}

// Inverse-CDF draw over a prefix-sum table.
Bitstring draw(const std::vector<double>& cumulative, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, cumulative.back());
  const double u = unit(rng);
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  if (it == cumulative.end()) --it;
  return static_cast<Bitstring>(it - cumulative.begin());
}

std::vector<double> cumulative_probabilities(const StateVector& s) {
  std::vector<double> cum(s.amplitudes().size());
  double acc = 0.0;
  for (std::size_t i = 0; i < cum.size(); ++i) {
    acc += std::norm(s.amplitudes()[i]);
    cum[i] = acc;
  }
  return cum;
}

}  // namespace

StateVector::StateVector(int num_qubits) : n_(num_qubits) {
  check_width(num_qubits, 30);
  amps_.assign(std::size_t{1} << n_, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::plus(int num_qubits) {
  StateVector s(num_qubits);
  const double a = 1.0 / std::sqrt(static_cast<double>(s.amps_.size()));
  std::fill(s.amps_.begin(), s.amps_.end(), Amplitude{a, 0.0});
  return s;
}

StateVector StateVector::basis(int num_qubits, Bitstring x) {
  StateVector s(num_qubits);
  if (x >= s.amps_.size()) throw OutOfRangeError("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[x] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(int num_qubits, std::vector<Amplitude> amps) {
  StateVector s(num_qubits);
  if (amps.size() != s.amps_.size()) throw InvalidSizeError("amplitude count must be 2^n");
  s.amps_ = std::move(amps);
  return s;
}

void StateVector::apply_single(int q, const Amplitude m[4]) {
  const std::size_t stride = std::size_t{1} << q;
  const std::size_t dim = amps_.size();
  for (std::size_t base = 0; base < dim; base += stride << 1) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Amplitude a0 = amps_[i];
      const Amplitude a1 = amps_[i + stride];
      amps_[i] = m[0] * a0 + m[1] * a1;
      amps_[i + stride] = m[2] * a0 + m[3] * a1;
    }
  }
}

void StateVector::apply(const Gate& g) {
  for (int q : g.qubits)
    if (q < 0 || q >= n_) throw FormatError("gate acts outside the register");
  switch (g.kind) {
    case GateKind::kH: {
      const double r = 1.0 / std::sqrt(2.0);
      const Amplitude m[4] = {r, r, r, -r};
      apply_single(g.qubits[0], m);
      return;
    }
    case GateKind::kRX: {
      const double c = std::cos(0.5 * g.angle);
      const double s = std::sin(0.5 * g.angle);
      const Amplitude m[4] = {c, -kI * s, -kI * s, c};
      apply_single(g.qubits[0], m);
      return;
    }
    case GateKind::kRZ: {
      const Amplitude lo = std::exp(-0.5 * kI * g.angle);
      const Amplitude hi = std::exp(0.5 * kI * g.angle);
      const std::size_t bit = std::size_t{1} << g.qubits[0];
      for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] *= (i & bit) ? hi : lo;
      return;
    }
    case GateKind::kRZZ:
    case GateKind::kPhaseGadget: {
      std::size_t mask = 0;
      for (int q : g.qubits) mask |= std::size_t{1} << q;
      const Amplitude even = std::exp(-0.5 * kI * g.angle);
      const Amplitude odd = std::exp(0.5 * kI * g.angle);
      for (std::size_t i = 0; i < amps_.size(); ++i)
        amps_[i] *= (std::popcount(i & mask) & 1) ? odd : even;
      return;
    }
    case GateKind::kCZ: {
      const std::size_t mask = (std::size_t{1} << g.qubits[0]) | (std::size_t{1} << g.qubits[1]);
      for (std::size_t i = 0; i < amps_.size(); ++i)
        if ((i & mask) == mask) amps_[i] = -amps_[i];
      return;
    }
    case GateKind::kSwap: {
      const std::size_t ba = std::size_t{1} << g.qubits[0];
      const std::size_t bb = std::size_t{1} << g.qubits[1];
      for (std::size_t i = 0; i < amps_.size(); ++i)
        if ((i & ba) && !(i & bb)) std::swap(amps_[i], amps_[(i ^ ba) | bb]);
      return;
    }
  }
}

void StateVector::apply(const QaoaCircuit& c) {
  if (c.num_qubits() != n_) throw InvalidSizeError("circuit width does not match the state");
  for (const auto& g : c.gates()) apply(g);
}

void StateVector::apply_diagonal_phase(std::span<const double> diag, double angle) {
  if (diag.size() != amps_.size()) throw InvalidSizeError("diagonal size must be 2^n");
  for (std::size_t i = 0; i < amps_.size(); ++i)
    amps_[i] *= std::polar(1.0, -angle * diag[i]);
}

void StateVector::apply_pauli(int qubit, int pauli) {
  const std::size_t bit = std::size_t{1} << qubit;
  switch (pauli) {
    case 0:
      return;
    case 1:
      for (std::size_t i = 0; i < amps_.size(); ++i)
        if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
      return;
    case 2:
      // Y = [[0, -i], [i, 0]]
      for (std::size_t i = 0; i < amps_.size(); ++i)
        if (!(i & bit)) {
          const Amplitude a0 = amps_[i];
          const Amplitude a1 = amps_[i | bit];
          amps_[i] = -kI * a1;
          amps_[i | bit] = kI * a0;
        }
      return;
    case 3:
      for (std::size_t i = 0; i < amps_.size(); ++i)
        if (i & bit) amps_[i] = -amps_[i];
      return;
    default:
      throw OutOfRangeError("pauli index must be in [0, 3]");
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

StateVector simulate_diagonal(std::span<const double> diag, int num_qubits,
                              const QaoaAngles& angles) {
  if (angles.beta.size() != angles.gamma.size())
    throw InvalidSizeError("beta and gamma must have the same length");
  StateVector s = StateVector::plus(num_qubits);
  for (std::size_t layer = 0; layer < angles.depth(); ++layer) {
    s.apply_diagonal_phase(diag, angles.gamma[layer]);
    for (int q = 0; q < num_qubits; ++q) s.apply(Gate::rx(q, 2.0 * angles.beta[layer]));
  }
  return s;
}

StateVector simulate_noiseless(const ZPolynomial& h, const QaoaAngles& angles, int cap) {
  check_width(h.num_vars(), cap);
  const auto diag = h.diagonal();
  return simulate_diagonal(diag, h.num_vars(), angles);
}

StateVector simulate_circuit(const QaoaCircuit& c, int cap) {
  check_width(c.num_qubits(), cap);
  StateVector s(c.num_qubits());
  s.apply(c);
  return s;
}

double expectation(const StateVector& state, std::span<const double> diag) {
  if (diag.size() != state.amplitudes().size())
    throw InvalidSizeError("diagonal size must be 2^n");
  double e = 0.0;
  for (std::size_t i = 0; i < diag.size(); ++i) e += std::norm(state.amplitudes()[i]) * diag[i];
  return e;
}

double expectation(const StateVector& state, const ZPolynomial& h) {
  if (h.num_vars() != state.num_qubits())
    throw InvalidSizeError("polynomial width does not match the state");
  const auto diag = h.diagonal();
  return expectation(state, std::span<const double>(diag));
}

SampleSet sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
  if (std::abs(state.norm() - 1.0) > 1e-8)
    throw Error("cannot sample from an unnormalized state (norm " +
                std::to_string(state.norm()) + ")");
  const auto cum = cumulative_probabilities(state);
  std::mt19937_64 rng(seed);
  std::map<Bitstring, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < shots; ++s) ++counts[draw(cum, rng)];
  return SampleSet::from_counts(state.num_qubits(), counts);
}

namespace {

StateVector run_trajectory(const QaoaCircuit& lowered, double lambda, std::mt19937_64& rng) {
  StateVector s(lowered.num_qubits());
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> which(1, 15);
  for (const auto& g : lowered.gates()) {
    s.apply(g);
    if (lambda > 0.0 && g.is_multi_qubit() && unit(rng) < lambda) {
      const int p = which(rng);
      s.apply_pauli(g.qubits[0], p / 4);
      s.apply_pauli(g.qubits[1], p % 4);
    }
  }
  return s;
}

void check_noise(const QaoaCircuit& c, const NoiseSpec& noise, int cap) {
  check_width(c.num_qubits(), cap);
  if (!(noise.lambda >= 0.0 && noise.lambda <= 1.0))
    throw OutOfRangeError("depolarizing strength must lie in [0, 1]");
  if (noise.trajectories == 0) throw OutOfRangeError("need at least one trajectory");
}

}  // namespace

StateVector simulate_trajectory(const QaoaCircuit& lowered, double lambda, std::uint64_t seed,
                                std::uint64_t trajectory) {
  auto rng = trajectory_rng(seed, trajectory);
  return run_trajectory(is_primitive(lowered) ? lowered : lower_to_cz(lowered), lambda, rng);
}

SampleSet simulate_noisy(const QaoaCircuit& c, const NoiseSpec& noise, int cap) {
  check_noise(c, noise, cap);
  const QaoaCircuit lowered = is_primitive(c) ? c : lower_to_cz(c);
  std::map<Bitstring, std::uint64_t> counts;
  for (std::uint64_t t = 0; t < noise.trajectories; ++t) {
    auto rng = trajectory_rng(noise.seed, t);
    const StateVector s = run_trajectory(lowered, noise.lambda, rng);
    const auto cum = cumulative_probabilities(s);
    for (std::uint64_t shot = 0; shot < noise.shots_per_trajectory; ++shot)
      ++counts[lowered.to_logical(draw(cum, rng))];
  }
  return SampleSet::from_counts(c.num_qubits(), counts);
}

TrajectoryEstimate noisy_expectation(const QaoaCircuit& c, const NoiseSpec& noise,
                                     const ZPolynomial& h, int cap) {
  check_noise(c, noise, cap);
  const QaoaCircuit lowered = is_primitive(c) ? c : lower_to_cz(c);
  // Energies indexed by physical bitstring.
  const auto logical_diag = h.diagonal();
  std::vector<double> diag(logical_diag.size());
  for (std::size_t y = 0; y < diag.size(); ++y) diag[y] = logical_diag[lowered.to_logical(y)];
  // Welford accumulation keeps the spread exact when all trajectories agree.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t t = 0; t < noise.trajectories; ++t) {
    auto rng = trajectory_rng(noise.seed, t);
    const double e = expectation(run_trajectory(lowered, noise.lambda, rng), diag);
    const double delta = e - mean;
    mean += delta / static_cast<double>(t + 1);
    m2 += delta * (e - mean);
  }
  const double m = static_cast<double>(noise.trajectories);
  TrajectoryEstimate est;
  est.mean = mean;
  est.standard_error = m > 1 ? std::sqrt(std::max(0.0, m2 / (m - 1)) / m) : 0.0;
  return est;
}

}  // namespace quadqaoa
