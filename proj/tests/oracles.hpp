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

// Independent reference implementations used as test oracles. Nothing here
// calls into the simulators or builders under test.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quadqaoa/circuit.hpp"
#include "quadqaoa/zpoly.hpp"

namespace oracle {

using cd = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline int bit(std::uint64_t x, int q) { return static_cast<int>((x >> q) & 1U); }
inline int spin(std::uint64_t x, int q) { return 1 - 2 * bit(x, q); }

// Energy from spins, term by term.
inline double energy(const quadqaoa::ZPolynomial& h, std::uint64_t x) {
  double e = h.constant();
  for (const auto& [term, w] : h.terms()) {
    int s = 1;
    for (int q : term) s *= spin(x, q);
    e += w * s;
  }
  return e;
}

inline double sidelobe(int n, std::uint64_t x) {
  double total = 0.0;
  for (int k = 1; k < n; ++k) {
    int c = 0;
    for (int i = 0; i + k < n; ++i) c += spin(x, i) * spin(x, i + k);
    total += c * c;
  }
  return total;
}

// Symbolic expansion of sum_k C_k^2 into Z-strings, with Z_i^2 = 1.
inline std::map<std::vector<int>, double> expand_sidelobe(int n) {
  std::map<std::vector<int>, double> out;
  for (int k = 1; k < n; ++k)
    for (int i = 0; i + k < n; ++i)
      for (int j = 0; j + k < n; ++j) {
        std::map<int, int> parity;
        for (int q : {i, i + k, j, j + k}) parity[q] ^= 1;
        std::vector<int> term;
        for (auto [q, odd] : parity)
          if (odd) term.push_back(q);
        out[term] += 1.0;
      }
  return out;
}

// 2x2 and 4x4 gate matrices from their textbook definitions. Two-qubit
// matrices use the basis index b0 + 2 b1 for qubits (q0, q1).
inline Eigen::Matrix2cd rx(double a) {
  Eigen::Matrix2cd m;
  m << std::cos(a / 2), cd(0, -std::sin(a / 2)), cd(0, -std::sin(a / 2)), std::cos(a / 2);
  return m;
}
inline Eigen::Matrix2cd rz(double a) {
  Eigen::Matrix2cd m;
  m << std::exp(cd(0, -a / 2)), 0, 0, std::exp(cd(0, a / 2));
  return m;
}
inline Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

inline void apply_1q(Vec& psi, int q, const Eigen::Matrix2cd& m) {
  const std::uint64_t stride = std::uint64_t{1} << q;
  for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(psi.size()); ++x) {
    if (bit(x, q)) continue;
    const cd a = psi(x);
    const cd b = psi(x | stride);
    psi(x) = m(0, 0) * a + m(0, 1) * b;
    psi(x | stride) = m(1, 0) * a + m(1, 1) * b;
  }
}

// Applies exp(-i a/2 Z...Z) over the support.
inline void apply_zstring_phase(Vec& psi, const std::vector<int>& support, double a) {
  for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(psi.size()); ++x) {
    int s = 1;
    for (int q : support) s *= spin(x, q);
    psi(x) *= std::exp(cd(0, -a / 2 * s));
  }
}

inline void apply_gate(Vec& psi, const quadqaoa::Gate& g) {
  using quadqaoa::GateKind;
  switch (g.kind) {
    case GateKind::kH:
      apply_1q(psi, g.qubits[0], hadamard());
      break;
    case GateKind::kRX:
      apply_1q(psi, g.qubits[0], rx(g.angle));
      break;
    case GateKind::kRZ:
      apply_1q(psi, g.qubits[0], rz(g.angle));
      break;
    case GateKind::kRZZ:
    case GateKind::kPhaseGadget:
      apply_zstring_phase(psi, g.qubits, g.angle);
      break;
    case GateKind::kCZ:
      for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(psi.size()); ++x)
        if (bit(x, g.qubits[0]) && bit(x, g.qubits[1])) psi(x) = -psi(x);
      break;
    case GateKind::kSwap: {
      Vec out = psi;
      const int a = g.qubits[0];
      const int b = g.qubits[1];
      for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(psi.size()); ++x) {
        std::uint64_t y = x & ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
        y |= static_cast<std::uint64_t>(bit(x, a)) << b;
        y |= static_cast<std::uint64_t>(bit(x, b)) << a;
        out(y) = psi(x);
      }
      psi = out;
      break;
    }
  }
}

inline Vec zero_state(int n) {
  Vec psi = Vec::Zero(std::int64_t{1} << n);
  psi(0) = 1.0;
  return psi;
}

inline Vec run(const quadqaoa::QaoaCircuit& c) {
  Vec psi = zero_state(c.num_qubits());
  for (const auto& g : c.gates()) apply_gate(psi, g);
  return psi;
}

// QAOA from its definition: |+>, then exp(-i gamma H) and exp(-i beta sum X)
// per layer.
inline Vec qaoa_state(const quadqaoa::ZPolynomial& h, const std::vector<double>& beta,
                      const std::vector<double>& gamma) {
  const int n = h.num_vars();
  const std::int64_t dim = std::int64_t{1} << n;
  Vec psi = Vec::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  for (std::size_t l = 0; l < beta.size(); ++l) {
    for (std::int64_t x = 0; x < dim; ++x)
      psi(x) *= std::exp(cd(0, -gamma[l] * energy(h, static_cast<std::uint64_t>(x))));
    for (int q = 0; q < n; ++q) apply_1q(psi, q, rx(2 * beta[l]));
  }
  return psi;
}

inline double expectation(const Vec& psi, const quadqaoa::ZPolynomial& h) {
  double e = 0.0;
  for (std::int64_t x = 0; x < psi.size(); ++x)
    e += std::norm(psi(x)) * energy(h, static_cast<std::uint64_t>(x));
  return e;
}

// Dense unitary of one gate on n qubits, column by column.
inline Mat unitary(const quadqaoa::Gate& g, int n) {
  const std::int64_t dim = std::int64_t{1} << n;
  Mat u(dim, dim);
  for (std::int64_t x = 0; x < dim; ++x) {
    Vec e = Vec::Zero(dim);
    e(x) = 1.0;
    apply_gate(e, g);
    u.col(x) = e;
  }
  return u;
}

// Pauli P in {0: I, 1: X, 2: Y, 3: Z} on qubit q of an n-qubit register.
inline Mat pauli(int p, int q, int n) {
  Eigen::Matrix2cd m;
  switch (p) {
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, cd(0, -1), cd(0, 1), 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      m << 1, 0, 0, 1;
  }
  const std::int64_t dim = std::int64_t{1} << n;
  Mat out(dim, dim);
  for (std::int64_t x = 0; x < dim; ++x) {
    Vec e = Vec::Zero(dim);
    e(x) = 1.0;
    apply_1q(e, q, m);
    out.col(x) = e;
  }
  return out;
}

// Exact density-matrix evolution with a two-qubit depolarizing channel of
// strength lambda after every multi-qubit gate.
inline Mat density_matrix(const quadqaoa::QaoaCircuit& c, double lambda) {
  const int n = c.num_qubits();
  const std::int64_t dim = std::int64_t{1} << n;
  Mat rho = Mat::Zero(dim, dim);
  rho(0, 0) = 1.0;
  for (const auto& g : c.gates()) {
    const Mat u = unitary(g, n);
    rho = u * rho * u.adjoint();
    if (g.qubits.size() == 2 && lambda > 0.0) {
      Mat mixed = Mat::Zero(dim, dim);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          if (a == 0 && b == 0) continue;
          const Mat p = pauli(a, g.qubits[0], n) * pauli(b, g.qubits[1], n);
          mixed += p * rho * p.adjoint();
        }
      rho = (1.0 - lambda) * rho + (lambda / 15.0) * mixed;
    }
  }
  return rho;
}

// Minimizer of a convex function of one variable by bisection on the sign
// of a symmetric difference. For a quadratic the difference is the exact
// slope, so the result is accurate to rounding.
template <class F>
double convex_argmin(F f, double lo, double hi, double h = 0.5) {
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (f(mid + h) - f(mid - h) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// The clique least-squares objective written out from its definition, with
// only the weight of `pair` varied and the others held at `weights`.
inline double clique_objective_with(const quadqaoa::ZPolynomial& h, std::pair<int, int> pair,
                                    double w_pair,
                                    const std::map<std::pair<int, int>, double>& weights) {
  double norm = 0.0;
  for (const auto& [t, w] : h.terms())
    if (t.size() >= 2) norm += std::abs(w);
  double f = 0.0;
  for (const auto& [t, w] : h.terms()) {
    if (t.size() < 2) continue;
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a + 1; b < t.size(); ++b) {
        const std::pair<int, int> p{t[a], t[b]};
        const double wij = p == pair ? w_pair : weights.at(p);
        f += std::abs(w) / norm * (wij - w) * (wij - w);
      }
  }
  return f;
}

// Per-edge numeric minimizer of the clique objective, keyed by pair.
inline std::map<std::pair<int, int>, double> clique_numeric_weights(
    const quadqaoa::ZPolynomial& h, const std::map<std::pair<int, int>, double>& weights) {
  double lo = 1e300;
  double hi = -1e300;
  for (const auto& [t, w] : h.terms()) {
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  std::map<std::pair<int, int>, double> out;
  for (const auto& [p, w] : weights)
    out[p] = convex_argmin([&](double x) { return clique_objective_with(h, p, x, weights); },
                           lo - 1.0, hi + 1.0);
  return out;
}

// Closed-form depth-one QAOA energy of a ZZ cost for a ZZ phase separator
// exp(-i gamma sum J_uv Z_u Z_v) and mixer exp(-i beta X) on every qubit.
// Linear terms are not supported.
inline double qaoa1_energy(const quadqaoa::ZPolynomial& cost, const quadqaoa::ZPolynomial& ansatz,
                           double beta, double gamma) {
  const int n = cost.num_vars();
  std::vector<std::vector<double>> j(n, std::vector<double>(n, 0.0));
  for (const auto& [t, w] : ansatz.terms()) {
    if (t.size() != 2) throw std::invalid_argument("ZZ terms only");
    j[t[0]][t[1]] = j[t[1]][t[0]] = w;
  }
  double e = cost.constant();
  for (const auto& [t, w] : cost.terms()) {
    if (t.size() != 2) throw std::invalid_argument("ZZ terms only");
    const int u = t[0];
    const int v = t[1];
    double cu = 1.0, cv = 1.0, plus = 1.0, minus = 1.0;
    for (int x = 0; x < n; ++x) {
      if (x == u || x == v) continue;
      cu *= std::cos(2 * gamma * j[u][x]);
      cv *= std::cos(2 * gamma * j[v][x]);
      plus *= std::cos(2 * gamma * (j[u][x] + j[v][x]));
      minus *= std::cos(2 * gamma * (j[u][x] - j[v][x]));
    }
    const double s2 = std::sin(2 * beta);
    e += w * (0.5 * std::sin(4 * beta) * std::sin(2 * gamma * j[u][v]) * (cu + cv) -
              0.5 * s2 * s2 * (plus - minus));
  }
  return e;
}

inline quadqaoa::ZPolynomial random_four_uniform(int n, int edges, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> w(0.1, 2.0);
  quadqaoa::ZPolynomial h(n);
  std::set<std::vector<int>> used;
  while (static_cast<int>(used.size()) < edges) {
    auto perm = random_permutation(n, rng);
    std::vector<int> t(perm.begin(), perm.begin() + 4);
    std::sort(t.begin(), t.end());
    if (used.insert(t).second) h.add_term(t, w(rng));
  }
  return h;
}

}  // namespace oracle
