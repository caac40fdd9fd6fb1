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

#include "quadqaoa/problems.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <utility>

#include "quadqaoa/errors.hpp"

namespace quadqaoa {

namespace {

class CoefficientStream {
 public:
  explicit CoefficientStream(const CoefficientSource& src)
      : src_(src), rng_(src.seed), dist_(src.low, src.high) {}

  double next() {
    if (src_.kind == CoefficientSource::Kind::kConstant) return src_.value;
    return dist_(rng_);
  }

 private:
  CoefficientSource src_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> dist_;
};

}  // namespace

ZPolynomial build_labs(int n) {
  if (n < 4)
    throw InvalidSizeError("LABS needs n >= 4, got " + std::to_string(n));
  ZPolynomial h(n);
  // Loop bounds are the 1-based sums of the expanded sidelobe energy.
  for (int i = 1; i <= n - 3; ++i)
    for (int t = 1; t <= (n - i - 1) / 2; ++t)
      for (int k = t + 1; k <= n - i - t; ++k)
        h.add_term({i - 1, i + t - 1, i + k - 1, i + k + t - 1}, 2.0);
  for (int i = 1; i <= n - 2; ++i)
    for (int k = 1; k <= (n - i) / 2; ++k) h.add_term({i - 1, i + 2 * k - 1}, 1.0);
  return h;
}

double labs_offset(int n) { return 0.5 * n * (n - 1); }

double sidelobe_energy(std::span<const int> spins) {
  const int n = static_cast<int>(spins.size());
  if (n < 2) throw InvalidSizeError("sidelobe energy needs length >= 2");
  double total = 0.0;
  for (int k = 1; k < n; ++k) {
    long c = 0;
    for (int i = 0; i + k < n; ++i) c += spins[i] * spins[i + k];
    total += static_cast<double>(c * c);
  }
  return total;
}

ZPolynomial build_h4_full(int n, const CoefficientSource& coefficients) {
  if (n < 4)
    throw InvalidSizeError("H4 full needs n >= 4, got " + std::to_string(n));
  ZPolynomial h(n);
  CoefficientStream stream(coefficients);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) h.add_term({i, j, k, l}, stream.next());
  return h;
}

ZPolynomial build_qubo_full(int n, const CoefficientSource& quadratic,
                            const std::optional<CoefficientSource>& linear) {
  if (n < 2)
    throw InvalidSizeError("QUBO needs n >= 2, got " + std::to_string(n));
  ZPolynomial h(n);
  CoefficientStream quad(quadratic);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) h.add_term({i, j}, quad.next());
  if (linear) {
    CoefficientStream lin(*linear);
    for (int i = 0; i < n; ++i) h.add_term({i}, lin.next());
  }
  return h;
}

void validate_simple_graph(const Graph& g) {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.num_nodes || e.v >= g.num_nodes)
      throw FormatError("edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") references a missing node");
    if (e.u == e.v)
      throw FormatError("self loop on node " + std::to_string(e.u));
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw FormatError("duplicate edge (" + std::to_string(key.first) + "," +
                        std::to_string(key.second) + ")");
  }
}

Graph random_regular_graph(int n, int degree, std::uint64_t seed) {
  if (n < degree + 1 || (n * degree) % 2 != 0)
    throw InvalidSizeError("no simple " + std::to_string(degree) +
                           "-regular graph on " + std::to_string(n) + " nodes");
  std::mt19937_64 rng(seed);
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * degree);
  for (int v = 0; v < n; ++v)
    for (int d = 0; d < degree; ++d) stubs.push_back(v);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> edges;
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      const int a = stubs[i];
      const int b = stubs[i + 1];
      if (a == b || !edges.insert(std::minmax(a, b)).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Graph g;
    g.num_nodes = n;
    for (const auto& [a, b] : edges) g.edges.push_back({a, b, 1.0});
    return g;
  }
  throw Error("failed to sample a regular graph");
}

ZPolynomial build_maxcut(const Graph& g) {
  validate_simple_graph(g);
  ZPolynomial h(g.num_nodes);
  for (const auto& e : g.edges) h.add_term({e.u, e.v}, 0.25 * e.weight);
  return h;
}

double maxcut_objective(const Graph& g, Bitstring x) {
  double f = 0.0;
  for (const auto& e : g.edges)
    if (((x >> e.u) ^ (x >> e.v)) & 1U) f += e.weight;
  return f;
}

Bitstring maxcut_local_search(const Graph& g, int restarts, std::uint64_t seed) {
  validate_simple_graph(g);
  const int n = g.num_nodes;
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (const auto& e : g.edges) {
    adj[e.u].push_back({e.v, e.weight});
    adj[e.v].push_back({e.u, e.weight});
  }
  std::mt19937_64 rng(seed);
  Bitstring best = 0;
  double best_value = -1.0;
  for (int r = 0; r < std::max(1, restarts); ++r) {
    Bitstring x = n == 64 ? rng() : rng() & ((Bitstring{1} << n) - 1);
    bool improved = true;
    while (improved) {
      improved = false;
      for (int v = 0; v < n; ++v) {
        // Gain of flipping v: same-side edges become cut, cut edges uncut.
        double gain = 0.0;
        for (const auto& [u, w] : adj[v])
          gain += (((x >> u) ^ (x >> v)) & 1U) ? -w : w;
        if (gain > 1e-12) {
          x ^= Bitstring{1} << v;
          improved = true;
        }
      }
    }
    const double value = maxcut_objective(g, x);
    if (value > best_value) {
      best_value = value;
      best = x;
    }
  }
  return best;
}

double maxcut_spectral_upper_bound(const Graph& g) {
  validate_simple_graph(g);
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(g.num_nodes, g.num_nodes);
  for (const auto& e : g.edges) {
    lap(e.u, e.u) += e.weight;
    lap(e.v, e.v) += e.weight;
    lap(e.u, e.v) -= e.weight;
    lap(e.v, e.u) -= e.weight;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);
  return 0.25 * g.num_nodes * solver.eigenvalues().maxCoeff();
}

}  // namespace quadqaoa
