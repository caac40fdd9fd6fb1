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

#include "quadqaoa/swap_network.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <tuple>

#include "quadqaoa/errors.hpp"

namespace quadqaoa {

std::string to_string(Parity p) { return p == Parity::kEven ? "even" : "odd"; }

SwapLayer make_swap_layer(int n, Parity parity) {
  SwapLayer layer{parity, {}};
  for (int q = parity == Parity::kEven ? 0 : 1; q + 1 < n; q += 2)
    layer.swaps.push_back({q, q + 1});
  return layer;
}

namespace {

std::vector<int> identity_permutation(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

void check_permutation(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n)
    throw InvalidSizeError("mapping has " + std::to_string(p.size()) +
                           " entries, expected " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) throw FormatError("mapping is not a permutation");
    seen[v] = true;
  }
}

std::vector<int> invert(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace

SwapSchedule::SwapSchedule(int num_qubits, int num_layers, std::vector<int> initial_mapping)
    : n_(num_qubits) {
  if (num_qubits < 2) throw InvalidSizeError("a swap schedule needs at least 2 qubits");
  if (num_layers < 0 || num_layers > max_swap_layers(num_qubits))
    throw OutOfRangeError("swap layer count " + std::to_string(num_layers) +
                          " outside [0, " + std::to_string(max_swap_layers(num_qubits)) +
                          "]");
  if (initial_mapping.empty()) initial_mapping = identity_permutation(n_);
  check_permutation(initial_mapping, n_);
  mappings_.push_back(std::move(initial_mapping));
  inverses_.push_back(invert(mappings_.back()));
  for (int t = 0; t < num_layers; ++t) {
    layers_.push_back(make_swap_layer(n_, t % 2 == 0 ? Parity::kEven : Parity::kOdd));
    std::vector<int> logical = inverses_.back();
    for (const auto& [a, b] : layers_.back().swaps) std::swap(logical[a], logical[b]);
    mappings_.push_back(invert(logical));
    inverses_.push_back(std::move(logical));
  }
}

const std::vector<int>& SwapSchedule::mapping(int t) const {
  if (t < 0 || t >= static_cast<int>(mappings_.size()))
    throw OutOfRangeError("configuration index out of range");
  return mappings_[t];
}

const std::vector<int>& SwapSchedule::logical_at(int t) const {
  if (t < 0 || t >= static_cast<int>(inverses_.size()))
    throw OutOfRangeError("configuration index out of range");
  return inverses_[t];
}

SwapSchedule build_schedule(int n, int k, std::vector<int> initial_mapping) {
  return SwapSchedule(n, k, std::move(initial_mapping));
}

ReachableSet::ReachableSet(const SwapSchedule& schedule)
    : n_(schedule.num_qubits()),
      k_(schedule.num_layers()),
      first_(static_cast<std::size_t>(n_) * n_, -1) {
  for (int t = 0; t <= k_; ++t) {
    const auto& logical = schedule.logical_at(t);
    for (int q = 0; q + 1 < n_; ++q) {
      const int a = logical[q];
      const int b = logical[q + 1];
      int& slot = first_[static_cast<std::size_t>(a) * n_ + b];
      if (slot < 0) {
        slot = t;
        first_[static_cast<std::size_t>(b) * n_ + a] = t;
      }
    }
  }
}

int ReachableSet::first_adjacency(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b)
    throw OutOfRangeError("invalid logical pair");
  return first_[static_cast<std::size_t>(a) * n_ + b];
}

bool ReachableSet::contains(int a, int b, int k) const {
  const int t = first_adjacency(a, b);
  return t >= 0 && t <= k;
}

std::vector<Pair> ReachableSet::pairs(int k) const {
  std::vector<Pair> out;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (contains(a, b, k)) out.push_back({a, b});
  return out;
}

std::size_t ReachableSet::size(int k) const { return pairs(k).size(); }

TruncatedHamiltonian reachable_terms(const ZPolynomial& h,
                                     std::span<const int> initial_mapping, int k) {
  if (h.degree() > 2)
    throw InvalidSizeError("reachable_terms needs a polynomial of degree <= 2");
  const int n = h.num_vars();
  SwapSchedule schedule(n, k, {initial_mapping.begin(), initial_mapping.end()});
  ReachableSet reach(schedule);
  TruncatedHamiltonian out{
      h.filtered([&](const Term& q) { return q.size() < 2 || reach.contains(q[0], q[1], k); }),
      reach.pairs(k)};
  return out;
}

namespace {

// First-adjacency configuration for every pair of *initial physical*
// positions over the full n - 2 layer network. The network is oblivious, so
// a mapping only relabels rows and columns of this table.
std::vector<int> physical_adjacency_table(int n) {
  SwapSchedule full(n, max_swap_layers(n));
  ReachableSet reach(full);
  std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) table[static_cast<std::size_t>(a) * n + b] = reach.first_adjacency(a, b);
  return table;
}

std::vector<Pair> quadratic_pairs(const ZPolynomial& h) {
  std::vector<Pair> out;
  for (const auto& [q, w] : h.terms())
    if (q.size() == 2) out.push_back({q[0], q[1]});
  return out;
}

}  // namespace

int required_layers(const ZPolynomial& h, std::span<const int> initial_mapping) {
  const int n = h.num_vars();
  if (h.degree() > 2)
    throw InvalidSizeError("required_layers needs a polynomial of degree <= 2");
  if (n < 2) return 0;
  check_permutation({initial_mapping.begin(), initial_mapping.end()}, n);
  const auto table = physical_adjacency_table(n);
  int k = 0;
  for (const auto& [a, b] : quadratic_pairs(h))
    k = std::max(k, table[static_cast<std::size_t>(initial_mapping[a]) * n +
                          initial_mapping[b]]);
  return k;
}

int initially_adjacent_terms(const ZPolynomial& h, std::span<const int> initial_mapping) {
  int count = 0;
  for (const auto& [a, b] : quadratic_pairs(h))
    if (std::abs(initial_mapping[a] - initial_mapping[b]) == 1) ++count;
  return count;
}

namespace {

class MappingAnnealer {
 public:
  MappingAnnealer(int n, std::vector<Pair> edges)
      : n_(n), edges_(std::move(edges)), table_(physical_adjacency_table(n)),
        incident_(n) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      incident_[edges_[e].first].push_back(e);
      incident_[edges_[e].second].push_back(e);
    }
  }

  // Lexicographic objective: (required layers, -initially adjacent terms).
  std::tuple<int, int> evaluate(const std::vector<int>& mapping) const {
    int k = 0;
    int adjacent = 0;
    for (const auto& [a, b] : edges_) {
      const int t = table_[static_cast<std::size_t>(mapping[a]) * n_ + mapping[b]];
      k = std::max(k, t);
      if (t == 0) ++adjacent;
    }
    return {k, -adjacent};
  }

  // Lowers the target depth K while annealing finds a mapping with no edge
  // first meeting after K, then spends a final pass on adjacency at the best K.
  MappingResult run(std::vector<int> mapping, std::uint64_t seed, long iterations,
                    double time_limit) {
    std::mt19937_64 rng(seed);
    const auto start = std::chrono::steady_clock::now();
    auto out_of_time = [&] {
      if (time_limit <= 0.0) return false;
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      return elapsed.count() > time_limit;
    };
    auto best_key = evaluate(mapping);
    auto best_mapping = mapping;
    while (std::get<0>(best_key) > 0 && !out_of_time()) {
      const int target = std::get<0>(best_key) - 1;
      if (!anneal(mapping, target, rng, iterations, out_of_time)) break;
      auto key = evaluate(mapping);
      if (key < best_key) {
        best_key = key;
        best_mapping = mapping;
      }
    }
    mapping = best_mapping;
    anneal(mapping, std::get<0>(best_key), rng, iterations / 4, out_of_time);
    if (auto key = evaluate(mapping); key < best_key) {
      best_key = key;
      best_mapping = mapping;
    }
    MappingResult result;
    result.mapping = std::move(best_mapping);
    result.required_layers = std::get<0>(best_key);
    result.initially_adjacent = -std::get<1>(best_key);
    result.seed = seed;
    return result;
  }

 private:
  // Cost: number of edges first meeting after the target, minus a small
  // reward per initially adjacent edge. Counting violations rather than
  // summing excess layers keeps far-apart same-parity pairs from dominating.
  // Returns true once no edge is violated.
  template <class Stop>
  bool anneal(std::vector<int>& mapping, int target, std::mt19937_64& rng, long iterations,
              Stop&& stop) {
    constexpr double kAdjacencyReward = 0.01;
    auto edge_cost = [&](std::size_t e) {
      const int t = table_[static_cast<std::size_t>(mapping[edges_[e].first]) * n_ +
                           mapping[edges_[e].second]];
      return (t > target ? 1.0 : 0.0) - (t == 0 ? kAdjacencyReward : 0.0);
    };
    std::vector<double> cost(edges_.size());
    int violations = 0;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      cost[e] = edge_cost(e);
      if (cost[e] > 0.0) ++violations;
    }
    auto best = mapping;
    int best_violations = violations;
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    constexpr double kStartTemperature = 1.0;
    constexpr double kEndTemperature = 0.03;
    std::vector<std::size_t> touched;
    std::vector<double> old_cost;
    for (long it = 0; it < iterations; ++it) {
      if ((it & 1023) == 0 && stop()) break;
      const double frac = static_cast<double>(it) / static_cast<double>(iterations);
      const double temperature =
          kStartTemperature * std::pow(kEndTemperature / kStartTemperature, frac);
      const int a = pick(rng);
      const int b = pick(rng);
      if (a == b) continue;
      touched.clear();
      for (auto e : incident_[a]) touched.push_back(e);
      for (auto e : incident_[b])
        if (edges_[e].first != a && edges_[e].second != a) touched.push_back(e);
      std::swap(mapping[a], mapping[b]);
      double delta = 0.0;
      int delta_violations = 0;
      old_cost.clear();
      for (auto e : touched) {
        old_cost.push_back(cost[e]);
        const double c = edge_cost(e);
        delta += c - cost[e];
        delta_violations += (c > 0.0) - (cost[e] > 0.0);
        cost[e] = c;
      }
      if (delta <= 0.0 || unit(rng) < std::exp(-delta / temperature)) {
        violations += delta_violations;
        if (violations < best_violations ||
            (violations == 0 && best_violations == 0 && evaluate(mapping) < evaluate(best))) {
          best_violations = violations;
          best = mapping;
        }
      } else {
        std::swap(mapping[a], mapping[b]);
        for (std::size_t i = 0; i < touched.size(); ++i) cost[touched[i]] = old_cost[i];
      }
    }
    mapping = std::move(best);
    return best_violations == 0;
  }

  int n_;
  std::vector<Pair> edges_;
  std::vector<int> table_;
  std::vector<std::vector<std::size_t>> incident_;
};

}  // namespace

MappingResult optimize_mapping(const ZPolynomial& h, const MappingOptions& options) {
  if (h.degree() > 2)
    throw InvalidSizeError("optimize_mapping needs a polynomial of degree <= 2");
  const int n = h.num_vars();
  MappingResult best;
  best.mapping = identity_permutation(n);
  best.seed = options.seed;
  if (n < 3) {
    best.required_layers = 0;
    best.initially_adjacent = initially_adjacent_terms(h, best.mapping);
    return best;
  }
  const auto edges = quadratic_pairs(h);
  MappingAnnealer annealer(n, edges);
  {
    auto [k, neg_adj] = annealer.evaluate(best.mapping);
    best.required_layers = k;
    best.initially_adjacent = -neg_adj;
  }
  if (edges.empty()) return best;
  for (int r = 0; r < std::max(1, options.restarts); ++r) {
    const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(r);
    std::vector<int> start = identity_permutation(n);
    if (r > 0) {
      std::mt19937_64 shuffle_rng(seed ^ 0x9e3779b97f4a7c15ULL);
      std::shuffle(start.begin(), start.end(), shuffle_rng);
    }
    auto result = annealer.run(std::move(start), seed, options.iterations,
                               options.time_limit_seconds);
    // Strict improvement only, so ties keep the lower seed.
    if (std::tuple(result.required_layers, -result.initially_adjacent) <
        std::tuple(best.required_layers, -best.initially_adjacent)) {
      best = std::move(result);
    }
  }
  return best;
}

}  // namespace quadqaoa
