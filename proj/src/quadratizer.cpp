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

#include "quadqaoa/quadratizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quadqaoa/errors.hpp"

namespace quadqaoa {

namespace {

template <typename F>
void for_each_pair(const Term& nodes, F&& f) {
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b) f(Pair{nodes[a], nodes[b]});
}

double total_abs_weight(const Hypergraph& g) {
  double total = 0.0;
  for (const auto& e : g.hyperedges()) total += std::abs(e.weight);
  return total;
}

}  // namespace

ZPolynomial CliqueExpansion::to_polynomial() const {
  ZPolynomial h(source.num_nodes(), constant);
  for (const auto& [i, w] : linear) h.add_term({i}, w);
  for (const auto& [p, e] : edges) h.add_term({p.first, p.second}, e.weight);
  return h;
}

CliqueExpansion clique_expand(const ZPolynomial& h) {
  CliqueExpansion ce{Hypergraph(h), {}, 0.0, {}, h.constant()};
  if (ce.source.hyperedges().empty())
    throw InvalidSizeError("clique expansion needs at least one term of degree >= 2");
  for (const auto& [q, w] : h.terms())
    if (q.size() == 1) ce.linear[q[0]] = w;

  for (const auto& e : ce.source.hyperedges()) {
    for_each_pair(e.nodes, [&](Pair p) {
      auto& edge = ce.edges[p];
      edge.abs_weight_sum += std::abs(e.weight);
      edge.weighted_target_sum += std::abs(e.weight) * e.weight;
      if (e.nodes.size() == 2)
        edge.direct = 1;
      else
        ++edge.higher_order_count;
    });
  }
  std::map<Pair, double> weights;
  for (auto& [p, edge] : ce.edges) {
    if (edge.abs_weight_sum == 0.0)
      throw DegenerateWeightError("pair (" + std::to_string(p.first) + "," +
                                  std::to_string(p.second) +
                                  ") has zero total hyperedge weight");
    edge.weight = edge.weighted_target_sum / edge.abs_weight_sum;
    weights[p] = edge.weight;
  }
  ce.objective_value = clique_objective(ce.source, weights);
  return ce;
}

double clique_objective(const Hypergraph& source,
                        const std::map<Pair, double>& pair_weights) {
  const double norm = total_abs_weight(source);
  if (norm == 0.0) return 0.0;
  double f = 0.0;
  for (const auto& e : source.hyperedges()) {
    const double alpha = std::abs(e.weight) / norm;
    for_each_pair(e.nodes, [&](Pair p) {
      auto it = pair_weights.find(p);
      const double w = it == pair_weights.end() ? 0.0 : it->second;
      f += alpha * (w - e.weight) * (w - e.weight);
    });
  }
  return f;
}

CliqueVerification verify_clique_weights(const CliqueExpansion& ce) {
  const double norm = total_abs_weight(ce.source);
  // Collect, per pair, the (alpha, target) contributions of the objective.
  std::map<Pair, std::vector<std::pair<double, double>>> pieces;
  for (const auto& e : ce.source.hyperedges()) {
    const double alpha = std::abs(e.weight) / norm;
    for_each_pair(e.nodes, [&](Pair p) { pieces[p].push_back({alpha, e.weight}); });
  }

  CliqueVerification report;
  std::map<Pair, double> closed_form;
  for (const auto& [p, contributions] : pieces) {
    auto derivative = [&](double w) {
      double d = 0.0;
      for (const auto& [alpha, target] : contributions) d += 2.0 * alpha * (w - target);
      return d;
    };
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& c : contributions) {
      lo = std::min(lo, c.second);
      hi = std::max(hi, c.second);
    }
    for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (derivative(mid) > 0.0)
        hi = mid;
      else
        lo = mid;
    }
    const double numeric = 0.5 * (lo + hi);
    auto it = ce.edges.find(p);
    const double cf = it == ce.edges.end() ? std::numeric_limits<double>::quiet_NaN()
                                           : it->second.weight;
    closed_form[p] = cf;
    report.max_deviation = std::max(report.max_deviation, std::abs(cf - numeric));
    ++report.edges_checked;
  }
  report.objective_value = clique_objective(ce.source, closed_form);
  return report;
}

VariationalQuadratic::VariationalQuadratic(int num_vars) : n_(num_vars) {
  if (num_vars < 2)
    throw InvalidSizeError("variational template needs n >= 2");
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) pairs_.push_back({i, j});
}

std::size_t VariationalQuadratic::pair_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n_ || i == j) throw OutOfRangeError("invalid pair index");
  // Row-major offset of (i, j) in the upper triangle.
  return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

ZPolynomial VariationalQuadratic::materialize(std::span<const double> theta) const {
  if (theta.size() != num_parameters())
    throw InvalidSizeError("expected " + std::to_string(num_parameters()) +
                           " parameters, got " + std::to_string(theta.size()));
  ZPolynomial h(n_);
  for (std::size_t k = 0; k < pairs_.size(); ++k)
    h.add_term({pairs_[k].first, pairs_[k].second}, theta[k]);
  for (int i = 0; i < n_; ++i) h.add_term({i}, theta[linear_index(i)]);
  return h;
}

std::vector<double> VariationalQuadratic::parameters_from(const ZPolynomial& quadratic) const {
  if (quadratic.num_vars() != n_ || quadratic.degree() > 2)
    throw InvalidSizeError("parameters_from needs a quadratic polynomial on " +
                           std::to_string(n_) + " variables");
  std::vector<double> theta(num_parameters(), 0.0);
  for (const auto& [q, w] : quadratic.terms()) {
    if (q.size() == 2)
      theta[pair_index(q[0], q[1])] = w;
    else
      theta[linear_index(q[0])] = w;
  }
  return theta;
}

VariationalQuadratic variational_template(int n) { return VariationalQuadratic(n); }

}  // namespace quadqaoa
