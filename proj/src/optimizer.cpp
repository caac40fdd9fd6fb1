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

#include "quadqaoa/optimizer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "quadqaoa/errors.hpp"

namespace quadqaoa {

namespace {

class Evaluator {
 public:
  Evaluator(const Objective& f, const OptimizerOptions& options, OptimizerResult& result)
      : f_(f), options_(options), result_(result) {}

  bool exhausted() const { return result_.evaluations >= options_.max_evaluations; }

  double operator()(const Eigen::VectorXd& x) {
    const double v = f_(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
    ++result_.evaluations;
    if (result_.trace.empty() || v < result_.value) {
      result_.value = v;
      result_.x.assign(x.data(), x.data() + x.size());
    }
    result_.trace.push_back(result_.value);
    return v;
  }

  Eigen::VectorXd clip(Eigen::VectorXd x) const {
    if (!options_.bounds) return x;
    for (Eigen::Index i = 0; i < x.size(); ++i)
      x(i) = std::clamp(x(i), options_.bounds->lower[i], options_.bounds->upper[i]);
    return x;
  }

 private:
  const Objective& f_;
  const OptimizerOptions& options_;
  OptimizerResult& result_;
};

}  // namespace

OptimizerResult minimize_linear_trust_region(const Objective& f, std::vector<double> x0,
                                             const OptimizerOptions& options) {
  const auto n = static_cast<Eigen::Index>(x0.size());
  if (options.rho_begin <= 0.0 || options.rho_end <= 0.0 || options.rho_end > options.rho_begin)
    throw OutOfRangeError("trust-region radii must satisfy 0 < rho_end <= rho_begin");
  if (options.bounds && (options.bounds->lower.size() != x0.size() ||
                         options.bounds->upper.size() != x0.size()))
    throw InvalidSizeError("bounds must match the parameter count");
  OptimizerResult result;
  Evaluator eval(f, options, result);
  Eigen::VectorXd base = eval.clip(Eigen::Map<Eigen::VectorXd>(x0.data(), n));
  if (options.max_evaluations == 0) throw OutOfRangeError("at least one evaluation is needed");
  double f_base = eval(base);
  if (n == 0) {
    result.converged = true;
    return result;
  }

  double rho = options.rho_begin;
  // Vertex j of the simplex is base + offsets.col(j).
  Eigen::MatrixXd offsets(n, n);
  Eigen::VectorXd values(n);
  for (Eigen::Index j = 0; j < n && !eval.exhausted(); ++j) {
    Eigen::VectorXd v = base;
    v(j) += rho;
    if (options.bounds && v(j) > options.bounds->upper[j]) v(j) = base(j) - rho;
    v = eval.clip(v);
    offsets.col(j) = v - base;
    values(j) = eval(v);
  }
  if (eval.exhausted()) return result;

  auto recenter = [&] {
    Eigen::Index best;
    const double low = values.minCoeff(&best);
    if (low < f_base) {
      const Eigen::VectorXd shift = offsets.col(best);
      base += shift;
      offsets.colwise() -= shift;
      offsets.col(best) = -shift;
      std::swap(values(best), f_base);
    }
  };

  // Replaces vertex j by a point at half the radius along the direction
  // orthogonal to the face spanned by the other vertices.
  auto repair = [&](Eigen::Index j, Eigen::VectorXd dir) {
    if (dir.norm() == 0.0) dir = Eigen::VectorXd::Unit(n, j);
    dir *= 0.5 * rho / dir.norm();
    Eigen::VectorXd candidate = eval.clip(base + dir);
    if ((candidate - base).norm() < 0.25 * rho) candidate = eval.clip(base - dir);
    offsets.col(j) = candidate - base;
    values(j) = eval(candidate);
  };

  while (!eval.exhausted()) {
    recenter();
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(offsets.transpose());
    if (!(lu.rcond() > 1e-12)) {
      const Eigen::MatrixXd kernel = Eigen::FullPivLU<Eigen::MatrixXd>(offsets.transpose()).kernel();
      Eigen::Index shortest;
      offsets.colwise().norm().minCoeff(&shortest);
      repair(shortest, kernel.col(0));
      continue;
    }
    // Column j of the inverse is orthogonal to every vertex but j; the
    // reciprocal of its norm is the distance of vertex j from that face.
    const Eigen::MatrixXd inverse = lu.inverse();
    const Eigen::VectorXd diffs = values.array() - f_base;
    const Eigen::VectorXd gradient = inverse * diffs;
    const double gnorm = gradient.norm();
    if (gnorm > 0.0 && std::isfinite(gnorm)) {
      const Eigen::VectorXd trial = eval.clip(base - (rho / gnorm) * gradient);
      const Eigen::VectorXd step = trial - base;
      if (step.norm() > 0.1 * rho) {
        const double f_trial = eval(trial);
        // Swap out the vertex whose removal best preserves the volume.
        const Eigen::VectorXd weights = inverse.transpose() * step;
        Eigen::Index slot;
        weights.cwiseAbs().maxCoeff(&slot);
        if (f_trial < f_base) {
          // Expand after a step that realised most of the predicted decrease.
          if (f_base - f_trial > 0.9 * rho * gnorm) rho = std::min(2.0 * rho, options.rho_begin);
          offsets.col(slot) = step;
          values(slot) = f_trial;
          continue;
        }
        if (offsets.col(slot).norm() > rho) {
          offsets.col(slot) = step;
          values(slot) = f_trial;
          continue;
        }
      }
    }
    // The step failed: fix the geometry if needed, otherwise shrink.
    if (eval.exhausted()) break;
    Eigen::Index far;
    const double far_dist = offsets.colwise().norm().maxCoeff(&far);
    if (far_dist > 2.1 * rho) {
      repair(far, inverse.col(far));
      continue;
    }
    Eigen::Index flat;
    const double flat_dist = 1.0 / inverse.colwise().norm().maxCoeff(&flat);
    if (flat_dist < 0.25 * rho) {
      repair(flat, inverse.col(flat));
      continue;
    }
    if (rho <= options.rho_end) {
      result.converged = true;
      break;
    }
    rho = std::max(0.5 * rho, options.rho_end);
  }
  return result;
}

}  // namespace quadqaoa
