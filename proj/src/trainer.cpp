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

#include "quadqaoa/trainer.hpp"

#include <algorithm>
#include <random>

#include "quadqaoa/errors.hpp"
#include "quadqaoa/mps.hpp"
#include "quadqaoa/statevector.hpp"

namespace quadqaoa {

std::string to_string(Backend b) { return b == Backend::kMps ? "mps" : "statevector"; }

Backend backend_from_string(const std::string& name) {
  if (name == "statevector") return Backend::kStatevector;
  if (name == "mps") return Backend::kMps;
  throw FormatError("unknown backend '" + name + "'");
}

void validate(const TrainConfig& config) {
  if (config.grid_points < 1) throw OutOfRangeError("grid needs at least one point");
  if (!(config.grid_low <= config.grid_high)) throw OutOfRangeError("grid bounds are reversed");
  if (config.random_restarts < 0) throw OutOfRangeError("restarts must be nonnegative");
  if (config.refiner.max_evaluations == 0 || config.joint_max_evaluations == 0)
    throw OutOfRangeError("evaluation budgets must be positive");
  if (config.bond_dimension < 1) throw OutOfRangeError("bond dimension must be positive");
}

namespace {

std::vector<double> pack(const QaoaAngles& a) {
  std::vector<double> x(a.beta);
  x.insert(x.end(), a.gamma.begin(), a.gamma.end());
  return x;
}

QaoaAngles unpack(std::span<const double> x) {
  const std::size_t p = x.size() / 2;
  return {{x.begin(), x.begin() + p}, {x.begin() + p, x.end()}};
}

QaoaAngles pad_transition(const QaoaAngles& a) {
  QaoaAngles out = a;
  out.beta.push_back(0.0);
  out.gamma.push_back(0.0);
  return out;
}

void append_trace(std::vector<double>& trace, const std::vector<double>& more) {
  for (double v : more) trace.push_back(trace.empty() ? v : std::min(trace.back(), v));
}

OptimizerOptions refiner_options(const TrainConfig& config, std::size_t budget) {
  OptimizerOptions o = config.refiner;
  o.max_evaluations = budget;
  return o;
}

}  // namespace

EnergyModel::EnergyModel(ZPolynomial h_ansatz, ZPolynomial h_cost, const TrainConfig& config,
                         std::optional<SwapSchedule> schedule)
    : ansatz_(std::move(h_ansatz)), cost_(std::move(h_cost)), schedule_(std::move(schedule)),
      backend_(config.backend), chi_(config.bond_dimension) {
  validate(config);
  if (ansatz_.num_vars() != cost_.num_vars())
    throw InvalidSizeError("Ansatz and cost polynomials differ in width");
  if (schedule_) {
    if (schedule_->num_qubits() != cost_.num_vars())
      throw InvalidSizeError("schedule width does not match the polynomial");
    ansatz_ = reachable_terms(ansatz_, schedule_->initial_mapping(), schedule_->num_layers()).terms;
  }
  if (backend_ == Backend::kMps) {
    if (!schedule_) throw RoutingError("the MPS backend needs a line schedule");
    return;
  }
  if (cost_.num_vars() > config.statevector_cap)
    throw CapacityError("statevector backend limited to " +
                        std::to_string(config.statevector_cap) + " qubits");
  ansatz_diag_ = ansatz_.diagonal();
  cost_diag_ = cost_.diagonal();
}

QaoaCircuit EnergyModel::circuit(const QaoaAngles& angles) const {
  if (!schedule_) return synthesize_abstract(ansatz_, angles);
  return synthesize_line(ansatz_, angles, *schedule_);
}

double EnergyModel::operator()(const QaoaAngles& angles) const {
  if (backend_ == Backend::kMps) {
    const QaoaCircuit c = circuit(angles);
    const MpsState state = apply_circuit(c, chi_);
    return state.energy(cost_, c.final_mapping());
  }
  const StateVector state = simulate_diagonal(ansatz_diag_, ansatz_.num_vars(), angles);
  return expectation(state, cost_diag_);
}

TrainResult train_depth1(const ZPolynomial& h_ansatz, const ZPolynomial& h_cost,
                         const TrainConfig& config) {
  return train_depth1(EnergyModel(h_ansatz, h_cost, config), config);
}

TrainResult train_depth1(const EnergyModel& model, const TrainConfig& config) {
  validate(config);
  TrainResult result;
  const int g = config.grid_points;
  const double step = g > 1 ? (config.grid_high - config.grid_low) / (g - 1) : 0.0;
  QaoaAngles best{{config.grid_low}, {config.grid_low}};
  double best_energy = 0.0;
  bool first = true;
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      const QaoaAngles a{{config.grid_low + i * step}, {config.grid_low + j * step}};
      const double e = model(a);
      append_trace(result.trace, {e});
      if (first || e < best_energy) {
        best_energy = e;
        best = a;
        first = false;
      }
    }
  }
  result.grid_energy = best_energy;
  const auto refined = minimize_linear_trust_region(
      [&](std::span<const double> x) { return model(unpack(x)); }, pack(best),
      refiner_options(config, config.refiner.max_evaluations));
  append_trace(result.trace, refined.trace);
  result.evaluations = result.trace.size();
  if (refined.value < best_energy) {
    result.angles = unpack(refined.x);
    result.energy = refined.value;
  } else {
    result.angles = best;
    result.energy = best_energy;
  }
  return result;
}

TrainResult train_depth_p_transition(const ZPolynomial& h_ansatz, const ZPolynomial& h_cost,
                                     const TrainResult& previous, const TrainConfig& config) {
  return train_depth_p_transition(EnergyModel(h_ansatz, h_cost, config), previous, config);
}

TrainResult train_depth_p_transition(const EnergyModel& model, const TrainResult& previous,
                                     const TrainConfig& config) {
  validate(config);
  TrainResult result;
  result.trace = previous.trace;
  result.grid_energy = previous.grid_energy;
  const QaoaAngles start = pad_transition(previous.angles);
  const auto refined = minimize_linear_trust_region(
      [&](std::span<const double> x) { return model(unpack(x)); }, pack(start),
      refiner_options(config, config.refiner.max_evaluations));
  // The first evaluation is the padded start, which equals the parent energy.
  append_trace(result.trace, refined.trace);
  result.evaluations = previous.evaluations + refined.evaluations;
  result.angles = unpack(refined.x);
  result.energy = refined.value;
  return result;
}

TrainResult train_standard(const EnergyModel& model, int p, const TrainConfig& config) {
  if (p < 1) throw OutOfRangeError("QAOA depth must be at least 1");
  TrainResult r = train_depth1(model, config);
  for (int d = 2; d <= p; ++d) r = train_depth_p_transition(model, r, config);
  return r;
}

namespace {

// Joint objective over [theta..., beta..., gamma...].
class JointObjective {
 public:
  JointObjective(const VariationalQuadratic& tpl, const ZPolynomial& cost)
      : tpl_(tpl), cost_diag_(cost.diagonal()) {}

  double operator()(std::span<const double> x) const {
    const std::size_t m = tpl_.num_parameters();
    const auto diag = tpl_.materialize(x.first(m)).diagonal();
    const StateVector s = simulate_diagonal(diag, tpl_.num_vars(), unpack(x.subspan(m)));
    return expectation(s, cost_diag_);
  }

 private:
  const VariationalQuadratic& tpl_;
  std::vector<double> cost_diag_;
};

}  // namespace

TrainResult train_joint_quadratization(const VariationalQuadratic& ansatz_template,
                                       const ZPolynomial& h_cost, int p,
                                       const TrainConfig& config) {
  validate(config);
  if (p < 1) throw OutOfRangeError("QAOA depth must be at least 1");
  const int n = ansatz_template.num_vars();
  if (h_cost.num_vars() != n) throw InvalidSizeError("template width does not match h_cost");
  if (n > config.statevector_cap)
    throw CapacityError("joint training runs on the statevector backend only");
  const std::size_t m = ansatz_template.num_parameters();

  std::vector<std::vector<double>> starts;
  if (h_cost.degree() >= 3) {
    starts.push_back(ansatz_template.parameters_from(clique_expand(h_cost).to_polynomial()));
  } else {
    starts.push_back(ansatz_template.parameters_from(h_cost));
  }
  for (int r = 0; r < config.random_restarts; ++r) {
    std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(r));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<double> theta(m);
    for (auto& t : theta) t = unit(rng);
    starts.push_back(std::move(theta));
  }

  const JointObjective objective(ansatz_template, h_cost);
  auto options = refiner_options(config, config.joint_max_evaluations);
  options.rho_begin = std::max(config.joint_rho_begin, options.rho_end);
  TrainResult best;
  for (std::size_t r = 0; r < starts.size(); ++r) {
    const EnergyModel grid_model(ansatz_template.materialize(starts[r]), h_cost, config);
    TrainResult run = train_depth1(grid_model, config);
    std::vector<double> x = starts[r];
    for (int d = 1; d <= p; ++d) {
      if (d > 1) run.angles = pad_transition(run.angles);
      std::vector<double> x0(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m));
      const auto packed = pack(run.angles);
      x0.insert(x0.end(), packed.begin(), packed.end());
      const auto refined = minimize_linear_trust_region(objective, x0, options);
      append_trace(run.trace, refined.trace);
      run.evaluations += refined.evaluations;
      x = refined.x;
      run.angles = unpack(std::span<const double>(x).subspan(m));
      run.energy = refined.value;
    }
    run.theta.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m));
    run.restart = static_cast<int>(r);
    if (r == 0 || run.energy < best.energy) best = std::move(run);
  }
  return best;
}

namespace {

TrainResult refine_from(const EnergyModel& model, const QaoaAngles& start,
                        const TrainConfig& config) {
  TrainResult r;
  const auto refined = minimize_linear_trust_region(
      [&](std::span<const double> x) { return model(unpack(x)); }, pack(start),
      refiner_options(config, config.refiner.max_evaluations));
  r.trace = refined.trace;
  r.evaluations = refined.evaluations;
  r.angles = unpack(refined.x);
  r.energy = refined.value;
  r.grid_energy = refined.trace.front();
  return r;
}

}  // namespace

TrainResult train_truncated(const ZPolynomial& h_cost, std::span<const int> initial_mapping,
                            int k, int p, const TrainConfig& config,
                            const TrainResult* warm_start) {
  if (h_cost.degree() > 2) throw InvalidSizeError("truncated Ansatz needs a quadratic cost");
  const int n = h_cost.num_vars();
  const EnergyModel model(h_cost, h_cost, config,
                          build_schedule(n, k, {initial_mapping.begin(), initial_mapping.end()}));
  TrainResult fresh = train_standard(model, p, config);
  if (warm_start && warm_start->angles.depth() == static_cast<std::size_t>(p)) {
    TrainResult warm = refine_from(model, warm_start->angles, config);
    if (warm.energy < fresh.energy) return warm;
  }
  return fresh;
}

TruncatedSweep train_truncated_sweep(const ZPolynomial& h_cost,
                                     std::span<const int> initial_mapping, int k_max,
                                     int p_max, const TrainConfig& config) {
  if (h_cost.degree() > 2) throw InvalidSizeError("truncated Ansatz needs a quadratic cost");
  if (p_max < 1) throw OutOfRangeError("QAOA depth must be at least 1");
  const int n = h_cost.num_vars();
  if (k_max < 0 || k_max > max_swap_layers(n)) throw OutOfRangeError("k_max out of range");
  TruncatedSweep sweep;
  for (int k = 0; k <= k_max; ++k) {
    const EnergyModel model(
        h_cost, h_cost, config,
        build_schedule(n, k, {initial_mapping.begin(), initial_mapping.end()}));
    std::vector<TrainResult> row;
    for (int p = 1; p <= p_max; ++p) {
      TrainResult r = p == 1 ? train_depth1(model, config)
                             : train_depth_p_transition(model, row.back(), config);
      if (k > 0) {
        TrainResult warm = refine_from(model, sweep.results[k - 1][p - 1].angles, config);
        if (warm.energy < r.energy) r = std::move(warm);
      }
      row.push_back(std::move(r));
    }
    sweep.results.push_back(std::move(row));
  }
  return sweep;
}

}  // namespace quadqaoa
