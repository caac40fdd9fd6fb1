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

#include "quadqaoa/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "quadqaoa/errors.hpp"

namespace quadqaoa {

double approximation_ratio(double energy, double e_min, double e_max) {
  if (!(e_max > e_min)) throw DegenerateSpectrumError("E_max must exceed E_min");
  return (e_max - energy) / (e_max - e_min);
}

double approximation_ratio(const SampleSet& samples, double e_min, double e_max) {
  if (samples.empty()) throw InvalidSizeError("empty sample set");
  return approximation_ratio(samples.mean_energy(), e_min, e_max);
}

std::vector<CdfPoint> energy_cdf(const SampleSet& samples) {
  if (samples.empty()) throw InvalidSizeError("empty sample set");
  std::vector<SampleEntry> sorted = samples.entries();
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.energy < b.energy; });
  std::vector<CdfPoint> out;
  const double total = static_cast<double>(samples.total_shots());
  std::uint64_t seen = 0;
  for (const auto& e : sorted) {
    seen += e.count;
    const double c = static_cast<double>(seen) / total;
    if (!out.empty() && out.back().energy == e.energy)
      out.back().cumulative = c;
    else
      out.push_back({e.energy, c});
  }
  out.back().cumulative = 1.0;
  return out;
}

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw OutOfRangeError("alpha must lie in (0, 1]");
}

struct Weighted {
  double value;
  std::uint64_t count;
};

// Costs sorted ascending, ties by bitstring (entries are already bit-sorted).
std::vector<Weighted> sorted_costs(const SampleSet& samples,
                                   const std::function<double(const SampleEntry&)>& cost) {
  std::vector<Weighted> v;
  v.reserve(samples.entries().size());
  for (const auto& e : samples.entries()) v.push_back({cost(e), e.count});
  std::stable_sort(v.begin(), v.end(),
                   [](const auto& a, const auto& b) { return a.value < b.value; });
  return v;
}

double tail_mean(const std::vector<Weighted>& v, double shots) {
  double remaining = shots;
  double sum = 0.0;
  for (const auto& w : v) {
    if (remaining <= 0.0) break;
    const double take = std::min(remaining, static_cast<double>(w.count));
    sum += take * w.value;
    remaining -= take;
  }
  return sum / shots;
}

double cvar_sorted(const std::vector<Weighted>& v, std::uint64_t total, double alpha,
                   CvarMode mode) {
  const double exact = alpha * static_cast<double>(total);
  // Guard against alpha * total landing a rounding error above an integer.
  const double shots = mode == CvarMode::kCeil ? std::ceil(exact - 1e-9) : exact;
  return tail_mean(v, std::max(shots, mode == CvarMode::kCeil ? 1.0 : shots));
}

}  // namespace

double cvar(const SampleSet& samples, double alpha,
            const std::function<double(const SampleEntry&)>& cost, CvarMode mode) {
  check_alpha(alpha);
  if (samples.empty()) throw InvalidSizeError("empty sample set");
  return cvar_sorted(sorted_costs(samples, cost), samples.total_shots(), alpha, mode);
}

double best_fraction_mean(const SampleSet& samples, double alpha) {
  return cvar(samples, alpha, [](const SampleEntry& e) { return e.energy; });
}

double cvar_ratio(const SampleSet& samples, double alpha, double e_min, double e_max,
                  CvarMode mode) {
  const double e = cvar(samples, alpha, [](const SampleEntry& s) { return s.energy; }, mode);
  return approximation_ratio(e, e_min, e_max);
}

AlphaFit fit_alpha(const SampleSet& samples, double target_r, double e_min, double e_max,
                   double tolerance) {
  if (samples.empty()) throw InvalidSizeError("empty sample set");
  const auto sorted = sorted_costs(samples, [](const SampleEntry& e) { return e.energy; });
  const auto total = samples.total_shots();
  auto ratio = [&](double alpha) {
    return approximation_ratio(cvar_sorted(sorted, total, alpha, CvarMode::kInterpolated), e_min,
                               e_max);
  };
  AlphaFit fit;
  const double r_full = ratio(1.0);
  if (target_r <= r_full) {
    fit.alpha = 1.0;
    fit.residual = r_full - target_r;
    fit.clamped = fit.residual > tolerance;
    return fit;
  }
  // Below one shot the interpolated CVaR equals the best sample.
  const double lo_alpha = 1.0 / static_cast<double>(total);
  const double r_best = ratio(lo_alpha);
  if (target_r >= r_best) {
    fit.alpha = lo_alpha;
    fit.residual = target_r - r_best;
    fit.clamped = fit.residual > tolerance;
    return fit;
  }
  // ratio is nonincreasing in alpha: keep ratio(lo) > target >= ratio(hi).
  double lo = lo_alpha;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (ratio(mid) > target_r)
      lo = mid;
    else
      hi = mid;
  }
  fit.alpha = hi;
  fit.residual = std::abs(ratio(hi) - target_r);
  return fit;
}

double layer_fidelity_proxy(const ErrorTable& table, int n, int parity) {
  if (n < 3) throw InvalidSizeError("layer fidelity needs n >= 3");
  if (parity != 0 && parity != 1) throw OutOfRangeError("parity must be 0 or 1");
  if (static_cast<int>(table.epsilon.size()) != n - 1)
    throw InvalidSizeError("error table must hold n - 1 entries");
  double g = 1.0;
  for (int j = 0; j < (n - 1) / 2; ++j) {
    const double eps = table.epsilon[2 * j + parity];
    if (eps < 0.0) throw OutOfRangeError("error rates must be nonnegative");
    g *= 1.0 + eps;
  }
  return g;
}

AlphaTheoretical alpha_theoretical(int k, int p, const ErrorTable& table, int n) {
  if (k < 0 || p < 1) throw OutOfRangeError("need k >= 0 and p >= 1");
  AlphaTheoretical out;
  out.gamma_even = layer_fidelity_proxy(table, n, 0);
  out.gamma_odd = layer_fidelity_proxy(table, n, 1);
  const int swaps = 3 * ((k + 1) / 2);
  int e0 = p * (2 + swaps);
  int e1 = p * (2 + swaps - 3);
  if (e1 < 0) {
    e1 = 0;
    out.extended = true;
  }
  out.gamma = std::pow(out.gamma_even, e0) * std::pow(out.gamma_odd, e1);
  out.alpha = 1.0 / std::sqrt(out.gamma);
  return out;
}

}  // namespace quadqaoa
