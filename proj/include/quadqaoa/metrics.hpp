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
#include <functional>
#include <vector>

#include "quadqaoa/sample_set.hpp"
#include "quadqaoa/zpoly.hpp"

namespace quadqaoa {

/// (E_max - E) / (E_max - E_min); throws DegenerateSpectrumError when the
/// bounds coincide.
double approximation_ratio(double energy, double e_min, double e_max);
/// Shot-weighted mean ratio; uses the energies stored in the set.
double approximation_ratio(const SampleSet& samples, double e_min, double e_max);

struct CdfPoint {
  double energy = 0.0;
  double cumulative = 0.0;
};

/// Step function over the distinct sampled energies, ending at 1.
std::vector<CdfPoint> energy_cdf(const SampleSet& samples);

/// Mean energy of the ceil(alpha * shots) lowest-energy shots.
double best_fraction_mean(const SampleSet& samples, double alpha);

enum class CvarMode {
  /// ceil(alpha * shots) best shots, the marginal one fully weighted.
  kCeil,
  /// alpha * shots best shots with the marginal one fractionally weighted,
  /// continuous and monotone in alpha.
  kInterpolated,
};

/// Mean cost over the best (lowest-cost) alpha fraction of shots. Ties are
/// ordered by bitstring value.
double cvar(const SampleSet& samples, double alpha,
            const std::function<double(const SampleEntry&)>& cost,
            CvarMode mode = CvarMode::kCeil);
/// CVaR of the approximation ratio: mean r over the best alpha fraction.
double cvar_ratio(const SampleSet& samples, double alpha, double e_min, double e_max,
                  CvarMode mode = CvarMode::kCeil);

struct AlphaFit {
  double alpha = 1.0;
  double residual = 0.0;
  /// True when the target lies outside the reachable CVaR range and the
  /// boundary alpha is returned.
  bool clamped = false;
};

/// Alpha whose interpolated CVaR ratio equals target_r, found by bisection.
AlphaFit fit_alpha(const SampleSet& samples, double target_r, double e_min, double e_max,
                   double tolerance = 1e-12);

struct ErrorTable {
  /// eps[j] is the error rate of the entangling gate on (j, j + 1).
  std::vector<double> epsilon;
  double mean_gate_time = 0.0;
};

struct AlphaTheoretical {
  double alpha = 1.0;
  double gamma = 1.0;
  double gamma_even = 1.0;
  double gamma_odd = 1.0;
  /// Set when an exponent was negative (k = 0) and clamped at zero.
  bool extended = false;
};

/// Layer-fidelity proxy gamma_i = prod_{j=0}^{floor((n-1)/2)-1} (1 + eps_{2j+i}).
double layer_fidelity_proxy(const ErrorTable& table, int n, int parity);

/// alpha_th = 1 / sqrt(gamma) with
/// gamma = gamma_0^{p(2 + 3 ceil(k/2))} gamma_1^{p(2 + 3 ceil(k/2) - 3)}.
AlphaTheoretical alpha_theoretical(int k, int p, const ErrorTable& table, int n);

}  // namespace quadqaoa
