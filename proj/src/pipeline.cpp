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

#include "quadqaoa/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "quadqaoa/errors.hpp"
#include "quadqaoa/mps.hpp"
#include "quadqaoa/quadratizer.hpp"

namespace quadqaoa {

std::string to_string(AnsatzKind kind) {
  switch (kind) {
    case AnsatzKind::kStandard:
      return "standard";
    case AnsatzKind::kClique:
      return "clique";
    case AnsatzKind::kVariational:
      return "variational";
    case AnsatzKind::kTruncated:
      return "truncated";
  }
  return "standard";
}

AnsatzKind ansatz_kind_from_string(const std::string& name) {
  for (auto k : {AnsatzKind::kStandard, AnsatzKind::kClique, AnsatzKind::kVariational,
                 AnsatzKind::kTruncated})
    if (to_string(k) == name) return k;
  throw FormatError("unknown ansatz '" + name + "'");
}

TrainedAnsatz train_ansatz(const ZPolynomial& h_cost, const AnsatzOptions& options,
                           const TrainConfig& config) {
  TrainedAnsatz out;
  out.kind = options.kind;
  switch (options.kind) {
    case AnsatzKind::kStandard:
      out.result = train_standard(EnergyModel(h_cost, h_cost, config), options.p, config);
      break;
    case AnsatzKind::kClique:
      out.result = train_standard(
          EnergyModel(clique_expand(h_cost).to_polynomial(), h_cost, config), options.p, config);
      break;
    case AnsatzKind::kVariational:
      out.result = train_joint_quadratization(variational_template(h_cost.num_vars()), h_cost,
                                              options.p, config);
      break;
    case AnsatzKind::kTruncated: {
      if (h_cost.degree() > 2)
        throw InvalidSizeError("the truncated Ansatz needs a quadratic problem");
      out.initial_mapping = options.initial_mapping.empty()
                                ? optimize_mapping(h_cost, options.mapping).mapping
                                : options.initial_mapping;
      out.k = options.k >= 0 ? options.k : required_layers(h_cost, out.initial_mapping);
      out.result = train_truncated(h_cost, out.initial_mapping, out.k, options.p, config);
      break;
    }
  }
  return out;
}

ZPolynomial phase_polynomial(const ZPolynomial& h_cost, const TrainedAnsatz& ansatz) {
  switch (ansatz.kind) {
    case AnsatzKind::kStandard:
      return h_cost;
    case AnsatzKind::kClique:
      return clique_expand(h_cost).to_polynomial();
    case AnsatzKind::kVariational:
      return variational_template(h_cost.num_vars()).materialize(ansatz.result.theta);
    case AnsatzKind::kTruncated:
      return reachable_terms(h_cost, ansatz.initial_mapping, ansatz.k).terms;
  }
  return h_cost;
}

QaoaCircuit ansatz_circuit(const ZPolynomial& h_cost, const TrainedAnsatz& ansatz) {
  if (ansatz.kind == AnsatzKind::kTruncated) {
    const auto schedule = build_schedule(h_cost.num_vars(), ansatz.k, ansatz.initial_mapping);
    QaoaCircuit c = synthesize_line(h_cost, ansatz.result.angles, schedule);
    c.metadata().source = to_string(ansatz.kind);
    return c;
  }
  QaoaCircuit c = synthesize_abstract(phase_polynomial(h_cost, ansatz), ansatz.result.angles);
  c.metadata().source = to_string(ansatz.kind);
  return c;
}

SampleSet sample_ansatz(const ZPolynomial& h_cost, const TrainedAnsatz& ansatz,
                        const SamplingOptions& options) {
  SampleSet samples;
  if (options.noise.lambda > 0.0) {
    samples = simulate_noisy(ansatz_circuit(h_cost, ansatz), options.noise);
  } else if (options.backend == Backend::kMps) {
    const QaoaCircuit c = ansatz_circuit(h_cost, ansatz);
    MpsState state = apply_circuit(c, options.bond_dimension);
    samples = state.sample(options.shots, options.seed)
                  .remapped([&](Bitstring y) { return c.to_logical(y); });
  } else {
    const auto phase = phase_polynomial(h_cost, ansatz);
    const StateVector state =
        simulate_diagonal(phase.diagonal(), phase.num_vars(), ansatz.result.angles);
    samples = sample(state, options.shots, options.seed);
  }
  samples.attach_energies(h_cost);
  return samples;
}

Spectrum heuristic_spectrum(const ZPolynomial& h, int restarts, std::uint64_t seed) {
  const int n = h.num_vars();
  if (restarts < 1) throw OutOfRangeError("need at least one restart");
  const auto terms = masked_terms(h);
  std::vector<std::vector<std::size_t>> touching(n);
  for (std::size_t t = 0; t < terms.size(); ++t)
    for (int i = 0; i < n; ++i)
      if ((terms[t].mask >> i) & 1U) touching[i].push_back(t);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Bitstring> bits;
  const Bitstring full = n == 64 ? ~Bitstring{0} : (Bitstring{1} << n) - 1;

  // Single-flip descent of sign * energy; returns the local optimum.
  auto descend = [&](Bitstring x, double sign) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i < n; ++i) {
        double delta = 0.0;  // energy change when flipping bit i
        for (auto t : touching[i]) {
          const double s = (std::popcount(x & terms[t].mask) & 1) ? -1.0 : 1.0;
          delta -= 2.0 * terms[t].coeff * s;
        }
        if (sign * delta < -1e-12) {
          x ^= Bitstring{1} << i;
          moved = true;
        }
      }
    }
    return x;
  };

  Spectrum s;
  s.exact = false;
  bool first = true;
  for (int r = 0; r < restarts; ++r) {
    const Bitstring lo = descend(bits(rng) & full, 1.0);
    const Bitstring hi = descend(bits(rng) & full, -1.0);
    const double elo = evaluate_masked(terms, h.constant(), lo);
    const double ehi = evaluate_masked(terms, h.constant(), hi);
    if (first || elo < s.e_min - 1e-12) {
      s.e_min = elo;
      s.argmin = {lo};
    } else if (std::abs(elo - s.e_min) <= 1e-12 &&
               std::find(s.argmin.begin(), s.argmin.end(), lo) == s.argmin.end()) {
      s.argmin.push_back(lo);
    }
    if (first || ehi > s.e_max) s.e_max = ehi;
    first = false;
  }
  std::sort(s.argmin.begin(), s.argmin.end());
  return s;
}

Spectrum problem_spectrum(const ZPolynomial& h, std::uint64_t seed, int exact_cap) {
  if (h.num_vars() <= exact_cap) return brute_force_spectrum(h, exact_cap);
  return heuristic_spectrum(h, 200, seed);
}

}  // namespace quadqaoa
