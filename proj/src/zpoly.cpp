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

#include "quadqaoa/zpoly.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "quadqaoa/errors.hpp"

namespace quadqaoa {

ZPolynomial::ZPolynomial(int num_vars, double constant)
    : num_vars_(num_vars), constant_(constant) {
  if (num_vars < 0 || num_vars > kMaxVariables)
    throw InvalidSizeError("variable count must lie in [0, 64], got " +
                           std::to_string(num_vars));
}

void ZPolynomial::add_term(Term indices, double coeff) {
  for (int i : indices)
    if (i < 0 || i >= num_vars_)
      throw FormatError("term index " + std::to_string(i) +
                        " out of range for " + std::to_string(num_vars_) +
                        " variables");
  std::sort(indices.begin(), indices.end());
  // Z_i Z_i = I: drop index pairs.
  Term reduced;
  reduced.reserve(indices.size());
  for (int i : indices) {
    if (!reduced.empty() && reduced.back() == i)
      reduced.pop_back();
    else
      reduced.push_back(i);
  }
  if (reduced.empty()) {
    constant_ += coeff;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(std::move(reduced), 0.0);
  it->second += coeff;
  if (std::abs(it->second) < kCoefficientFloor) terms_.erase(it);
}

double ZPolynomial::coefficient(const Term& indices) const {
  auto it = terms_.find(indices);
  return it == terms_.end() ? 0.0 : it->second;
}

int ZPolynomial::degree() const {
  int d = 0;
  for (const auto& [q, w] : terms_) d = std::max<int>(d, q.size());
  return d;
}

std::size_t ZPolynomial::count_terms_of_degree(int k) const {
  return std::count_if(terms_.begin(), terms_.end(), [k](const auto& kv) {
    return static_cast<int>(kv.first.size()) == k;
  });
}

double ZPolynomial::energy(Bitstring x) const {
  double e = constant_;
  for (const auto& [q, w] : terms_) {
    int parity = 0;
    for (int i : q) parity ^= static_cast<int>((x >> i) & 1U);
    e += parity ? -w : w;
  }
  return e;
}

double ZPolynomial::energy(std::span<const std::uint8_t> bits) const {
  if (static_cast<int>(bits.size()) != num_vars_)
    throw InvalidSizeError("bitstring length " + std::to_string(bits.size()) +
                           " does not match " + std::to_string(num_vars_) +
                           " variables");
  return energy(bits_to_bitstring(bits));
}

std::vector<double> ZPolynomial::diagonal() const {
  if (num_vars_ > 30)
    throw CapacityError("diagonal() needs 2^n doubles; n=" +
                        std::to_string(num_vars_) + " is too large");
  const std::size_t dim = std::size_t{1} << num_vars_;
  std::vector<double> a(dim, 0.0);
  a[0] = constant_;
  for (const auto& [q, w] : terms_) {
    Bitstring m = 0;
    for (int i : q) m |= Bitstring{1} << i;
    a[m] += w;
  }
  for (std::size_t h = 1; h < dim; h <<= 1) {
    for (std::size_t i = 0; i < dim; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double u = a[j];
        const double v = a[j + h];
        a[j] = u + v;
        a[j + h] = u - v;
      }
    }
  }
  return a;
}

ZPolynomial ZPolynomial::scaled(double factor) const {
  ZPolynomial out(num_vars_, constant_ * factor);
  for (const auto& [q, w] : terms_) out.add_term(q, w * factor);
  return out;
}

std::vector<MaskedTerm> masked_terms(const ZPolynomial& h) {
  std::vector<MaskedTerm> out;
  out.reserve(h.size());
  for (const auto& [q, w] : h.terms()) {
    Bitstring m = 0;
    for (int i : q) m |= Bitstring{1} << i;
    out.push_back({m, w});
  }
  return out;
}

double evaluate_masked(std::span<const MaskedTerm> terms, double constant,
                       Bitstring x) {
  double e = constant;
  for (const auto& t : terms) e += (std::popcount(x & t.mask) & 1) ? -t.coeff : t.coeff;
  return e;
}

Bitstring bits_to_bitstring(std::span<const std::uint8_t> bits) {
  if (bits.size() > kMaxVariables)
    throw InvalidSizeError("at most 64 bits are supported");
  Bitstring x = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw FormatError("bits must be 0 or 1");
    if (bits[i]) x |= Bitstring{1} << i;
  }
  return x;
}

std::string bitstring_to_string(Bitstring x, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if ((x >> i) & 1U) s[i] = '1';
  return s;
}

Bitstring string_to_bitstring(const std::string& s) {
  if (s.size() > kMaxVariables)
    throw InvalidSizeError("at most 64 bits are supported");
  Bitstring x = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      x |= Bitstring{1} << i;
    else if (s[i] != '0')
      throw FormatError("bitstring may only contain '0' and '1': " + s);
  }
  return x;
}

std::vector<int> bitstring_to_spins(Bitstring x, int n) {
  std::vector<int> z(n);
  for (int i = 0; i < n; ++i) z[i] = ((x >> i) & 1U) ? -1 : 1;
  return z;
}

Hypergraph::Hypergraph(const ZPolynomial& h) : num_nodes_(h.num_vars()) {
  for (const auto& [q, w] : h.terms())
    if (q.size() >= 2) edges_.push_back({q, w});
}

Spectrum brute_force_spectrum(const ZPolynomial& h, int cap) {
  if (h.num_vars() > cap)
    throw CapacityError("brute force limited to " + std::to_string(cap) +
                        " variables, got " + std::to_string(h.num_vars()));
  const auto diag = h.diagonal();
  Spectrum s;
  s.e_min = *std::min_element(diag.begin(), diag.end());
  s.e_max = *std::max_element(diag.begin(), diag.end());
  const double tol = 1e-9 * std::max(1.0, std::abs(s.e_min));
  for (std::size_t x = 0; x < diag.size(); ++x)
    if (diag[x] - s.e_min <= tol) s.argmin.push_back(x);
  s.exact = true;
  return s;
}

}  // namespace quadqaoa
