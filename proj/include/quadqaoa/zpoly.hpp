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
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace quadqaoa {

/// Assignment of n <= 64 binary variables; bit i holds x_i.
using Bitstring = std::uint64_t;

/// Strictly increasing list of variable indices, e.g. {0, 2, 5} for Z0 Z2 Z5.
using Term = std::vector<int>;

inline constexpr double kCoefficientFloor = 1e-12;
inline constexpr int kMaxVariables = 64;

/// Real-weighted polynomial over Pauli-Z variables.
///
/// A term with indices q contributes coeff * prod_{i in q} z_i where
/// z_i = 1 - 2 x_i. Terms are stored sorted, duplicates merge on insertion,
/// and repeated indices inside one term cancel (Z_i Z_i = I). Coefficients
/// whose magnitude falls below kCoefficientFloor are dropped.
class ZPolynomial {
 public:
  ZPolynomial() = default;
  explicit ZPolynomial(int num_vars, double constant = 0.0);

  int num_vars() const { return num_vars_; }
  double constant() const { return constant_; }
  const std::map<Term, double>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Adds coeff * Z_q. Indices may arrive unsorted; an index appearing an
  /// even number of times cancels. Throws FormatError on out-of-range indices.
  void add_term(Term indices, double coeff);
  void add_constant(double c) { constant_ += c; }

  /// Coefficient of a sorted term, 0 if absent.
  double coefficient(const Term& indices) const;

  /// Maximum term length (0 for a constant-only polynomial).
  int degree() const;
  /// Number of terms with exactly `k` indices.
  std::size_t count_terms_of_degree(int k) const;

  double energy(Bitstring x) const;
  /// Bits given as one entry per variable, each 0 or 1.
  double energy(std::span<const std::uint8_t> bits) const;

  /// All 2^n energies, index = bitstring. Uses a fast Walsh-Hadamard
  /// transform, O(n 2^n).
  std::vector<double> diagonal() const;

  ZPolynomial scaled(double factor) const;
  /// Polynomial restricted to terms accepted by `keep`.
  template <typename Pred>
  ZPolynomial filtered(Pred keep) const {
    ZPolynomial out(num_vars_, constant_);
    for (const auto& [q, w] : terms_)
      if (keep(q)) out.terms_.emplace(q, w);
    return out;
  }

  friend bool operator==(const ZPolynomial&, const ZPolynomial&) = default;

 private:
  int num_vars_ = 0;
  double constant_ = 0.0;
  std::map<Term, double> terms_;
};

/// Term bitmask form used in hot loops: energy contribution is
/// coeff * (-1)^popcount(x & mask).
struct MaskedTerm {
  Bitstring mask;
  double coeff;
};

std::vector<MaskedTerm> masked_terms(const ZPolynomial& h);

/// Sum of coeff * parity over precompiled terms, plus `constant`.
double evaluate_masked(std::span<const MaskedTerm> terms, double constant,
                       Bitstring x);

Bitstring bits_to_bitstring(std::span<const std::uint8_t> bits);
/// "0110..." with character i holding x_i.
std::string bitstring_to_string(Bitstring x, int n);
Bitstring string_to_bitstring(const std::string& s);
/// z_i = 1 - 2 x_i.
std::vector<int> bitstring_to_spins(Bitstring x, int n);

/// Degree >= 2 terms of a polynomial viewed as weighted hyperedges.
struct Hyperedge {
  Term nodes;
  double weight;
};

class Hypergraph {
 public:
  explicit Hypergraph(const ZPolynomial& h);
  int num_nodes() const { return num_nodes_; }
  const std::vector<Hyperedge>& hyperedges() const { return edges_; }

 private:
  int num_nodes_;
  std::vector<Hyperedge> edges_;
};

struct Spectrum {
  double e_min = 0.0;
  double e_max = 0.0;
  std::vector<Bitstring> argmin;
  bool exact = true;
};

inline constexpr int kDefaultBruteForceCap = 24;

/// Exhaustive minimum, maximum and ground states. Throws CapacityError when
/// num_vars exceeds `cap`.
Spectrum brute_force_spectrum(const ZPolynomial& h,
                              int cap = kDefaultBruteForceCap);

}  // namespace quadqaoa
