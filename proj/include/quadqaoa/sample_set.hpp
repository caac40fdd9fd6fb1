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

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "quadqaoa/zpoly.hpp"

namespace quadqaoa {

struct SampleEntry {
  Bitstring bits = 0;
  std::uint64_t count = 0;
  double energy = 0.0;

  friend bool operator==(const SampleEntry&, const SampleEntry&) = default;
};

/// Multiset of measured bitstrings, one entry per distinct string, sorted by
/// bitstring value. Energies are those of the last attached polynomial.
class SampleSet {
 public:
  SampleSet() = default;
  explicit SampleSet(int num_vars) : n_(num_vars) {}

  static SampleSet from_counts(int num_vars, const std::map<Bitstring, std::uint64_t>& counts);

  int num_vars() const { return n_; }
  const std::vector<SampleEntry>& entries() const { return entries_; }
  std::uint64_t total_shots() const { return total_; }
  bool empty() const { return total_ == 0; }

  void add(Bitstring x, std::uint64_t count = 1);
  /// Recomputes every energy against h; throws on a width mismatch.
  void attach_energies(const ZPolynomial& h);
  /// Shot-weighted union of two sets over the same variables.
  void merge(const SampleSet& other);
  /// New set with every bitstring passed through `f` (counts merge).
  SampleSet remapped(const std::function<Bitstring(Bitstring)>& f) const;

  double mean_energy() const;
  /// Standard deviation of the per-shot energies.
  double energy_stddev() const;

  /// "bitstring,count,energy" with a header line.
  std::string to_csv() const;
  static SampleSet from_csv(const std::string& text);

  friend bool operator==(const SampleSet&, const SampleSet&) = default;

 private:
  int n_ = 0;
  std::uint64_t total_ = 0;
  std::vector<SampleEntry> entries_;
};

}  // namespace quadqaoa
