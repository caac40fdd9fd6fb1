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

#include "quadqaoa/sample_set.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "quadqaoa/errors.hpp"

namespace quadqaoa {

SampleSet SampleSet::from_counts(int num_vars, const std::map<Bitstring, std::uint64_t>& counts) {
  SampleSet s(num_vars);
  for (const auto& [x, c] : counts)
    if (c > 0) {
      s.entries_.push_back({x, c, 0.0});
      s.total_ += c;
    }
  return s;
}

void SampleSet::add(Bitstring x, std::uint64_t count) {
  if (count == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                             [](const SampleEntry& e, Bitstring v) { return e.bits < v; });
  if (it != entries_.end() && it->bits == x)
    it->count += count;
  else
    entries_.insert(it, {x, count, 0.0});
  total_ += count;
}

void SampleSet::attach_energies(const ZPolynomial& h) {
  if (h.num_vars() != n_)
    throw InvalidSizeError("polynomial has " + std::to_string(h.num_vars()) +
                           " variables, samples have " + std::to_string(n_));
  const auto masked = masked_terms(h);
  for (auto& e : entries_) e.energy = evaluate_masked(masked, h.constant(), e.bits);
}

void SampleSet::merge(const SampleSet& other) {
  if (other.n_ != n_) throw InvalidSizeError("cannot merge sample sets of different widths");
  std::vector<SampleEntry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->bits < b->bits)) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || b->bits < a->bits) {
      merged.push_back(*b++);
    } else {
      merged.push_back({a->bits, a->count + b->count, a->energy});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  total_ += other.total_;
}

SampleSet SampleSet::remapped(const std::function<Bitstring(Bitstring)>& f) const {
  std::map<Bitstring, std::uint64_t> counts;
  for (const auto& e : entries_) counts[f(e.bits)] += e.count;
  return from_counts(n_, counts);
}

double SampleSet::mean_energy() const {
  if (total_ == 0) throw InvalidSizeError("empty sample set");
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.energy * static_cast<double>(e.count);
  return sum / static_cast<double>(total_);
}

double SampleSet::energy_stddev() const {
  const double mean = mean_energy();
  double sum = 0.0;
  for (const auto& e : entries_)
    sum += (e.energy - mean) * (e.energy - mean) * static_cast<double>(e.count);
  return std::sqrt(sum / static_cast<double>(total_));
}

std::string SampleSet::to_csv() const {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "bitstring,count,energy\n";
  for (const auto& e : entries_)
    os << bitstring_to_string(e.bits, n_) << ',' << e.count << ',' << e.energy << '\n';
  return os.str();
}

SampleSet SampleSet::from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("bitstring", 0) != 0)
    throw FormatError("sample CSV must start with a 'bitstring,count,energy' header");
  SampleSet s;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string bits, count, energy;
    if (!std::getline(row, bits, ',') || !std::getline(row, count, ','))
      throw FormatError("malformed sample row: " + line);
    std::getline(row, energy, ',');
    if (first) {
      s.n_ = static_cast<int>(bits.size());
      first = false;
    } else if (static_cast<int>(bits.size()) != s.n_) {
      throw FormatError("inconsistent bitstring widths in sample CSV");
    }
    const Bitstring x = string_to_bitstring(bits);
    s.add(x, std::stoull(count));
    if (!energy.empty()) {
      auto it = std::find_if(s.entries_.begin(), s.entries_.end(),
                             [x](const SampleEntry& e) { return e.bits == x; });
      it->energy = std::stod(energy);
    }
  }
  return s;
}

}  // namespace quadqaoa
