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

#include "quadqaoa/circuit.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include "quadqaoa/errors.hpp"

namespace quadqaoa {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kH: return "h";
    case GateKind::kRX: return "rx";
    case GateKind::kRZ: return "rz";
    case GateKind::kRZZ: return "rzz";
    case GateKind::kSwap: return "swap";
    case GateKind::kCZ: return "cz";
    case GateKind::kPhaseGadget: return "phase_gadget";
  }
  return "?";
}

GateKind gate_kind_from_string(const std::string& name) {
  for (auto k : {GateKind::kH, GateKind::kRX, GateKind::kRZ, GateKind::kRZZ,
                 GateKind::kSwap, GateKind::kCZ, GateKind::kPhaseGadget})
    if (to_string(k) == name) return k;
  throw FormatError("unknown gate kind '" + name + "'");
}

namespace {

std::vector<int> identity_permutation(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::size_t expected_arity(GateKind kind) {
  switch (kind) {
    case GateKind::kH:
    case GateKind::kRX:
    case GateKind::kRZ: return 1;
    case GateKind::kRZZ:
    case GateKind::kSwap:
    case GateKind::kCZ: return 2;
    case GateKind::kPhaseGadget: return 0;
  }
  return 0;
}

void check_angles(const QaoaAngles& angles) {
  if (angles.beta.size() != angles.gamma.size())
    throw InvalidSizeError("beta has " + std::to_string(angles.beta.size()) +
                           " entries but gamma has " +
                           std::to_string(angles.gamma.size()));
}

void append_mixer(QaoaCircuit& c, double beta) {
  for (int q = 0; q < c.num_qubits(); ++q) c.append(Gate::rx(q, 2.0 * beta));
}

}  // namespace

QaoaCircuit::QaoaCircuit(int num_qubits)
    : n_(num_qubits), initial_(identity_permutation(num_qubits)), final_(initial_) {
  if (num_qubits < 1 || num_qubits > kMaxVariables)
    throw InvalidSizeError("circuit width must lie in [1, 64]");
}

void QaoaCircuit::append(Gate g) {
  const std::size_t arity = expected_arity(g.kind);
  if (arity != 0 && g.qubits.size() != arity)
    throw FormatError(to_string(g.kind) + " acts on " + std::to_string(arity) + " qubits");
  if (g.kind == GateKind::kPhaseGadget && (g.qubits.empty() || g.qubits.size() > 4))
    throw FormatError("phase gadget support must have 1 to 4 qubits");
  for (int q : g.qubits)
    if (q < 0 || q >= n_) throw FormatError("gate qubit " + std::to_string(q) + " out of range");
  std::set<int> distinct(g.qubits.begin(), g.qubits.end());
  if (distinct.size() != g.qubits.size())
    throw FormatError(to_string(g.kind) + " needs distinct qubits");
  gates_.push_back(std::move(g));
}

void QaoaCircuit::set_mappings(std::vector<int> initial, std::vector<int> final_mapping) {
  if (static_cast<int>(initial.size()) != n_ || static_cast<int>(final_mapping.size()) != n_)
    throw InvalidSizeError("mapping size must equal the circuit width");
  initial_ = std::move(initial);
  final_ = std::move(final_mapping);
}

std::vector<std::vector<std::size_t>> QaoaCircuit::moments() const {
  std::vector<std::size_t> level(n_, 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    std::size_t m = 0;
    for (int q : gates_[i].qubits) m = std::max(m, level[q]);
    if (m >= out.size()) out.resize(m + 1);
    out[m].push_back(i);
    for (int q : gates_[i].qubits) level[q] = m + 1;
  }
  return out;
}

Bitstring QaoaCircuit::to_logical(Bitstring physical) const {
  Bitstring x = 0;
  for (int l = 0; l < n_; ++l)
    if ((physical >> final_[l]) & 1U) x |= Bitstring{1} << l;
  return x;
}

QaoaCircuit synthesize_abstract(const ZPolynomial& h, const QaoaAngles& angles) {
  check_angles(angles);
  const int n = h.num_vars();
  QaoaCircuit c(n);
  c.metadata().p = static_cast<int>(angles.depth());
  for (int q = 0; q < n; ++q) c.append(Gate::h(q));
  for (std::size_t layer = 0; layer < angles.depth(); ++layer) {
    const double gamma = angles.gamma[layer];
    for (const auto& [q, w] : h.terms()) {
      const double a = 2.0 * gamma * w;
      if (q.size() == 1)
        c.append(Gate::rz(q[0], a));
      else if (q.size() == 2)
        c.append(Gate::rzz(q[0], q[1], a));
      else
        c.append(Gate::phase_gadget(q, a));
    }
    append_mixer(c, angles.beta[layer]);
  }
  return c;
}

QaoaCircuit synthesize_line(const ZPolynomial& h, const QaoaAngles& angles,
                            const SwapSchedule& schedule) {
  check_angles(angles);
  if (h.degree() > 2)
    throw InvalidSizeError("line synthesis needs a polynomial of degree <= 2");
  const int n = h.num_vars();
  if (schedule.num_qubits() != n)
    throw InvalidSizeError("schedule width does not match the polynomial");
  const int k = schedule.num_layers();
  const ReachableSet reach(schedule);

  QaoaCircuit c(n);
  c.metadata().p = static_cast<int>(angles.depth());
  c.metadata().swap_layers = k;
  c.metadata().topology = "line";
  for (int q = 0; q < n; ++q) c.append(Gate::h(q));

  for (std::size_t layer = 0; layer < angles.depth(); ++layer) {
    const double gamma = angles.gamma[layer];
    const bool forward = layer % 2 == 0;
    const int t_begin = forward ? 0 : k;
    const auto& begin_mapping = schedule.mapping(t_begin);
    for (const auto& [q, w] : h.terms())
      if (q.size() == 1) c.append(Gate::rz(begin_mapping[q[0]], 2.0 * gamma * w));

    std::set<Pair> applied;
    auto due = [&](int a, int b) -> double {
      const Pair p = std::minmax(a, b);
      if (applied.count(p) || !reach.contains(p.first, p.second, k)) return 0.0;
      return h.coefficient({p.first, p.second});
    };
    for (int step = 0; step <= k; ++step) {
      const int t = forward ? step : k - step;
      const auto& logical = schedule.logical_at(t);
      // Swap layer leaving configuration t in traversal order, if any.
      const SwapLayer* next = nullptr;
      if (forward && t < k) next = &schedule.layers()[t];
      if (!forward && t > 0) next = &schedule.layers()[t - 1];
      std::set<int> swap_left;
      if (next)
        for (const auto& [a, b] : next->swaps) swap_left.insert(a);

      for (int pos = 0; pos + 1 < n; ++pos) {
        if (swap_left.count(pos)) continue;
        const double w = due(logical[pos], logical[pos + 1]);
        if (w != 0.0) {
          c.append(Gate::rzz(pos, pos + 1, 2.0 * gamma * w));
          applied.insert(std::minmax(logical[pos], logical[pos + 1]));
        }
      }
      if (!next) continue;
      for (const auto& [a, b] : next->swaps) {
        const double w = due(logical[a], logical[b]);
        if (w != 0.0) {
          c.append(Gate::rzz(a, b, 2.0 * gamma * w));
          applied.insert(std::minmax(logical[a], logical[b]));
        }
        c.append(Gate::swap(a, b));
      }
    }
    append_mixer(c, angles.beta[layer]);
  }
  const int t_end = angles.depth() % 2 == 1 ? k : 0;
  c.set_mappings(schedule.initial_mapping(), schedule.mapping(t_end));
  return c;
}

namespace {

void emit_cx_primitive(QaoaCircuit& c, int control, int target) {
  c.append(Gate::h(target));
  c.append(Gate::cz(control, target));
  c.append(Gate::h(target));
}

// exp(-i angle Z_S / 2) for physical positions `support` (sorted) on a line.
void emit_routed_gadget(QaoaCircuit& c, const std::vector<int>& support, double angle) {
  if (support.size() == 1) {
    c.append(Gate::rz(support[0], angle));
    return;
  }
  if (support.size() == 2 && support[1] == support[0] + 1) {
    c.append(Gate::rzz(support[0], support[1], angle));
    return;
  }
  std::set<int> in_support(support.begin(), support.end());
  std::vector<Gate> ladder;
  for (int pos = support.front() + 1; pos <= support.back(); ++pos) {
    if (in_support.count(pos))
      ladder.push_back(Gate::cz(pos - 1, pos));  // stands for CX(pos - 1 -> pos)
    else
      ladder.push_back(Gate::swap(pos - 1, pos));
  }
  auto emit = [&](const Gate& g) {
    if (g.kind == GateKind::kCZ)
      emit_cx_primitive(c, g.qubits[0], g.qubits[1]);
    else
      c.append(g);
  };
  for (const auto& g : ladder) emit(g);
  c.append(Gate::rz(support.back(), angle));
  for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) emit(*it);
}

}  // namespace

QaoaCircuit synthesize_line_hubo(const ZPolynomial& h, const QaoaAngles& angles) {
  check_angles(angles);
  const int n = h.num_vars();
  if (n < 2) return synthesize_abstract(h, angles);
  const SwapSchedule schedule(n, max_swap_layers(n));
  const int k = schedule.num_layers();

  // Configuration at which each term is applied: first minimum of its span.
  std::vector<std::pair<int, Term>> placed;
  int last_needed = 0;
  for (const auto& [q, w] : h.terms()) {
    int best_t = 0;
    int best_span = n + 1;
    for (int t = 0; t <= k; ++t) {
      const auto& m = schedule.mapping(t);
      int lo = n, hi = -1;
      for (int v : q) {
        lo = std::min(lo, m[v]);
        hi = std::max(hi, m[v]);
      }
      if (hi - lo < best_span) {
        best_span = hi - lo;
        best_t = t;
      }
    }
    placed.push_back({best_t, q});
    last_needed = std::max(last_needed, best_t);
  }

  QaoaCircuit c(n);
  c.metadata().p = static_cast<int>(angles.depth());
  c.metadata().swap_layers = last_needed;
  c.metadata().topology = "line";
  for (int q = 0; q < n; ++q) c.append(Gate::h(q));
  for (std::size_t layer = 0; layer < angles.depth(); ++layer) {
    const bool forward = layer % 2 == 0;
    for (int step = 0; step <= last_needed; ++step) {
      const int t = forward ? step : last_needed - step;
      const auto& m = schedule.mapping(t);
      for (const auto& [tt, q] : placed) {
        if (tt != t) continue;
        std::vector<int> support;
        for (int v : q) support.push_back(m[v]);
        std::sort(support.begin(), support.end());
        emit_routed_gadget(c, support, 2.0 * angles.gamma[layer] * h.coefficient(q));
      }
      if (step == last_needed) break;
      const auto& swaps = schedule.layers()[forward ? t : t - 1].swaps;
      for (const auto& [a, b] : swaps) c.append(Gate::swap(a, b));
    }
    append_mixer(c, angles.beta[layer]);
  }
  const int t_end = angles.depth() % 2 == 1 ? last_needed : 0;
  c.set_mappings(schedule.initial_mapping(), schedule.mapping(t_end));
  return c;
}

QaoaCircuit synthesize_qaoa(const ZPolynomial& h, const QaoaAngles& angles,
                            const SwapSchedule* schedule) {
  return schedule ? synthesize_line(h, angles, *schedule) : synthesize_abstract(h, angles);
}

namespace {

void emit_cx(QaoaCircuit& out, int control, int target) {
  out.append(Gate::h(target));
  out.append(Gate::cz(control, target));
  out.append(Gate::h(target));
}

void emit_lowered(QaoaCircuit& out, const Gate& g) {
  switch (g.kind) {
    case GateKind::kH:
    case GateKind::kRX:
    case GateKind::kRZ:
    case GateKind::kCZ:
      out.append(g);
      return;
    case GateKind::kRZZ:
      emit_cx(out, g.qubits[0], g.qubits[1]);
      out.append(Gate::rz(g.qubits[1], g.angle));
      emit_cx(out, g.qubits[0], g.qubits[1]);
      return;
    case GateKind::kSwap:
      emit_cx(out, g.qubits[0], g.qubits[1]);
      emit_cx(out, g.qubits[1], g.qubits[0]);
      emit_cx(out, g.qubits[0], g.qubits[1]);
      return;
    case GateKind::kPhaseGadget: {
      const auto& s = g.qubits;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) emit_cx(out, s[i], s[i + 1]);
      out.append(Gate::rz(s.back(), g.angle));
      for (std::size_t i = s.size() - 1; i > 0; --i) emit_cx(out, s[i - 1], s[i]);
      return;
    }
  }
}

// RZZ(a) followed or preceded by SWAP on the same pair: CX_ab RZ_b(a) CX_ba CX_ab.
void emit_merged(QaoaCircuit& out, int a, int b, double angle) {
  emit_cx(out, a, b);
  out.append(Gate::rz(b, angle));
  emit_cx(out, b, a);
  emit_cx(out, a, b);
}

bool same_pair(const Gate& x, const Gate& y) {
  return std::minmax(x.qubits[0], x.qubits[1]) == std::minmax(y.qubits[0], y.qubits[1]);
}

}  // namespace

QaoaCircuit lower_to_cz(const QaoaCircuit& c) {
  QaoaCircuit out(c.num_qubits());
  out.set_mappings(c.initial_mapping(), c.final_mapping());
  out.metadata() = c.metadata();
  out.metadata().lowered = true;

  const auto& gates = c.gates();
  // next_on[i][j]: index of the next gate after i touching gates[i].qubits[j].
  std::vector<std::size_t> last(c.num_qubits(), gates.size());
  std::vector<std::vector<std::size_t>> next_on(gates.size());
  for (std::size_t i = gates.size(); i-- > 0;) {
    for (int q : gates[i].qubits) next_on[i].push_back(last[q]);
    for (int q : gates[i].qubits) last[q] = i;
  }
  std::vector<bool> consumed(gates.size(), false);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (consumed[i]) continue;
    const Gate& g = gates[i];
    const bool mergeable = g.kind == GateKind::kRZZ || g.kind == GateKind::kSwap;
    if (mergeable && next_on[i][0] == next_on[i][1] && next_on[i][0] < gates.size()) {
      const std::size_t j = next_on[i][0];
      const Gate& h = gates[j];
      const GateKind partner = g.kind == GateKind::kRZZ ? GateKind::kSwap : GateKind::kRZZ;
      if (h.kind == partner && same_pair(g, h)) {
        const Gate& rzz = g.kind == GateKind::kRZZ ? g : h;
        emit_merged(out, g.qubits[0], g.qubits[1], rzz.angle);
        consumed[j] = true;
        continue;
      }
    }
    emit_lowered(out, g);
  }
  return out;
}

GateCounts depth_and_counts(const QaoaCircuit& c) {
  const bool primitive = std::all_of(c.gates().begin(), c.gates().end(), [](const Gate& g) {
    return g.kind == GateKind::kH || g.kind == GateKind::kRX || g.kind == GateKind::kRZ ||
           g.kind == GateKind::kCZ;
  });
  const QaoaCircuit lowered = primitive ? c : lower_to_cz(c);
  GateCounts counts;
  std::vector<std::size_t> level(lowered.num_qubits(), 0);
  for (const auto& g : lowered.gates()) {
    if (!g.is_multi_qubit()) continue;
    ++counts.two_qubit_count;
    std::size_t m = 0;
    for (int q : g.qubits) m = std::max(m, level[q]);
    for (int q : g.qubits) level[q] = m + 1;
    counts.two_qubit_depth = std::max(counts.two_qubit_depth, m + 1);
  }
  return counts;
}

std::string to_text(const QaoaCircuit& c) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (const auto& g : c.gates()) {
    os << to_string(g.kind);
    for (int q : g.qubits) os << ' ' << q;
    if (g.kind == GateKind::kRX || g.kind == GateKind::kRZ || g.kind == GateKind::kRZZ ||
        g.kind == GateKind::kPhaseGadget)
      os << ' ' << g.angle;
    os << '\n';
  }
  return os.str();
}

}  // namespace quadqaoa
