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

#include "quadqaoa/mps.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "quadqaoa/errors.hpp"

namespace quadqaoa {

namespace {

using Matrix = MpsState::Matrix;
constexpr std::complex<double> kI{0.0, 1.0};

}  // namespace

Eigen::Matrix2cd gate_matrix_1q(const Gate& g) {
  Eigen::Matrix2cd m;
  switch (g.kind) {
    case GateKind::kH: {
      const double r = 1.0 / std::sqrt(2.0);
      m << r, r, r, -r;
      return m;
    }
    case GateKind::kRX: {
      const double c = std::cos(0.5 * g.angle);
      const double s = std::sin(0.5 * g.angle);
      m << c, -kI * s, -kI * s, c;
      return m;
    }
    case GateKind::kRZ:
    case GateKind::kPhaseGadget:
      m << std::exp(-0.5 * kI * g.angle), 0.0, 0.0, std::exp(0.5 * kI * g.angle);
      return m;
    default:
      throw FormatError(to_string(g.kind) + " is not a single-qubit gate");
  }
}

Eigen::Matrix4cd gate_matrix_2q(const Gate& g) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  switch (g.kind) {
    case GateKind::kRZZ:
    case GateKind::kPhaseGadget: {
      const auto even = std::exp(-0.5 * kI * g.angle);
      const auto odd = std::exp(0.5 * kI * g.angle);
      m.diagonal() << even, odd, odd, even;
      return m;
    }
    case GateKind::kCZ:
      m.diagonal() << 1.0, 1.0, 1.0, -1.0;
      return m;
    case GateKind::kSwap:
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
      return m;
    default:
      throw FormatError(to_string(g.kind) + " is not a two-qubit gate");
  }
}

MpsState::MpsState(int num_qubits, int max_bond) : chi_(max_bond) {
  if (num_qubits < 1 || num_qubits > kMaxVariables)
    throw InvalidSizeError("MPS width must lie in [1, 64]");
  if (max_bond < 1) throw OutOfRangeError("bond dimension must be positive");
  sites_.resize(num_qubits);
  for (auto& site : sites_) {
    site[0] = Matrix::Ones(1, 1);
    site[1] = Matrix::Zero(1, 1);
  }
}

int MpsState::bond_dimension(int i) const {
  if (i < 0 || i + 1 >= num_qubits()) throw OutOfRangeError("bond index out of range");
  return static_cast<int>(sites_[i][0].cols());
}

int MpsState::largest_bond() const {
  int d = 1;
  for (int i = 0; i + 1 < num_qubits(); ++i) d = std::max(d, bond_dimension(i));
  return d;
}

void MpsState::apply_single(int q, const Eigen::Matrix2cd& u) {
  if (q < 0 || q >= num_qubits()) throw OutOfRangeError("qubit out of range");
  auto& site = sites_[q];
  Matrix a0 = u(0, 0) * site[0] + u(0, 1) * site[1];
  Matrix a1 = u(1, 0) * site[0] + u(1, 1) * site[1];
  site[0] = std::move(a0);
  site[1] = std::move(a1);
}

void MpsState::move_center(int target) {
  if (target < 0 || target >= num_qubits()) throw OutOfRangeError("center out of range");
  while (center_ < target) {
    auto& site = sites_[center_];
    const Eigen::Index dl = site[0].rows();
    const Eigen::Index dr = site[0].cols();
    Matrix stacked(2 * dl, dr);
    stacked << site[0], site[1];
    Eigen::HouseholderQR<Matrix> qr(stacked);
    const Eigen::Index r = std::min<Eigen::Index>(2 * dl, dr);
    Matrix q = qr.householderQ() * Matrix::Identity(2 * dl, r);
    Matrix rmat = qr.matrixQR().topRows(r).triangularView<Eigen::Upper>();
    site[0] = q.topRows(dl);
    site[1] = q.bottomRows(dl);
    auto& next = sites_[center_ + 1];
    next[0] = rmat * next[0];
    next[1] = rmat * next[1];
    ++center_;
  }
  while (center_ > target) {
    auto& site = sites_[center_];
    const Eigen::Index dl = site[0].rows();
    const Eigen::Index dr = site[0].cols();
    Matrix wide(dl, 2 * dr);
    wide << site[0], site[1];
    // wide = L Q computed from the QR of its adjoint.
    Matrix adj = wide.adjoint();
    Eigen::HouseholderQR<Matrix> qr(adj);
    const Eigen::Index r = std::min<Eigen::Index>(dl, 2 * dr);
    Matrix q = (qr.householderQ() * Matrix::Identity(2 * dr, r)).adjoint();
    Matrix l = Matrix(qr.matrixQR().topRows(r).triangularView<Eigen::Upper>()).adjoint();
    site[0] = q.leftCols(dr);
    site[1] = q.rightCols(dr);
    auto& prev = sites_[center_ - 1];
    prev[0] = prev[0] * l;
    prev[1] = prev[1] * l;
    --center_;
  }
}

void MpsState::apply_two(int q, const Eigen::Matrix4cd& u) {
  if (q < 0 || q + 1 >= num_qubits()) throw OutOfRangeError("qubit pair out of range");
  if (center_ < q) move_center(q);
  if (center_ > q + 1) move_center(q + 1);
  auto& left = sites_[q];
  auto& right = sites_[q + 1];
  const Eigen::Index dl = left[0].rows();
  const Eigen::Index dr = right[0].cols();
  Matrix theta[2][2];
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2) theta[s1][s2] = left[s1] * right[s2];
  // Rows (s1, l), columns (s2, r).
  Matrix m = Matrix::Zero(2 * dl, 2 * dr);
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2) {
      Matrix block = Matrix::Zero(dl, dr);
      for (int t1 = 0; t1 < 2; ++t1)
        for (int t2 = 0; t2 < 2; ++t2) {
          const auto c = u(2 * s1 + s2, 2 * t1 + t2);
          if (c != 0.0) block += c * theta[t1][t2];
        }
      m.block(s1 * dl, s2 * dr, dl, dr) = block;
    }
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double total = sv.squaredNorm();
  Eigen::Index keep = 0;
  const double floor = sv.size() > 0 ? kMpsRankCutoff * sv(0) : 0.0;
  while (keep < sv.size() && keep < chi_ && sv(keep) > floor) ++keep;
  keep = std::max<Eigen::Index>(keep, 1);
  const double kept = sv.head(keep).squaredNorm();
  if (keep < sv.size() && total > 0.0) {
    truncation_error_ += (total - kept) / total;
    ++truncations_;
  }
  const double scale = kept > 0.0 ? std::sqrt(total / kept) : 1.0;
  Matrix umat = svd.matrixU().leftCols(keep);
  Matrix svh = (sv.head(keep).cast<std::complex<double>>() * scale).asDiagonal() *
               svd.matrixV().leftCols(keep).adjoint();
  left[0] = umat.topRows(dl);
  left[1] = umat.bottomRows(dl);
  right[0] = svh.leftCols(dr);
  right[1] = svh.rightCols(dr);
  center_ = q + 1;
}

void MpsState::apply(const Gate& g) {
  if (g.qubits.size() == 1) {
    apply_single(g.qubits[0], gate_matrix_1q(g));
    return;
  }
  if (g.qubits.size() != 2)
    throw RoutingError("MPS backend applies gates on at most two neighbouring qubits");
  const int a = std::min(g.qubits[0], g.qubits[1]);
  const int b = std::max(g.qubits[0], g.qubits[1]);
  if (b != a + 1)
    throw RoutingError("two-qubit gate on non-neighbouring qubits " + std::to_string(a) +
                       " and " + std::to_string(b));
  apply_two(a, gate_matrix_2q(g));
}

namespace {

// Environments from the left (bra x ket) and right (ket x bra).
std::vector<Matrix> left_environments(const std::vector<std::array<Matrix, 2>>& sites) {
  std::vector<Matrix> env(sites.size() + 1);
  env[0] = Matrix::Ones(1, 1);
  for (std::size_t i = 0; i < sites.size(); ++i)
    env[i + 1] = sites[i][0].adjoint() * env[i] * sites[i][0] +
                 sites[i][1].adjoint() * env[i] * sites[i][1];
  return env;
}

std::vector<Matrix> right_environments(const std::vector<std::array<Matrix, 2>>& sites) {
  std::vector<Matrix> env(sites.size() + 1);
  env[sites.size()] = Matrix::Ones(1, 1);
  for (std::size_t i = sites.size(); i-- > 0;)
    env[i] = sites[i][0] * env[i + 1] * sites[i][0].adjoint() +
             sites[i][1] * env[i + 1] * sites[i][1].adjoint();
  return env;
}

double string_value(const std::vector<std::array<Matrix, 2>>& sites,
                    const std::vector<Matrix>& left, const std::vector<Matrix>& right,
                    std::span<const int> support) {
  if (support.empty()) return (left.back()(0, 0)).real();
  const int a = support.front();
  const int b = support.back();
  Matrix e = left[a];
  std::size_t next = 0;
  for (int i = a; i <= b; ++i) {
    const bool z = next < support.size() && support[next] == i;
    if (z) ++next;
    const Matrix m0 = sites[i][0].adjoint() * e * sites[i][0];
    const Matrix m1 = sites[i][1].adjoint() * e * sites[i][1];
    e = z ? Matrix(m0 - m1) : Matrix(m0 + m1);
  }
  return (e.cwiseProduct(right[b + 1].transpose())).sum().real();
}

}  // namespace

double MpsState::norm() const {
  return std::sqrt(left_environments(sites_).back()(0, 0).real());
}

double MpsState::z_string_expectation(std::span<const int> support) const {
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] < 0 || support[i] >= num_qubits())
      throw OutOfRangeError("support site out of range");
    if (i > 0 && support[i] <= support[i - 1])
      throw FormatError("support must be strictly increasing");
  }
  const auto left = left_environments(sites_);
  const auto right = right_environments(sites_);
  return string_value(sites_, left, right, support) / left.back()(0, 0).real();
}

double MpsState::energy(const ZPolynomial& h, std::span<const int> mapping) const {
  if (h.num_vars() != num_qubits())
    throw InvalidSizeError("polynomial width does not match the MPS");
  if (!mapping.empty() && static_cast<int>(mapping.size()) != num_qubits())
    throw InvalidSizeError("mapping size must equal the MPS width");
  const auto left = left_environments(sites_);
  const auto right = right_environments(sites_);
  const double norm2 = left.back()(0, 0).real();
  double e = h.constant();
  std::vector<int> support;
  for (const auto& [q, w] : h.terms()) {
    support.clear();
    for (int v : q) support.push_back(mapping.empty() ? v : mapping[v]);
    std::sort(support.begin(), support.end());
    e += w * string_value(sites_, left, right, support) / norm2;
  }
  return e;
}

std::complex<double> MpsState::amplitude(Bitstring x) const {
  Matrix v = Matrix::Ones(1, 1);
  for (int i = 0; i < num_qubits(); ++i) v = v * sites_[i][(x >> i) & 1U];
  return v(0, 0);
}

std::vector<std::complex<double>> MpsState::to_dense() const {
  if (num_qubits() > 24) throw CapacityError("dense conversion limited to 24 qubits");
  std::vector<std::complex<double>> out(std::size_t{1} << num_qubits());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = amplitude(x);
  return out;
}

SampleSet MpsState::sample(std::uint64_t shots, std::uint64_t seed) {
  move_center(0);
  const double norm2 = left_environments(sites_).back()(0, 0).real();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::map<Bitstring, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < shots; ++s) {
    Matrix v = Matrix::Ones(1, 1) / std::sqrt(norm2);
    Bitstring x = 0;
    for (int i = 0; i < num_qubits(); ++i) {
      Matrix w0 = v * sites_[i][0];
      const double p0 = w0.squaredNorm();
      Matrix w1 = v * sites_[i][1];
      const double p1 = w1.squaredNorm();
      if (unit(rng) * (p0 + p1) < p0) {
        v = w0 / std::sqrt(p0);
      } else {
        v = w1 / std::sqrt(p1);
        x |= Bitstring{1} << i;
      }
    }
    ++counts[x];
  }
  return SampleSet::from_counts(num_qubits(), counts);
}

MpsState apply_circuit(const QaoaCircuit& c, int max_bond) {
  MpsState state(c.num_qubits(), max_bond);
  const auto& gates = c.gates();
  std::vector<std::size_t> last(c.num_qubits(), gates.size());
  std::vector<std::array<std::size_t, 2>> next_on(gates.size(), {gates.size(), gates.size()});
  for (std::size_t i = gates.size(); i-- > 0;) {
    for (std::size_t j = 0; j < gates[i].qubits.size() && j < 2; ++j)
      next_on[i][j] = last[gates[i].qubits[j]];
    for (int q : gates[i].qubits) last[q] = i;
  }
  std::vector<bool> consumed(gates.size(), false);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (consumed[i]) continue;
    const Gate& g = gates[i];
    if (g.qubits.size() != 2) {
      state.apply(g);
      continue;
    }
    const int a = std::min(g.qubits[0], g.qubits[1]);
    const int b = std::max(g.qubits[0], g.qubits[1]);
    if (b != a + 1)
      throw RoutingError("two-qubit gate on non-neighbouring qubits " + std::to_string(a) +
                         " and " + std::to_string(b));
    Eigen::Matrix4cd u = gate_matrix_2q(g);
    std::size_t cur = i;
    // Fuse following gates that act on exactly this pair with nothing between.
    while (next_on[cur][0] == next_on[cur][1] && next_on[cur][0] < gates.size()) {
      const Gate& h = gates[next_on[cur][0]];
      if (h.qubits.size() != 2 || std::min(h.qubits[0], h.qubits[1]) != a ||
          std::max(h.qubits[0], h.qubits[1]) != b)
        break;
      cur = next_on[cur][0];
      u = gate_matrix_2q(h) * u;
      consumed[cur] = true;
    }
    state.apply_two(a, u);
  }
  return state;
}

}  // namespace quadqaoa
