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

// Random inputs shared by the unit and acceptance tests.

#pragma once

#include <random>

#include "quadqaoa/circuit.hpp"
#include "quadqaoa/zpoly.hpp"

namespace fixture {

using namespace quadqaoa;

inline QaoaCircuit random_line_circuit(int n, int gates, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<int> site(0, n - 2);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  QaoaCircuit c(n);
  for (int q = 0; q < n; ++q) c.append(Gate::h(q));
  for (int i = 0; i < gates; ++i) {
    const int a = site(rng);
    switch (kind(rng)) {
      case 0:
        c.append(Gate::rx(a, angle(rng)));
        break;
      case 1:
        c.append(Gate::rz(a + 1, angle(rng)));
        break;
      case 2:
        c.append(Gate::rzz(a, a + 1, angle(rng)));
        break;
      case 3:
        c.append(Gate::swap(a, a + 1));
        break;
      case 4:
        c.append(Gate::cz(a + 1, a));
        break;
      default:
        c.append(Gate::h(a));
    }
  }
  return c;
}

inline QaoaAngles random_angles(int p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  QaoaAngles a;
  for (int l = 0; l < p; ++l) {
    a.beta.push_back(u(rng));
    a.gamma.push_back(u(rng));
  }
  return a;
}

inline ZPolynomial random_quadratic(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> w(-1.0, 1.0);
  std::bernoulli_distribution keep(0.6);
  ZPolynomial h(n);
  for (int i = 0; i < n; ++i) {
    if (keep(rng)) h.add_term({i}, w(rng));
    for (int j = i + 1; j < n; ++j)
      if (keep(rng)) h.add_term({i, j}, w(rng));
  }
  return h;
}

}  // namespace fixture
