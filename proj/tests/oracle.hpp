// Copyright 2026 The signedwalk Authors
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

// Independent reference computations shared by the unit tests. Nothing here
// goes through the library's eigensolver.

#include <Eigen/Core>
#include <unsupported/Eigen/MatrixFunctions>

#include <complex>
#include <random>

#include "signedwalk/signed_graph.hpp"

namespace signedwalk::testing {

// exp(-i t A) by Eigen's dense matrix exponential (Pade with scaling).
inline Eigen::MatrixXcd dense_evolution(const Eigen::MatrixXd& a, double t) {
  const Eigen::MatrixXcd h = std::complex<double>(0.0, -t) * a.cast<std::complex<double>>();
  return h.exp();
}

inline std::complex<double> dense_amplitude(const SignedGraph& g, Index from,
                                            Index to, double t) {
  return dense_evolution(g.to_real(), t)(to, from);
}

inline SignedGraph random_signed_graph(Index n, std::mt19937_64& rng,
                                       bool signed_edges = true) {
  std::uniform_int_distribution<int> pick(0, 2);
  IntMatrix a = IntMatrix::Zero(n, n);
  for (Index u = 0; u < n; ++u) {
    for (Index v = u + 1; v < n; ++v) {
      const int r = pick(rng);
      const int s = r == 0 ? 0 : (signed_edges && r == 2 ? -1 : 1);
      a(u, v) = a(v, u) = s;
    }
  }
  return SignedGraph(std::move(a));
}

inline SwitchingVector random_switching(Index n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  Eigen::VectorXi d(n);
  for (Index i = 0; i < n; ++i) d[i] = coin(rng) ? 1 : -1;
  return SwitchingVector(std::move(d));
}

}  // namespace signedwalk::testing
