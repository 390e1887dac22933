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

#include "signedwalk/join.hpp"

#include <cmath>

#include "signedwalk/errors.hpp"

namespace signedwalk {
namespace {

// Integer value of x when |x - round(x)| <= 1e-9.
bool integral(double x, long& out) {
  const double r = std::round(x);
  if (std::abs(x - r) > 1e-9) return false;
  out = static_cast<long>(r);
  return true;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

JoinSpectralData join_spectral_data(const RegularGraphStats& g1,
                                    const RegularGraphStats& g2) {
  const auto n1 = static_cast<double>(g1.n);
  const auto k1 = static_cast<double>(g1.k);
  const auto n2 = static_cast<double>(g2.n);
  const auto k2 = static_cast<double>(g2.k);
  JoinSpectralData d;
  d.delta_plus = -0.5 * (k1 + k2);
  d.delta_minus = -0.5 * (k1 - k2);
  d.Delta = std::sqrt(d.delta_plus * d.delta_plus + n1 * n2);
  d.lambda_plus = d.delta_minus + d.Delta;
  d.lambda_minus = d.delta_minus - d.Delta;
  d.x_plus = (d.lambda_plus - k2) / n1;
  d.x_minus = (d.lambda_minus - k2) / n1;
  d.L_plus = n1 * d.x_plus * d.x_plus + n2;
  d.L_minus = n1 * d.x_minus * d.x_minus + n2;
  return d;
}

WalkAmplitude join_amplitude_formula(std::complex<double> amp_g1,
                                     const RegularGraphStats& g1,
                                     const RegularGraphStats& g2, double t) {
  if (g1.n < 1 || g2.n < 1 || g1.k < 0 || g2.k < 0) {
    throw DomainError("join formula needs regular graph statistics");
  }
  using namespace std::complex_literals;
  const JoinSpectralData d = join_spectral_data(g1, g2);
  const std::complex<double> bracket =
      (std::cos(t * d.Delta) -
       1i * (d.delta_plus / d.Delta) * std::sin(t * d.Delta)) -
      std::polar(1.0, -t * d.delta_plus);
  const std::complex<double> value =
      amp_g1 + std::polar(1.0, -t * d.delta_minus) / static_cast<double>(g1.n) *
                   bracket;
  return WalkAmplitude::from(value, t);
}

WalkAmplitude join_amplitude(const SignedGraph& g1, const SignedGraph& g2,
                             Index from, Index to, double t) {
  const RegularGraphStats s1 = regular_stats(g1);
  const RegularGraphStats s2 = regular_stats(g2);
  // exp(+itA) is the walk at time -t.
  const auto inner = QuantumWalk(g1).amplitude(from, to, -t);
  return join_amplitude_formula(inner.value(), s1, s2, t);
}

JoinPstCondition join_pst_condition(long k1, long k2, long n1, long n2,
                                    long D) {
  if (D < 1) throw DomainError("D must be a positive integer");
  JoinPstCondition out;
  const double sum = static_cast<double>(k1 + k2);
  out.Delta = 0.5 * std::sqrt(sum * sum + 4.0 * static_cast<double>(n1 * n2));
  long delta = 0;
  if (!integral(out.Delta, delta)) return out;
  const long ksum = k1 + k2;
  if (mod(delta, 2 * D) == 0 && mod(ksum, 4 * D) == 0) {
    out.branch = JoinBranch::zero_mod_2d;
  } else if (mod(delta, 2 * D) == D && mod(ksum, 4 * D) == 2 * D) {
    out.branch = JoinBranch::d_mod_2d;
  }
  out.holds = out.branch != JoinBranch::none;
  return out;
}

bool unsigned_k2_join_condition(long k, long n) {
  const double root =
      std::sqrt(static_cast<double>((k - 1) * (k - 1) + 8 * n));
  long delta = 0;
  if (!integral(root, delta)) return false;
  return mod(k - 1, 8) == 0 && mod(delta, 8) == 0;
}

}  // namespace signedwalk
