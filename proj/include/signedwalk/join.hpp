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

#include <complex>

#include "signedwalk/construct.hpp"
#include "signedwalk/walk.hpp"

// Closed-form walk on the signed join G1- + G2+ of two regular graphs.
namespace signedwalk {

/// Scalars of the two-dimensional invariant subspace spanned by the block
/// all-ones vectors of G1- + G2+.
struct JoinSpectralData {
  double delta_plus = 0.0;   // -(k1 + k2) / 2
  double delta_minus = 0.0;  // -(k1 - k2) / 2
  double Delta = 0.0;        // sqrt(delta_plus^2 + n1 n2)
  double lambda_plus = 0.0;  // delta_minus + Delta
  double lambda_minus = 0.0; // delta_minus - Delta
  double x_plus = 0.0;       // (lambda_+ - k2) / n1
  double x_minus = 0.0;
  double L_plus = 0.0;       // n1 x_+^2 + n2
  double L_minus = 0.0;
};

JoinSpectralData join_spectral_data(const RegularGraphStats& g1,
                                    const RegularGraphStats& g2);

/// <b| exp(-itA(G1- + G2+)) |a> for a, b in the G1 block, given
/// amp_g1 = <b| exp(+itA(G1)) |a>.
WalkAmplitude join_amplitude_formula(std::complex<double> amp_g1,
                                     const RegularGraphStats& g1,
                                     const RegularGraphStats& g2, double t);

// Convenience: evaluates amp_g1 on G1 itself and applies the formula.
WalkAmplitude join_amplitude(const SignedGraph& g1, const SignedGraph& g2,
                             Index from, Index to, double t);

enum class JoinBranch { none, zero_mod_2d, d_mod_2d };

struct JoinPstCondition {
  bool holds = false;
  double Delta = 0.0;  // (1/2) sqrt((k1 + k2)^2 + 4 n1 n2)
  JoinBranch branch = JoinBranch::none;
};

// Congruence test for PST at pi/D on G1- + G2+, assuming G1 has PST at pi/D:
//   Delta = 0 (mod 2D) and k1 + k2 = 0 (mod 4D), or
//   Delta = D (mod 2D) and k1 + k2 = 2D (mod 4D).
// Delta must be an integer to within 1e-9.
JoinPstCondition join_pst_condition(long k1, long k2, long n1, long n2,
                                    long D);

// Known condition for the unsigned join K2 + G with G (n, k)-regular:
// sqrt((k - 1)^2 + 8n) integral and both k - 1 and that root divisible by 8.
bool unsigned_k2_join_condition(long k, long n);

}  // namespace signedwalk
