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

#include <Eigen/Core>

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "signedwalk/signed_graph.hpp"
#include "signedwalk/walk.hpp"

// k-particle walks on G built from the k-fold Cartesian power G^k.
//
// Single-particle labels use the ascending vertex order. k-subsets and
// k-multisets are ranked lexicographically by their sorted member lists;
// tensor basis index of a tuple (u_1, ..., u_k) is sum_i u_i n^(k-i), which
// matches cartesian_power's vertex numbering.
namespace signedwalk {

// Upper bound on n^k for the operators that materialise G^k.
inline constexpr Index kMaxTensorDimension = 2048;

Index binomial(Index n, Index k);

/// Strictly increasing k-subset with its lexicographic rank.
struct KSubset {
  std::vector<Index> members;
  Index rank = 0;
};

std::vector<KSubset> k_subsets(Index n, Index k);
Index subset_rank(std::span<const Index> members, Index n);
KSubset subset_unrank(Index rank, Index n, Index k);

/// Occupation vector over V summing to k.
struct MultisetState {
  std::vector<Index> occupation;
  std::vector<Index> members() const;  // nondecreasing vertex list
};

std::vector<MultisetState> k_multisets(Index n, Index k);

Index tuple_index(std::span<const Index> tuple, Index n);

/// Alt_{n,k}: sum over v and pi in S_k of sgn(pi)/sqrt(k!) |pi(v)><v|, an
/// n^k x C(n,k) matrix with orthonormal columns.
Eigen::MatrixXd antisymmetrizer(Index n, Index k);

/// Normalised symmetriser: column for a multiset is the indicator of the
/// tuples that sort to it, divided by sqrt(orbit size).
Eigen::MatrixXd symmetrizer(Index n, Index k);

// Signed k-th exterior power by the sign rule: A ~ B iff A xor B = {u, v}
// with (u, v) an edge, signed (-1)^(r + s) where r and s are the 1-based
// positions of u in A and of v in B.
SignedGraph exterior_power(const SignedGraph& g, Index k);

// Alt^T A(G^k) Alt, rounded to exact integers (tolerance 1e-9).
WeightedGraph exterior_power_oracle(const SignedGraph& g, Index k);

// Unsigned variant: same vertex set and support as exterior_power.
SignedGraph symmetric_power(const SignedGraph& g, Index k);

// Boson walk: P^T A(G^k) P over the multiset basis.
WeightedGraph boson_quotient(const SignedGraph& g, Index k);

// Reference closed form sqrt((a_u - 1)(a_v + 1)) for a boson hop u -> v out of
// occupation a; 0 whenever the radicand is negative.
double boson_formula_weight(std::span<const Index> occupation, Index u,
                            Index v);

struct BosonWeightMismatch {
  Index from = 0;  // multiset rank
  Index to = 0;
  Index hop_from = 0;  // vertex u losing a particle
  Index hop_to = 0;    // vertex v gaining one
  double oracle = 0.0;
  double formula = 0.0;
};

// Every single-hop pair (a, b) whose oracle weight differs from
// boson_formula_weight by more than 1e-9.
std::vector<BosonWeightMismatch> compare_boson_weight_formula(
    const SignedGraph& g, Index k);

/// det[<b_j| U(t) |a_l>]: the amplitude from the wedge of `from` to the wedge
/// of `to` for non-interacting fermions, from single-particle amplitudes.
/// Both lists must be strictly increasing.
std::complex<double> slater_amplitude(const QuantumWalk& single,
                                      std::span<const Index> from,
                                      std::span<const Index> to, double t);

// Lifts k disjoint PST pairs a_j -> b_j of G at time t to a PST check on
// the exterior power from the wedge of the a_j to the wedge of the b_j.
// Throws DomainError if the pairs overlap or a pair lacks PST at t.
PstVerdict fermion_pst_lift(const SignedGraph& g,
                            std::span<const std::pair<Index, Index>> pairs,
                            double t, double tol = kDefaultTolerance);

}  // namespace signedwalk
