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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "signedwalk/signed_graph.hpp"

// Graph families and composition operators.
//
// Index conventions:
//   cartesian_product   vertex (g1, ..., gm) -> lexicographic, first factor
//                       most significant (g*|V(H)| + h for two factors)
//   signed_join         G1 occupies 0..n1-1, G2 follows
//   double_cover        layered vertex (u, b) -> 2u + b
//   cubelike/hypercube  vertex = bitstring value
//   cocktail_party      circulant labelling, x antipodal to x + N/2
namespace signedwalk {

SignedGraph complete(Index n);
SignedGraph cycle(Index n);
SignedGraph path(Index n);
SignedGraph hypercube(int d);
SignedGraph cocktail_party(Index parts);
SignedGraph complete_bipartite(Index left, Index right);
SignedGraph petersen();

// Circulant on Z_n: x ~ x +- o for each offset o in [1, n/2].
SignedGraph circulant(Index n, std::span<const Index> offsets);

// J - I - A(G) for an all-positive simple G.
SignedGraph complement(const SignedGraph& g);

SignedGraph cartesian_product(std::span<const SignedGraph> factors);
SignedGraph cartesian_power(const SignedGraph& g, int k);

// [[sign_g1 * A(G1), sign_cross * J], [sign_cross * J, A(G2)]]
SignedGraph signed_join(const SignedGraph& g1, const SignedGraph& g2,
                        int sign_g1, int sign_cross);

/// Connection set of a cubelike graph X(Z_2^d, C).
class CubelikeSpec {
 public:
  // Throws DomainError on 0 in C or on duplicate entries. Entries must fit
  // in d bits.
  static CubelikeSpec make(int d, std::vector<std::uint32_t> connection_set);

  int dimension() const { return d_; }
  const std::vector<std::uint32_t>& connection_set() const { return c_; }
  // XOR of every element of C.
  std::uint32_t delta() const { return delta_; }

 private:
  CubelikeSpec(int d, std::vector<std::uint32_t> c, std::uint32_t delta)
      : d_(d), c_(std::move(c)), delta_(delta) {}

  int d_ = 0;
  std::vector<std::uint32_t> c_;
  std::uint32_t delta_ = 0;
};

SignedGraph cubelike(const CubelikeSpec& spec);

// image[x] is the partner of x; must be a fixed-point-free involution.
SignedGraph permutation_graph(std::span<const Index> image);
SignedGraph permutation_graph(Index n,
                              std::span<const std::pair<Index, Index>> pairs);
// x <-> x + n/2 (mod n).
SignedGraph antipodal_matching(Index n);
// x <-> x XOR delta on 2^d bitstrings.
SignedGraph xor_matching(int d, std::uint32_t delta);

struct LayeredVertex {
  Index base = 0;
  int layer = 0;
};

inline Index cover_index(LayeredVertex v) { return 2 * v.base + v.layer; }
inline LayeredVertex cover_vertex(Index i) {
  return {i / 2, static_cast<int>(i % 2)};
}

// A(G+) (x) I + A(G-) (x) X. Multigraph entries split by sign with their
// multiplicities.
SignedGraph double_cover(const SignedGraph& g);
// Explicit decomposition; `positive` and `negative` are unsigned and may share
// edges (the signed multigraph G+ u G-).
SignedGraph double_cover(const SignedGraph& positive,
                         const SignedGraph& negative);

struct RegularGraphStats {
  Index n = 0;
  Index k = 0;
};

// Stats of a connected (n, k)-regular graph; row sums are taken in absolute
// value. Throws DomainError for irregular or disconnected input.
RegularGraphStats regular_stats(const SignedGraph& g);

// Seeded connected simple k-regular graph on n vertices (pairing model with
// rejection).
SignedGraph random_regular(Index n, Index k, std::uint64_t seed);

}  // namespace signedwalk
