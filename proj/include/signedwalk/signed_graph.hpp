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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace signedwalk {

using Index = Eigen::Index;
using IntMatrix = Eigen::MatrixXi;

// Simple graphs carry entries in {-1, 0, +1}; multigraphs allow any integer
// multiplicity (positive and negative parallel edges summed).
enum class GraphMode { simple, multigraph };

struct SignedEdge {
  Index u = 0;
  Index v = 0;
  int sign = 1;
};

/// Signed graph stored as its integer adjacency matrix A = A(G+) - A(G-).
///
/// The matrix is exactly symmetric with a zero diagonal. Vertices are the
/// contiguous indices 0..n-1; any labelling lives outside this type.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(IntMatrix adjacency, GraphMode mode = GraphMode::simple);

  static SignedGraph edgeless(Index n, GraphMode mode = GraphMode::simple);

  Index size() const { return adjacency_.rows(); }
  const IntMatrix& adjacency() const { return adjacency_; }
  GraphMode mode() const { return mode_; }
  bool is_simple() const { return mode_ == GraphMode::simple; }

  int operator()(Index u, Index v) const { return adjacency_(u, v); }

  bool all_positive() const { return (adjacency_.array() >= 0).all(); }
  Index edge_count() const;

  // Nonzero upper-triangle entries, sorted by (u, v). `sign` holds the
  // integer entry, so multigraph edges report their multiplicity.
  std::vector<SignedEdge> edges() const;

  Eigen::MatrixXd to_real() const { return adjacency_.cast<double>(); }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.mode_ == b.mode_ && a.adjacency_.rows() == b.adjacency_.rows() &&
           a.adjacency_ == b.adjacency_;
  }

 private:
  IntMatrix adjacency_;
  GraphMode mode_ = GraphMode::simple;
};

/// Symmetric real matrix: quotients, boson walks, and oracle outputs.
/// Diagonal entries (weighted loops) are permitted.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(Eigen::MatrixXd weights);
  explicit WeightedGraph(const SignedGraph& graph)
      : WeightedGraph(graph.to_real()) {}

  Index size() const { return weights_.rows(); }
  const Eigen::MatrixXd& weights() const { return weights_; }
  double operator()(Index u, Index v) const { return weights_(u, v); }

 private:
  Eigen::MatrixXd weights_;
};

/// Diagonal +-1 matrix D of a switching A -> D A D.
class SwitchingVector {
 public:
  SwitchingVector() = default;
  explicit SwitchingVector(Eigen::VectorXi entries);
  static SwitchingVector identity(Index n) {
    return SwitchingVector(Eigen::VectorXi::Ones(n));
  }

  Index size() const { return entries_.size(); }
  int operator[](Index i) const { return entries_[i]; }
  const Eigen::VectorXi& entries() const { return entries_; }

 private:
  Eigen::VectorXi entries_;
};

enum class BalanceStatus { balanced, antibalanced, neither };

std::string_view to_string(BalanceStatus status);

struct BalanceVerdict {
  BalanceStatus status = BalanceStatus::neither;
  // switching(g, *witness) equals underlying(g) when balanced and
  // -underlying(g) when antibalanced.
  std::optional<SwitchingVector> witness;
  // Set when a balanced graph is also antibalanced (e.g. signed bipartite).
  bool also_antibalanced = false;
};

SignedGraph build_signed_graph(Index n, std::span<const SignedEdge> edges,
                               GraphMode mode = GraphMode::simple);

SignedGraph positive_part(const SignedGraph& g);
// The -1 entries of g, returned as a +1-signed graph.
SignedGraph negative_part(const SignedGraph& g);
SignedGraph underlying(const SignedGraph& g);
SignedGraph negate(const SignedGraph& g);

SignedGraph switching(const SignedGraph& g, const SwitchingVector& d);

bool is_connected(const SignedGraph& g);

BalanceVerdict balance_verdict(const SignedGraph& g);

// adjacency = A(a) + sign_of_b * A(b). In simple mode the supports must be
// edge-disjoint; requesting multigraph mode sums the matrices.
SignedGraph signed_union(const SignedGraph& a, const SignedGraph& b,
                         int sign_of_b,
                         GraphMode mode = GraphMode::simple);

}  // namespace signedwalk
