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

#include "signedwalk/signed_graph.hpp"

#include <queue>
#include <string>
#include <utility>

#include "signedwalk/errors.hpp"

namespace signedwalk {

SignedGraph::SignedGraph(IntMatrix adjacency, GraphMode mode)
    : adjacency_(std::move(adjacency)), mode_(mode) {
  if (adjacency_.rows() != adjacency_.cols()) {
    throw DomainError("adjacency matrix must be square");
  }
  if (adjacency_ != adjacency_.transpose()) {
    throw DomainError("adjacency matrix must be symmetric");
  }
  if ((adjacency_.diagonal().array() != 0).any()) {
    throw DomainError("signed graphs may not carry self-loops");
  }
  if (mode_ == GraphMode::simple && (adjacency_.array().abs() > 1).any()) {
    throw DomainError("simple signed graph entries must lie in {-1, 0, +1}");
  }
}

SignedGraph SignedGraph::edgeless(Index n, GraphMode mode) {
  return SignedGraph(IntMatrix::Zero(n, n), mode);
}

Index SignedGraph::edge_count() const {
  return (adjacency_.array() != 0).count() / 2;
}

std::vector<SignedEdge> SignedGraph::edges() const {
  std::vector<SignedEdge> out;
  for (Index u = 0; u < size(); ++u) {
    for (Index v = u + 1; v < size(); ++v) {
      if (adjacency_(u, v) != 0) out.push_back({u, v, adjacency_(u, v)});
    }
  }
  return out;
}

WeightedGraph::WeightedGraph(Eigen::MatrixXd weights)
    : weights_(std::move(weights)) {
  if (weights_.rows() != weights_.cols()) {
    throw DomainError("weight matrix must be square");
  }
  if (weights_ != weights_.transpose()) {
    throw DomainError("weight matrix must be symmetric");
  }
}

SwitchingVector::SwitchingVector(Eigen::VectorXi entries)
    : entries_(std::move(entries)) {
  if ((entries_.array().abs() != 1).any()) {
    throw DomainError("switching vector entries must be +1 or -1");
  }
}

std::string_view to_string(BalanceStatus status) {
  switch (status) {
    case BalanceStatus::balanced:
      return "balanced";
    case BalanceStatus::antibalanced:
      return "antibalanced";
    case BalanceStatus::neither:
      break;
  }
  return "neither";
}

SignedGraph build_signed_graph(Index n, std::span<const SignedEdge> edges,
                               GraphMode mode) {
  if (n < 0) throw DomainError("vertex count must be non-negative");
  IntMatrix a = IntMatrix::Zero(n, n);
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw DomainError("edge (" + std::to_string(e.u) + ", " +
                        std::to_string(e.v) + ") out of range for n = " +
                        std::to_string(n));
    }
    if (e.u == e.v) {
      throw DomainError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.sign != 1 && e.sign != -1) {
      throw DomainError("edge sign must be +1 or -1");
    }
    if (mode == GraphMode::simple && a(e.u, e.v) != 0) {
      throw DomainError("duplicate edge (" + std::to_string(e.u) + ", " +
                        std::to_string(e.v) + ")");
    }
    a(e.u, e.v) += e.sign;
    a(e.v, e.u) += e.sign;
  }
  return SignedGraph(std::move(a), mode);
}

namespace {

void require_simple(const SignedGraph& g, const char* op) {
  if (!g.is_simple()) {
    throw DomainError(std::string(op) + " requires a simple signed graph");
  }
}

// D with D_u A_uv D_v == target for every edge, built along a BFS forest.
std::optional<SwitchingVector> propagate_signs(const IntMatrix& a, int target) {
  const Index n = a.rows();
  Eigen::VectorXi d = Eigen::VectorXi::Zero(n);
  for (Index root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    d[root] = 1;
    std::queue<Index> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const Index u = frontier.front();
      frontier.pop();
      for (Index v = 0; v < n; ++v) {
        if (a(u, v) == 0) continue;
        if (d[v] == 0) {
          d[v] = target * a(u, v) * d[u];
          frontier.push(v);
        } else if (d[u] * a(u, v) * d[v] != target) {
          return std::nullopt;
        }
      }
    }
  }
  return SwitchingVector(std::move(d));
}

}  // namespace

SignedGraph positive_part(const SignedGraph& g) {
  require_simple(g, "positive_part");
  return SignedGraph(g.adjacency().cwiseMax(0));
}

SignedGraph negative_part(const SignedGraph& g) {
  require_simple(g, "negative_part");
  return SignedGraph((-g.adjacency()).cwiseMax(0));
}

SignedGraph underlying(const SignedGraph& g) {
  require_simple(g, "underlying");
  return SignedGraph(g.adjacency().cwiseAbs());
}

SignedGraph negate(const SignedGraph& g) {
  return SignedGraph(-g.adjacency(), g.mode());
}

SignedGraph switching(const SignedGraph& g, const SwitchingVector& d) {
  if (d.size() != g.size()) {
    throw DomainError("switching vector length does not match vertex count");
  }
  const auto& s = d.entries();
  IntMatrix a = s.asDiagonal() * g.adjacency() * s.asDiagonal();
  return SignedGraph(std::move(a), g.mode());
}

bool is_connected(const SignedGraph& g) {
  const Index n = g.size();
  if (n == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<Index> frontier;
  frontier.push(0);
  seen[0] = true;
  Index reached = 1;
  while (!frontier.empty()) {
    const Index u = frontier.front();
    frontier.pop();
    for (Index v = 0; v < n; ++v) {
      if (g(u, v) != 0 && !seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == n;
}

BalanceVerdict balance_verdict(const SignedGraph& g) {
  require_simple(g, "balance_verdict");
  if (!is_connected(g)) {
    throw DomainError("balance_verdict requires a connected graph");
  }
  BalanceVerdict verdict;
  auto balanced = propagate_signs(g.adjacency(), +1);
  auto antibalanced = propagate_signs(g.adjacency(), -1);
  if (balanced) {
    verdict.status = BalanceStatus::balanced;
    verdict.witness = std::move(balanced);
    verdict.also_antibalanced = antibalanced.has_value();
  } else if (antibalanced) {
    verdict.status = BalanceStatus::antibalanced;
    verdict.witness = std::move(antibalanced);
  }
  return verdict;
}

SignedGraph signed_union(const SignedGraph& a, const SignedGraph& b,
                         int sign_of_b, GraphMode mode) {
  if (a.size() != b.size()) {
    throw DomainError("signed_union requires equal vertex counts");
  }
  if (sign_of_b != 1 && sign_of_b != -1) {
    throw DomainError("signed_union sign must be +1 or -1");
  }
  if (!a.is_simple() || !b.is_simple()) mode = GraphMode::multigraph;
  if (mode == GraphMode::simple &&
      ((a.adjacency().array() != 0) && (b.adjacency().array() != 0)).any()) {
    throw DomainError("signed_union of simple graphs needs disjoint supports");
  }
  return SignedGraph(a.adjacency() + sign_of_b * b.adjacency(), mode);
}

}  // namespace signedwalk
