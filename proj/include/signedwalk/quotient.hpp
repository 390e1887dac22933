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

#include <iosfwd>
#include <optional>
#include <vector>

#include "signedwalk/signed_graph.hpp"
#include "signedwalk/walk.hpp"

namespace signedwalk {

/// Vertex partition pi = pi_0 u ... u pi_{m-1}; cells are internally sorted.
class Partition {
 public:
  static Partition from_cells(Index n, std::vector<std::vector<Index>> cells);
  // Cell ids must cover 0..m-1.
  static Partition from_cell_of(std::vector<Index> cell_of);
  static Partition discrete(Index n);
  static Partition single_cell(Index n);

  Index vertex_count() const { return static_cast<Index>(cell_of_.size()); }
  Index cell_count() const { return static_cast<Index>(cells_.size()); }
  Index cell_of(Index v) const { return cell_of_.at(static_cast<std::size_t>(v)); }
  const std::vector<Index>& cell(Index k) const {
    return cells_.at(static_cast<std::size_t>(k));
  }
  const std::vector<std::vector<Index>>& cells() const { return cells_; }
  bool is_singleton(Index v) const { return cell(cell_of(v)).size() == 1; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Partition(std::vector<Index> cell_of, std::vector<std::vector<Index>> cells)
      : cell_of_(std::move(cell_of)), cells_(std::move(cells)) {}

  std::vector<Index> cell_of_;
  std::vector<std::vector<Index>> cells_;
};

/// d+_{j,k} (d-_{j,k}): positive (negative) neighbours in cell k of any vertex
/// of cell j.
struct EquitableProfile {
  IntMatrix d_plus;
  IntMatrix d_minus;
  IntMatrix d_signed() const { return d_plus - d_minus; }
};

struct EquitableCheck {
  bool ok = false;
  std::optional<EquitableProfile> profile;
};

EquitableCheck is_equitable(const SignedGraph& g, const Partition& pi);

// Q with columns 1_{pi_k} / sqrt(|pi_k|).
Eigen::MatrixXd normalized_partition_matrix(const Partition& pi);

struct QuotientGraph {
  WeightedGraph graph;
  Partition partition;
  // Exact integer sidecar: entry (j, k) = sign(d_jk) sqrt(|d_jk d_kj|) with
  // d = profile.d_signed(), and 0 where d_jk = 0.
  EquitableProfile profile;
};

// Throws DomainError for an inequitable partition; cross-checks Q^T A Q
// against the integer entry rule to 1e-12.
QuotientGraph quotient(const SignedGraph& g, const Partition& pi);

// Coarsest equitable refinement of `seed`, by splitting cells on the vector
// of (positive, negative) neighbour counts into the current cells.
Partition coarsest_equitable(const SignedGraph& g, const Partition& seed);

struct QuotientTransfer {
  WalkAmplitude full;
  WalkAmplitude quotient;
  bool agree = false;
};

// Both sides of <b|exp(-itA)|a> = <pi(b)|exp(-itA/pi)|pi(a)>; a and b must sit
// in singleton cells. Agreement tolerance 1e-10.
QuotientTransfer quotient_transfer_check(const SignedGraph& g,
                                         const Partition& pi, Index from,
                                         Index to, double t);

// Partition files: one cell per line, vertices separated by spaces; `#`
// comments and blank lines are ignored.
Partition read_partition(std::istream& in, Index n);
void write_partition(std::ostream& out, const Partition& pi);

}  // namespace signedwalk
