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

#include "signedwalk/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "signedwalk/errors.hpp"

namespace signedwalk {

Partition Partition::from_cells(Index n, std::vector<std::vector<Index>> cells) {
  std::vector<Index> cell_of(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    auto& cell = cells[k];
    if (cell.empty()) throw DomainError("partition cells must be non-empty");
    std::sort(cell.begin(), cell.end());
    for (Index v : cell) {
      if (v < 0 || v >= n) {
        throw DomainError("partition vertex " + std::to_string(v) +
                          " out of range");
      }
      auto& slot = cell_of[static_cast<std::size_t>(v)];
      if (slot != -1) {
        throw DomainError("vertex " + std::to_string(v) +
                          " appears in two cells");
      }
      slot = static_cast<Index>(k);
    }
  }
  for (Index v = 0; v < n; ++v) {
    if (cell_of[static_cast<std::size_t>(v)] == -1) {
      throw DomainError("vertex " + std::to_string(v) + " is in no cell");
    }
  }
  return Partition(std::move(cell_of), std::move(cells));
}

Partition Partition::from_cell_of(std::vector<Index> cell_of) {
  Index m = 0;
  for (Index c : cell_of) {
    if (c < 0) throw DomainError("negative cell index");
    m = std::max(m, c + 1);
  }
  std::vector<std::vector<Index>> cells(static_cast<std::size_t>(m));
  for (std::size_t v = 0; v < cell_of.size(); ++v) {
    cells[static_cast<std::size_t>(cell_of[v])].push_back(static_cast<Index>(v));
  }
  for (const auto& cell : cells) {
    if (cell.empty()) throw DomainError("cell indices must be contiguous");
  }
  return Partition(std::move(cell_of), std::move(cells));
}

Partition Partition::discrete(Index n) {
  std::vector<Index> cell_of(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v) cell_of[static_cast<std::size_t>(v)] = v;
  return from_cell_of(std::move(cell_of));
}

Partition Partition::single_cell(Index n) {
  return from_cell_of(std::vector<Index>(static_cast<std::size_t>(n), 0));
}

namespace {

void require_matching(const SignedGraph& g, const Partition& pi) {
  if (!g.is_simple()) {
    throw DomainError("equitable partitions need a simple signed graph");
  }
  if (pi.vertex_count() != g.size()) {
    throw DomainError("partition size does not match the graph");
  }
}

// counts(v, k) = number of positive (sign = +1) or negative neighbours of v
// in cell k.
IntMatrix neighbour_counts(const SignedGraph& g, const Partition& pi,
                           int sign) {
  IntMatrix counts = IntMatrix::Zero(g.size(), pi.cell_count());
  for (Index v = 0; v < g.size(); ++v) {
    for (Index u = 0; u < g.size(); ++u) {
      if (g(v, u) == sign) ++counts(v, pi.cell_of(u));
    }
  }
  return counts;
}

}  // namespace

EquitableCheck is_equitable(const SignedGraph& g, const Partition& pi) {
  require_matching(g, pi);
  const IntMatrix plus = neighbour_counts(g, pi, +1);
  const IntMatrix minus = neighbour_counts(g, pi, -1);
  const Index m = pi.cell_count();
  EquitableProfile profile{IntMatrix::Zero(m, m), IntMatrix::Zero(m, m)};
  for (Index j = 0; j < m; ++j) {
    const auto& cell = pi.cell(j);
    const Index rep = cell.front();
    for (Index v : cell) {
      if (plus.row(v) != plus.row(rep) || minus.row(v) != minus.row(rep)) {
        return {};
      }
    }
    profile.d_plus.row(j) = plus.row(rep);
    profile.d_minus.row(j) = minus.row(rep);
  }
  return {true, std::move(profile)};
}

Eigen::MatrixXd normalized_partition_matrix(const Partition& pi) {
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(pi.vertex_count(), pi.cell_count());
  for (Index k = 0; k < pi.cell_count(); ++k) {
    const auto& cell = pi.cell(k);
    const double w = 1.0 / std::sqrt(static_cast<double>(cell.size()));
    for (Index v : cell) q(v, k) = w;
  }
  return q;
}

QuotientGraph quotient(const SignedGraph& g, const Partition& pi) {
  auto check = is_equitable(g, pi);
  if (!check.ok) throw DomainError("partition is not equitable");
  const IntMatrix d = check.profile->d_signed();
  const Index m = pi.cell_count();
  Eigen::MatrixXd entries = Eigen::MatrixXd::Zero(m, m);
  for (Index j = 0; j < m; ++j) {
    for (Index k = 0; k < m; ++k) {
      if (d(j, k) == 0) continue;
      const double magnitude =
          std::sqrt(std::abs(static_cast<double>(d(j, k)) * d(k, j)));
      entries(j, k) = d(j, k) > 0 ? magnitude : -magnitude;
    }
  }
  const Eigen::MatrixXd q = normalized_partition_matrix(pi);
  const Eigen::MatrixXd projected = q.transpose() * g.to_real() * q;
  if (m > 0 && (projected - entries).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::logic_error("quotient entry rule disagrees with Q^T A Q");
  }
  return {WeightedGraph(std::move(entries)), pi, std::move(*check.profile)};
}

Partition coarsest_equitable(const SignedGraph& g, const Partition& seed) {
  require_matching(g, seed);
  Partition current = seed;
  for (;;) {
    const IntMatrix plus = neighbour_counts(g, current, +1);
    const IntMatrix minus = neighbour_counts(g, current, -1);
    std::map<std::vector<int>, Index> ids;
    std::vector<Index> cell_of(static_cast<std::size_t>(g.size()));
    for (Index v = 0; v < g.size(); ++v) {
      std::vector<int> signature;
      signature.reserve(static_cast<std::size_t>(2 * current.cell_count() + 1));
      signature.push_back(static_cast<int>(current.cell_of(v)));
      for (Index k = 0; k < current.cell_count(); ++k) {
        signature.push_back(plus(v, k));
        signature.push_back(minus(v, k));
      }
      const auto next = static_cast<Index>(ids.size());
      cell_of[static_cast<std::size_t>(v)] =
          ids.try_emplace(std::move(signature), next).first->second;
    }
    Partition refined = Partition::from_cell_of(std::move(cell_of));
    if (refined.cell_count() == current.cell_count()) return refined;
    current = std::move(refined);
  }
}

QuotientTransfer quotient_transfer_check(const SignedGraph& g,
                                         const Partition& pi, Index from,
                                         Index to, double t) {
  require_matching(g, pi);
  if (from < 0 || to < 0 || from >= g.size() || to >= g.size()) {
    throw DomainError("vertex out of range");
  }
  if (!pi.is_singleton(from) || !pi.is_singleton(to)) {
    throw DomainError("quotient transfer needs singleton endpoint cells");
  }
  const QuotientGraph q = quotient(g, pi);
  QuotientTransfer out;
  out.full = QuantumWalk(g).amplitude(from, to, t);
  out.quotient =
      QuantumWalk(q.graph).amplitude(pi.cell_of(from), pi.cell_of(to), t);
  out.agree = std::abs(out.full.value() - out.quotient.value()) <= 1e-10;
  return out;
}

Partition read_partition(std::istream& in, Index n) {
  std::vector<std::vector<Index>> cells;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto pos = line.find('#'); pos != std::string::npos) {
      line.resize(pos);
    }
    std::istringstream fields(line);
    std::vector<Index> cell;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw ParseError("line " + std::to_string(lineno) +
                         ": bad vertex '" + token + "'");
      }
      cell.push_back(static_cast<Index>(v));
    }
    if (!cell.empty()) cells.push_back(std::move(cell));
  }
  try {
    return Partition::from_cells(n, std::move(cells));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

void write_partition(std::ostream& out, const Partition& pi) {
  for (const auto& cell : pi.cells()) {
    for (std::size_t i = 0; i < cell.size(); ++i) {
      out << (i ? " " : "") << cell[i];
    }
    out << '\n';
  }
}

}  // namespace signedwalk
