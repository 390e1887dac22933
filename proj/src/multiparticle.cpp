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

#include "signedwalk/multiparticle.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "signedwalk/construct.hpp"
#include "signedwalk/errors.hpp"

namespace signedwalk {
namespace {

void require_unsigned_simple(const SignedGraph& g, const char* op) {
  if (!g.is_simple() || !g.all_positive()) {
    throw DomainError(std::string(op) + " requires an unsigned simple graph");
  }
}

void require_fermion_range(Index n, Index k) {
  if (k < 1 || k > n - 1) {
    throw DomainError("particle count k = " + std::to_string(k) +
                      " outside [1, n - 1] for n = " + std::to_string(n));
  }
}

Index tensor_dimension(Index n, Index k) {
  Index dim = 1;
  for (Index i = 0; i < k; ++i) {
    if (dim > kMaxTensorDimension / std::max<Index>(n, 1)) {
      throw DomainError("n^k exceeds the dense tensor limit of " +
                        std::to_string(kMaxTensorDimension));
    }
    dim *= n;
  }
  return dim;
}

int permutation_sign(const std::vector<Index>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

double factorial(Index k) {
  double f = 1.0;
  for (Index i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

void collect_multisets(Index n, Index k, Index lowest, std::vector<Index>& prefix,
                       std::vector<MultisetState>& out) {
  if (static_cast<Index>(prefix.size()) == k) {
    MultisetState state{std::vector<Index>(static_cast<std::size_t>(n), 0)};
    for (Index v : prefix) ++state.occupation[static_cast<std::size_t>(v)];
    out.push_back(std::move(state));
    return;
  }
  for (Index v = lowest; v < n; ++v) {
    prefix.push_back(v);
    collect_multisets(n, k, v, prefix, out);
    prefix.pop_back();
  }
}

// Kernel shared by the exterior and symmetric powers.
SignedGraph subset_hopping_graph(const SignedGraph& g, Index k, bool signed_rule) {
  const Index n = g.size();
  const auto subsets = k_subsets(n, k);
  const auto m = static_cast<Index>(subsets.size());
  IntMatrix a = IntMatrix::Zero(m, m);
  for (const auto& subset : subsets) {
    const auto& members = subset.members;
    for (Index r = 0; r < k; ++r) {
      const Index u = members[static_cast<std::size_t>(r)];
      for (Index v = 0; v < n; ++v) {
        if (g(u, v) == 0 ||
            std::binary_search(members.begin(), members.end(), v)) {
          continue;
        }
        std::vector<Index> target = members;
        target.erase(target.begin() + r);
        const auto pos = std::lower_bound(target.begin(), target.end(), v);
        const auto s = static_cast<Index>(pos - target.begin());
        target.insert(pos, v);
        const int sign = signed_rule && (r + s) % 2 != 0 ? -1 : 1;
        a(subset.rank, subset_rank(target, n)) = sign;
      }
    }
  }
  return SignedGraph(std::move(a));
}

}  // namespace

Index binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Index out = 1;
  for (Index i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::vector<KSubset> k_subsets(Index n, Index k) {
  std::vector<KSubset> out;
  if (k < 0 || k > n) return out;
  std::vector<Index> current(static_cast<std::size_t>(k));
  std::iota(current.begin(), current.end(), Index{0});
  for (Index rank = 0;; ++rank) {
    out.push_back({current, rank});
    Index i = k - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) {
      current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

Index subset_rank(std::span<const Index> members, Index n) {
  const auto k = static_cast<Index>(members.size());
  Index rank = 0;
  Index next = 0;
  for (Index i = 0; i < k; ++i) {
    const Index m = members[static_cast<std::size_t>(i)];
    if (m < next || m >= n) {
      throw DomainError("subset members must be increasing and in range");
    }
    for (Index x = next; x < m; ++x) rank += binomial(n - 1 - x, k - 1 - i);
    next = m + 1;
  }
  return rank;
}

KSubset subset_unrank(Index rank, Index n, Index k) {
  if (rank < 0 || rank >= binomial(n, k)) {
    throw DomainError("subset rank out of range");
  }
  KSubset out{{}, rank};
  Index x = 0;
  for (Index i = 0; i < k; ++i) {
    for (;; ++x) {
      const Index block = binomial(n - 1 - x, k - 1 - i);
      if (rank < block) break;
      rank -= block;
    }
    out.members.push_back(x++);
  }
  return out;
}

std::vector<Index> MultisetState::members() const {
  std::vector<Index> out;
  for (std::size_t v = 0; v < occupation.size(); ++v) {
    out.insert(out.end(), static_cast<std::size_t>(occupation[v]),
               static_cast<Index>(v));
  }
  return out;
}

std::vector<MultisetState> k_multisets(Index n, Index k) {
  std::vector<MultisetState> out;
  std::vector<Index> prefix;
  collect_multisets(n, k, 0, prefix, out);
  return out;
}

Index tuple_index(std::span<const Index> tuple, Index n) {
  Index index = 0;
  for (Index u : tuple) index = index * n + u;
  return index;
}

Eigen::MatrixXd antisymmetrizer(Index n, Index k) {
  require_fermion_range(n, k);
  const Index rows = tensor_dimension(n, k);
  const auto subsets = k_subsets(n, k);
  Eigen::MatrixXd alt =
      Eigen::MatrixXd::Zero(rows, static_cast<Index>(subsets.size()));
  const double scale = 1.0 / std::sqrt(factorial(k));
  std::vector<Index> perm(static_cast<std::size_t>(k));
  std::vector<Index> tuple(static_cast<std::size_t>(k));
  for (const auto& subset : subsets) {
    std::iota(perm.begin(), perm.end(), Index{0});
    do {
      for (std::size_t i = 0; i < perm.size(); ++i) {
        tuple[i] = subset.members[static_cast<std::size_t>(perm[i])];
      }
      alt(tuple_index(tuple, n), subset.rank) = permutation_sign(perm) * scale;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return alt;
}

Eigen::MatrixXd symmetrizer(Index n, Index k) {
  if (k < 1) throw DomainError("particle count must be positive");
  const Index rows = tensor_dimension(n, k);
  const auto states = k_multisets(n, k);
  Eigen::MatrixXd sym =
      Eigen::MatrixXd::Zero(rows, static_cast<Index>(states.size()));
  for (std::size_t c = 0; c < states.size(); ++c) {
    std::vector<Index> tuple = states[c].members();
    std::vector<Index> orbit;
    do {
      orbit.push_back(tuple_index(tuple, n));
    } while (std::next_permutation(tuple.begin(), tuple.end()));
    const double w = 1.0 / std::sqrt(static_cast<double>(orbit.size()));
    for (Index row : orbit) sym(row, static_cast<Index>(c)) = w;
  }
  return sym;
}

SignedGraph exterior_power(const SignedGraph& g, Index k) {
  require_unsigned_simple(g, "exterior_power");
  require_fermion_range(g.size(), k);
  return subset_hopping_graph(g, k, true);
}

WeightedGraph exterior_power_oracle(const SignedGraph& g, Index k) {
  require_unsigned_simple(g, "exterior_power_oracle");
  require_fermion_range(g.size(), k);
  const Eigen::MatrixXd alt = antisymmetrizer(g.size(), k);
  const Eigen::MatrixXd tensor =
      cartesian_power(g, static_cast<int>(k)).to_real();
  Eigen::MatrixXd projected = alt.transpose() * (tensor * alt);
  for (Index j = 0; j < projected.cols(); ++j) {
    for (Index i = 0; i < projected.rows(); ++i) {
      const double r = std::round(projected(i, j));
      if (std::abs(projected(i, j) - r) > 1e-9 || std::abs(r) > 1.0) {
        throw std::logic_error("Alt^T A Alt has a non-signed entry");
      }
      projected(i, j) = r;
    }
  }
  return WeightedGraph(std::move(projected));
}

SignedGraph symmetric_power(const SignedGraph& g, Index k) {
  require_unsigned_simple(g, "symmetric_power");
  require_fermion_range(g.size(), k);
  return subset_hopping_graph(g, k, false);
}

WeightedGraph boson_quotient(const SignedGraph& g, Index k) {
  require_unsigned_simple(g, "boson_quotient");
  const Eigen::MatrixXd sym = symmetrizer(g.size(), k);
  const Eigen::MatrixXd tensor =
      cartesian_power(g, static_cast<int>(k)).to_real();
  const Eigen::MatrixXd projected = sym.transpose() * (tensor * sym);
  return WeightedGraph(0.5 * (projected + projected.transpose()));
}

double boson_formula_weight(std::span<const Index> occupation, Index u,
                            Index v) {
  const auto au = static_cast<double>(occupation[static_cast<std::size_t>(u)]);
  const auto av = static_cast<double>(occupation[static_cast<std::size_t>(v)]);
  const double radicand = (au - 1.0) * (av + 1.0);
  return radicand > 0.0 ? std::sqrt(radicand) : 0.0;
}

std::vector<BosonWeightMismatch> compare_boson_weight_formula(
    const SignedGraph& g, Index k) {
  const WeightedGraph oracle = boson_quotient(g, k);
  const auto states = k_multisets(g.size(), k);
  std::map<std::vector<Index>, Index> rank;
  for (std::size_t i = 0; i < states.size(); ++i) {
    rank.emplace(states[i].occupation, static_cast<Index>(i));
  }
  std::vector<BosonWeightMismatch> out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& a = states[i].occupation;
    for (Index u = 0; u < g.size(); ++u) {
      if (a[static_cast<std::size_t>(u)] == 0) continue;
      for (Index v = 0; v < g.size(); ++v) {
        if (g(u, v) == 0) continue;
        std::vector<Index> b = a;
        --b[static_cast<std::size_t>(u)];
        ++b[static_cast<std::size_t>(v)];
        const Index j = rank.at(b);
        const double w_oracle = oracle(static_cast<Index>(i), j);
        const double w_formula = boson_formula_weight(a, u, v);
        if (std::abs(w_oracle - w_formula) > 1e-9) {
          out.push_back({static_cast<Index>(i), j, u, v, w_oracle, w_formula});
        }
      }
    }
  }
  return out;
}

std::complex<double> slater_amplitude(const QuantumWalk& single,
                                      std::span<const Index> from,
                                      std::span<const Index> to, double t) {
  if (from.size() != to.size()) {
    throw DomainError("slater amplitude needs equal particle counts");
  }
  const auto k = static_cast<Index>(from.size());
  Eigen::MatrixXcd m(k, k);
  for (Index j = 0; j < k; ++j) {
    for (Index l = 0; l < k; ++l) {
      m(j, l) = single
                    .amplitude(from[static_cast<std::size_t>(l)],
                               to[static_cast<std::size_t>(j)], t)
                    .value();
    }
  }
  return m.determinant();
}

PstVerdict fermion_pst_lift(const SignedGraph& g,
                            std::span<const std::pair<Index, Index>> pairs,
                            double t, double tol) {
  require_unsigned_simple(g, "fermion_pst_lift");
  if (pairs.empty()) throw DomainError("fermion_pst_lift needs a pair");
  std::vector<Index> sources;
  std::vector<Index> targets;
  std::vector<Index> endpoints;
  for (auto [a, b] : pairs) {
    sources.push_back(a);
    targets.push_back(b);
    endpoints.push_back(a);
    endpoints.push_back(b);
  }
  std::sort(endpoints.begin(), endpoints.end());
  if (std::adjacent_find(endpoints.begin(), endpoints.end()) != endpoints.end()) {
    throw DomainError("PST pairs must be pairwise disjoint");
  }
  const QuantumWalk single(g);
  for (auto [a, b] : pairs) {
    if (is_pst(single, a, b, t, tol).kind != TransferKind::pst) {
      throw DomainError("pair (" + std::to_string(a) + ", " +
                        std::to_string(b) + ") has no PST at the given time");
    }
  }
  std::sort(sources.begin(), sources.end());
  std::sort(targets.begin(), targets.end());
  const auto k = static_cast<Index>(pairs.size());
  const QuantumWalk lifted(exterior_power(g, k));
  return is_pst(lifted, subset_rank(sources, g.size()),
                subset_rank(targets, g.size()), t, tol);
}

}  // namespace signedwalk
