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

#include "signedwalk/construct.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "signedwalk/errors.hpp"

namespace signedwalk {
namespace {

void require_at_least(Index value, Index minimum, const char* what) {
  if (value < minimum) {
    throw DomainError(std::string(what) + " must be at least " +
                      std::to_string(minimum));
  }
}

void require_unsigned_simple(const SignedGraph& g, const char* op) {
  if (!g.is_simple() || !g.all_positive()) {
    throw DomainError(std::string(op) +
                      " requires an all-positive simple graph");
  }
}

}  // namespace

SignedGraph complete(Index n) {
  require_at_least(n, 2, "complete graph size");
  return SignedGraph(IntMatrix::Ones(n, n) - IntMatrix::Identity(n, n));
}

SignedGraph cycle(Index n) {
  require_at_least(n, 3, "cycle length");
  IntMatrix a = IntMatrix::Zero(n, n);
  for (Index x = 0; x < n; ++x) {
    a(x, (x + 1) % n) = a((x + 1) % n, x) = 1;
  }
  return SignedGraph(std::move(a));
}

SignedGraph path(Index n) {
  require_at_least(n, 2, "path size");
  IntMatrix a = IntMatrix::Zero(n, n);
  for (Index x = 0; x + 1 < n; ++x) a(x, x + 1) = a(x + 1, x) = 1;
  return SignedGraph(std::move(a));
}

SignedGraph hypercube(int d) {
  require_at_least(d, 1, "hypercube dimension");
  std::vector<std::uint32_t> basis;
  for (int i = 0; i < d; ++i) basis.push_back(1u << i);
  return cubelike(CubelikeSpec::make(d, std::move(basis)));
}

SignedGraph cocktail_party(Index parts) {
  require_at_least(parts, 2, "cocktail party part count");
  const Index n = 2 * parts;
  return SignedGraph(IntMatrix::Ones(n, n) - IntMatrix::Identity(n, n) -
                     antipodal_matching(n).adjacency());
}

SignedGraph complete_bipartite(Index left, Index right) {
  require_at_least(left, 1, "bipartition side");
  require_at_least(right, 1, "bipartition side");
  const Index n = left + right;
  IntMatrix a = IntMatrix::Zero(n, n);
  a.topRightCorner(left, right).setOnes();
  a.bottomLeftCorner(right, left).setOnes();
  return SignedGraph(std::move(a));
}

SignedGraph petersen() {
  // Outer 5-cycle 0..4, spokes x -- x+5, inner pentagram on 5..9.
  std::vector<SignedEdge> edges;
  for (Index x = 0; x < 5; ++x) {
    edges.push_back({x, (x + 1) % 5, 1});
    edges.push_back({x, x + 5, 1});
    edges.push_back({5 + x, 5 + (x + 2) % 5, 1});
  }
  return build_signed_graph(10, edges);
}

SignedGraph circulant(Index n, std::span<const Index> offsets) {
  require_at_least(n, 2, "circulant size");
  IntMatrix a = IntMatrix::Zero(n, n);
  for (Index o : offsets) {
    if (o < 1 || 2 * o > n) {
      throw DomainError("circulant offset " + std::to_string(o) +
                        " outside [1, n/2]");
    }
    for (Index x = 0; x < n; ++x) {
      const Index y = (x + o) % n;
      if (a(x, y) != 0 && 2 * o != n) {
        throw DomainError("duplicate circulant offset");
      }
      a(x, y) = a(y, x) = 1;
    }
  }
  return SignedGraph(std::move(a));
}

SignedGraph complement(const SignedGraph& g) {
  require_unsigned_simple(g, "complement");
  const Index n = g.size();
  return SignedGraph(IntMatrix::Ones(n, n) - IntMatrix::Identity(n, n) -
                     g.adjacency());
}

SignedGraph cartesian_product(std::span<const SignedGraph> factors) {
  if (factors.empty()) {
    throw DomainError("cartesian_product needs at least one factor");
  }
  IntMatrix a = factors.front().adjacency();
  bool simple = factors.front().is_simple();
  for (const auto& f : factors.subspan(1)) {
    const IntMatrix left = a;
    a = Eigen::kroneckerProduct(left, IntMatrix::Identity(f.size(), f.size()))
            .eval() +
        Eigen::kroneckerProduct(
            IntMatrix::Identity(left.rows(), left.rows()), f.adjacency())
            .eval();
    simple = simple && f.is_simple();
  }
  return SignedGraph(std::move(a),
                     simple ? GraphMode::simple : GraphMode::multigraph);
}

SignedGraph cartesian_power(const SignedGraph& g, int k) {
  require_at_least(k, 1, "cartesian power");
  std::vector<SignedGraph> factors(static_cast<std::size_t>(k), g);
  return cartesian_product(factors);
}

SignedGraph signed_join(const SignedGraph& g1, const SignedGraph& g2,
                        int sign_g1, int sign_cross) {
  require_unsigned_simple(g1, "signed_join");
  require_unsigned_simple(g2, "signed_join");
  if (std::abs(sign_g1) != 1 || std::abs(sign_cross) != 1) {
    throw DomainError("join signs must be +1 or -1");
  }
  const Index n1 = g1.size();
  const Index n2 = g2.size();
  IntMatrix a(n1 + n2, n1 + n2);
  a.topLeftCorner(n1, n1) = sign_g1 * g1.adjacency();
  a.bottomRightCorner(n2, n2) = g2.adjacency();
  a.topRightCorner(n1, n2).setConstant(sign_cross);
  a.bottomLeftCorner(n2, n1).setConstant(sign_cross);
  return SignedGraph(std::move(a));
}

CubelikeSpec CubelikeSpec::make(int d, std::vector<std::uint32_t> c) {
  if (d < 1 || d > 20) throw DomainError("cubelike dimension must be in [1, 20]");
  std::uint32_t delta = 0;
  std::vector<std::uint32_t> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("duplicate element in connection set");
  }
  for (std::uint32_t x : c) {
    if (x == 0) throw DomainError("connection set may not contain 0");
    if (x >> d) throw DomainError("connection element wider than d bits");
    delta ^= x;
  }
  return CubelikeSpec(d, std::move(c), delta);
}

SignedGraph cubelike(const CubelikeSpec& spec) {
  const Index n = Index{1} << spec.dimension();
  IntMatrix a = IntMatrix::Zero(n, n);
  for (Index u = 0; u < n; ++u) {
    for (std::uint32_t c : spec.connection_set()) {
      a(u, u ^ static_cast<Index>(c)) = 1;
    }
  }
  return SignedGraph(std::move(a));
}

SignedGraph permutation_graph(std::span<const Index> image) {
  const auto n = static_cast<Index>(image.size());
  IntMatrix a = IntMatrix::Zero(n, n);
  for (Index x = 0; x < n; ++x) {
    const Index y = image[static_cast<std::size_t>(x)];
    if (y < 0 || y >= n) throw DomainError("permutation image out of range");
    if (y == x) {
      throw DomainError("permutation has fixed point " + std::to_string(x));
    }
    if (image[static_cast<std::size_t>(y)] != x) {
      throw DomainError("permutation is not an involution at " +
                        std::to_string(x));
    }
    a(x, y) = 1;
  }
  return SignedGraph(std::move(a));
}

SignedGraph permutation_graph(Index n,
                              std::span<const std::pair<Index, Index>> pairs) {
  std::vector<Index> image(static_cast<std::size_t>(n), -1);
  for (auto [x, y] : pairs) {
    if (x < 0 || y < 0 || x >= n || y >= n) {
      throw DomainError("matching pair out of range");
    }
    auto& ix = image[static_cast<std::size_t>(x)];
    auto& iy = image[static_cast<std::size_t>(y)];
    if (ix != -1 || iy != -1) {
      throw DomainError("vertex matched twice: not an involution");
    }
    ix = y;
    iy = x;
  }
  for (Index x = 0; x < n; ++x) {
    if (image[static_cast<std::size_t>(x)] == -1) {
      throw DomainError("vertex " + std::to_string(x) + " is a fixed point");
    }
  }
  return permutation_graph(image);
}

SignedGraph antipodal_matching(Index n) {
  if (n < 2 || n % 2 != 0) {
    throw DomainError("antipodal matching needs an even vertex count");
  }
  std::vector<Index> image(static_cast<std::size_t>(n));
  for (Index x = 0; x < n; ++x) {
    image[static_cast<std::size_t>(x)] = (x + n / 2) % n;
  }
  return permutation_graph(image);
}

SignedGraph xor_matching(int d, std::uint32_t delta) {
  if (d < 1 || d > 20) throw DomainError("dimension must be in [1, 20]");
  if (delta == 0 || (delta >> d)) {
    throw DomainError("xor matching needs a nonzero d-bit delta");
  }
  const Index n = Index{1} << d;
  std::vector<Index> image(static_cast<std::size_t>(n));
  for (Index x = 0; x < n; ++x) {
    image[static_cast<std::size_t>(x)] = x ^ static_cast<Index>(delta);
  }
  return permutation_graph(image);
}

SignedGraph double_cover(const SignedGraph& g) {
  return double_cover(
      SignedGraph(g.adjacency().cwiseMax(0), GraphMode::multigraph),
      SignedGraph((-g.adjacency()).cwiseMax(0), GraphMode::multigraph));
}

SignedGraph double_cover(const SignedGraph& positive,
                         const SignedGraph& negative) {
  if (positive.size() != negative.size()) {
    throw DomainError("double_cover parts must have equal vertex counts");
  }
  if (!positive.all_positive() || !negative.all_positive()) {
    throw DomainError("double_cover parts must be unsigned");
  }
  IntMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  IntMatrix a =
      Eigen::kroneckerProduct(positive.adjacency(), IntMatrix::Identity(2, 2))
          .eval() +
      Eigen::kroneckerProduct(negative.adjacency(), swap).eval();
  const bool simple = (a.array() <= 1).all();
  return SignedGraph(std::move(a),
                     simple ? GraphMode::simple : GraphMode::multigraph);
}

RegularGraphStats regular_stats(const SignedGraph& g) {
  if (g.size() == 0) throw DomainError("empty graph is not regular");
  const Eigen::VectorXi degrees = g.adjacency().cwiseAbs().rowwise().sum();
  if ((degrees.array() != degrees[0]).any()) {
    throw DomainError("graph is not regular");
  }
  if (!is_connected(g)) throw DomainError("regular graph must be connected");
  return {g.size(), degrees[0]};
}

SignedGraph random_regular(Index n, Index k, std::uint64_t seed) {
  if (k < 1 || k >= n || (n * k) % 2 != 0) {
    throw DomainError("no simple k-regular graph with these parameters");
  }
  std::mt19937_64 rng(seed);
  std::vector<Index> points(static_cast<std::size_t>(n * k));
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      points[i] = static_cast<Index>(i) / k;
    }
    std::shuffle(points.begin(), points.end(), rng);
    IntMatrix a = IntMatrix::Zero(n, n);
    bool ok = true;
    for (std::size_t i = 0; ok && i < points.size(); i += 2) {
      const Index u = points[i];
      const Index v = points[i + 1];
      ok = u != v && a(u, v) == 0;
      if (ok) a(u, v) = a(v, u) = 1;
    }
    if (!ok) continue;
    SignedGraph g(std::move(a));
    if (is_connected(g)) return g;
  }
  throw DomainError("random_regular failed to sample a connected graph");
}

}  // namespace signedwalk
