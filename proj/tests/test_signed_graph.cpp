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

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "signedwalk/construct.hpp"
#include "signedwalk/errors.hpp"
#include "signedwalk/signed_graph.hpp"
#include "signedwalk/spectrum.hpp"

namespace signedwalk {
namespace {

SignedGraph c4_with_signs(int s01, int s12, int s23, int s30) {
  const std::vector<SignedEdge> edges{{0, 1, s01}, {1, 2, s12}, {2, 3, s23}, {0, 3, s30}};
  return build_signed_graph(4, edges);
}

TEST(BuildSignedGraph, SingleEdgeGivesUnsignedK2) {
  const std::vector<SignedEdge> edges{{0, 1, 1}};
  const SignedGraph g = build_signed_graph(2, edges);
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g(0, 1), 1);
  EXPECT_EQ(g(1, 0), 1);
  EXPECT_EQ(g(0, 0), 0);
  EXPECT_EQ(g, complete(2));
}

TEST(BuildSignedGraph, UnbalancedCycle) {
  const SignedGraph g = c4_with_signs(-1, 1, 1, 1);
  EXPECT_EQ(g.edge_count(), 4);
  EXPECT_EQ(g(0, 1), -1);
  EXPECT_EQ(g(3, 0), 1);
  EXPECT_FALSE(g.all_positive());
}

TEST(BuildSignedGraph, RejectsBadEdges) {
  const std::vector<SignedEdge> duplicate{{0, 1, 1}, {1, 0, -1}};
  EXPECT_THROW(build_signed_graph(2, duplicate), DomainError);
  const std::vector<SignedEdge> loop{{1, 1, 1}};
  EXPECT_THROW(build_signed_graph(2, loop), DomainError);
  const std::vector<SignedEdge> range{{0, 2, 1}};
  EXPECT_THROW(build_signed_graph(2, range), DomainError);
  const std::vector<SignedEdge> sign{{0, 1, 0}};
  EXPECT_THROW(build_signed_graph(2, sign), DomainError);
}

TEST(BuildSignedGraph, MultigraphSumsParallelEdges) {
  const std::vector<SignedEdge> edges{{0, 1, 1}, {1, 0, 1}, {1, 2, -1}};
  const SignedGraph g = build_signed_graph(3, edges, GraphMode::multigraph);
  EXPECT_EQ(g(0, 1), 2);
  EXPECT_EQ(g(1, 2), -1);
  EXPECT_FALSE(g.is_simple());
}

TEST(SignedGraphInvariants, ConstructorValidates) {
  IntMatrix asym = IntMatrix::Zero(2, 2);
  asym(0, 1) = 1;
  EXPECT_THROW(SignedGraph{asym}, DomainError);
  IntMatrix diag = IntMatrix::Identity(2, 2);
  EXPECT_THROW(SignedGraph{diag}, DomainError);
  IntMatrix big = IntMatrix::Zero(2, 2);
  big(0, 1) = big(1, 0) = 2;
  EXPECT_THROW(SignedGraph{big}, DomainError);
  EXPECT_NO_THROW(SignedGraph(big, GraphMode::multigraph));
  EXPECT_THROW(SignedGraph{IntMatrix::Zero(2, 3)}, DomainError);
}

TEST(SignedGraphInvariants, EdgesAreSortedUpperTriangle) {
  const SignedGraph g = c4_with_signs(1, -1, 1, -1);
  const auto edges = g.edges();
  ASSERT_EQ(edges.size(), 4u);
  EXPECT_EQ(edges[0].u, 0);
  EXPECT_EQ(edges[0].v, 1);
  EXPECT_EQ(edges[1].v, 3);
  EXPECT_EQ(edges[1].sign, -1);
  EXPECT_EQ(edges[3].u, 2);
}

TEST(Decomposition, AllPositiveHasEmptyNegativePart) {
  const SignedGraph g = petersen();
  EXPECT_EQ(negative_part(g).edge_count(), 0);
  EXPECT_EQ(positive_part(g), g);
  EXPECT_EQ(underlying(g), g);
}

TEST(Decomposition, AntibalancedCycleSplitsTwoAndTwo) {
  const SignedGraph g = c4_with_signs(-1, -1, 1, 1);
  EXPECT_EQ(positive_part(g).edge_count(), 2);
  EXPECT_EQ(negative_part(g).edge_count(), 2);
  EXPECT_EQ(positive_part(g).adjacency() - negative_part(g).adjacency(),
            g.adjacency());
}

TEST(Decomposition, CocktailPlusMatchingMinusHasUnderlyingK8) {
  const SignedGraph g =
      signed_union(cocktail_party(4), antipodal_matching(8), -1);
  EXPECT_EQ(underlying(g), complete(8));
}

TEST(Decomposition, RejectsMultigraph) {
  const SignedGraph m(IntMatrix::Zero(2, 2), GraphMode::multigraph);
  EXPECT_THROW(positive_part(m), DomainError);
  EXPECT_THROW(negative_part(m), DomainError);
  EXPECT_THROW(underlying(m), DomainError);
}

TEST(Decomposition, PartsAreDisjointAndRecoverUnderlying) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const SignedGraph g = testing::random_signed_graph(7, rng);
    const IntMatrix p = positive_part(g).adjacency();
    const IntMatrix q = negative_part(g).adjacency();
    EXPECT_EQ((p.array() * q.array()).abs().sum(), 0);
    EXPECT_EQ(underlying(g).adjacency(), p + q);
  }
}

TEST(Switching, IdentityAndInvolution) {
  const SignedGraph g = c4_with_signs(-1, 1, 1, 1);
  EXPECT_EQ(switching(g, SwitchingVector::identity(4)), g);
  Eigen::VectorXi d(4);
  d << 1, -1, -1, 1;
  const SwitchingVector sv(d);
  EXPECT_EQ(switching(switching(g, sv), sv), g);
}

TEST(Switching, NegativeK2BecomesPositive) {
  const SignedGraph g = negate(complete(2));
  Eigen::VectorXi d(2);
  d << 1, -1;
  EXPECT_EQ(switching(g, SwitchingVector(d)), complete(2));
}

TEST(Switching, RejectsLengthMismatchAndBadEntries) {
  EXPECT_THROW(switching(complete(3), SwitchingVector::identity(2)), DomainError);
  Eigen::VectorXi bad(2);
  bad << 1, 0;
  EXPECT_THROW(SwitchingVector{bad}, DomainError);
}

TEST(Balance, AllPositiveCycleIsBalancedWithTrivialWitness) {
  const BalanceVerdict v = balance_verdict(cycle(4));
  EXPECT_EQ(v.status, BalanceStatus::balanced);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->entries(), Eigen::VectorXi::Ones(4));
  EXPECT_TRUE(v.also_antibalanced);  // even cycle
}

TEST(Balance, TwoNegativeEdgesBalanced) {
  const SignedGraph g = c4_with_signs(1, -1, 1, -1);
  const BalanceVerdict v = balance_verdict(g);
  ASSERT_EQ(v.status, BalanceStatus::balanced);
  EXPECT_EQ(switching(g, *v.witness), cycle(4));
}

TEST(Balance, OneNegativeEdgeIsNeither) {
  const BalanceVerdict v = balance_verdict(c4_with_signs(-1, 1, 1, 1));
  EXPECT_EQ(v.status, BalanceStatus::neither);
  EXPECT_FALSE(v.witness.has_value());
}

TEST(Balance, OddCycleAntibalanced) {
  const SignedGraph g = negate(complete(3));
  const BalanceVerdict v = balance_verdict(g);
  EXPECT_EQ(v.status, BalanceStatus::antibalanced);
  EXPECT_FALSE(v.also_antibalanced);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(switching(g, *v.witness), negate(complete(3)));
  EXPECT_EQ(to_string(v.status), "antibalanced");
}

TEST(Balance, RejectsDisconnectedAndMultigraph) {
  EXPECT_THROW(balance_verdict(SignedGraph::edgeless(3)), DomainError);
  IntMatrix a = IntMatrix::Zero(2, 2);
  a(0, 1) = a(1, 0) = 2;
  EXPECT_THROW(balance_verdict(SignedGraph(a, GraphMode::multigraph)), DomainError);
}

// Every simple cycle of the underlying graph as a vertex sequence.
std::vector<std::vector<Index>> all_cycles(const SignedGraph& g) {
  std::vector<std::vector<Index>> out;
  const Index n = g.size();
  std::vector<Index> path;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void(Index, Index)> extend = [&](Index start, Index at) {
    for (Index v = start; v < n; ++v) {
      if (g(at, v) == 0) continue;
      if (v == start && path.size() >= 3) out.push_back(path);
      if (v == start || used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      path.push_back(v);
      extend(start, v);
      path.pop_back();
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  for (Index s = 0; s < n; ++s) {
    path = {s};
    used.assign(static_cast<std::size_t>(n), false);
    used[static_cast<std::size_t>(s)] = true;
    extend(s, s);
  }
  return out;
}

void check_all_sign_patterns(const SignedGraph& base) {
  const auto edges = base.edges();
  const auto cycles = all_cycles(base);
  ASSERT_FALSE(cycles.empty());
  for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<SignedEdge> signed_edges = edges;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      signed_edges[i].sign = (mask >> i) & 1u ? -1 : 1;
    }
    const SignedGraph g = build_signed_graph(base.size(), signed_edges);
    bool balanced = true;
    bool antibalanced = true;
    for (const auto& c : cycles) {
      int product = 1;
      for (std::size_t i = 0; i < c.size(); ++i) {
        product *= g(c[i], c[(i + 1) % c.size()]);
      }
      balanced = balanced && product == 1;
      antibalanced = antibalanced && product == (c.size() % 2 == 0 ? 1 : -1);
    }
    const BalanceVerdict v = balance_verdict(g);
    if (balanced) {
      EXPECT_EQ(v.status, BalanceStatus::balanced) << "mask " << mask;
      EXPECT_EQ(v.also_antibalanced, antibalanced) << "mask " << mask;
      EXPECT_EQ(switching(g, *v.witness), underlying(g));
    } else if (antibalanced) {
      EXPECT_EQ(v.status, BalanceStatus::antibalanced) << "mask " << mask;
      EXPECT_EQ(switching(g, *v.witness), negate(underlying(g)));
    } else {
      EXPECT_EQ(v.status, BalanceStatus::neither) << "mask " << mask;
    }
  }
}

TEST(Balance, ExhaustiveC4AgainstCycleOracle) { check_all_sign_patterns(cycle(4)); }
TEST(Balance, ExhaustiveK4AgainstCycleOracle) { check_all_sign_patterns(complete(4)); }

TEST(Switching, PreservesSpectrumAndBalanceStatus) {
  std::mt19937_64 rng(5);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < 30; ++i) {
    std::vector<SignedEdge> edges = petersen().edges();
    for (auto& e : edges) e.sign = coin(rng) ? 1 : -1;
    const SignedGraph g = build_signed_graph(10, edges);
    const SignedGraph h = switching(g, testing::random_switching(10, rng));
    const auto s1 = eig_sym(g.to_real());
    const auto s2 = eig_sym(h.to_real());
    EXPECT_LE((s1.eigenvalues() - s2.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_EQ(balance_verdict(g).status, balance_verdict(h).status);
  }
}

TEST(SignedUnion, EdgelessIsNeutral) {
  EXPECT_EQ(signed_union(petersen(), SignedGraph::edgeless(10), -1), petersen());
}

TEST(SignedUnion, CocktailMinusMatchingIsJMinusIMinus2P) {
  const SignedGraph g =
      signed_union(cocktail_party(4), antipodal_matching(8), -1);
  const IntMatrix expected = IntMatrix::Ones(8, 8) - IntMatrix::Identity(8, 8) -
                             2 * antipodal_matching(8).adjacency();
  EXPECT_EQ(g.adjacency(), expected);
}

TEST(SignedUnion, OverlapRejectedInSimpleModeSummedInMultigraph) {
  EXPECT_THROW(signed_union(hypercube(3), cubelike(CubelikeSpec::make(3, {1, 7})), -1),
               DomainError);
  const SignedGraph m = signed_union(complete(3), complete(3), 1, GraphMode::multigraph);
  EXPECT_EQ(m(0, 1), 2);
  EXPECT_THROW(signed_union(complete(3), complete(4), 1), DomainError);
}

TEST(WeightedGraph, RequiresSymmetry) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2, 2);
  w(0, 1) = 0.5;
  EXPECT_THROW(WeightedGraph{w}, DomainError);
  w(1, 0) = 0.5;
  w(0, 0) = 2.0;
  EXPECT_NO_THROW(WeightedGraph{w});
}

}  // namespace
}  // namespace signedwalk
