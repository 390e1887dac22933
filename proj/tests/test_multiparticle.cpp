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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "signedwalk/construct.hpp"
#include "signedwalk/errors.hpp"
#include "signedwalk/multiparticle.hpp"
#include "signedwalk/spectrum.hpp"
#include "signedwalk/walk.hpp"

namespace signedwalk {
namespace {

constexpr double kPi = std::numbers::pi;

// a < b < c < d with edges ab, ac, bd, cd.
SignedGraph wedge_c4() {
  const std::vector<SignedEdge> e{{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}};
  return build_signed_graph(4, e);
}

SignedGraph graph_from_mask(Index n, unsigned mask) {
  IntMatrix a = IntMatrix::Zero(n, n);
  unsigned bit = 0;
  for (Index u = 0; u < n; ++u) {
    for (Index v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1u) a(u, v) = a(v, u) = 1;
    }
  }
  return SignedGraph(std::move(a));
}

std::complex<double> value(const WalkAmplitude& a) { return {a.re, a.im}; }

int permutation_parity(const std::vector<Index>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  }
  return inv % 2 ? -1 : 1;
}

TEST(Combinatorics, BinomialAndSubsets) {
  EXPECT_EQ(binomial(8, 2), 28);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  const auto s = k_subsets(4, 2);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s[0].members, (std::vector<Index>{0, 1}));
  EXPECT_EQ(s[3].members, (std::vector<Index>{1, 2}));
  EXPECT_EQ(s[5].members, (std::vector<Index>{2, 3}));
}

TEST(Combinatorics, RankRoundTrip) {
  for (Index n = 1; n <= 8; ++n) {
    for (Index k = 0; k <= n; ++k) {
      const auto subsets = k_subsets(n, k);
      ASSERT_EQ(static_cast<Index>(subsets.size()), binomial(n, k));
      for (const auto& s : subsets) {
        EXPECT_EQ(subset_rank(s.members, n), s.rank);
        EXPECT_EQ(subset_unrank(s.rank, n, k).members, s.members);
      }
    }
  }
  const std::vector<Index> unsorted{2, 1};
  EXPECT_THROW(subset_rank(unsorted, 4), DomainError);
  EXPECT_THROW(subset_unrank(6, 4, 2), DomainError);
}

TEST(Combinatorics, Multisets) {
  const auto m = k_multisets(3, 2);
  ASSERT_EQ(m.size(), 6u);
  EXPECT_EQ(m[0].occupation, (std::vector<Index>{2, 0, 0}));
  EXPECT_EQ(m[1].occupation, (std::vector<Index>{1, 1, 0}));
  EXPECT_EQ(m[5].occupation, (std::vector<Index>{0, 0, 2}));
  EXPECT_EQ(m[4].members(), (std::vector<Index>{1, 2}));
  EXPECT_EQ(k_multisets(4, 3).size(), static_cast<std::size_t>(binomial(6, 3)));
  const std::vector<Index> t{1, 0, 2};
  EXPECT_EQ(tuple_index(t, 3), 1 * 9 + 0 * 3 + 2);
}

TEST(Antisymmetrizer, SmallCases) {
  EXPECT_EQ(antisymmetrizer(2, 1), Eigen::MatrixXd::Identity(2, 2));
  const Eigen::MatrixXd alt = antisymmetrizer(3, 2);
  ASSERT_EQ(alt.rows(), 9);
  ASSERT_EQ(alt.cols(), 3);
  EXPECT_NEAR(alt(1, 0), 1.0 / std::sqrt(2.0), 1e-15);   // (0,1)
  EXPECT_NEAR(alt(3, 0), -1.0 / std::sqrt(2.0), 1e-15);  // (1,0)
  EXPECT_EQ((alt.col(0).array() != 0.0).count(), 2);
  EXPECT_THROW(antisymmetrizer(3, 3), DomainError);
  EXPECT_THROW(antisymmetrizer(3, 0), DomainError);
  EXPECT_THROW(antisymmetrizer(10, 4), DomainError);  // 10^4 > tensor limit
}

TEST(Antisymmetrizer, OrthonormalAndCommutesWithTensorWalk) {
  const std::vector<std::pair<SignedGraph, Index>> cases{
      {cycle(4), 2}, {wedge_c4(), 2}, {petersen(), 2}, {complete(5), 3}, {hypercube(3), 2}};
  for (const auto& [g, k] : cases) {
    const Eigen::MatrixXd alt = antisymmetrizer(g.size(), k);
    EXPECT_LE((alt.transpose() * alt - Eigen::MatrixXd::Identity(alt.cols(), alt.cols()))
                  .cwiseAbs().maxCoeff(),
              1e-12);
    const Eigen::MatrixXd a = cartesian_power(g, static_cast<int>(k)).to_real();
    const Eigen::MatrixXd p = alt * alt.transpose();
    EXPECT_LE((p * a - a * p).cwiseAbs().maxCoeff(), 1e-11);
  }
  const Eigen::MatrixXd sym = symmetrizer(3, 3);
  EXPECT_LE((sym.transpose() * sym - Eigen::MatrixXd::Identity(10, 10)).cwiseAbs().maxCoeff(),
            1e-12);
}

TEST(ExteriorPower, C4ExampleSigns) {
  const SignedGraph ext = exterior_power(wedge_c4(), 2);
  // ab 0, ac 1, ad 2, bc 3, bd 4, cd 5
  EXPECT_EQ(ext.edge_count(), 8);
  for (const auto& e : ext.edges()) {
    const bool negative = (e.u == 0 && e.v == 3) || (e.u == 3 && e.v == 5);
    EXPECT_EQ(e.sign, negative ? -1 : 1) << e.u << "-" << e.v;
  }
  // K_{2,4}: ad and bc against the rest.
  EXPECT_EQ(underlying(ext).adjacency().row(2).sum(), 4);
  EXPECT_EQ(underlying(ext).adjacency().row(3).sum(), 4);
  EXPECT_EQ(ext(2, 3), 0);
}

TEST(ExteriorPower, OracleMatchesFigureMatrix) {
  IntMatrix expected(6, 6);
  expected << 0, 0, 1, -1, 0, 0,
              0, 0, 1, 1, 0, 0,
              1, 1, 0, 0, 1, 1,
             -1, 1, 0, 0, 1, -1,
              0, 0, 1, 1, 0, 0,
              0, 0, 1, -1, 0, 0;
  const WeightedGraph oracle = exterior_power_oracle(wedge_c4(), 2);
  EXPECT_EQ(oracle.weights(), expected.cast<double>());
  EXPECT_EQ(exterior_power(wedge_c4(), 2).adjacency(), expected);
}

TEST(ExteriorPower, SmallIdentities) {
  EXPECT_EQ(exterior_power(petersen(), 1), petersen());
  EXPECT_EQ(exterior_power_oracle(complete(2), 1).weights(), complete(2).to_real());
  const SignedGraph k3 = exterior_power(complete(3), 2);
  EXPECT_EQ(underlying(k3), complete(3));
  EXPECT_EQ(k3.to_real(), exterior_power_oracle(complete(3), 2).weights());
  EXPECT_THROW(exterior_power(negate(complete(3)), 2), DomainError);
  EXPECT_THROW(exterior_power(complete(3), 3), DomainError);
}

TEST(ExteriorPower, SignRuleMatchesOracleExhaustively) {
  for (Index n = 2; n <= 5; ++n) {
    const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      const SignedGraph g = graph_from_mask(n, mask);
      for (Index k = 1; k < n; ++k) {
        ASSERT_EQ(exterior_power(g, k).to_real(), exterior_power_oracle(g, k).weights())
            << "n=" << n << " mask=" << mask << " k=" << k;
      }
    }
  }
}

TEST(ExteriorPower, SignRuleMatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 50; ++i) {
    const SignedGraph g = testing::random_signed_graph(6 + i % 2, rng, false);
    EXPECT_EQ(exterior_power(g, 2).to_real(), exterior_power_oracle(g, 2).weights());
  }
}

TEST(SymmetricPower, SupportAndExamples) {
  const SignedGraph sym = symmetric_power(wedge_c4(), 2);
  EXPECT_TRUE(sym.all_positive());
  EXPECT_EQ(sym, underlying(exterior_power(wedge_c4(), 2)));
  EXPECT_EQ(symmetric_power(cycle(5), 1), cycle(5));
  std::mt19937_64 rng(52);
  for (int i = 0; i < 20; ++i) {
    const Index n = 3 + i % 4;
    const SignedGraph g = testing::random_signed_graph(n, rng, false);
    for (Index k = 1; k < n; ++k) {
      EXPECT_EQ(underlying(exterior_power(g, k)), symmetric_power(g, k));
    }
  }
}

TEST(ExteriorPower, ComplementaryPowersHaveNegatedSpectra) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 10; ++i) {
    const SignedGraph g = testing::random_signed_graph(6, rng, false);
    for (Index k = 1; k < 6; ++k) {
      const auto lo = eig_sym(exterior_power(g, k).to_real()).eigenvalues();
      const auto hi = eig_sym(exterior_power(g, 6 - k).to_real()).eigenvalues();
      EXPECT_LE((lo + hi.reverse()).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
  // Equal spectra fails for a non-bipartite graph such as K4.
  const auto k1 = eig_sym(exterior_power(complete(4), 1).to_real()).eigenvalues();
  const auto k3 = eig_sym(exterior_power(complete(4), 3).to_real()).eigenvalues();
  EXPECT_GT((k1 - k3).cwiseAbs().maxCoeff(), 1.0);
}

TEST(BosonQuotient, TwoSiteLadder) {
  const WeightedGraph b = boson_quotient(complete(2), 2);
  ASSERT_EQ(b.size(), 3);
  EXPECT_NEAR(b(0, 1), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(b(1, 2), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(b(0, 2), 0.0, 1e-12);
  EXPECT_NEAR(b(1, 1), 0.0, 1e-12);
  EXPECT_LE((boson_quotient(path(4), 1).weights() - path(4).to_real()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(BosonQuotient, MatchesLadderAlgebra) {
  for (const auto& [g, k] : std::vector<std::pair<SignedGraph, Index>>{
           {path(3), 2}, {cycle(4), 3}, {complete(3), 4}}) {
    const WeightedGraph b = boson_quotient(g, k);
    const auto states = k_multisets(g.size(), k);
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (std::size_t j = 0; j < states.size(); ++j) {
        const auto& x = states[i].occupation;
        const auto& y = states[j].occupation;
        double expected = 0.0;
        for (Index u = 0; u < g.size(); ++u) {
          for (Index v = 0; v < g.size(); ++v) {
            if (g(u, v) == 0 || x[u] == 0) continue;
            auto z = x;
            --z[u];
            ++z[v];
            if (z == y) expected = std::sqrt(static_cast<double>(x[u] * (x[v] + 1)));
          }
        }
        EXPECT_NEAR(b(static_cast<Index>(i), static_cast<Index>(j)), expected, 1e-12);
      }
    }
  }
}

TEST(BosonQuotient, ReferenceWeightFormulaIsFlagged) {
  const auto m = compare_boson_weight_formula(complete(2), 2);
  EXPECT_EQ(m.size(), 4u);
  for (const auto& x : m) {
    EXPECT_NEAR(x.oracle, std::sqrt(2.0), 1e-12);
    EXPECT_NE(x.formula, x.oracle);
  }
  const std::vector<Index> occ{2, 0};
  EXPECT_DOUBLE_EQ(boson_formula_weight(occ, 0, 1), 1.0);
  EXPECT_DOUBLE_EQ(boson_formula_weight(occ, 1, 0), 0.0);
}

TEST(Slater, MatchesExteriorWalkAndTensorSum) {
  for (const auto& [g, k] : std::vector<std::pair<SignedGraph, Index>>{
           {wedge_c4(), 2}, {hypercube(3), 2}, {path(4), 3}}) {
    const QuantumWalk single(g);
    const QuantumWalk wedge(exterior_power(g, k));
    const auto subsets = k_subsets(g.size(), k);
    for (double t : {0.45, kPi / 2}) {
      const Eigen::MatrixXcd tensor =
          testing::dense_evolution(cartesian_power(g, static_cast<int>(k)).to_real(), t);
      for (std::size_t ia = 0; ia < subsets.size(); ia += 2) {
        for (std::size_t ib = 0; ib < subsets.size(); ib += 3) {
          const auto& a = subsets[ia].members;
          const auto& b = subsets[ib].members;
          const auto direct = value(wedge.amplitude(subsets[ia].rank, subsets[ib].rank, t));
          EXPECT_LE(std::abs(direct - slater_amplitude(single, a, b, t)), 1e-10);
          // (1/k!) sum over pi, sigma of sgn(pi) sgn(sigma) <pi b|U^k|sigma a>
          std::vector<Index> p(static_cast<std::size_t>(k));
          std::vector<Index> q(static_cast<std::size_t>(k));
          std::iota(p.begin(), p.end(), Index{0});
          std::complex<double> sum = 0.0;
          double fact = 0.0;
          do {
            fact += 1.0;
            std::iota(q.begin(), q.end(), Index{0});
            do {
              std::vector<Index> ta(q.size());
              std::vector<Index> tb(p.size());
              for (std::size_t i = 0; i < p.size(); ++i) {
                ta[i] = a[static_cast<std::size_t>(q[i])];
                tb[i] = b[static_cast<std::size_t>(p[i])];
              }
              sum += static_cast<double>(permutation_parity(p) * permutation_parity(q)) *
                     tensor(tuple_index(tb, g.size()), tuple_index(ta, g.size()));
            } while (std::next_permutation(q.begin(), q.end()));
          } while (std::next_permutation(p.begin(), p.end()));
          EXPECT_LE(std::abs(direct - sum / fact), 1e-9);
        }
      }
    }
  }
}

TEST(Slater, SingleParticleIsPlainAmplitude) {
  const QuantumWalk w(petersen());
  const std::vector<Index> a{3};
  const std::vector<Index> b{7};
  EXPECT_LE(std::abs(slater_amplitude(w, a, b, 0.8) - value(w.amplitude(3, 7, 0.8))), 1e-15);
  const std::vector<Index> two{1, 2};
  EXPECT_THROW(slater_amplitude(w, a, two, 0.8), DomainError);
}

TEST(FermionPstLift, C4AndCube) {
  const std::vector<std::pair<Index, Index>> c4_pairs{{0, 3}, {1, 2}};
  const PstVerdict v = fermion_pst_lift(wedge_c4(), c4_pairs, kPi / 2);
  EXPECT_EQ(v.kind, TransferKind::pst);
  EXPECT_EQ(v.from, 0);  // ab
  EXPECT_EQ(v.to, 5);    // cd
  const std::vector<std::pair<Index, Index>> q3_pairs{{0, 7}, {1, 6}};
  EXPECT_EQ(fermion_pst_lift(hypercube(3), q3_pairs, kPi / 2).kind, TransferKind::pst);
  const std::vector<std::pair<Index, Index>> single{{0, 7}};
  const PstVerdict one = fermion_pst_lift(hypercube(3), single, kPi / 2);
  EXPECT_EQ(one.kind, TransferKind::pst);
  EXPECT_NEAR(one.phase, is_pst(QuantumWalk(hypercube(3)), 0, 7, kPi / 2).phase, 1e-12);
}

TEST(FermionPstLift, Preconditions) {
  const std::vector<std::pair<Index, Index>> overlap{{0, 7}, {7, 0}};
  EXPECT_THROW(fermion_pst_lift(hypercube(3), overlap, kPi / 2), DomainError);
  const std::vector<std::pair<Index, Index>> no_pst{{0, 1}, {2, 3}};
  EXPECT_THROW(fermion_pst_lift(hypercube(3), no_pst, kPi / 2), DomainError);
}

}  // namespace
}  // namespace signedwalk
