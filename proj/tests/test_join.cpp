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

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "signedwalk/construct.hpp"
#include "signedwalk/errors.hpp"
#include "signedwalk/join.hpp"

namespace signedwalk {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(JoinSpectralData, IdentitiesOnRandomParameters) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n1 = std::uniform_int_distribution<Index>(2, 12)(rng);
    const Index n2 = std::uniform_int_distribution<Index>(2, 12)(rng);
    const Index k1 = std::uniform_int_distribution<Index>(1, n1 - 1)(rng);
    const Index k2 = std::uniform_int_distribution<Index>(1, n2 - 1)(rng);
    const auto d = join_spectral_data({n1, k1}, {n2, k2});
    const double dn1 = static_cast<double>(n1);
    const double dn2 = static_cast<double>(n2);
    const double dk1 = static_cast<double>(k1);
    const double dk2 = static_cast<double>(k2);
    for (double l : {d.lambda_plus, d.lambda_minus}) {
      EXPECT_NEAR(l * l + (dk1 - dk2) * l - (dk1 * dk2 + dn1 * dn2), 0.0, 1e-9);
    }
    EXPECT_NEAR(d.delta_plus, -(dk1 + dk2) / 2, 1e-15);
    EXPECT_NEAR(d.delta_minus, -(dk1 - dk2) / 2, 1e-15);
    EXPECT_NEAR(d.x_plus + d.x_minus, 2 * d.delta_plus / dn1, 1e-9);
    EXPECT_NEAR(d.x_plus * d.x_minus, -dn2 / dn1, 1e-9);
    EXPECT_NEAR(d.L_plus * d.L_minus, 4 * d.Delta * d.Delta * dn2 / dn1, 1e-9);
    EXPECT_NEAR(d.x_plus * d.x_plus * d.L_minus, d.L_plus * dn2 / dn1, 1e-9);
    EXPECT_NEAR(d.x_minus * d.x_minus * d.L_plus, d.L_minus * dn2 / dn1, 1e-9);
  }
}

TEST(JoinAmplitude, K2K4AtFirstPstTime) {
  const double t = kPi / std::sqrt(12.0);
  const WalkAmplitude a = join_amplitude(complete(2), complete(4), 0, 1, t);
  EXPECT_NEAR(a.fidelity, 1.0, 1e-12);
  const std::complex<double> expected(-std::cos(t), std::sin(t));
  EXPECT_LE(std::abs(a.value() - expected), 1e-12);
  const SignedGraph g = signed_join(complete(2), complete(4), -1, 1);
  EXPECT_LE(std::abs(a.value() - testing::dense_amplitude(g, 0, 1, t)), 1e-12);
}

TEST(JoinAmplitude, VanishesOffDiagonalAtTimeZero) {
  EXPECT_NEAR(join_amplitude(cycle(5), petersen(), 0, 2, 0.0).fidelity, 0.0, 1e-28);
  EXPECT_NEAR(join_amplitude(cycle(5), petersen(), 3, 3, 0.0).re, 1.0, 1e-14);
}

TEST(JoinAmplitude, RandomCubicAgainstDenseExponential) {
  const SignedGraph g2 = random_regular(10, 3, 5);
  const SignedGraph g = signed_join(complete(2), g2, -1, 1);
  for (Index a = 0; a < 2; ++a) {
    for (Index b = 0; b < 2; ++b) {
      EXPECT_LE(std::abs(join_amplitude(complete(2), g2, a, b, 0.37).value() -
                         testing::dense_amplitude(g, a, b, 0.37)),
                1e-9);
    }
  }
}

TEST(JoinAmplitude, GeneralBlocksAgainstDenseExponential) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  const std::vector<SignedGraph> g1s{complete(3), cycle(6), petersen(), hypercube(3)};
  for (int trial = 0; trial < 20; ++trial) {
    const SignedGraph& g1 = g1s[static_cast<std::size_t>(trial) % g1s.size()];
    const SignedGraph g2 = random_regular(8, 3 + trial % 2 * 2, rng());
    const SignedGraph g = signed_join(g1, g2, -1, 1);
    const double t = time(rng);
    const Eigen::MatrixXcd u = testing::dense_evolution(g.to_real(), t);
    for (Index a = 0; a < g1.size(); a += 2) {
      EXPECT_LE(std::abs(join_amplitude(g1, g2, a, 1, t).value() - u(1, a)), 1e-9);
    }
  }
}

TEST(JoinAmplitude, RejectsIrregularOrOutOfBlock) {
  EXPECT_THROW(join_amplitude(path(3), complete(4), 0, 1, 1.0), DomainError);
  EXPECT_THROW(join_amplitude(complete(2), path(4), 0, 1, 1.0), DomainError);
  EXPECT_THROW(join_amplitude(complete(2), complete(4), 0, 3, 1.0), DomainError);
}

TEST(JoinPstCondition, Branches) {
  const auto c = join_pst_condition(1, 7, 2, 24, 2);
  EXPECT_TRUE(c.holds);
  EXPECT_NEAR(c.Delta, 8.0, 1e-12);
  EXPECT_EQ(c.branch, JoinBranch::zero_mod_2d);

  const auto odd = join_pst_condition(1, 1, 2, 4, 1);
  EXPECT_TRUE(odd.holds);
  EXPECT_NEAR(odd.Delta, 3.0, 1e-12);
  EXPECT_EQ(odd.branch, JoinBranch::d_mod_2d);

  const auto irrational = join_pst_condition(1, 1, 2, 3, 2);
  EXPECT_FALSE(irrational.holds);
  EXPECT_EQ(irrational.branch, JoinBranch::none);
  EXPECT_NEAR(irrational.Delta, std::sqrt(28.0) / 2, 1e-12);

  EXPECT_TRUE(join_pst_condition(1, 3, 2, 6, 1).holds);   // Delta = 4, sum 4 = 0 mod 4
  EXPECT_FALSE(join_pst_condition(1, 3, 2, 6, 2).holds);  // sum 4 != 0 mod 8
  EXPECT_THROW(join_pst_condition(1, 3, 2, 6, 0), DomainError);
}

TEST(JoinPstCondition, DivisibilityInstanceHasPstAtHalfPi) {
  const std::vector<Index> offsets{1, 2, 3, 12};
  const SignedGraph g = signed_join(complete(2), circulant(24, offsets), -1, 1);
  const auto z = testing::dense_amplitude(g, 0, 1, kPi / 2);
  EXPECT_NEAR(std::norm(z), 1.0, 1e-9);
}

TEST(UnsignedK2Join, KnownCondition) {
  for (long n = 4; n <= 200; n += 2) EXPECT_FALSE(unsigned_k2_join_condition(3, n));
  EXPECT_TRUE(unsigned_k2_join_condition(9, 24));
  EXPECT_FALSE(unsigned_k2_join_condition(9, 25));
  EXPECT_FALSE(unsigned_k2_join_condition(9, 10));
}

}  // namespace
}  // namespace signedwalk
