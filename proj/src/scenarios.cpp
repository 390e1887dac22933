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

#include "signedwalk/scenarios.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "signedwalk/construct.hpp"
#include "signedwalk/errors.hpp"
#include "signedwalk/join.hpp"
#include "signedwalk/multiparticle.hpp"
#include "signedwalk/quotient.hpp"
#include "signedwalk/signed_graph.hpp"
#include "signedwalk/spectrum.hpp"
#include "signedwalk/walk.hpp"

namespace signedwalk {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAmplitudeTol = 1e-10;
constexpr double kMaxFidelityTol = 1e-6;

class ClaimList {
 public:
  void approx(std::string what, Provenance p, double expected,
              double measured, double tol, std::string note = {}) {
    add(std::move(what), p, expected, measured, tol, Comparison::approx,
        std::abs(measured - expected) <= tol, std::move(note));
  }
  void at_least(std::string what, Provenance p, double expected,
                double measured, double tol, std::string note = {}) {
    add(std::move(what), p, expected, measured, tol, Comparison::at_least,
        measured >= expected - tol, std::move(note));
  }
  void at_most(std::string what, Provenance p, double expected,
               double measured, double tol, std::string note = {}) {
    add(std::move(what), p, expected, measured, tol, Comparison::at_most,
        measured <= expected + tol, std::move(note));
  }
  // A stated claim the computation contradicts: recorded as a
  // discrepancy rather than a failure.
  void remark(std::string what, double expected, double measured, double tol,
              std::string note) {
    add(std::move(what), Provenance::stated, expected, measured, tol,
        Comparison::approx, std::abs(measured - expected) <= tol,
        std::move(note));
    if (claims_.back().status == ClaimStatus::fail) {
      claims_.back().status = ClaimStatus::discrepancy;
    }
  }
  std::vector<Claim> take() { return std::move(claims_); }

 private:
  void add(std::string what, Provenance p, double expected, double measured,
           double tol, Comparison cmp, bool ok, std::string note) {
    if (!std::isfinite(measured)) ok = false;
    claims_.push_back({std::move(what), p, expected, measured, tol, cmp,
                       ok ? ClaimStatus::pass : ClaimStatus::fail,
                       std::move(note)});
  }
  std::vector<Claim> claims_;
};

double max_abs(const Eigen::MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double fidelity_at(const QuantumWalk& walk, Index a, Index b, double t) {
  return walk.amplitude(a, b, t).fidelity;
}

// Largest fidelity from `from` to any other vertex over [0, t_max].
double max_transfer_fidelity(const QuantumWalk& walk, Index from,
                             double t_max, double tol) {
  double best = 0.0;
  for (Index b = 0; b < walk.size(); ++b) {
    if (b == from) continue;
    best = std::max(best,
                    best_of(pst_search(walk, from, b, t_max,
                                       kDefaultGridStep, tol)).fidelity);
  }
  return best;
}

Index pst_hit_count(const QuantumWalk& walk, Index from, Index to,
                    double t_max, double tol) {
  Index hits = 0;
  for (const auto& v : pst_search(walk, from, to, t_max, kDefaultGridStep, tol)) {
    if (v.kind != TransferKind::none) ++hits;
  }
  return hits;
}

SignedGraph from_edges(Index n, std::initializer_list<SignedEdge> edges) {
  const std::vector<SignedEdge> list(edges);
  return build_signed_graph(n, list);
}

// C4 with vertices a < b < c < d and edges ab, ac, bd, cd, so that a and d
// (and b and c) are antipodal.
SignedGraph wedge_c4() {
  return from_edges(4, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}});
}

std::vector<double> eigenvalues_of(const SignedGraph& g) {
  const auto s = eig_sym(g.to_real());
  return {s.eigenvalues().data(), s.eigenvalues().data() + s.size()};
}

SignedGraph random_simple_graph(Index n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  IntMatrix a = IntMatrix::Zero(n, n);
  for (Index u = 0; u < n; ++u) {
    for (Index v = u + 1; v < n; ++v) {
      if (coin(rng)) a(u, v) = a(v, u) = 1;
    }
  }
  return SignedGraph(std::move(a));
}

SwitchingVector random_switching(Index n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  Eigen::VectorXi d(n);
  for (Index i = 0; i < n; ++i) d[i] = coin(rng) ? 1 : -1;
  return SwitchingVector(std::move(d));
}

// Entrywise |exterior_power - oracle|, exact integers on both sides.
int sign_rule_gap(const SignedGraph& g, Index k) {
  const Eigen::MatrixXd rule = exterior_power(g, k).to_real();
  const Eigen::MatrixXd oracle = exterior_power_oracle(g, k).weights();
  return static_cast<int>(std::lround(max_abs(rule - oracle)));
}

// ---------------------------------------------------------------------------

void signed_c4_cycles(ClaimList& c, double tol) {
  const SignedGraph unsigned_c4 = cycle(4);
  const SignedGraph balanced_c4 =
      from_edges(4, {{0, 1, 1}, {1, 2, -1}, {2, 3, 1}, {0, 3, -1}});
  const SignedGraph antibalanced_c4 =
      from_edges(4, {{0, 1, -1}, {1, 2, -1}, {2, 3, 1}, {0, 3, 1}});
  const SignedGraph unbalanced_c4 =
      from_edges(4, {{0, 1, -1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});

  const std::array<std::pair<const char*, const SignedGraph*>, 3> pst_cases{{
      {"unsigned C4", &unsigned_c4},
      {"balanced C4", &balanced_c4},
      {"antibalanced C4", &antibalanced_c4},
  }};
  for (const auto& [name, g] : pst_cases) {
    const QuantumWalk walk(*g);
    c.at_least(std::string(name) + ": PST 0 -> 2 at pi/2", Provenance::stated,
               1.0, fidelity_at(walk, 0, 2, kPi / 2), tol);
  }

  const BalanceVerdict vb = balance_verdict(balanced_c4);
  c.approx("balanced C4 is detected as balanced", Provenance::derived, 1.0,
           vb.status == BalanceStatus::balanced ? 1.0 : 0.0, 0.0);
  const BalanceVerdict va = balance_verdict(antibalanced_c4);
  c.approx("antibalanced C4 is detected as antibalanced", Provenance::derived,
           1.0,
           va.status == BalanceStatus::antibalanced || va.also_antibalanced
               ? 1.0
               : 0.0,
           0.0);
  const BalanceVerdict vu = balance_verdict(unbalanced_c4);
  c.approx("one-negative-edge C4 is neither balanced nor antibalanced",
           Provenance::derived, 1.0,
           vu.status == BalanceStatus::neither ? 1.0 : 0.0, 0.0);

  const IntMatrix a = unbalanced_c4.adjacency();
  const IntMatrix gap = a * a - 2 * IntMatrix::Identity(4, 4);
  c.approx("unbalanced C4: max |A^2 - 2I|", Provenance::derived, 0.0,
           gap.cwiseAbs().maxCoeff(), 0.0);
  const QuantumWalk walk(unbalanced_c4);
  c.approx("unbalanced C4: max fidelity from 0 over [0, 4pi]",
           Provenance::derived, 0.5,
           max_transfer_fidelity(walk, 0, 4 * kPi, tol), kMaxFidelityTol,
           "U(t) = cos(sqrt2 t) I - i sin(sqrt2 t) A / sqrt2");
  c.approx("unbalanced C4: PST hits 0 -> 2 over [0, 4pi]",
           Provenance::derived, 0.0,
           static_cast<double>(pst_hit_count(walk, 0, 2, 4 * kPi, tol)), 0.0);
}

void join_k2_3reg(ClaimList& c, double tol) {
  const std::array<std::pair<const char*, SignedGraph>, 4> cases{{
      {"K4", complete(4)},
      {"K3,3", complete_bipartite(3, 3)},
      {"Q3", hypercube(3)},
      {"Petersen", petersen()},
  }};
  double previous = std::numeric_limits<double>::infinity();
  bool decreasing = true;
  for (const auto& [name, g2] : cases) {
    const Index n = g2.size();
    const double t = kPi / std::sqrt(4.0 + 2.0 * static_cast<double>(n));
    const QuantumWalk walk(signed_join(complete(2), g2, -1, 1));
    c.at_least(std::string("K2- + ") + name + "+: PST 0 -> 1 at pi/sqrt(" +
                   std::to_string(4 + 2 * n) + ")",
               Provenance::stated, 1.0, fidelity_at(walk, 0, 1, t), tol);
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& v : pst_search(walk, 0, 1, 2 * t, kDefaultGridStep, tol)) {
      if (v.kind == TransferKind::pst) {
        nearest = std::min(nearest, std::abs(v.time - t));
      }
    }
    c.approx(std::string("K2- + ") + name + "+: search locates the PST time",
             Provenance::derived, 0.0, nearest, 1e-6);
    decreasing = decreasing && t < previous;
    previous = t;
  }
  c.approx("PST times strictly decrease with n", Provenance::stated, 1.0,
           decreasing ? 1.0 : 0.0, 0.0);
}

void join_formula(ClaimList& c, double /*tol*/) {
  std::mt19937_64 rng(20260414);
  const std::array<SignedGraph, 4> g1_choices{complete(2), complete(3),
                                              cycle(4), complete(4)};
  std::uniform_real_distribution<double> time(0.0, 4 * kPi);
  double worst = 0.0;
  constexpr int kSamples = 200;
  for (int i = 0; i < kSamples; ++i) {
    const Index k2 = 3 + i % 2;
    std::vector<Index> sizes;
    for (Index n = k2 + 1; n <= 12; ++n) {
      if ((n * k2) % 2 == 0) sizes.push_back(n);
    }
    const Index n2 = sizes[std::uniform_int_distribution<std::size_t>(
        0, sizes.size() - 1)(rng)];
    const SignedGraph g2 = random_regular(n2, k2, rng());
    const SignedGraph& g1 = g1_choices[static_cast<std::size_t>(i) % 4];
    std::uniform_int_distribution<Index> vertex(0, g1.size() - 1);
    const Index a = vertex(rng);
    const Index b = vertex(rng);
    const double t = time(rng);
    const auto closed = join_amplitude(g1, g2, a, b, t).value();
    const auto dense =
        QuantumWalk(signed_join(g1, g2, -1, 1)).amplitude(a, b, t).value();
    worst = std::max(worst, std::abs(closed - dense));
  }
  c.at_most("closed-form join amplitude vs full spectral amplitude, 200 samples",
            Provenance::stated, 0.0, worst, 1e-9,
            "G1 in {K2, K3, C4, K4}; G2 random connected 3- or 4-regular, n2 <= 12");
}

void join_divisibility(ClaimList& c, double tol) {
  const JoinPstCondition cond = join_pst_condition(1, 7, 2, 24, 2);
  c.approx("(k1,k2,n1,n2,D) = (1,7,2,24,2) satisfies the congruences",
           Provenance::stated, 1.0, cond.holds ? 1.0 : 0.0, 0.0);
  c.approx("Delta for (1,7,2,24,2)", Provenance::derived, 8.0, cond.Delta,
           1e-12);
  const JoinPstCondition k4 = join_pst_condition(1, 3, 2, 4, 2);
  c.approx("(1,3,2,4,2) fails the congruences (Delta = sqrt12)",
           Provenance::derived, 0.0, k4.holds ? 1.0 : 0.0, 0.0);

  const std::array<Index, 4> offsets{1, 2, 3, 12};
  const SignedGraph g2 = circulant(24, offsets);
  c.approx("C24(1,2,3,12) degree", Provenance::derived, 7.0,
           static_cast<double>(regular_stats(g2).k), 0.0);
  const QuantumWalk walk(signed_join(complete(2), g2, -1, 1));
  const WalkAmplitude amp = walk.amplitude(0, 1, kPi / 2);
  c.at_least("K2- + C24(1,2,3,12)+: PST 0 -> 1 at pi/2", Provenance::derived,
             1.0, amp.fidelity, tol);
  c.approx("K2- + C24(1,2,3,12)+: phase at pi/2", Provenance::derived,
           kPi / 2, amp.phase(), 1e-8);
}

void k6_no_pst(ClaimList& c, double tol) {
  const QuantumWalk k6(complete(6));
  c.approx("K6: max fidelity 0 -> 1 over [0, 2pi]", Provenance::derived,
           1.0 / 9.0,
           best_of(pst_search(k6, 0, 1, 2 * kPi, kDefaultGridStep, tol))
               .fidelity,
           kMaxFidelityTol, "amplitude (exp(-5it) - exp(it)) / 6");
  c.approx("K6: PST hits", Provenance::stated, 0.0,
           static_cast<double>(pst_hit_count(k6, 0, 1, 2 * kPi, tol)), 0.0);
  const QuantumWalk k8(complete(8));
  c.at_most("K8: max fidelity 0 -> 1 over [0, 2pi]", Provenance::derived, 0.9,
            best_of(pst_search(k8, 0, 1, 2 * kPi, kDefaultGridStep, tol))
                .fidelity,
            0.0, "exact value 1/16");
  c.approx("K8: PST hits", Provenance::stated, 0.0,
           static_cast<double>(pst_hit_count(k8, 0, 1, 2 * kPi, tol)), 0.0);
}

void k8_signed(ClaimList& c, double tol) {
  const SignedGraph g =
      signed_union(cocktail_party(4), antipodal_matching(8), -1);
  const std::vector<double> spec = eigenvalues_of(g);
  const std::vector<double> expected{5, 1, 1, 1, 1, -3, -3, -3};
  double gap = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    gap = std::max(gap, std::abs(spec[i] - expected[i]));
  }
  c.approx("signed K8 spectrum is {5, 1^4, -3^3}", Provenance::derived, 0.0,
           gap, 1e-10);
  const QuantumWalk walk(g);
  c.at_least("signed K8: PST 0 -> 4 at pi/4", Provenance::derived, 1.0,
             fidelity_at(walk, 0, 4, kPi / 4), tol);
  const double at_half = fidelity_at(walk, 0, 4, kPi / 2);
  c.at_most("signed K8: fidelity 0 -> 4 at pi/2", Provenance::derived, 0.0,
            at_half, 1e-9);
  c.remark("signed K8: PST 0 -> 4 at pi/2 as claimed", 1.0, at_half, tol,
           "the spectrum {5,1,-3} gives PST at pi/4 and zero amplitude at pi/2");
}

void cubelike_pst(ClaimList& c, double tol) {
  const SignedGraph q3 = cubelike(CubelikeSpec::make(3, {1, 2, 4}));
  c.approx("X(Z2^3, {001,010,100}) equals Q3", Provenance::derived, 1.0,
           q3 == hypercube(3) ? 1.0 : 0.0, 0.0);
  const QuantumWalk walk(q3);
  double worst = 1.0;
  for (Index u = 0; u < 8; ++u) {
    worst = std::min(worst, fidelity_at(walk, u, u ^ 7, kPi / 2));
  }
  c.at_least("Q3: min over u of fidelity u -> u xor 111 at pi/2",
             Provenance::stated, 1.0, worst, tol);
}

void cubelike_periodic(ClaimList& c, double tol) {
  const SignedGraph g = cubelike(CubelikeSpec::make(3, {1, 2, 4, 7}));
  const std::vector<double> spec = eigenvalues_of(g);
  const std::vector<double> expected{4, 0, 0, 0, 0, 0, 0, -4};
  double gap = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    gap = std::max(gap, std::abs(spec[i] - expected[i]));
  }
  c.approx("X(Z2^3, {001,010,100,111}) spectrum is {4, 0^6, -4}",
           Provenance::derived, 0.0, gap, 1e-10);
  const QuantumWalk walk(g);
  double worst = 0.0;
  for (Index u = 0; u < 8; ++u) {
    worst = std::max(worst,
                     std::abs(walk.amplitude(u, u, kPi / 2).value() - 1.0));
  }
  c.approx("max over u of |<u|U(pi/2)|u> - 1|", Provenance::stated, 0.0, worst,
           tol);
  c.approx("walk is periodic at pi/2", Provenance::stated, 1.0,
           is_periodic(walk, kPi / 2, tol) ? 1.0 : 0.0, 0.0);
}

void cubelike_signed_remark(ClaimList& c, double tol) {
  const SignedGraph g = signed_union(hypercube(3), xor_matching(3, 7), -1);
  const IntMatrix a = g.adjacency();
  c.approx("Q3+ u P111-: max |A^2 - 4I|", Provenance::derived, 0.0,
           (a * a - 4 * IntMatrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 0.0);
  const QuantumWalk walk(g);
  const double best =
      best_of(pst_search(walk, 0, 7, 4 * kPi, kDefaultGridStep, tol)).fidelity;
  c.approx("Q3+ u P111-: max fidelity 000 -> 111 over [0, 4pi]",
           Provenance::derived, 0.25, best, kMaxFidelityTol,
           "U(t) = cos(2t) I - i sin(2t) A / 2");
  c.remark("Q3+ u P111-: PST 000 -> 111 as claimed", 1.0, best, tol,
           "A^2 = 4I caps the fidelity at 1/4");
}

void double_cover_scenario(ClaimList& c, double tol) {
  const SignedGraph g1 = hypercube(3);
  const SignedGraph g2 = cubelike(CubelikeSpec::make(3, {1, 2, 4, 7}));
  const QuantumWalk walk_g2(g2);
  double cos_gap = 0.0;
  for (Index b = 0; b < 8; ++b) {
    cos_gap = std::max(
        cos_gap, std::abs(walk_g2.amplitude(b, b, kPi / 2).re - 1.0));
  }
  c.approx("max over b of |<b|cos(A(G2) pi/2)|b> - 1|", Provenance::stated,
           0.0, cos_gap, kAmplitudeTol);
  const SignedGraph cover = double_cover(g1, g2);
  c.approx("double cover has 16 vertices", Provenance::derived, 16.0,
           static_cast<double>(cover.size()), 0.0);
  const QuantumWalk walk(cover);
  double worst = 1.0;
  for (Index u = 0; u < 8; ++u) {
    worst = std::min(worst, fidelity_at(walk, cover_index({u, 1}),
                                        cover_index({u ^ 7, 1}), kPi / 2));
  }
  c.at_least("min over u of fidelity (u,1) -> (u xor 111,1) at pi/2",
             Provenance::stated, 1.0, worst, tol);
}

void quotient_equiv(ClaimList& c, double /*tol*/) {
  const SignedGraph g = signed_join(complete(2), complete(4), -1, 1);
  const Partition pi =
      Partition::from_cells(6, {{0}, {1}, {2, 3, 4, 5}});
  const QuotientGraph q = quotient(g, pi);
  double worst = 0.0;
  const std::array<std::pair<Index, Index>, 3> pairs{{{0, 1}, {0, 0}, {1, 0}}};
  for (int i = 0; i < 100; ++i) {
    const double t = 4 * kPi * i / 100.0;
    for (auto [a, b] : pairs) {
      const QuotientTransfer qt = quotient_transfer_check(g, pi, a, b, t);
      worst = std::max(worst,
                       std::abs(qt.full.value() - qt.quotient.value()));
    }
  }
  c.at_most("full vs quotient amplitude, 100 times x 3 pairs",
            Provenance::stated, 0.0, worst, kAmplitudeTol);

  const Eigen::MatrixXd qm = normalized_partition_matrix(pi);
  const Eigen::MatrixXd a = g.to_real();
  const Index m = pi.cell_count();
  c.at_most("max |Q^T Q - I|", Provenance::stated, 0.0,
            max_abs(qm.transpose() * qm - Eigen::MatrixXd::Identity(m, m)),
            1e-14);
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(6, 6);
  for (Index u = 0; u < 6; ++u) {
    for (Index v = 0; v < 6; ++v) {
      if (pi.cell_of(u) == pi.cell_of(v)) {
        block(u, v) =
            1.0 / static_cast<double>(pi.cell(pi.cell_of(u)).size());
      }
    }
  }
  const Eigen::MatrixXd proj = qm * qm.transpose();
  c.at_most("max |Q Q^T - block averaging matrix|", Provenance::stated, 0.0,
            max_abs(proj - block), 1e-14);
  c.at_most("max |A Q Q^T - Q Q^T A| for the equitable partition",
            Provenance::stated, 0.0, max_abs(a * proj - proj * a), 1e-12);
  c.at_most("max |Q^T A Q - quotient entry rule|", Provenance::derived, 0.0,
            max_abs(qm.transpose() * a * qm - q.graph.weights()), 1e-12);

  const Partition bad = Partition::from_cells(6, {{0, 2}, {1}, {3, 4, 5}});
  c.approx("{0,2},{1},{3,4,5} is rejected as inequitable", Provenance::derived,
           0.0, is_equitable(g, bad).ok ? 1.0 : 0.0, 0.0);
  const Eigen::MatrixXd qb = normalized_partition_matrix(bad);
  const Eigen::MatrixXd pb = qb * qb.transpose();
  c.at_least("max |A Q Q^T - Q Q^T A| for the inequitable partition",
             Provenance::derived, 1e-6, max_abs(a * pb - pb * a), 0.0);

  const Partition coarse = coarsest_equitable(g, Partition::single_cell(6));
  c.approx("coarsest equitable refinement of one cell has 2 cells",
           Provenance::derived, 2.0, static_cast<double>(coarse.cell_count()),
           0.0);
}

void ext_c4(ClaimList& c, double tol) {
  const SignedGraph g = wedge_c4();
  const SignedGraph ext = exterior_power(g, 2);
  c.approx("sign rule vs Alt conjugation on C4, k = 2", Provenance::stated,
           0.0, sign_rule_gap(g, 2), 0.0);
  // Ranks: ab 0, ac 1, ad 2, bc 3, bd 4, cd 5.
  int negative_mismatch = 0;
  for (const auto& e : ext.edges()) {
    const bool expected_negative =
        (e.u == 0 && e.v == 3) || (e.u == 3 && e.v == 5);
    if ((e.sign < 0) != expected_negative) ++negative_mismatch;
  }
  c.approx("only ab-bc and bc-cd are negative in the exterior square",
           Provenance::stated, 0.0, negative_mismatch, 0.0);
  c.approx("exterior square edge count (K2,4)", Provenance::derived, 8.0,
           static_cast<double>(ext.edge_count()), 0.0);

  const std::array<std::pair<Index, Index>, 2> pairs{{{0, 3}, {1, 2}}};
  const PstVerdict lift = fermion_pst_lift(g, pairs, kPi / 2, tol);
  c.at_least("exterior square: PST ab -> cd at pi/2", Provenance::stated, 1.0,
             lift.fidelity, tol);

  const QuantumWalk sym(symmetric_power(g, 2));
  c.at_least("symmetric square K2,4: PST ad -> bc at pi/sqrt8",
             Provenance::stated, 1.0,
             fidelity_at(sym, 2, 3, kPi / std::sqrt(8.0)), tol);

  const QuantumWalk single(g);
  const QuantumWalk wedge(ext);
  double worst = 0.0;
  const auto subsets = k_subsets(4, 2);
  for (double t : {0.3, kPi / 2, 2.0, 5.1}) {
    for (const auto& from : subsets) {
      for (const auto& to : subsets) {
        const auto direct = wedge.amplitude(from.rank, to.rank, t).value();
        worst = std::max(
            worst, std::abs(direct - slater_amplitude(single, from.members,
                                                      to.members, t)));
      }
    }
  }
  c.at_most("exterior square amplitude vs Slater determinant",
            Provenance::derived, 0.0, worst, kAmplitudeTol);
}

void ext_q3(ClaimList& c, double tol) {
  int worst_exhaustive = 0;
  for (Index n = 2; n <= 5; ++n) {
    const Index pairs = n * (n - 1) / 2;
    for (Index mask = 0; mask < (Index{1} << pairs); ++mask) {
      IntMatrix a = IntMatrix::Zero(n, n);
      Index bit = 0;
      for (Index u = 0; u < n; ++u) {
        for (Index v = u + 1; v < n; ++v, ++bit) {
          if ((mask >> bit) & 1) a(u, v) = a(v, u) = 1;
        }
      }
      const SignedGraph g(std::move(a));
      for (Index k = 1; k <= n - 1; ++k) {
        worst_exhaustive = std::max(worst_exhaustive, sign_rule_gap(g, k));
      }
    }
  }
  c.approx("sign rule vs Alt conjugation, all graphs on <= 5 vertices",
           Provenance::stated, 0.0, worst_exhaustive, 0.0);

  std::mt19937_64 rng(7001);
  int worst_random = 0;
  for (int i = 0; i < 50; ++i) {
    const SignedGraph g = random_simple_graph(6 + i % 2, rng);
    worst_random = std::max(worst_random, sign_rule_gap(g, 2));
  }
  c.approx("sign rule vs Alt conjugation, 50 random graphs n in {6,7}, k = 2",
           Provenance::stated, 0.0, worst_random, 0.0);

  const SignedGraph q3 = hypercube(3);
  c.approx("sign rule vs Alt conjugation on Q3, k = 2", Provenance::derived,
           0.0, sign_rule_gap(q3, 2), 0.0);
  double worst = 1.0;
  int lifted = 0;
  for (const auto& s : k_subsets(8, 2)) {
    const Index a = s.members[0];
    const Index b = s.members[1];
    if ((a ^ 7) == b) continue;
    const std::array<std::pair<Index, Index>, 2> pairs{{{a, a ^ 7}, {b, b ^ 7}}};
    worst = std::min(worst, fermion_pst_lift(q3, pairs, kPi / 2, tol).fidelity);
    ++lifted;
  }
  c.approx("disjoint antipodal wedge pairs in the exterior square of Q3",
           Provenance::derived, 24.0, lifted, 0.0);
  c.at_least("exterior square of Q3: min PST fidelity at pi/2",
             Provenance::derived, 1.0, worst, tol);

  const QuantumWalk single(q3);
  const QuantumWalk wedge(exterior_power(q3, 2));
  double gap = 0.0;
  const auto subsets = k_subsets(8, 2);
  for (double t : {0.4, kPi / 2, 2.5}) {
    for (std::size_t i = 0; i < subsets.size(); i += 3) {
      for (const auto& to : subsets) {
        const auto direct =
            wedge.amplitude(subsets[i].rank, to.rank, t).value();
        gap = std::max(gap, std::abs(direct - slater_amplitude(
                                                   single, subsets[i].members,
                                                   to.members, t)));
      }
    }
  }
  c.at_most("exterior square of Q3 amplitude vs Slater determinant",
            Provenance::derived, 0.0, gap, kAmplitudeTol);
}

void sym_vs_ext(ClaimList& c, double /*tol*/) {
  std::mt19937_64 rng(4242);
  int support_mismatch = 0;
  double negated_gap = 0.0;
  double equal_gap = 0.0;
  int instances = 0;
  for (int i = 0; i < 30; ++i) {
    const Index n = 3 + i % 4;
    const SignedGraph g = random_simple_graph(n, rng);
    for (Index k = 1; k <= n - 1; ++k) {
      ++instances;
      if (underlying(exterior_power(g, k)) != symmetric_power(g, k)) {
        ++support_mismatch;
      }
      const std::vector<double> lo = eigenvalues_of(exterior_power(g, k));
      const std::vector<double> hi = eigenvalues_of(exterior_power(g, n - k));
      for (std::size_t j = 0; j < lo.size(); ++j) {
        negated_gap = std::max(negated_gap,
                               std::abs(lo[j] + hi[hi.size() - 1 - j]));
        equal_gap = std::max(equal_gap, std::abs(lo[j] - hi[j]));
      }
    }
  }
  c.approx("support of exterior power equals symmetric power (" +
               std::to_string(instances) + " instances)",
           Provenance::derived, 0.0, support_mismatch, 0.0);
  c.approx("spec of k-th and (n-k)-th exterior powers are negatives",
           Provenance::derived, 0.0, negated_gap, 1e-9);
  c.remark("spec of k-th and (n-k)-th exterior powers coincide", 0.0,
           equal_gap, 1e-9,
           "holds only when the spectrum is symmetric about 0, e.g. bipartite G");

  const SignedGraph k4 = complete(4);
  c.approx("exterior_power(G, 1) = G", Provenance::derived, 1.0,
           exterior_power(k4, 1) == k4 ? 1.0 : 0.0, 0.0);
  c.approx("symmetric_power(G, 1) = G", Provenance::derived, 1.0,
           symmetric_power(k4, 1) == k4 ? 1.0 : 0.0, 0.0);
}

void boson_ladder(ClaimList& c, double tol) {
  const WeightedGraph ladder = boson_quotient(complete(2), 2);
  c.approx("K2, k = 2: weight (2,0)-(1,1)", Provenance::derived,
           std::sqrt(2.0), ladder(0, 1), 1e-12);
  c.approx("K2, k = 2: weight (1,1)-(0,2)", Provenance::derived,
           std::sqrt(2.0), ladder(1, 2), 1e-12);
  c.approx("K2, k = 2: weight (2,0)-(0,2)", Provenance::derived, 0.0,
           ladder(0, 2), 1e-12);

  // Ladder algebra gives sqrt(a_u (a_v + 1)) for a hop u -> v.
  const SignedGraph p3 = path(3);
  const auto states = k_multisets(3, 2);
  const WeightedGraph bq = boson_quotient(p3, 2);
  Eigen::MatrixXd ladder_rule = Eigen::MatrixXd::Zero(bq.size(), bq.size());
  std::map<std::vector<Index>, Index> rank;
  for (std::size_t i = 0; i < states.size(); ++i) {
    rank.emplace(states[i].occupation, static_cast<Index>(i));
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& occ = states[i].occupation;
    for (Index u = 0; u < 3; ++u) {
      for (Index v = 0; v < 3; ++v) {
        if (p3(u, v) == 0 || occ[static_cast<std::size_t>(u)] == 0) continue;
        auto next = occ;
        --next[static_cast<std::size_t>(u)];
        ++next[static_cast<std::size_t>(v)];
        ladder_rule(static_cast<Index>(i), rank.at(next)) = std::sqrt(
            static_cast<double>(occ[static_cast<std::size_t>(u)] *
                                (occ[static_cast<std::size_t>(v)] + 1)));
      }
    }
  }
  c.at_most("P3, k = 2: conjugation vs ladder weights sqrt(a_u (a_v + 1))",
            Provenance::derived, 0.0, max_abs(bq.weights() - ladder_rule),
            1e-12);

  const auto mismatches = compare_boson_weight_formula(complete(2), 2);
  c.remark("K2, k = 2: hops matching the reference sqrt((a_u - 1)(a_v + 1))",
           0.0, static_cast<double>(mismatches.size()), 0.0,
           "reference weight gives 1 where the conjugation gives sqrt2");

  c.approx("boson_quotient(G, 1) = A(G)", Provenance::derived, 0.0,
           max_abs(boson_quotient(p3, 1).weights() - p3.to_real()), 1e-12);

  // Both particles on vertex 0 -> both on vertex 1: orbit size 1 each side,
  // so the boson amplitude equals the tensor-walk amplitude.
  const QuantumWalk boson(ladder);
  const QuantumWalk tensor(cartesian_power(complete(2), 2));
  double gap = 0.0;
  for (double t : {0.2, 1.0, kPi / 2, 3.3}) {
    gap = std::max(gap, std::abs(boson.amplitude(0, 2, t).value() -
                                 tensor.amplitude(0, 3, t).value()));
  }
  c.at_most("boson amplitude (2,0) -> (0,2) vs K2 x K2 walk",
            Provenance::derived, 0.0, gap, kAmplitudeTol);
  c.at_least("boson ladder: PST (2,0) -> (0,2) at pi/2", Provenance::derived,
             1.0, fidelity_at(boson, 0, 2, kPi / 2), tol);
}

void balanced_products(ClaimList& c, double tol) {
  const SignedGraph plus = complete(2);
  const SignedGraph minus = negate(complete(2));
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> time(0.0, 2 * kPi);
  double worst_pst = 1.0;
  double worst_switch = 0.0;
  int balanced = 0;
  for (int pattern = 0; pattern < 8; ++pattern) {
    const std::array<SignedGraph, 3> factors{
        (pattern & 4) ? minus : plus, (pattern & 2) ? minus : plus,
        (pattern & 1) ? minus : plus};
    const SignedGraph g = cartesian_product(factors);
    if (balance_verdict(g).status != BalanceStatus::neither) ++balanced;
    const QuantumWalk walk(g);
    worst_pst = std::min(worst_pst, fidelity_at(walk, 0, 7, kPi / 2));
    const std::array<double, 3> times{kPi / 2, time(rng), time(rng)};
    for (int s = 0; s < 20; ++s) {
      const QuantumWalk switched(switching(g, random_switching(8, rng)));
      for (double t : times) {
        worst_switch = std::max(
            worst_switch, max_abs(walk.evolution(t).cwiseAbs() -
                                  switched.evolution(t).cwiseAbs()));
      }
    }
  }
  c.approx("signed K2 x K2 x K2 products that are balanced or antibalanced",
           Provenance::derived, 8.0, balanced, 0.0);
  c.at_least("min PST fidelity (0,0,0) -> (1,1,1) at pi/2 over sign patterns",
             Provenance::stated, 1.0, worst_pst, tol);
  c.at_most("|U(t)| deviation under 20 random switchings per graph",
            Provenance::stated, 0.0, worst_switch, kAmplitudeTol);
}

using ScenarioFn = void (*)(ClaimList&, double);

const std::vector<std::pair<std::string_view, ScenarioFn>>& catalog() {
  static const std::vector<std::pair<std::string_view, ScenarioFn>> table{
      {"fig1-cycles", signed_c4_cycles},
      {"join-k2-3reg", join_k2_3reg},
      {"join-formula", join_formula},
      {"join-divisibility", join_divisibility},
      {"k6-no-pst", k6_no_pst},
      {"k8-signed", k8_signed},
      {"cubelike-pst", cubelike_pst},
      {"cubelike-periodic", cubelike_periodic},
      {"cubelike-signed-remark", cubelike_signed_remark},
      {"double-cover", double_cover_scenario},
      {"quotient-equiv", quotient_equiv},
      {"ext-c4", ext_c4},
      {"ext-q3", ext_q3},
      {"sym-vs-ext", sym_vs_ext},
      {"boson-ladder", boson_ladder},
      {"balanced-products", balanced_products},
  };
  return table;
}

}  // namespace

std::string_view to_string(Provenance p) {
  return p == Provenance::stated ? "stated" : "derived";
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::approx: return "approx";
    case Comparison::at_least: return "at_least";
    case Comparison::at_most: return "at_most";
  }
  return "approx";
}

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::discrepancy: return "discrepancy";
  }
  return "fail";
}

bool ScenarioReport::has_failure() const {
  return std::any_of(claims.begin(), claims.end(), [](const Claim& c) {
    return c.status == ClaimStatus::fail;
  });
}

ClaimStatus ScenarioReport::overall() const {
  if (has_failure()) return ClaimStatus::fail;
  const bool noted = std::any_of(claims.begin(), claims.end(), [](const Claim& c) {
    return c.status == ClaimStatus::discrepancy;
  });
  return noted ? ClaimStatus::discrepancy : ClaimStatus::pass;
}

const std::vector<std::string_view>& scenario_ids() {
  static const std::vector<std::string_view> ids = [] {
    std::vector<std::string_view> out;
    for (const auto& entry : catalog()) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

ScenarioReport run_scenario(std::string_view id, double tol) {
  const auto& table = catalog();
  const auto it = std::find_if(table.begin(), table.end(),
                               [&](const auto& e) { return e.first == id; });
  if (it == table.end()) {
    throw DomainError("unknown scenario '" + std::string(id) + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  ClaimList claims;
  it->second(claims, tol);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return {std::string(id), claims.take(), elapsed.count()};
}

nlohmann::json to_json(const Claim& claim) {
  nlohmann::json j{
      {"description", claim.description},
      {"provenance", to_string(claim.provenance)},
      {"expected", claim.expected},
      {"measured", std::isfinite(claim.measured) ? nlohmann::json(claim.measured)
                                                 : nlohmann::json(nullptr)},
      {"tolerance", claim.tolerance},
      {"comparison", to_string(claim.comparison)},
      {"status", to_string(claim.status)},
  };
  if (!claim.note.empty()) j["note"] = claim.note;
  return j;
}

nlohmann::json to_json(const ScenarioReport& report) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : report.claims) claims.push_back(to_json(c));
  return {{"id", report.id},
          {"status", to_string(report.overall())},
          {"runtime_seconds", report.runtime_seconds},
          {"claims", std::move(claims)}};
}

nlohmann::json suite_to_json(std::span<const ScenarioReport> reports) {
  nlohmann::json list = nlohmann::json::array();
  std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"discrepancy", 0}};
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    ++counts[std::string(to_string(r.overall()))];
  }
  return {{"reports", std::move(list)},
          {"summary", {{"scenarios", reports.size()},
                       {"pass", counts["pass"]},
                       {"fail", counts["fail"]},
                       {"discrepancy", counts["discrepancy"]}}}};
}

}  // namespace signedwalk
