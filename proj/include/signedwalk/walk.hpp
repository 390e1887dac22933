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

#include <complex>
#include <numbers>
#include <string_view>
#include <vector>

#include "signedwalk/signed_graph.hpp"
#include "signedwalk/spectrum.hpp"

namespace signedwalk {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kDefaultGridStep = 1e-3 * std::numbers::pi;

/// Matrix element <b|U(t)|a> of U(t) = exp(-i t A).
struct WalkAmplitude {
  double time = 0.0;
  double re = 0.0;
  double im = 0.0;
  double fidelity = 0.0;

  static WalkAmplitude from(std::complex<double> z, double t) {
    return {t, z.real(), z.imag(), std::norm(z)};
  }
  std::complex<double> value() const { return {re, im}; }
  // atan2 convention, folded into (-pi, pi].
  double phase() const;
};

/// t -> sum_alpha c_alpha exp(-i t alpha) for a fixed vertex pair, with
/// c_alpha = <b|E_alpha|a>.
class TransitionSeries {
 public:
  TransitionSeries(std::vector<double> frequencies,
                   std::vector<double> weights)
      : frequencies_(std::move(frequencies)), weights_(std::move(weights)) {}

  std::complex<double> operator()(double t) const;
  const std::vector<double>& frequencies() const { return frequencies_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> frequencies_;
  std::vector<double> weights_;
};

/// Continuous-time quantum walk driven by a fixed symmetric matrix. The
/// spectral decomposition is computed once at construction.
class QuantumWalk {
 public:
  explicit QuantumWalk(const Eigen::MatrixXd& hamiltonian,
                       const JacobiOptions& options = {});
  explicit QuantumWalk(const SignedGraph& g) : QuantumWalk(g.to_real()) {}
  explicit QuantumWalk(const WeightedGraph& g) : QuantumWalk(g.weights()) {}

  Index size() const { return spectrum_.size(); }
  const Spectrum<double>& spectrum() const { return spectrum_; }

  TransitionSeries transition(Index from, Index to) const;
  WalkAmplitude amplitude(Index from, Index to, double t) const;
  Eigen::MatrixXcd evolution(double t) const;
  Eigen::VectorXcd evolve(const Eigen::VectorXcd& state, double t) const;

 private:
  void check_vertex(Index v) const;

  Spectrum<double> spectrum_;
};

enum class TransferKind { pst, periodic, none };

std::string_view to_string(TransferKind kind);

struct PstVerdict {
  TransferKind kind = TransferKind::none;
  Index from = 0;
  Index to = 0;
  double time = 0.0;
  double fidelity = 0.0;
  double phase = 0.0;
};

WalkAmplitude amplitude(const SignedGraph& g, Index from, Index to, double t);
WalkAmplitude amplitude(const WeightedGraph& g, Index from, Index to,
                        double t);

// Requires from != to.
PstVerdict is_pst(const QuantumWalk& walk, Index from, Index to, double t,
                  double tol = kDefaultTolerance);
PstVerdict is_periodic_at(const QuantumWalk& walk, Index vertex, double t,
                          double tol = kDefaultTolerance);
bool is_periodic(const QuantumWalk& walk, double t,
                 double tol = kDefaultTolerance);

/// Grid scan of the fidelity on [0, t_max] with every strict local maximum
/// refined by ternary search to 1e-12 in time. Returns, in time order, every
/// refined maximum reaching 1 - tol; when none does, the single global
/// maximum is returned with kind `none`. With from == to the trivial return
/// at t = 0 is skipped and hits are reported as `periodic`.
std::vector<PstVerdict> pst_search(const QuantumWalk& walk, Index from,
                                   Index to, double t_max,
                                   double grid_step = kDefaultGridStep,
                                   double tol = kDefaultTolerance);

// Entry with the largest fidelity; `verdicts` must be non-empty.
const PstVerdict& best_of(const std::vector<PstVerdict>& verdicts);

/// <b| exp(-itA(G)) exp(+itA(H)) |a>, the amplitude of G+ u H- when A(G) and
/// A(H) commute. Throws DomainError when they do not commute exactly.
WalkAmplitude decomposition_transfer(const SignedGraph& g,
                                     const SignedGraph& h, Index from,
                                     Index to, double t);

}  // namespace signedwalk
