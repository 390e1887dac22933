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

#include "signedwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "signedwalk/errors.hpp"

namespace signedwalk {

double WalkAmplitude::phase() const {
  const double p = std::atan2(im, re);
  return p <= -std::numbers::pi ? std::numbers::pi : p;
}

std::complex<double> TransitionSeries::operator()(double t) const {
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < frequencies_.size(); ++i) {
    sum += weights_[i] * std::polar(1.0, -t * frequencies_[i]);
  }
  return sum;
}

QuantumWalk::QuantumWalk(const Eigen::MatrixXd& hamiltonian,
                         const JacobiOptions& options)
    : spectrum_(eig_sym(hamiltonian, options)) {}

void QuantumWalk::check_vertex(Index v) const {
  if (v < 0 || v >= size()) {
    throw DomainError("vertex " + std::to_string(v) + " out of range [0, " +
                      std::to_string(size()) + ")");
  }
}

TransitionSeries QuantumWalk::transition(Index from, Index to) const {
  check_vertex(from);
  check_vertex(to);
  const auto& v = spectrum_.eigenvectors();
  std::vector<double> freqs;
  std::vector<double> weights;
  for (const auto& space : spectrum_.eigenspaces()) {
    const double c = v.row(to)
                         .segment(space.first, space.dimension)
                         .dot(v.row(from).segment(space.first, space.dimension));
    freqs.push_back(space.value);
    weights.push_back(c);
  }
  return TransitionSeries(std::move(freqs), std::move(weights));
}

WalkAmplitude QuantumWalk::amplitude(Index from, Index to, double t) const {
  return WalkAmplitude::from(transition(from, to)(t), t);
}

Eigen::MatrixXcd QuantumWalk::evolution(double t) const {
  const auto& v = spectrum_.eigenvectors();
  Eigen::VectorXcd phases(size());
  for (const auto& space : spectrum_.eigenspaces()) {
    phases.segment(space.first, space.dimension)
        .setConstant(std::polar(1.0, -t * space.value));
  }
  const Eigen::MatrixXcd vc = v.cast<std::complex<double>>();
  return vc * phases.asDiagonal() * vc.transpose();
}

Eigen::VectorXcd QuantumWalk::evolve(const Eigen::VectorXcd& state,
                                     double t) const {
  if (state.size() != size()) throw DomainError("state dimension mismatch");
  const Eigen::MatrixXcd vc =
      spectrum_.eigenvectors().cast<std::complex<double>>();
  Eigen::VectorXcd coeffs = vc.transpose() * state;
  for (const auto& space : spectrum_.eigenspaces()) {
    coeffs.segment(space.first, space.dimension) *=
        std::polar(1.0, -t * space.value);
  }
  return vc * coeffs;
}

std::string_view to_string(TransferKind kind) {
  switch (kind) {
    case TransferKind::pst:
      return "pst";
    case TransferKind::periodic:
      return "periodic";
    case TransferKind::none:
      break;
  }
  return "none";
}

WalkAmplitude amplitude(const SignedGraph& g, Index from, Index to, double t) {
  return QuantumWalk(g).amplitude(from, to, t);
}

WalkAmplitude amplitude(const WeightedGraph& g, Index from, Index to,
                        double t) {
  return QuantumWalk(g).amplitude(from, to, t);
}

namespace {

PstVerdict make_verdict(const WalkAmplitude& amp, Index from, Index to,
                        double tol) {
  PstVerdict out;
  out.from = from;
  out.to = to;
  out.time = amp.time;
  out.fidelity = amp.fidelity;
  out.phase = amp.phase();
  if (amp.fidelity >= 1.0 - tol) {
    out.kind = from == to ? TransferKind::periodic : TransferKind::pst;
  }
  return out;
}

}  // namespace

PstVerdict is_pst(const QuantumWalk& walk, Index from, Index to, double t,
                  double tol) {
  if (from == to) throw DomainError("is_pst needs distinct vertices");
  return make_verdict(walk.amplitude(from, to, t), from, to, tol);
}

PstVerdict is_periodic_at(const QuantumWalk& walk, Index vertex, double t,
                          double tol) {
  return make_verdict(walk.amplitude(vertex, vertex, t), vertex, vertex, tol);
}

bool is_periodic(const QuantumWalk& walk, double t, double tol) {
  for (Index v = 0; v < walk.size(); ++v) {
    if (is_periodic_at(walk, v, t, tol).kind != TransferKind::periodic) {
      return false;
    }
  }
  return true;
}

std::vector<PstVerdict> pst_search(const QuantumWalk& walk, Index from,
                                   Index to, double t_max, double grid_step,
                                   double tol) {
  if (!(t_max > 0.0)) throw DomainError("pst_search needs t_max > 0");
  if (!(grid_step > 0.0)) throw DomainError("pst_search needs grid_step > 0");
  const TransitionSeries series = walk.transition(from, to);
  const auto fidelity = [&](double t) { return std::norm(series(t)); };

  const auto steps = static_cast<std::size_t>(std::ceil(t_max / grid_step));
  std::vector<double> times(steps + 1);
  std::vector<double> values(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    times[i] = std::min(static_cast<double>(i) * grid_step, t_max);
    values[i] = fidelity(times[i]);
  }
  const std::size_t first = from == to ? 1 : 0;

  const auto refine = [&](double lo, double hi) {
    while (hi - lo > 1e-12) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      if (fidelity(m1) < fidelity(m2)) {
        lo = m1;
      } else {
        hi = m2;
      }
    }
    return 0.5 * (lo + hi);
  };

  std::vector<WalkAmplitude> maxima;
  for (std::size_t i = first; i <= steps; ++i) {
    const bool rises = i == 0 ? (steps == 0 || values[0] > values[1])
                              : values[i] > values[i - 1];
    const bool falls = i == steps || values[i] >= values[i + 1];
    if (!(rises && falls)) continue;
    const double lo = i == first ? times[i] : times[i - 1];
    const double hi = i == steps ? times[i] : times[i + 1];
    double t = refine(lo, hi);
    if (fidelity(times[i]) > fidelity(t)) t = times[i];
    maxima.push_back(WalkAmplitude::from(series(t), t));
  }

  std::vector<PstVerdict> hits;
  for (const auto& m : maxima) {
    auto v = make_verdict(m, from, to, tol);
    if (v.kind == TransferKind::none) continue;
    if (!hits.empty() && v.time - hits.back().time < 1e-9) {
      if (v.fidelity > hits.back().fidelity) hits.back() = v;
      continue;
    }
    hits.push_back(v);
  }
  if (!hits.empty()) return hits;

  if (maxima.empty()) {
    const auto it = std::max_element(values.begin() + static_cast<long>(first),
                                     values.end());
    const double t = times[static_cast<std::size_t>(it - values.begin())];
    maxima.push_back(WalkAmplitude::from(series(t), t));
  }
  const auto best = std::max_element(
      maxima.begin(), maxima.end(),
      [](const auto& x, const auto& y) { return x.fidelity < y.fidelity; });
  return {make_verdict(*best, from, to, tol)};
}

const PstVerdict& best_of(const std::vector<PstVerdict>& verdicts) {
  if (verdicts.empty()) throw DomainError("best_of on an empty list");
  return *std::max_element(
      verdicts.begin(), verdicts.end(),
      [](const auto& x, const auto& y) { return x.fidelity < y.fidelity; });
}

WalkAmplitude decomposition_transfer(const SignedGraph& g,
                                     const SignedGraph& h, Index from,
                                     Index to, double t) {
  if (g.size() != h.size()) {
    throw DomainError("decomposition_transfer needs equal vertex counts");
  }
  const IntMatrix& ag = g.adjacency();
  const IntMatrix& ah = h.adjacency();
  if ((ag * ah - ah * ag).any()) {
    throw DomainError("A(G) and A(H) do not commute");
  }
  const QuantumWalk walk_g(g);
  const QuantumWalk walk_h(h);
  if (from < 0 || from >= g.size() || to < 0 || to >= g.size()) {
    throw DomainError("vertex out of range");
  }
  const Eigen::VectorXcd start = Eigen::VectorXcd::Unit(g.size(), from);
  const Eigen::VectorXcd state = walk_g.evolve(walk_h.evolve(start, -t), t);
  return WalkAmplitude::from(state[to], t);
}

}  // namespace signedwalk
