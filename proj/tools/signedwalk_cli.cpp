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

// Command-line front end for the signedwalk library.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "signedwalk/construct.hpp"
#include "signedwalk/errors.hpp"
#include "signedwalk/expression.hpp"
#include "signedwalk/io.hpp"
#include "signedwalk/multiparticle.hpp"
#include "signedwalk/quotient.hpp"
#include "signedwalk/scenarios.hpp"
#include "signedwalk/signed_graph.hpp"
#include "signedwalk/walk.hpp"

namespace sw = signedwalk;
using nlohmann::json;

namespace {

constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

// Invalid construct parameters are usage errors rather than domain errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  double tol = sw::kDefaultTolerance;
  std::string format = "text";
  std::string out;
  bool multigraph = false;
  bool format_given = false;
};

sw::GraphMode mode_of(const Globals& g) {
  return g.multigraph ? sw::GraphMode::multigraph : sw::GraphMode::simple;
}

void emit(const Globals& g, const std::string& body) {
  if (g.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw sw::ParseError("cannot write " + g.out);
  file << body;
}

// Writes <out>.json next to the main output; skipped when printing to stdout.
void emit_sidecar(const Globals& g, const json& j) {
  if (g.out.empty()) return;
  std::ofstream file(g.out + ".json");
  if (!file) throw sw::ParseError("cannot write " + g.out + ".json");
  file << j.dump(2) << '\n';
}

void emit_json(const Globals& g, const json& j) { emit(g, j.dump(2) + "\n"); }

std::string fixed(double x) { return sw::io::format_fixed(x); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long parse_integer(const std::string& text, const std::string& what) {
  long value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("invalid " + what + " '" + text + "'");
  }
  return value;
}

// Short family names: k<N>, c<N>, p<N>, q<D>, cp<parts>, kb<a>x<b>, petersen.
// A leading '-' negates the graph.
sw::SignedGraph named_graph(std::string name) {
  bool negated = false;
  if (!name.empty() && name.front() == '-') {
    negated = true;
    name.erase(0, 1);
  }
  const auto number = [&](std::size_t skip) {
    return parse_integer(name.substr(skip), "graph name '" + name + "'");
  };
  sw::SignedGraph g;
  if (name == "petersen") {
    g = sw::petersen();
  } else if (name.rfind("kb", 0) == 0) {
    const auto parts = split(name.substr(2), 'x');
    if (parts.size() != 2) throw UsageError("expected kb<a>x<b>, got " + name);
    g = sw::complete_bipartite(parse_integer(parts[0], "part size"),
                               parse_integer(parts[1], "part size"));
  } else if (name.rfind("cp", 0) == 0) {
    g = sw::cocktail_party(number(2));
  } else if (name.size() > 1 && name[0] == 'k') {
    g = sw::complete(number(1));
  } else if (name.size() > 1 && name[0] == 'c') {
    g = sw::cycle(number(1));
  } else if (name.size() > 1 && name[0] == 'p') {
    g = sw::path(number(1));
  } else if (name.size() > 1 && name[0] == 'q') {
    g = sw::hypercube(static_cast<int>(number(1)));
  } else {
    throw UsageError("unknown graph name '" + name + "'");
  }
  return negated ? sw::negate(g) : g;
}

std::uint32_t parse_bitstring(const std::string& text, int d) {
  if (text.empty() || static_cast<int>(text.size()) > d) {
    throw UsageError("connection element '" + text + "' must have 1.." +
                     std::to_string(d) + " bits");
  }
  std::uint32_t value = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw UsageError("connection element '" + text + "' is not binary");
    }
    value = (value << 1) | static_cast<std::uint32_t>(ch - '0');
  }
  return value;
}

json labels_json(const std::vector<std::pair<sw::Index, json>>& labels) {
  json out = json::array();
  for (const auto& [index, label] : labels) {
    out.push_back({{"index", index}, {"label", label}});
  }
  return out;
}

json graph_json(const sw::SignedGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.sign});
  return {{"n", g.size()}, {"edges", std::move(edges)}};
}

json graph_json(const sw::WeightedGraph& g) {
  json edges = json::array();
  for (sw::Index u = 0; u < g.size(); ++u) {
    for (sw::Index v = u; v < g.size(); ++v) {
      if (g(u, v) != 0.0) edges.push_back({u, v, g(u, v)});
    }
  }
  return {{"n", g.size()}, {"edges", std::move(edges)}};
}

json matrix_json(const sw::IntMatrix& m) {
  json rows = json::array();
  for (sw::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (sw::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Graph plus vertex-label table: edge list as text, JSON on request.
template <typename Graph>
void emit_labelled(const Globals& globals, const Graph& g, const json& labels) {
  if (globals.format == "json") {
    emit_json(globals, {{"graph", graph_json(g)}, {"labels", labels}});
    return;
  }
  emit(globals, sw::io::to_edge_list(g));
  emit_sidecar(globals, {{"labels", labels}});
}

json amplitude_json(const sw::WalkAmplitude& a) {
  return {{"time", a.time}, {"re", a.re}, {"im", a.im},
          {"fidelity", a.fidelity}, {"phase", a.phase()}};
}

json verdict_json(const sw::PstVerdict& v) {
  return {{"time", v.time}, {"fidelity", v.fidelity}, {"phase", v.phase},
          {"kind", sw::to_string(v.kind)}, {"from", v.from}, {"to", v.to}};
}

std::string report_text(const sw::ScenarioReport& r) {
  std::ostringstream out;
  out << r.id << ' ' << sw::to_string(r.overall()) << '\n';
  for (const auto& c : r.claims) {
    out << "  " << sw::to_string(c.status) << "  " << c.description
        << "  expected=" << fixed(c.expected)
        << " measured=" << fixed(c.measured) << " tol=" << c.tolerance
        << " (" << sw::to_string(c.comparison) << ", "
        << sw::to_string(c.provenance) << ")\n";
  }
  return out.str();
}

std::string valid_ids() {
  std::string out;
  for (auto id : sw::scenario_ids()) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signedwalk: continuous-time quantum walks on signed graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--tol", globals.tol, "fidelity tolerance")
      ->capture_default_str();
  app.add_option("--format", globals.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", globals.out, "output path (default stdout)");
  app.add_flag("--multigraph", globals.multigraph,
               "read input graphs as integer multigraphs");

  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;
  // Commands whose DomainErrors signal bad user parameters (exit 2).
  std::vector<CLI::App*> parameter_commands;

  // construct ---------------------------------------------------------------
  struct {
    std::string family, conn, neg, pos, offsets, factors, pairs, input;
    long n = 0, d = 0, k = 0, parts = 0, left = 0, right = 0;
    std::uint64_t seed = 1;
  } con;
  auto* construct = app.add_subcommand("construct", "build a graph family");
  construct->add_option("--family", con.family, "graph family")->required();
  construct->add_option("--n", con.n, "vertex count");
  construct->add_option("--d", con.d, "dimension");
  construct->add_option("--k", con.k, "degree");
  construct->add_option("--parts", con.parts, "cocktail party parts");
  construct->add_option("--left", con.left, "bipartite left size");
  construct->add_option("--right", con.right, "bipartite right size");
  construct->add_option("--conn", con.conn, "cubelike connection set, e.g. 001,010,100");
  construct->add_option("--neg", con.neg, "join: negated graph name");
  construct->add_option("--pos", con.pos, "join: positive graph name");
  construct->add_option("--offsets", con.offsets, "circulant offsets, e.g. 1,2,3");
  construct->add_option("--factors", con.factors, "product factors, e.g. k2,-k2,k2");
  construct->add_option("--pairs", con.pairs, "permutation pairs, e.g. 0:1,2:3");
  construct->add_option("--input", con.input, "input graph (complement)");
  construct->add_option("--seed", con.seed, "random-regular seed");
  parameter_commands.push_back(construct);
  commands.emplace_back(construct, [&] {
    const std::string& f = con.family;
    sw::SignedGraph g;
    if (f == "complete") {
      g = sw::complete(con.n);
    } else if (f == "cycle") {
      g = sw::cycle(con.n);
    } else if (f == "path") {
      g = sw::path(con.n);
    } else if (f == "hypercube") {
      g = sw::hypercube(static_cast<int>(con.d));
    } else if (f == "cocktail") {
      g = sw::cocktail_party(con.parts);
    } else if (f == "bipartite") {
      g = sw::complete_bipartite(con.left, con.right);
    } else if (f == "petersen") {
      g = sw::petersen();
    } else if (f == "cubelike") {
      std::vector<std::uint32_t> c;
      for (const auto& s : split(con.conn, ',')) {
        c.push_back(parse_bitstring(s, static_cast<int>(con.d)));
      }
      g = sw::cubelike(sw::CubelikeSpec::make(static_cast<int>(con.d), c));
    } else if (f == "join") {
      if (con.neg.empty() || con.pos.empty()) {
        throw UsageError("join needs --neg and --pos");
      }
      g = sw::signed_join(named_graph(con.neg), named_graph(con.pos), -1, 1);
    } else if (f == "circulant") {
      std::vector<sw::Index> offsets;
      for (const auto& s : split(con.offsets, ',')) {
        offsets.push_back(parse_integer(s, "offset"));
      }
      g = sw::circulant(con.n, offsets);
    } else if (f == "product") {
      std::vector<sw::SignedGraph> factors;
      for (const auto& s : split(con.factors, ',')) {
        factors.push_back(named_graph(s));
      }
      if (factors.empty()) throw UsageError("product needs --factors");
      g = sw::cartesian_product(factors);
    } else if (f == "random-regular") {
      g = sw::random_regular(con.n, con.k, con.seed);
    } else if (f == "permutation") {
      std::vector<std::pair<sw::Index, sw::Index>> pairs;
      for (const auto& s : split(con.pairs, ',')) {
        const auto ends = split(s, ':');
        if (ends.size() != 2) throw UsageError("pair '" + s + "' is not u:v");
        pairs.emplace_back(parse_integer(ends[0], "vertex"),
                           parse_integer(ends[1], "vertex"));
      }
      g = sw::permutation_graph(con.n, pairs);
    } else if (f == "complement") {
      if (con.input.empty()) throw UsageError("complement needs --input");
      g = sw::complement(sw::io::load_signed_graph(con.input));
    } else {
      throw UsageError("unknown family '" + f + "'");
    }
    if (globals.format == "json") {
      emit_json(globals, graph_json(g));
    } else {
      emit(globals, sw::io::to_edge_list(g));
    }
    return 0;
  });

  // walk --------------------------------------------------------------------
  struct {
    std::string graph, time, t_max = "2*pi", step = "pi/1000", t0 = "0", t1;
    sw::Index from = 0, to = 0;
    long samples = 101;
  } wk;
  auto* walk = app.add_subcommand("walk", "amplitude <to|U(t)|from>");
  walk->add_option("graph", wk.graph, "edge-list file")->required();
  walk->add_option("--from", wk.from)->required();
  walk->add_option("--to", wk.to)->required();
  walk->add_option("--time", wk.time, "time expression, e.g. pi/2")->required();
  commands.emplace_back(walk, [&] {
    const sw::QuantumWalk qw(sw::io::load_signed_graph(wk.graph, mode_of(globals)));
    const auto a = qw.amplitude(wk.from, wk.to, sw::evaluate_expression(wk.time));
    if (globals.format == "json") {
      emit_json(globals, amplitude_json(a));
    } else if (globals.format == "csv") {
      emit(globals, "t,re,im,fidelity\n" + fixed(a.time) + "," + fixed(a.re) +
                        "," + fixed(a.im) + "," + fixed(a.fidelity) + "\n");
    } else {
      emit(globals, "re=" + fixed(a.re) + " im=" + fixed(a.im) +
                        " fidelity=" + fixed(a.fidelity) + "\n");
    }
    return 0;
  });

  auto* search = app.add_subcommand("pst-search", "scan for perfect state transfer");
  search->add_option("graph", wk.graph, "edge-list file")->required();
  search->add_option("--from", wk.from)->required();
  search->add_option("--to", wk.to)->required();
  search->add_option("--t-max", wk.t_max, "scan horizon")->capture_default_str();
  search->add_option("--step", wk.step, "grid step")->capture_default_str();
  commands.emplace_back(search, [&] {
    const sw::QuantumWalk qw(sw::io::load_signed_graph(wk.graph, mode_of(globals)));
    const auto verdicts =
        sw::pst_search(qw, wk.from, wk.to, sw::evaluate_expression(wk.t_max),
                       sw::evaluate_expression(wk.step), globals.tol);
    if (globals.format == "json") {
      json list = json::array();
      for (const auto& v : verdicts) list.push_back(verdict_json(v));
      emit_json(globals, list);
      return 0;
    }
    std::string body;
    for (const auto& v : verdicts) {
      body += fixed(v.time) + " " + fixed(v.fidelity) + " " + fixed(v.phase) +
              " " + std::string(sw::to_string(v.kind)) + "\n";
    }
    emit(globals, body);
    return 0;
  });

  auto* curve = app.add_subcommand("fidelity-curve", "sample the amplitude on a time grid");
  curve->add_option("graph", wk.graph, "edge-list file")->required();
  curve->add_option("--from", wk.from)->required();
  curve->add_option("--to", wk.to)->required();
  curve->add_option("--t0", wk.t0, "start time")->capture_default_str();
  curve->add_option("--t1", wk.t1, "end time")->required();
  curve->add_option("--samples", wk.samples, "number of samples")
      ->check(CLI::Range(2L, 1000000L))
      ->capture_default_str();
  commands.emplace_back(curve, [&] {
    const sw::QuantumWalk qw(sw::io::load_signed_graph(wk.graph, mode_of(globals)));
    const double t0 = sw::evaluate_expression(wk.t0);
    const double t1 = sw::evaluate_expression(wk.t1);
    std::vector<sw::WalkAmplitude> rows;
    for (long i = 0; i < wk.samples; ++i) {
      const double t = t0 + (t1 - t0) * static_cast<double>(i) /
                                static_cast<double>(wk.samples - 1);
      rows.push_back(qw.amplitude(wk.from, wk.to, t));
    }
    if (globals.format == "json") {
      json list = json::array();
      for (const auto& a : rows) list.push_back(amplitude_json(a));
      emit_json(globals, list);
      return 0;
    }
    std::string body = "t,re,im,fidelity\n";
    for (const auto& a : rows) {
      body += fixed(a.time) + "," + fixed(a.re) + "," + fixed(a.im) + "," +
              fixed(a.fidelity) + "\n";
    }
    emit(globals, body);
    return 0;
  });

  // quotient ----------------------------------------------------------------
  struct {
    std::string graph, partition;
    bool coarsest = false;
  } qt;
  auto* quot = app.add_subcommand("quotient", "quotient by an equitable partition");
  quot->add_option("graph", qt.graph, "edge-list file")->required();
  auto* part_opt = quot->add_option("--partition", qt.partition, "partition file");
  quot->add_flag("--coarsest", qt.coarsest,
                 "use the coarsest equitable partition (refined from the "
                 "partition file, or from one cell)");
  commands.emplace_back(quot, [&] {
    const sw::SignedGraph g = sw::io::load_signed_graph(qt.graph, mode_of(globals));
    sw::Partition pi = sw::Partition::single_cell(g.size());
    if (part_opt->count() > 0) {
      std::ifstream in(qt.partition);
      if (!in) throw sw::ParseError("cannot open " + qt.partition);
      pi = sw::read_partition(in, g.size());
    } else if (!qt.coarsest) {
      throw UsageError("quotient needs --partition or --coarsest");
    }
    if (qt.coarsest) pi = sw::coarsest_equitable(g, pi);
    const sw::QuotientGraph q = sw::quotient(g, pi);
    const json profile{{"cells", pi.cells()},
                       {"d_plus", matrix_json(q.profile.d_plus)},
                       {"d_minus", matrix_json(q.profile.d_minus)}};
    if (globals.format == "json") {
      emit_json(globals, {{"graph", graph_json(q.graph)}, {"profile", profile}});
    } else {
      emit(globals, sw::io::to_edge_list(q.graph));
      emit_sidecar(globals, profile);
    }
    return 0;
  });

  // many-particle powers ------------------------------------------------------
  struct {
    std::string graph;
    sw::Index k = 2;
  } mp;
  const auto add_power = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", mp.graph, "edge-list file")->required();
    sub->add_option("--k", mp.k, "particle count")->capture_default_str();
    return sub;
  };
  const auto subset_labels = [&](sw::Index n) {
    std::vector<std::pair<sw::Index, json>> labels;
    for (const auto& s : sw::k_subsets(n, mp.k)) labels.emplace_back(s.rank, s.members);
    return labels_json(labels);
  };
  auto* ext = add_power("exterior", "signed exterior power (fermions)");
  commands.emplace_back(ext, [&] {
    const sw::SignedGraph g = sw::io::load_signed_graph(mp.graph);
    emit_labelled(globals, sw::exterior_power(g, mp.k), subset_labels(g.size()));
    return 0;
  });
  auto* sym = add_power("symmetric", "symmetric power (hardcore bosons)");
  commands.emplace_back(sym, [&] {
    const sw::SignedGraph g = sw::io::load_signed_graph(mp.graph);
    emit_labelled(globals, sw::symmetric_power(g, mp.k), subset_labels(g.size()));
    return 0;
  });
  auto* boson = add_power("boson", "boson Cartesian quotient");
  commands.emplace_back(boson, [&] {
    const sw::SignedGraph g = sw::io::load_signed_graph(mp.graph);
    const sw::WeightedGraph b = sw::boson_quotient(g, mp.k);
    std::vector<std::pair<sw::Index, json>> labels;
    const auto states = sw::k_multisets(g.size(), mp.k);
    for (std::size_t i = 0; i < states.size(); ++i) {
      labels.emplace_back(static_cast<sw::Index>(i), states[i].occupation);
    }
    emit_labelled(globals, b, labels_json(labels));
    return 0;
  });

  // double cover --------------------------------------------------------------
  struct {
    std::string graph, positive, negative;
  } dc;
  auto* cover = app.add_subcommand("double-cover", "two-layer lift of a signed graph");
  cover->add_option("graph", dc.graph, "signed edge-list file");
  cover->add_option("--positive", dc.positive, "unsigned graph for the positive edges");
  cover->add_option("--negative", dc.negative, "unsigned graph for the negative edges");
  commands.emplace_back(cover, [&] {
    sw::SignedGraph lifted;
    if (!dc.graph.empty()) {
      if (!dc.positive.empty() || !dc.negative.empty()) {
        throw UsageError("give either a graph or --positive/--negative");
      }
      lifted = sw::double_cover(sw::io::load_signed_graph(dc.graph, mode_of(globals)));
    } else {
      if (dc.positive.empty() || dc.negative.empty()) {
        throw UsageError("double-cover needs a graph or both --positive and --negative");
      }
      lifted = sw::double_cover(
          sw::io::load_signed_graph(dc.positive, sw::GraphMode::multigraph),
          sw::io::load_signed_graph(dc.negative, sw::GraphMode::multigraph));
    }
    std::vector<std::pair<sw::Index, json>> labels;
    for (sw::Index i = 0; i < lifted.size(); ++i) {
      const auto v = sw::cover_vertex(i);
      labels.emplace_back(i, json{v.base, v.layer});
    }
    emit_labelled(globals, lifted, labels_json(labels));
    return 0;
  });

  // balance -------------------------------------------------------------------
  std::string balance_graph;
  auto* bal = app.add_subcommand("balance", "balanced / antibalanced test");
  bal->add_option("graph", balance_graph, "edge-list file")->required();
  commands.emplace_back(bal, [&] {
    const auto verdict = sw::balance_verdict(sw::io::load_signed_graph(balance_graph));
    std::vector<int> witness;
    if (verdict.witness) {
      for (sw::Index i = 0; i < verdict.witness->size(); ++i) {
        witness.push_back((*verdict.witness)[i]);
      }
    }
    if (globals.format == "json") {
      json j{{"status", sw::to_string(verdict.status)},
             {"also_antibalanced", verdict.also_antibalanced}};
      j["witness"] = verdict.witness ? json(witness) : json(nullptr);
      emit_json(globals, j);
      return 0;
    }
    std::string body = std::string(sw::to_string(verdict.status));
    if (verdict.also_antibalanced) body += " also_antibalanced";
    body += "\n";
    if (verdict.witness) {
      body += "witness";
      for (int s : witness) body += s > 0 ? " +1" : " -1";
      body += "\n";
    }
    emit(globals, body);
    return 0;
  });

  // verification ----------------------------------------------------------------
  std::string scenario;
  auto* verify = app.add_subcommand("verify", "run one verification scenario");
  verify->add_option("id", scenario, "scenario id")->required();
  commands.emplace_back(verify, [&] {
    const auto& ids = sw::scenario_ids();
    if (std::find(ids.begin(), ids.end(), scenario) == ids.end()) {
      std::cerr << "unknown scenario '" << scenario << "'; valid ids: "
                << valid_ids() << '\n';
      return kExitUsage;
    }
    const auto report = sw::run_scenario(scenario, globals.tol);
    if (globals.format_given && globals.format == "text") {
      emit(globals, report_text(report));
    } else {
      emit_json(globals, sw::to_json(report));
    }
    return report.has_failure() ? kExitClaimFailure : 0;
  });

  auto* verify_all = app.add_subcommand("verify-all", "run every verification scenario");
  commands.emplace_back(verify_all, [&] {
    std::vector<sw::ScenarioReport> reports;
    bool failed = false;
    for (auto id : sw::scenario_ids()) {
      reports.push_back(sw::run_scenario(id, globals.tol));
      failed = failed || reports.back().has_failure();
    }
    if (globals.format_given && globals.format == "text") {
      std::string body;
      for (const auto& r : reports) body += report_text(r);
      emit(globals, body);
    } else {
      emit_json(globals, sw::suite_to_json(reports));
    }
    return failed ? kExitClaimFailure : 0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  globals.format_given = app.get_option("--format")->count() > 0;

  for (const auto& [sub, run] : commands) {
    if (!sub->parsed()) continue;
    const bool parameters = std::find(parameter_commands.begin(),
                                      parameter_commands.end(),
                                      sub) != parameter_commands.end();
    try {
      return run();
    } catch (const UsageError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const sw::ParseError& e) {
      std::cerr << "parse error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const sw::DomainError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return parameters ? kExitUsage : kExitDomain;
    }
  }
  return kExitUsage;
}
