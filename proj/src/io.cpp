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

#include "signedwalk/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "signedwalk/errors.hpp"

namespace signedwalk::io {
namespace {

struct RawEntry {
  Index u;
  Index v;
  std::string weight;
  int line;
};

struct RawEdgeList {
  Index n = 0;
  std::vector<RawEntry> entries;
};

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

RawEdgeList read_raw(std::istream& in) {
  RawEdgeList raw;
  std::optional<Index> n;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(strip_comment(line));
    std::string first;
    if (!(fields >> first)) continue;
    if (!n) {
      long long count = -1;
      if (first != "n" || !(fields >> count) || count < 0) {
        fail(lineno, "expected header 'n <count>'");
      }
      std::string extra;
      if (fields >> extra) fail(lineno, "trailing text after header");
      n = static_cast<Index>(count);
      continue;
    }
    RawEntry e{0, 0, {}, lineno};
    std::istringstream ufield(first);
    long long u = 0;
    long long v = 0;
    if (!(ufield >> u) || !ufield.eof() || !(fields >> v >> e.weight)) {
      fail(lineno, "expected 'u v weight'");
    }
    std::string extra;
    if (fields >> extra) fail(lineno, "trailing text after edge");
    if (u < 0 || v < 0 || u >= *n || v >= *n) {
      fail(lineno, "vertex index out of range");
    }
    e.u = static_cast<Index>(u);
    e.v = static_cast<Index>(v);
    raw.entries.push_back(std::move(e));
  }
  if (!n) throw ParseError("missing header 'n <count>'");
  raw.n = *n;
  return raw;
}

int parse_sign(const RawEntry& e) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(e.weight, &used);
  } catch (const std::exception&) {
    fail(e.line, "edge sign '" + e.weight + "' is not an integer");
  }
  if (used != e.weight.size()) {
    fail(e.line, "edge sign '" + e.weight + "' is not an integer");
  }
  return value;
}

double parse_weight(const RawEntry& e) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(e.weight, &used);
  } catch (const std::exception&) {
    fail(e.line, "weight '" + e.weight + "' is not a number");
  }
  if (used != e.weight.size() || !std::isfinite(value)) {
    fail(e.line, "weight '" + e.weight + "' is not a number");
  }
  return value;
}

std::string format_sign(int s) {
  return s > 0 ? "+" + std::to_string(s) : std::to_string(s);
}

}  // namespace

std::string format_fixed(double value) {
  if (std::abs(value) < 5e-13) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", value);
  return buf;
}

SignedGraph read_signed_graph(std::istream& in, GraphMode mode) {
  const RawEdgeList raw = read_raw(in);
  IntMatrix a = IntMatrix::Zero(raw.n, raw.n);
  for (const auto& e : raw.entries) {
    if (e.u == e.v) fail(e.line, "self-loop in signed graph");
    const int s = parse_sign(e);
    if (mode == GraphMode::simple) {
      if (s != 1 && s != -1) fail(e.line, "edge sign must be +1 or -1");
      if (a(e.u, e.v) != 0) fail(e.line, "duplicate edge");
    } else if (s == 0) {
      fail(e.line, "zero multiplicity");
    }
    a(e.u, e.v) += s;
    a(e.v, e.u) += s;
  }
  return SignedGraph(std::move(a), mode);
}

WeightedGraph read_weighted_graph(std::istream& in) {
  const RawEdgeList raw = read_raw(in);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(raw.n, raw.n);
  Eigen::MatrixXi seen = Eigen::MatrixXi::Zero(raw.n, raw.n);
  for (const auto& e : raw.entries) {
    if (seen(e.u, e.v) != 0) fail(e.line, "duplicate entry");
    seen(e.u, e.v) = seen(e.v, e.u) = 1;
    w(e.u, e.v) = w(e.v, e.u) = parse_weight(e);
  }
  return WeightedGraph(std::move(w));
}

void write_signed_graph(std::ostream& out, const SignedGraph& g) {
  out << "n " << g.size() << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << format_sign(e.sign) << '\n';
  }
}

void write_weighted_graph(std::ostream& out, const WeightedGraph& g) {
  out << "n " << g.size() << '\n';
  for (Index u = 0; u < g.size(); ++u) {
    for (Index v = u; v < g.size(); ++v) {
      if (g(u, v) != 0.0) {
        out << u << ' ' << v << ' ' << format_fixed(g(u, v)) << '\n';
      }
    }
  }
}

SignedGraph load_signed_graph(const std::filesystem::path& path,
                              GraphMode mode) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_signed_graph(in, mode);
}

WeightedGraph load_weighted_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_weighted_graph(in);
}

std::string to_edge_list(const SignedGraph& g) {
  std::ostringstream out;
  write_signed_graph(out, g);
  return out.str();
}

std::string to_edge_list(const WeightedGraph& g) {
  std::ostringstream out;
  write_weighted_graph(out, g);
  return out.str();
}

}  // namespace signedwalk::io
