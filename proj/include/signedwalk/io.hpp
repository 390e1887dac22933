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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "signedwalk/signed_graph.hpp"

// Edge-list text format, one graph per file:
//
//   # comment
//   n 4
//   0 1 +1
//   1 2 -1
//
// `#` starts a comment anywhere on a line. Signed files carry integer signs
// (+1/-1; any integer multiplicity in multigraph mode, parallel lines summed).
// Weighted files carry real weights and may list loops `u u w`. Writers emit
// the upper triangle sorted by (u, v).
namespace signedwalk::io {

SignedGraph read_signed_graph(std::istream& in,
                              GraphMode mode = GraphMode::simple);
WeightedGraph read_weighted_graph(std::istream& in);

void write_signed_graph(std::ostream& out, const SignedGraph& g);
void write_weighted_graph(std::ostream& out, const WeightedGraph& g);

SignedGraph load_signed_graph(const std::filesystem::path& path,
                              GraphMode mode = GraphMode::simple);
WeightedGraph load_weighted_graph(const std::filesystem::path& path);

std::string to_edge_list(const SignedGraph& g);
std::string to_edge_list(const WeightedGraph& g);

// Fixed 12-decimal rendering used by every text writer; values within
// 5e-13 of zero print as 0 so that rounding noise never yields "-0.000...".
std::string format_fixed(double value);

}  // namespace signedwalk::io
