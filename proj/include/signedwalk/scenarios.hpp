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

#include <json.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "signedwalk/walk.hpp"

// Named verification scenarios. Each scenario recomputes a set of claims
// about a specific signed graph and records expected against measured values.
namespace signedwalk {

// `stated`: a claimed statement being checked; `derived`: a value computed
// independently here (oracle, hand derivation).
enum class Provenance { stated, derived };
enum class Comparison { approx, at_least, at_most };
enum class ClaimStatus { pass, fail, discrepancy };

std::string_view to_string(Provenance p);
std::string_view to_string(Comparison c);
std::string_view to_string(ClaimStatus s);

/// One checked statement. `approx` passes when |measured - expected| <=
/// tolerance, `at_least` when measured >= expected - tolerance, `at_most`
/// when measured <= expected + tolerance.
struct Claim {
  std::string description;
  Provenance provenance = Provenance::derived;
  double expected = 0.0;
  double measured = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::approx;
  ClaimStatus status = ClaimStatus::fail;
  std::string note;
};

struct ScenarioReport {
  std::string id;
  std::vector<Claim> claims;
  double runtime_seconds = 0.0;

  bool has_failure() const;
  // fail if any claim fails, else discrepancy if any claim is one, else pass.
  ClaimStatus overall() const;
};

const std::vector<std::string_view>& scenario_ids();

// Throws DomainError for an unknown id. `tol` is the fidelity tolerance used
// by the PST claims.
ScenarioReport run_scenario(std::string_view id,
                            double tol = kDefaultTolerance);

nlohmann::json to_json(const Claim& claim);
nlohmann::json to_json(const ScenarioReport& report);
// {"reports": [...], "summary": {...}} for a suite run.
nlohmann::json suite_to_json(std::span<const ScenarioReport> reports);

}  // namespace signedwalk
