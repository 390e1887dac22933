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

#include <set>
#include <string>

#include "signedwalk/errors.hpp"
#include "signedwalk/scenarios.hpp"

namespace signedwalk {
namespace {

const std::set<std::string> kDiscrepancyIds{"k8-signed", "cubelike-signed-remark",
                                            "sym-vs-ext", "boson-ladder"};

class ScenarioRun : public ::testing::TestWithParam<std::string_view> {};

TEST_P(ScenarioRun, NoFailingClaims) {
  const ScenarioReport r = run_scenario(GetParam());
  EXPECT_EQ(r.id, GetParam());
  ASSERT_FALSE(r.claims.empty());
  for (const auto& c : r.claims) {
    EXPECT_NE(c.status, ClaimStatus::fail) << c.description << ": expected " << c.expected
                                           << " measured " << c.measured;
    if (c.status == ClaimStatus::discrepancy) {
      EXPECT_EQ(c.provenance, Provenance::stated) << c.description;
      EXPECT_FALSE(c.note.empty()) << c.description;
    }
  }
  const bool flagged = kDiscrepancyIds.count(std::string(GetParam())) > 0;
  EXPECT_EQ(r.overall(), flagged ? ClaimStatus::discrepancy : ClaimStatus::pass);
  EXPECT_GE(r.runtime_seconds, 0.0);
}

INSTANTIATE_TEST_SUITE_P(All, ScenarioRun, ::testing::ValuesIn(scenario_ids()),
                         [](const auto& info) {
                           std::string name(info.param);
                           for (char& ch : name) {
                             if (ch == '-') ch = '_';
                           }
                           return name;
                         });

TEST(Scenarios, CatalogAndErrors) {
  EXPECT_EQ(scenario_ids().size(), 16u);
  EXPECT_EQ(scenario_ids().front(), "fig1-cycles");
  EXPECT_THROW(run_scenario("no-such-scenario"), DomainError);
}

TEST(Scenarios, JsonShape) {
  const ScenarioReport r = run_scenario("k6-no-pst");
  const nlohmann::json j = to_json(r);
  for (const char* key : {"id", "status", "runtime_seconds", "claims"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  ASSERT_FALSE(j["claims"].empty());
  const auto& claim = j["claims"][0];
  for (const char* key :
       {"description", "provenance", "expected", "measured", "tolerance", "comparison", "status"}) {
    EXPECT_TRUE(claim.contains(key)) << key;
  }
  const std::vector<ScenarioReport> suite{r, run_scenario("k8-signed")};
  const nlohmann::json s = suite_to_json(suite);
  EXPECT_EQ(s["summary"]["scenarios"], 2);
  EXPECT_EQ(s["summary"]["pass"], 1);
  EXPECT_EQ(s["summary"]["discrepancy"], 1);
  EXPECT_EQ(s["summary"]["fail"], 0);
}

TEST(Scenarios, OverallStatusRules) {
  ScenarioReport r{"x", {}, 0.0};
  EXPECT_EQ(r.overall(), ClaimStatus::pass);
  r.claims.push_back(Claim{.description = "d", .status = ClaimStatus::discrepancy, .note = "n"});
  EXPECT_EQ(r.overall(), ClaimStatus::discrepancy);
  r.claims.push_back(Claim{.description = "f", .status = ClaimStatus::fail, .note = ""});
  EXPECT_EQ(r.overall(), ClaimStatus::fail);
  EXPECT_TRUE(r.has_failure());
}

}  // namespace
}  // namespace signedwalk
