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

#include "signedwalk/errors.hpp"
#include "signedwalk/expression.hpp"

namespace signedwalk {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Expression, Values) {
  EXPECT_DOUBLE_EQ(evaluate_expression("1.5"), 1.5);
  EXPECT_DOUBLE_EQ(evaluate_expression("pi/2"), kPi / 2);
  EXPECT_DOUBLE_EQ(evaluate_expression("2*pi"), 2 * kPi);
  EXPECT_DOUBLE_EQ(evaluate_expression(" pi / sqrt(12) "), kPi / std::sqrt(12.0));
  EXPECT_DOUBLE_EQ(evaluate_expression("-(1+2)*3"), -9.0);
  EXPECT_DOUBLE_EQ(evaluate_expression("1-2-3"), -4.0);
  EXPECT_DOUBLE_EQ(evaluate_expression("8/2/2"), 2.0);
  EXPECT_DOUBLE_EQ(evaluate_expression("1e-3"), 1e-3);
  EXPECT_DOUBLE_EQ(evaluate_expression("pi/1000"), kPi / 1000);
}

TEST(Expression, Errors) {
  for (const char* bad : {"", "pi/", "2**3", "sqrt(-1)", "1/0", "(1", "foo", "1 2", "1e999"}) {
    EXPECT_THROW(evaluate_expression(bad), ParseError) << bad;
  }
  try {
    evaluate_expression("pi/");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("offset 3"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace signedwalk
