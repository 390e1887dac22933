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

#include <string_view>

// Numeric expressions for command-line times, such as "pi/2" or
// "2*pi/sqrt(3)". Grammar: sums and products of numbers, the constant pi,
// sqrt(...), unary signs and parentheses.
namespace signedwalk {

// Throws ParseError on malformed input or a non-finite result.
double evaluate_expression(std::string_view text);

}  // namespace signedwalk
