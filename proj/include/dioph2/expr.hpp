/*
   Copyright 2026 The dioph2 Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string_view>

#include "dioph2/ratfunc.hpp"

namespace dioph2 {

/// Parses an element of K:
///
///   expr   := term { "+" term }
///   term   := factor { ("*" | "/") factor }
///   factor := primary { "^" nat }
///   primary:= "t" | const | "(" expr ")"
///   const  := "#x" hexdigits | "0" | "1"
///
/// Whitespace is insignificant. Throws ParseError (line 1, 1-based column) on
/// malformed input and DivisionByZero when a divisor evaluates to zero.
RatFunc parse_ratfunc(const Field& field, std::string_view text);

}  // namespace dioph2
