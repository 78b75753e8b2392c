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

#include <optional>
#include <vector>

#include "dioph2/ratfunc.hpp"

namespace dioph2 {

/// A solution of z^q + z = beta (q = degree) together with the constant
/// kernel of z -> z^q + z; the full solution set is {z + k : k in kernel}.
struct ASSolution {
  RatFunc z;  // lexicographically smallest member of its coset
  std::vector<FieldElem> kernel;
  unsigned degree = 2;

  std::vector<RatFunc> all() const;
};

/// True iff every pole of beta, including the infinite place, has even order.
/// Necessary for solvability of both z^2 + z = beta and z^4 + z = beta.
/// Throws DomainError for beta = 0.
bool pole_parity_screen(const RatFunc& beta);

/// Solves z^2 + z = beta. Returns nullopt when there is no solution in K.
std::optional<ASSolution> solve_deg2(const RatFunc& beta);

/// Solves z^4 + z = beta by composing two quadratic steps.
std::optional<ASSolution> solve_deg4(const RatFunc& beta);

/// Dispatches on degree; throws DomainError unless degree is 2 or 4.
std::optional<ASSolution> solve_artin_schreier(const RatFunc& beta, unsigned degree);

bool is_AS4_image(const RatFunc& beta);

}  // namespace dioph2
