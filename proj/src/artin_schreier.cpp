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

#include "dioph2/artin_schreier.hpp"

#include <algorithm>

#include "dioph2/error.hpp"
#include "dioph2/gf2_linear.hpp"
#include "dioph2/place.hpp"

namespace dioph2 {

namespace {

std::vector<FieldElem> quadratic_kernel(const Field& f) { return {f.zero(), f.one()}; }

RatFunc smallest_in_coset(const RatFunc& z, const std::vector<FieldElem>& kernel) {
  RatFunc best = z;
  for (const auto& k : kernel) {
    RatFunc cand = z + RatFunc::constant(k);
    if (lex_less(cand, best)) best = std::move(cand);
  }
  return best;
}

}  // namespace

std::vector<RatFunc> ASSolution::all() const {
  std::vector<RatFunc> out;
  out.reserve(kernel.size());
  for (const auto& k : kernel) out.push_back(z + RatFunc::constant(k));
  return out;
}

bool pole_parity_screen(const RatFunc& beta) { return poles_have_even_order(beta); }

std::optional<ASSolution> solve_deg2(const RatFunc& beta) {
  const Field& f = beta.field();
  if (beta.is_zero()) return ASSolution{RatFunc::zero(f), quadratic_kernel(f), 2};

  // A reduced z = g/h gives z^2 + z = (g^2 + g h)/h^2, again reduced, so the
  // denominator of beta must be h^2 and the numerator g^2 + g h.
  const Poly& num = beta.num();
  const Poly& den = beta.den();
  if (!den.is_square()) return std::nullopt;
  const Poly h = den.sqrt();
  int extra = 0;
  if (num.degree() > den.degree()) {
    const int diff = num.degree() - den.degree();
    if (diff % 2 != 0) return std::nullopt;
    extra = diff / 2;
  }
  const int bound = h.degree() + extra;  // deg g <= bound
  const unsigned m = f.m();
  const std::size_t unknowns = static_cast<std::size_t>(bound + 1) * m;
  const std::size_t rows = static_cast<std::size_t>(2 * bound + 1) * m;

  // g -> g^2 + g h is GF(2)-linear in the bit coordinates of g.
  Gf2System sys(rows, unknowns);
  for (int i = 0; i <= bound; ++i) {
    for (unsigned j = 0; j < m; ++j) {
      const Poly e = Poly::monomial(f, 1U << j, static_cast<std::size_t>(i));
      const Poly image = e.square() + e * h;
      const std::size_t col = static_cast<std::size_t>(i) * m + j;
      for (int k = 0; k <= image.degree(); ++k) {
        const std::uint32_t c = image[static_cast<std::size_t>(k)];
        for (unsigned b = 0; b < m; ++b) {
          if ((c >> b) & 1U) sys.set(static_cast<std::size_t>(k) * m + b, col);
        }
      }
    }
  }
  for (int k = 0; k <= num.degree(); ++k) {
    const std::uint32_t c = num[static_cast<std::size_t>(k)];
    for (unsigned b = 0; b < m; ++b) {
      if ((c >> b) & 1U) sys.set_rhs(static_cast<std::size_t>(k) * m + b);
    }
  }
  const auto x = sys.solve();
  if (!x) return std::nullopt;

  std::vector<std::uint32_t> g(static_cast<std::size_t>(bound) + 1, 0);
  for (std::size_t col = 0; col < unknowns; ++col) {
    if ((*x)[col]) g[col / m] |= 1U << (col % m);
  }
  RatFunc z(Poly(f, std::move(g)), h);
  if (z * z + z != beta) throw InvariantViolation("quadratic Artin-Schreier solution fails substitution");
  auto kernel = quadratic_kernel(f);
  return ASSolution{smallest_in_coset(z, kernel), std::move(kernel), 2};
}

std::optional<ASSolution> solve_deg4(const RatFunc& beta) {
  const Field& f = beta.field();
  auto kernel = f.fourth_power_fixed();
  if (beta.is_zero()) return ASSolution{RatFunc::zero(f), std::move(kernel), 4};

  // z^4 + z = w^2 + w with w = z^2 + z.
  const auto outer = solve_deg2(beta);
  if (!outer) return std::nullopt;
  for (const RatFunc& w : outer->all()) {
    const auto inner = solve_deg2(w);
    if (!inner) continue;
    const RatFunc& z = inner->z;
    if (z.pow(4) + z != beta) throw InvariantViolation("quartic Artin-Schreier solution fails substitution");
    RatFunc best = smallest_in_coset(z, kernel);
    return ASSolution{std::move(best), std::move(kernel), 4};
  }
  return std::nullopt;
}

std::optional<ASSolution> solve_artin_schreier(const RatFunc& beta, unsigned degree) {
  if (degree == 2) return solve_deg2(beta);
  if (degree == 4) return solve_deg4(beta);
  throw DomainError("Artin-Schreier degree must be 2 or 4, got " + std::to_string(degree));
}

bool is_AS4_image(const RatFunc& beta) { return solve_deg4(beta).has_value(); }

}  // namespace dioph2
