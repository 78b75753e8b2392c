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

// Random generators and brute-force oracles shared by the test binaries.
// Nothing here calls into the solver or certificate code it is used to check.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "dioph2/field.hpp"
#include "dioph2/poly.hpp"
#include "dioph2/ratfunc.hpp"
#include "dioph2/reducer.hpp"

namespace dioph2::testing {

inline Poly random_poly(const Field& f, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, f.size() - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<std::uint32_t> cs(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& c : cs) c = coeff(rng);
  return Poly(f, std::move(cs));
}

inline Poly random_monic(const Field& f, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, f.size() - 1);
  std::vector<std::uint32_t> cs(static_cast<std::size_t>(degree) + 1);
  for (auto& c : cs) c = coeff(rng);
  cs.back() = 1;
  return Poly(f, std::move(cs));
}

/// Random element of height at most `max_height` (may be zero or constant).
inline RatFunc random_ratfunc(const Field& f, int max_height, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_height);
  Poly num = random_poly(f, max_height, rng);
  Poly den = random_monic(f, deg(rng), rng);
  return RatFunc(std::move(num), std::move(den));
}

inline RatFunc random_nonzero(const Field& f, int max_height, std::mt19937_64& rng) {
  for (;;) {
    RatFunc r = random_ratfunc(f, max_height, rng);
    if (!r.is_zero()) return r;
  }
}

inline RatFunc random_nonconstant(const Field& f, int max_height, std::mt19937_64& rng) {
  for (;;) {
    RatFunc r = random_ratfunc(f, max_height, rng);
    if (!r.is_constant()) return r;
  }
}

/// Bit-serial multiply-and-reduce in GF(2)[x]/(modulus).
inline std::uint32_t carryless_mul_oracle(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned m) {
  std::uint32_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1U << m)) a ^= modulus;
  }
  return r;
}

/// Calls `fn(poly)` for every polynomial of degree <= max_degree (including 0).
template <class Fn>
void for_each_poly(const Field& f, int max_degree, Fn&& fn) {
  const std::size_t n = static_cast<std::size_t>(max_degree) + 1;
  std::vector<std::uint32_t> cs(n, 0);
  for (;;) {
    fn(Poly(f, cs));
    std::size_t i = 0;
    while (i < n && ++cs[i] == f.size()) cs[i++] = 0;
    if (i == n) return;
  }
}

/// Calls `fn(poly)` for every monic polynomial of degree exactly `degree`.
template <class Fn>
void for_each_monic(const Field& f, int degree, Fn&& fn) {
  const std::size_t n = static_cast<std::size_t>(degree);
  std::vector<std::uint32_t> cs(n + 1, 0);
  cs[n] = 1;
  for (;;) {
    fn(Poly(f, cs));
    std::size_t i = 0;
    while (i < n && ++cs[i] == f.size()) cs[i++] = 0;
    if (i == n) return;
  }
}

/// Calls `fn(r)` for every nonzero reduced element of height <= max_height,
/// each exactly once.
template <class Fn>
void for_each_ratfunc(const Field& f, int max_height, Fn&& fn) {
  for (int dd = 0; dd <= max_height; ++dd) {
    for_each_monic(f, dd, [&](const Poly& den) {
      for_each_poly(f, max_height, [&](const Poly& num) {
        if (num.is_zero()) return;
        if (!Poly::gcd(num, den).is_one()) return;
        fn(RatFunc(num, den));
      });
    });
  }
}

/// Maps each value z^q + z, over z = 0 and every z of height <= max_height,
/// to its preimages. Keys are canonical expression strings.
inline std::unordered_map<std::string, std::vector<RatFunc>> artin_schreier_image_table(const Field& f,
                                                                                          int max_height,
                                                                                          unsigned q) {
  std::unordered_map<std::string, std::vector<RatFunc>> table;
  auto add = [&](const RatFunc& z) { table[(z.pow(q) + z).to_string()].push_back(z); };
  add(RatFunc::zero(f));
  for_each_ratfunc(f, max_height, add);
  return table;
}

/// Every z of height <= max_height with z^q + z = beta, by enumeration over
/// denominators d (monic, d^q = den beta) and all numerators of bounded degree.
inline std::vector<RatFunc> artin_schreier_preimages(const RatFunc& beta, int max_height, unsigned q) {
  const Field& f = beta.field();
  std::vector<RatFunc> out;
  if (beta.is_zero()) out.push_back(RatFunc::zero(f));
  for (int dd = 0; dd <= max_height; ++dd) {
    for_each_monic(f, dd, [&](const Poly& d) {
      if (d.pow(q) != beta.den()) return;
      const Poly dq1 = d.pow(q - 1);
      for_each_poly(f, max_height, [&](const Poly& g) {
        if (g.is_zero()) return;
        if (g.pow(q) + g * dq1 != beta.num()) return;
        if (!Poly::gcd(g, d).is_one()) return;
        out.push_back(RatFunc(g, d));
      });
    });
  }
  return out;
}

// Random source system over variables x1..x<vars>, with literals up to max_const.
inline NSystem random_nsystem(std::size_t vars, std::size_t atoms, std::uint64_t max_const, std::mt19937_64& rng) {
  NSystem sys;
  for (std::size_t i = 1; i <= vars; ++i) sys.variables.push_back("x" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> pick(0, vars - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::uint64_t> lit(0, max_const);
  for (std::size_t i = 0; i < atoms; ++i) {
    NAtom a;
    a.line = i + 1;
    a.column = 1;
    switch (kind(rng)) {
      case 0:
        a.kind = NAtom::Kind::kSumEq;
        a.a = sys.variables[pick(rng)];
        a.b = sys.variables[pick(rng)];
        a.c = sys.variables[pick(rng)];
        break;
      case 1:
        a.kind = NAtom::Kind::kDiv2;
        a.a = sys.variables[pick(rng)];
        a.b = sys.variables[pick(rng)];
        break;
      default:
        a.kind = NAtom::Kind::kConstEq;
        a.a = sys.variables[pick(rng)];
        a.k = lit(rng);
        break;
    }
    sys.atoms.push_back(std::move(a));
  }
  return sys;
}

// Plain semantics of one atom, written without the library's helpers.
inline bool nat_atom_oracle(const NAtom& a, const NAssignment& na) {
  switch (a.kind) {
    case NAtom::Kind::kSumEq: return na.at(a.c) == na.at(a.a) + na.at(a.b);
    case NAtom::Kind::kConstEq: return na.at(a.a) == a.k;
    case NAtom::Kind::kDiv2: {
      const std::uint64_t n = na.at(a.a);
      const std::uint64_t m = na.at(a.b);
      for (std::uint64_t p = n; p <= m; p *= 2) {
        if (p == m) return true;
        if (p == 0) return false;
      }
      return false;
    }
  }
  return false;
}

// First satisfying assignment in lexicographic order, by exhaustive counting.
inline std::optional<NAssignment> nat_brute_force(const NSystem& sys, std::uint64_t bound) {
  const std::size_t n = sys.variables.size();
  std::vector<std::uint64_t> digits(n, 0);
  while (true) {
    NAssignment na;
    for (std::size_t i = 0; i < n; ++i) na[sys.variables[i]] = digits[i];
    bool ok = true;
    for (const auto& a : sys.atoms) ok = ok && nat_atom_oracle(a, na);
    if (ok) return na;
    std::size_t i = n;
    while (i > 0 && digits[i - 1] == bound) digits[--i] = 0;
    if (i == 0) return std::nullopt;
    ++digits[i - 1];
  }
}

}  // namespace dioph2::testing
