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

#include <gtest/gtest.h>

#include <random>

#include "dioph2/expr.hpp"
#include "dioph2/place.hpp"
#include "support.hpp"

using namespace dioph2;
using dioph2::testing::random_nonconstant;
using dioph2::testing::random_nonzero;
using dioph2::testing::random_poly;

namespace {

const Field& gf256() { return Field::get(kDefaultFieldSpec); }
RatFunc K(const std::string& s, const Field& f = gf256()) { return parse_ratfunc(f, s); }
Poly P(const std::string& s, const Field& f = gf256()) { return parse_ratfunc(f, s).num(); }

// Irreducibility by trial division against every monic polynomial of degree
// 1..deg/2.
bool irreducible_by_trial_division(const Poly& p) {
  const Field& f = p.field();
  if (p.degree() < 1) return false;
  bool ok = true;
  for (int d = 1; 2 * d <= p.degree() && ok; ++d) {
    dioph2::testing::for_each_monic(f, d, [&](const Poly& q) {
      if ((p % q).is_zero()) ok = false;
    });
  }
  return ok;
}

Poly reassemble(const Factorization& fac) {
  Poly acc = Poly::constant(fac.unit);
  for (const auto& [place, mult] : fac.factors) acc = acc * place.poly().pow(mult);
  return acc;
}

}  // namespace

TEST(Factor, KnownFactorizations) {
  const Field& f2 = Field::get(1);
  auto sq = factor(P("t^2 + 1", f2));
  ASSERT_EQ(sq.factors.size(), 1U);
  EXPECT_EQ(sq.factors[0].first.poly(), P("t + 1", f2));
  EXPECT_EQ(sq.factors[0].second, 2U);

  // Oracle: trial division by all monic polynomials of degree <= 2 over GF(2).
  auto fac = factor(P("t^4 + t", f2));
  ASSERT_EQ(fac.factors.size(), 3U);
  EXPECT_EQ(fac.factors[0].first.poly(), P("t", f2));
  EXPECT_EQ(fac.factors[1].first.poly(), P("t + 1", f2));
  EXPECT_EQ(fac.factors[2].first.poly(), P("t^2 + t + 1", f2));
  for (const auto& [place, mult] : fac.factors) {
    EXPECT_EQ(mult, 1U);
    EXPECT_TRUE(irreducible_by_trial_division(place.poly()));
  }
  EXPECT_EQ(reassemble(fac), P("t^4 + t", f2));

  const Poly irr = P("t^2 + t + 1", f2);
  auto single = factor(irr);
  ASSERT_EQ(single.factors.size(), 1U);
  EXPECT_EQ(single.factors[0].first.poly(), irr);

  EXPECT_THROW(factor(Poly(f2)), DomainError);
}

TEST(Factor, ReassemblesAndFactorsAreIrreducible) {
  std::mt19937_64 rng(21);
  for (unsigned m : {1U, 2U, 4U, 8U}) {
    const Field& f = Field::get(m);
    for (int i = 0; i < 80; ++i) {
      Poly a = random_poly(f, 5, rng);
      Poly b = random_poly(f, 3, rng);
      Poly p = a * a * b * random_poly(f, 4, rng);
      if (p.is_zero()) continue;
      auto fac = factor(p);
      EXPECT_EQ(reassemble(fac), p);
      for (const auto& [place, mult] : fac.factors) {
        EXPECT_TRUE(place.poly().is_monic());
        if (place.poly().degree() <= 6) EXPECT_TRUE(irreducible_by_trial_division(place.poly()));
      }
    }
  }
}

TEST(Factor, IrreducibilityTestAgreesWithTrialDivision) {
  const Field& f = Field::get(2);
  for (int d = 1; d <= 4; ++d) {
    dioph2::testing::for_each_monic(f, d, [&](const Poly& p) {
      EXPECT_EQ(is_irreducible(p), irreducible_by_trial_division(p)) << p.to_string();
    });
  }
}

TEST(Place, FiniteRequiresMonicIrreducible) {
  EXPECT_NO_THROW(Place::finite(P("t + 1")));
  EXPECT_THROW(Place::finite(P("t^2 + 1")), DomainError);
  EXPECT_THROW(Place::finite(P("#x2*t + 1")), DomainError);
  EXPECT_THROW(Place::infinite(gf256()).poly(), DomainError);
  EXPECT_EQ(Place::infinite(gf256()).degree(), 1U);
}

TEST(Ord, Examples) {
  const Place p0 = Place::finite(P("t"));
  const Place inf = Place::infinite(gf256());
  EXPECT_EQ(ord_at(K("t"), p0), 1);
  EXPECT_EQ(ord_at(K("t"), inf), -1);
  EXPECT_EQ(ord_at(K("1/(t+1)^3"), Place::finite(P("t + 1"))), -3);
  EXPECT_EQ(ord_at(K("t^3/(t+1)"), p0), 3);
  EXPECT_THROW(ord_at(K("0"), p0), DomainError);
}

TEST(Ord, AdditiveUnderMultiplication) {
  std::mt19937_64 rng(22);
  const Field& f = Field::get(4);
  for (int i = 0; i < 300; ++i) {
    RatFunc a = random_nonzero(f, 5, rng);
    RatFunc b = random_nonzero(f, 5, rng);
    Divisor da = divisor_of(a);
    Divisor db = divisor_of(b);
    Divisor dab = divisor_of(a * b);
    std::vector<Place> places{Place::infinite(f)};
    for (const auto& [pl, e] : da.support()) places.push_back(pl);
    for (const auto& [pl, e] : db.support()) places.push_back(pl);
    for (const auto& pl : places) {
      EXPECT_EQ(ord_at(a * b, pl), ord_at(a, pl) + ord_at(b, pl));
      EXPECT_EQ(dab.at(pl), da.at(pl) + db.at(pl));
    }
  }
}

TEST(Divisor, OfTAndConstants) {
  Divisor d = divisor_of(K("t"));
  EXPECT_EQ(d.support().size(), 2U);
  EXPECT_EQ(d.at(Place::finite(P("t"))), 1);
  EXPECT_EQ(d.at(Place::infinite(gf256())), -1);
  EXPECT_EQ(d.to_string(), "{t: 1, inf: -1}");
  EXPECT_TRUE(divisor_of(K("#x53")).empty());
  EXPECT_THROW(divisor_of(K("0")), DomainError);
}

TEST(Divisor, PrincipalDivisorsHaveDegreeZero) {
  std::mt19937_64 rng(23);
  const Field& f = gf256();
  for (int i = 0; i < 500; ++i) {
    RatFunc a = random_nonzero(f, 6, rng);
    Divisor d = divisor_of(a);
    EXPECT_EQ(d.degree(), 0);
    EXPECT_EQ(static_cast<std::uint64_t>(d.zero_part().degree()), height(a));
    EXPECT_EQ(static_cast<std::uint64_t>(d.pole_part().degree()), height(a));
  }
}

TEST(Height, Examples) {
  EXPECT_EQ(height(K("t^7")), 7U);
  EXPECT_EQ(height(K("#x53")), 0U);
  EXPECT_EQ(height(K("(t^2+1)/t^5")), 5U);
  EXPECT_THROW(height(K("0")), DomainError);
}

TEST(Height, FractionalLinearImageKeepsHeight) {
  std::mt19937_64 rng(24);
  const Field& f = gf256();
  std::uniform_int_distribution<std::uint32_t> c(0, f.size() - 1);
  for (int i = 0; i < 300; ++i) {
    RatFunc w = random_nonconstant(f, 6, rng);
    FieldElem a = f.elem(c(rng));
    FieldElem b = f.elem(c(rng));
    if (a == b) continue;
    EXPECT_EQ(height((w + RatFunc::constant(a)) / (w + RatFunc::constant(b))), height(w));
    EXPECT_EQ(height(w * w), 2 * height(w));
    EXPECT_EQ(height(w.frobenius(3)), 8 * height(w));
  }
}

TEST(Poles, EvenOrderScreen) {
  EXPECT_FALSE(poles_have_even_order(K("1/t")));
  EXPECT_TRUE(poles_have_even_order(K("t^4 + t")));
  EXPECT_TRUE(poles_have_even_order(K("1/t^2 + 1/t")));
  EXPECT_FALSE(poles_have_even_order(K("t^3")));
  // Agrees with the divisor on random inputs.
  std::mt19937_64 rng(25);
  const Field& f = Field::get(4);
  for (int i = 0; i < 300; ++i) {
    RatFunc a = random_nonzero(f, 4, rng);
    for (const RatFunc& x : {a, a * a, a * a + a}) {
      if (x.is_zero()) continue;
      bool even = true;
      const Divisor d = divisor_of(x);
      for (const auto& [pl, e] : d.support()) {
        if (e < 0 && (-e) % 2 != 0) even = false;
      }
      EXPECT_EQ(poles_have_even_order(x), even) << x.to_string();
    }
  }
}
