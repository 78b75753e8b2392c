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

#include <algorithm>
#include <random>

#include "dioph2/artin_schreier.hpp"
#include "dioph2/error.hpp"
#include "dioph2/expr.hpp"
#include "dioph2/place.hpp"
#include "support.hpp"

using namespace dioph2;
namespace dt = dioph2::testing;

namespace {

const Field& gf256() { return Field::get(kDefaultFieldSpec); }
RatFunc K(const std::string& s, const Field& f = gf256()) { return parse_ratfunc(f, s); }

bool contains(const std::vector<RatFunc>& xs, const RatFunc& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

}  // namespace

TEST(ParityScreen, Examples) {
  EXPECT_FALSE(pole_parity_screen(K("1/t")));
  EXPECT_TRUE(pole_parity_screen(K("t^4 + t")));
  EXPECT_TRUE(pole_parity_screen(K("1/t^2 + 1/t")));
  EXPECT_THROW(pole_parity_screen(K("0")), DomainError);
}

TEST(SolveDeg2, Examples) {
  auto s = solve_deg2(K("t^4 + t"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->z, K("t^2 + t"));
  EXPECT_EQ(s->kernel.size(), 2U);
  EXPECT_FALSE(solve_deg2(K("1/t")));
  EXPECT_FALSE(solve_deg2(K("t")));
  EXPECT_FALSE(solve_deg2(K("t^3")));

  auto zero = solve_deg2(K("0"));
  ASSERT_TRUE(zero);
  EXPECT_TRUE(zero->z.is_zero());

  auto rational = solve_deg2(K("1/t^2 + 1/t"));
  ASSERT_TRUE(rational);
  EXPECT_EQ(rational->z, K("1/t"));
}

TEST(SolveDeg2, ConstantsFollowTheTrace) {
  const Field& f = Field::get(4);
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    const auto s = solve_deg2(RatFunc::constant(f.elem(a)));
    EXPECT_EQ(s.has_value(), f.trace(a) == 0) << a;
  }
}

TEST(SolveDeg4, Examples) {
  auto s = solve_deg4(K("t^16 + t"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->z, K("t^4 + t"));
  EXPECT_FALSE(solve_deg4(K("t")));
  EXPECT_FALSE(is_AS4_image(K("t")));

  auto zero = solve_deg4(K("0"));
  ASSERT_TRUE(zero);
  EXPECT_TRUE(zero->z.is_zero());
  EXPECT_EQ(zero->kernel.size(), 4U);  // GF(4) is a subfield of GF(256)
  auto odd = solve_deg4(RatFunc::zero(Field::get(3)));
  ASSERT_TRUE(odd);
  EXPECT_EQ(odd->kernel.size(), 2U);
}

TEST(SolveDeg4, PowerOfTPlusT) {
  const RatFunc t = K("t");
  for (unsigned s = 1; s <= 3; ++s) {
    EXPECT_TRUE(is_AS4_image(t.frobenius(2 * s) + t)) << s;
  }
}

TEST(SolveArtinSchreier, RejectsOtherDegrees) {
  EXPECT_THROW(solve_artin_schreier(K("t"), 3), DomainError);
  EXPECT_TRUE(solve_artin_schreier(K("t^4 + t"), 2));
}

TEST(ArtinSchreier, ConstructedImagesAreSolvedSoundly) {
  std::mt19937_64 rng(31);
  for (unsigned m : {1U, 2U, 3U, 4U, 8U}) {
    const Field& f = Field::get(m);
    for (int i = 0; i < 60; ++i) {
      const RatFunc z = dt::random_ratfunc(f, 4, rng);
      for (unsigned q : {2U, 4U}) {
        const RatFunc beta = z.pow(q) + z;
        const auto s = solve_artin_schreier(beta, q);
        ASSERT_TRUE(s) << beta.to_string();
        for (const RatFunc& x : s->all()) EXPECT_EQ(x.pow(q) + x, beta);
        EXPECT_TRUE(contains(s->all(), z));
        for (const RatFunc& x : s->all()) EXPECT_FALSE(lex_less(x, s->z));
      }
    }
  }
}

TEST(ArtinSchreier, OddPoleOrderMeansNoQuadraticSolution) {
  std::mt19937_64 rng(32);
  const Field& f = Field::get(4);
  int screened = 0;
  for (int i = 0; i < 400; ++i) {
    const RatFunc beta = dt::random_nonzero(f, 5, rng);
    if (pole_parity_screen(beta)) continue;
    ++screened;
    EXPECT_FALSE(solve_deg2(beta)) << beta.to_string();
    EXPECT_FALSE(solve_deg4(beta)) << beta.to_string();
  }
  EXPECT_GT(screened, 100);
}

// Exhaustive agreement over GF(2): every beta of height <= 6 against the image
// table of all z of height <= 3 (a solution has height(beta)/q).
TEST(ArtinSchreier, AgreesWithImageTableOverGF2) {
  const Field& f = Field::get(1);
  for (unsigned q : {2U, 4U}) {
    const auto table = dt::artin_schreier_image_table(f, 3, q);
    std::size_t solvable = 0;
    auto check = [&](const RatFunc& beta) {
      const auto s = solve_artin_schreier(beta, q);
      const auto it = table.find(beta.to_string());
      ASSERT_EQ(s.has_value(), it != table.end()) << beta.to_string();
      if (!s) return;
      ++solvable;
      EXPECT_EQ(it->second.size(), s->kernel.size()) << beta.to_string();
      for (const RatFunc& x : it->second) EXPECT_TRUE(contains(s->all(), x));
    };
    check(RatFunc::zero(f));
    dt::for_each_ratfunc(f, 6, check);
    std::size_t in_range = 0;
    for (const auto& [key, zs] : table) {
      const RatFunc beta = zs.front().pow(q) + zs.front();
      if (beta.is_zero() || height(beta) <= 6) ++in_range;
    }
    EXPECT_EQ(solvable, in_range);
    EXPECT_GE(solvable, 4U);
  }
}

TEST(ArtinSchreier, AgreesWithPreimageEnumerationOverGF4) {
  std::mt19937_64 rng(33);
  const Field& f = Field::get(2);
  for (int i = 0; i < 40; ++i) {
    for (unsigned q : {2U, 4U}) {
      const RatFunc z = dt::random_ratfunc(f, 2, rng);
      RatFunc beta = z.pow(q) + z;
      if (i % 2 == 1) beta = beta + RatFunc::constant(f.elem(static_cast<std::uint32_t>(rng() % f.size())));
      const auto expect = dt::artin_schreier_preimages(beta, 2, q);
      const auto s = solve_artin_schreier(beta, q);
      ASSERT_EQ(s.has_value(), !expect.empty()) << beta.to_string();
      if (!s) continue;
      EXPECT_EQ(expect.size(), s->kernel.size());
      for (const RatFunc& x : expect) EXPECT_TRUE(contains(s->all(), x));
    }
  }
}
