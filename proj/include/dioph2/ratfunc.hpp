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

#include <cstdint>
#include <optional>
#include <string>

#include "dioph2/poly.hpp"

namespace dioph2 {

/// An element of GF(2^m)(t), always reduced: gcd(num, den) = 1 and den monic.
/// Zero is 0/1. Equality is structural.
class RatFunc {
 public:
  explicit RatFunc(const Field& field) : num_(field), den_(Poly::constant(field, 1)) {}
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}
  /// Reduces num/den. Throws DivisionByZero when den = 0.
  RatFunc(Poly num, Poly den);

  static RatFunc zero(const Field& field) { return RatFunc(field); }
  static RatFunc one(const Field& field) { return RatFunc(Poly::constant(field, 1)); }
  static RatFunc t(const Field& field) { return RatFunc(Poly::t(field)); }
  static RatFunc constant(const FieldElem& c) { return RatFunc(Poly::constant(c)); }
  /// c * t^k for any integer k.
  static RatFunc monomial(const Field& field, std::uint32_t c, std::int64_t k);

  const Field& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// The constant value; throws DomainError for nonconstant elements.
  FieldElem constant_value() const;

  RatFunc& operator+=(const RatFunc& other);
  RatFunc& operator*=(const RatFunc& other);
  RatFunc& operator/=(const RatFunc& other);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  /// Throws DivisionByZero for zero.
  RatFunc inverse() const;
  /// Integer power; negative exponents invert first.
  RatFunc pow(std::int64_t k) const;
  /// f^(2^k).
  RatFunc frobenius(unsigned k) const;
  /// Formal derivative d/dt.
  RatFunc derivative() const;
  /// True iff f = g^2 for some g in K.
  bool is_square() const { return num_.is_square() && den_.is_square(); }
  /// Square root of a square; throws DomainError otherwise.
  RatFunc sqrt() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Deterministic total order: numerator coefficient vectors compared from
  /// degree 0 upward (shorter first on a common prefix), then denominators.
  friend bool lex_less(const RatFunc& a, const RatFunc& b);

  /// Canonical text form, parseable by parse_ratfunc.
  std::string to_string() const;

 private:
  struct Unreduced {};
  RatFunc(Poly num, Poly den, Unreduced) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  Poly num_;
  Poly den_;
};

}  // namespace dioph2
