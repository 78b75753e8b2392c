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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dioph2/field.hpp"

namespace dioph2 {

/// Dense univariate polynomial in t over GF(2^m). Coefficients are stored as
/// raw bit patterns, lowest degree first, with no trailing zeros.
class Poly {
 public:
  explicit Poly(const Field& field) : field_(&field) {}
  Poly(const Field& field, std::vector<std::uint32_t> coeffs);

  static Poly constant(const FieldElem& c);
  static Poly constant(const Field& field, std::uint32_t bits);
  /// c * t^k
  static Poly monomial(const Field& field, std::uint32_t c, std::size_t k);
  static Poly t(const Field& field) { return monomial(field, 1, 1); }

  const Field& field() const { return *field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  std::uint32_t operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  FieldElem coeff(std::size_t i) const { return FieldElem(*field_, (*this)[i]); }
  FieldElem leading() const { return coeff(coeffs_.empty() ? 0 : coeffs_.size() - 1); }
  std::span<const std::uint32_t> coeffs() const { return coeffs_; }

  Poly& operator+=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  Poly scaled(std::uint32_t c) const;
  /// Multiplies by t^k.
  Poly shifted(std::size_t k) const;
  Poly monic() const;
  Poly derivative() const;
  Poly square() const;
  /// p^(2^k), coefficient-wise Frobenius with spread exponents.
  Poly frobenius(unsigned k) const;
  Poly pow(std::uint64_t k) const;
  /// True iff every odd-degree coefficient vanishes (p is a square in GF(2^m)[t]).
  bool is_square() const;
  /// The square root of a square polynomial; throws DomainError otherwise.
  Poly sqrt() const;
  FieldElem eval(const FieldElem& x) const;
  /// Number of nonzero coefficients.
  std::size_t term_count() const;

  /// Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  /// Total order: by degree, then coefficients from the top down.
  friend bool operator<(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void normalize();
  void check_same(const Poly& other) const;

  const Field* field_;
  std::vector<std::uint32_t> coeffs_;
};

}  // namespace dioph2
