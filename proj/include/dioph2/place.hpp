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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dioph2/ratfunc.hpp"

namespace dioph2 {

/// A place of GF(2^m)(t): the zero of a monic irreducible polynomial, or the
/// pole of t (the infinite place).
class Place {
 public:
  /// Throws DomainError unless p is monic and irreducible.
  static Place finite(Poly p);
  /// Skips the irreducibility test; the caller guarantees p is monic irreducible.
  static Place from_irreducible(Poly p);
  static Place infinite(const Field& field) { return Place(field); }

  bool is_infinite() const { return !poly_.has_value(); }
  /// The defining polynomial; throws DomainError for the infinite place.
  const Poly& poly() const;
  unsigned degree() const { return is_infinite() ? 1U : static_cast<unsigned>(poly_->degree()); }
  const Field& field() const { return *field_; }

  friend bool operator==(const Place& a, const Place& b) { return a.poly_ == b.poly_; }
  /// Finite places by their polynomials, the infinite place last.
  friend bool operator<(const Place& a, const Place& b);

  /// "inf" or the polynomial's text.
  std::string to_string() const;

 private:
  explicit Place(const Field& field) : field_(&field) {}
  explicit Place(Poly p) : field_(&p.field()), poly_(std::move(p)) {}

  const Field* field_;
  std::optional<Poly> poly_;
};

/// A divisor: finitely many places with nonzero integer multiplicities.
class Divisor {
 public:
  void add(const Place& place, std::int64_t multiplicity);
  std::int64_t at(const Place& place) const;
  /// Sum of multiplicity times place degree.
  std::int64_t degree() const;
  bool empty() const { return support_.empty(); }
  const std::map<Place, std::int64_t>& support() const { return support_; }

  Divisor zero_part() const;
  Divisor pole_part() const;

  friend bool operator==(const Divisor&, const Divisor&) = default;

  /// e.g. "{t: 1, inf: -1}".
  std::string to_string() const;

 private:
  std::map<Place, std::int64_t> support_;
};

struct Factorization {
  FieldElem unit;
  /// Distinct monic irreducible factors, ascending, with multiplicities.
  std::vector<std::pair<Place, unsigned>> factors;
};

/// Factors p into its leading coefficient times monic irreducible powers.
/// Squarefree decomposition, distinct-degree splitting, then equal-degree
/// splitting with trace maps. Throws DomainError for p = 0. `seed` only
/// drives the randomized splitting; the result is canonical.
Factorization factor(const Poly& p, std::uint64_t seed = 0x5eed);

/// Ben-Or irreducibility test over GF(2^m).
bool is_irreducible(const Poly& p);

/// Valuation of f at a place; throws DomainError for f = 0.
std::int64_t ord_at(const RatFunc& f, const Place& place);

/// The principal divisor of f; throws DomainError for f = 0.
Divisor divisor_of(const RatFunc& f);

/// Degree of the zero divisor of f (equivalently of its pole divisor).
/// Throws DomainError for f = 0.
std::uint64_t height(const RatFunc& f);

/// True iff every pole of f (including the infinite place) has even order.
/// Throws DomainError for f = 0.
bool poles_have_even_order(const RatFunc& f);

}  // namespace dioph2
