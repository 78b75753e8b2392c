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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dioph2/error.hpp"

namespace dioph2 {

/// Describes GF(2^m) as GF(2)[x]/(modulus). Bit i of `modulus` is the
/// coefficient of x^i; bit m must be set.
struct FieldSpec {
  unsigned m = 8;
  std::uint32_t modulus = 0x11B;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
  friend auto operator<=>(const FieldSpec&, const FieldSpec&) = default;
};

/// Largest supported extension degree (log/antilog tables are 2^m entries).
inline constexpr unsigned kMaxExtensionDegree = 16;

/// The default constant field, GF(2^8) with modulus x^8 + x^4 + x^3 + x + 1.
inline constexpr FieldSpec kDefaultFieldSpec{8, 0x11B};

/// Returns the modulus used when only m is given: 0x11B for m = 8, otherwise
/// the numerically smallest irreducible polynomial of degree m.
std::uint32_t default_modulus(unsigned m);

/// True iff `poly` (bit-encoded over GF(2)) is irreducible of degree `m`.
bool is_irreducible_gf2(std::uint32_t poly, unsigned m);

class Field;

/// An element of GF(2^m), coordinates in the power basis of the modulus.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const Field& field, std::uint32_t bits);

  const Field& field() const { return *field_; }
  std::uint32_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == 1; }

  FieldElem inverse() const;
  FieldElem sqrt() const;
  FieldElem pow(std::uint64_t k) const;
  /// a^(2^k)
  FieldElem frobenius(unsigned k) const;
  /// Absolute trace over GF(2); 0 or 1.
  unsigned trace() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field_ == b.field_ && a.bits_ == b.bits_;
  }

  /// `#x..` lowercase hex, except 0 and 1 which print as digits.
  std::string to_string() const;

 private:
  void check_same(const FieldElem& other) const;

  const Field* field_ = nullptr;
  std::uint32_t bits_ = 0;
};

/// Arithmetic context for one GF(2^m). Instances are interned: `Field::get`
/// returns the same object for equal specs for the lifetime of the program,
/// so comparing fields by address is comparing their specs.
class Field {
 public:
  static const Field& get(const FieldSpec& spec);
  static const Field& get(unsigned m) { return get(FieldSpec{m, default_modulus(m)}); }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  const FieldSpec& spec() const { return spec_; }
  unsigned m() const { return spec_.m; }
  std::uint32_t modulus() const { return spec_.modulus; }
  std::uint32_t size() const { return size_; }

  FieldElem elem(std::uint32_t bits) const;
  FieldElem zero() const { return FieldElem(*this, 0); }
  FieldElem one() const { return FieldElem(*this, 1); }
  /// A generator of the multiplicative group.
  FieldElem generator() const { return FieldElem(*this, generator_); }

  // Raw-bit arithmetic used by the polynomial layer.
  static std::uint32_t add(std::uint32_t a, std::uint32_t b) { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t sqr(std::uint32_t a) const { return mul(a, a); }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;
  std::uint32_t sqrt(std::uint32_t a) const;
  std::uint32_t frobenius(std::uint32_t a, unsigned k) const;
  unsigned trace(std::uint32_t a) const;

  /// Solutions {z, z + 1} of z^2 + z = a, or nullopt when trace(a) = 1.
  /// The first component is the smaller bit pattern.
  std::optional<std::pair<FieldElem, FieldElem>> solve_artin_schreier(const FieldElem& a) const;

  /// The Frobenius orbit {c^(2^j)} of c, in order of increasing j, without
  /// repetition.
  std::vector<FieldElem> frobenius_orbit(const FieldElem& c) const;

  /// The elements c with c^4 = c, i.e. GF(4) intersected with this field,
  /// sorted by bit pattern.
  std::vector<FieldElem> fourth_power_fixed() const;

 private:
  explicit Field(const FieldSpec& spec);

  FieldSpec spec_;
  std::uint32_t size_;
  std::uint32_t generator_ = 1;
  std::vector<std::uint32_t> exp_;  // length 2 * (size - 1)
  std::vector<std::uint32_t> log_;
};

/// The number of Frobenius orbits of GF(2^m) other than the orbit of 1.
std::size_t max_constant_set_size(const Field& field);

/// A set of constants containing 0, excluding 1, whose members lie in pairwise
/// distinct Frobenius orbits. Members are the smallest representatives of the
/// `size` orbits with the smallest representatives. Throws DomainError naming
/// the maximum when the field has too few orbits.
std::vector<FieldElem> make_constant_set(const Field& field, std::size_t size);

/// True iff d = c^(2^j) for some j.
bool in_frobenius_orbit(const FieldElem& c, const FieldElem& d);

/// Parses `#x..` (hex of the bit vector), `0` or `1`.
FieldElem parse_field_elem(const Field& field, const std::string& text);

}  // namespace dioph2
