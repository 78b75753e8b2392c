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

#include "dioph2/field.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "dioph2/gf2_linear.hpp"

namespace dioph2 {

namespace {

// Carry-less arithmetic on GF(2)[x] polynomials packed into integers.
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

int gf2_degree(std::uint64_t a) { return a == 0 ? -1 : 63 - std::countl_zero(a); }

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = gf2_degree(m);
  for (int d = gf2_degree(a); d >= dm; d = gf2_degree(a)) a ^= m << (d - dm);
  return a;
}

std::uint64_t gf2_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = gf2_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus) {
  return static_cast<std::uint32_t>(gf2_mod(clmul(a, b), modulus));
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible_gf2(std::uint32_t poly, unsigned m) {
  if (m == 0 || gf2_degree(poly) != static_cast<int>(m)) return false;
  // Ben-Or: f is irreducible iff gcd(x^(2^i) - x, f) = 1 for 1 <= i <= m/2.
  std::uint64_t h = 2;  // x
  for (unsigned i = 1; i <= m / 2; ++i) {
    h = gf2_mod(clmul(h, h), poly);
    if (gf2_gcd(poly, h ^ 2U) != 1) return false;
  }
  return true;
}

std::uint32_t default_modulus(unsigned m) {
  if (m == 0 || m > kMaxExtensionDegree) {
    throw DomainError("extension degree must be in [1, " + std::to_string(kMaxExtensionDegree) + "]");
  }
  if (m == 8) return 0x11B;
  for (std::uint32_t cand = (1U << m) | 1U; cand < (2U << m); cand += 2) {
    if (is_irreducible_gf2(cand, m)) return cand;
  }
  // Unreachable: irreducible polynomials exist in every degree.
  throw DomainError("no irreducible polynomial found");
}

// ---------------------------------------------------------------- Field

const Field& Field::get(const FieldSpec& spec) {
  static std::mutex mutex;
  static std::map<FieldSpec, std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find(spec);
  if (it == registry.end()) {
    it = registry.emplace(spec, std::unique_ptr<Field>(new Field(spec))).first;
  }
  return *it->second;
}

Field::Field(const FieldSpec& spec) : spec_(spec) {
  if (spec.m == 0 || spec.m > kMaxExtensionDegree) {
    throw DomainError("extension degree must be in [1, " + std::to_string(kMaxExtensionDegree) + "]");
  }
  if (!is_irreducible_gf2(spec.modulus, spec.m)) {
    std::ostringstream os;
    os << "modulus #x" << std::hex << spec.modulus << " is not an irreducible polynomial of degree "
       << std::dec << spec.m;
    throw DomainError(os.str());
  }
  size_ = 1U << spec.m;
  const std::uint32_t order = size_ - 1;

  // Find a primitive element by testing a^(order/p) != 1 for each prime p.
  const auto primes = prime_factors(order);
  auto slow_pow = [&](std::uint32_t a, std::uint64_t k) {
    std::uint32_t r = 1;
    while (k != 0) {
      if (k & 1U) r = slow_mul(r, a, spec.modulus);
      a = slow_mul(a, a, spec.modulus);
      k >>= 1;
    }
    return r;
  };
  if (order > 1) {
    for (std::uint32_t cand = 2; cand < size_; ++cand) {
      bool primitive = std::all_of(primes.begin(), primes.end(),
                                   [&](std::uint64_t p) { return slow_pow(cand, order / p) != 1; });
      if (primitive) {
        generator_ = cand;
        break;
      }
    }
  }

  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  log_.assign(size_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = x;
    exp_[i + order] = x;
    log_[x] = i;
    x = slow_mul(x, generator_, spec.modulus);
  }
}

FieldElem Field::elem(std::uint32_t bits) const {
  if (bits >= size_) throw DomainError("bit pattern out of range for GF(2^" + std::to_string(m()) + ")");
  return FieldElem(*this, bits);
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in GF(2^" + std::to_string(m()) + ")");
  const std::uint32_t order = size_ - 1;
  return exp_[(order - log_[a]) % order];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t r = 1;
  while (k != 0) {
    if (k & 1U) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::uint32_t Field::sqrt(std::uint32_t a) const {
  // Frobenius has order m, so sqrt = a^(2^(m-1)).
  return frobenius(a, m() - 1);
}

std::uint32_t Field::frobenius(std::uint32_t a, unsigned k) const {
  k %= m();
  for (unsigned i = 0; i < k; ++i) a = mul(a, a);
  return a;
}

unsigned Field::trace(std::uint32_t a) const {
  std::uint32_t acc = 0;
  std::uint32_t x = a;
  for (unsigned i = 0; i < m(); ++i) {
    acc ^= x;
    x = mul(x, x);
  }
  return acc;  // lies in GF(2)
}

std::optional<std::pair<FieldElem, FieldElem>> Field::solve_artin_schreier(const FieldElem& a) const {
  if (&a.field() != this) throw FieldMismatch();
  if (trace(a.bits()) != 0) return std::nullopt;
  // z -> z^2 + z is GF(2)-linear on the power-basis coordinates.
  Gf2System sys(m(), m());
  for (unsigned j = 0; j < m(); ++j) {
    const std::uint32_t e = 1U << j;
    const std::uint32_t image = sqr(e) ^ e;
    for (unsigned i = 0; i < m(); ++i) {
      if ((image >> i) & 1U) sys.set(i, j);
    }
  }
  for (unsigned i = 0; i < m(); ++i) {
    if ((a.bits() >> i) & 1U) sys.set_rhs(i);
  }
  auto x = sys.solve();
  if (!x) return std::nullopt;
  std::uint32_t z = 0;
  for (unsigned j = 0; j < m(); ++j) {
    if ((*x)[j]) z |= 1U << j;
  }
  std::uint32_t lo = std::min(z, z ^ 1U);
  return std::make_pair(FieldElem(*this, lo), FieldElem(*this, lo ^ 1U));
}

std::vector<FieldElem> Field::frobenius_orbit(const FieldElem& c) const {
  if (&c.field() != this) throw FieldMismatch();
  std::vector<FieldElem> out{c};
  for (std::uint32_t x = sqr(c.bits()); x != c.bits(); x = sqr(x)) out.emplace_back(*this, x);
  return out;
}

std::vector<FieldElem> Field::fourth_power_fixed() const {
  std::vector<FieldElem> out{zero(), one()};
  if (m() % 2 == 0) {
    // GF(4)* is generated by g^((2^m - 1) / 3).
    const std::uint32_t w = pow(generator_, (size_ - 1) / 3);
    out.emplace_back(*this, w);
    out.emplace_back(*this, mul(w, w));
  }
  std::sort(out.begin(), out.end(), [](const FieldElem& x, const FieldElem& y) { return x.bits() < y.bits(); });
  return out;
}

// ---------------------------------------------------------------- FieldElem

FieldElem::FieldElem(const Field& field, std::uint32_t bits) : field_(&field), bits_(bits) {}

void FieldElem::check_same(const FieldElem& other) const {
  if (field_ != other.field_ || field_ == nullptr) throw FieldMismatch();
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  a.check_same(b);
  return FieldElem(*a.field_, a.bits_ ^ b.bits_);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  a.check_same(b);
  return FieldElem(*a.field_, a.field_->mul(a.bits_, b.bits_));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  a.check_same(b);
  return FieldElem(*a.field_, a.field_->div(a.bits_, b.bits_));
}

FieldElem FieldElem::inverse() const { return FieldElem(*field_, field_->inv(bits_)); }
FieldElem FieldElem::sqrt() const { return FieldElem(*field_, field_->sqrt(bits_)); }
FieldElem FieldElem::pow(std::uint64_t k) const { return FieldElem(*field_, field_->pow(bits_, k)); }
FieldElem FieldElem::frobenius(unsigned k) const { return FieldElem(*field_, field_->frobenius(bits_, k)); }
unsigned FieldElem::trace() const { return field_->trace(bits_); }

std::string FieldElem::to_string() const {
  if (bits_ <= 1) return bits_ == 0 ? "0" : "1";
  std::ostringstream os;
  os << "#x" << std::hex << bits_;
  return os.str();
}

// ---------------------------------------------------------------- constant sets

namespace {

// Smallest member of each Frobenius orbit, ascending.
std::vector<std::uint32_t> orbit_representatives(const Field& field) {
  std::vector<std::uint32_t> reps;
  std::vector<bool> seen(field.size(), false);
  for (std::uint32_t c = 0; c < field.size(); ++c) {
    if (seen[c]) continue;
    reps.push_back(c);
    for (std::uint32_t x = c; !seen[x]; x = field.sqr(x)) seen[x] = true;
  }
  return reps;
}

}  // namespace

std::size_t max_constant_set_size(const Field& field) { return orbit_representatives(field).size() - 1; }

std::vector<FieldElem> make_constant_set(const Field& field, std::size_t size) {
  const auto reps = orbit_representatives(field);
  const std::size_t max = reps.size() - 1;
  if (size == 0 || size > max) {
    throw DomainError("constant set size " + std::to_string(size) + " is unachievable in GF(2^" +
                      std::to_string(field.m()) + "); the maximum is " + std::to_string(max));
  }
  std::vector<FieldElem> out;
  for (std::uint32_t r : reps) {
    if (r == 1) continue;
    out.emplace_back(field, r);
    if (out.size() == size) break;
  }
  return out;
}

bool in_frobenius_orbit(const FieldElem& c, const FieldElem& d) {
  for (const auto& x : c.field().frobenius_orbit(c)) {
    if (x == d) return true;
  }
  return false;
}

FieldElem parse_field_elem(const Field& field, const std::string& text) {
  if (text == "0") return field.zero();
  if (text == "1") return field.one();
  if (text.size() < 3 || text[0] != '#' || (text[1] != 'x' && text[1] != 'X')) {
    throw DomainError("malformed field constant '" + text + "' (expected #x<hex>, 0 or 1)");
  }
  std::uint64_t v = 0;
  for (std::size_t i = 2; i < text.size(); ++i) {
    const char ch = text[i];
    if (!std::isxdigit(static_cast<unsigned char>(ch))) throw DomainError("malformed field constant '" + text + "'");
    v = v * 16 + static_cast<std::uint64_t>(std::isdigit(static_cast<unsigned char>(ch))
                                                 ? ch - '0'
                                                 : std::tolower(static_cast<unsigned char>(ch)) - 'a' + 10);
    if (v >= field.size()) throw DomainError("field constant '" + text + "' out of range");
  }
  return field.elem(static_cast<std::uint32_t>(v));
}

}  // namespace dioph2
