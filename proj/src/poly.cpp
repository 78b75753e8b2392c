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

#include "dioph2/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dioph2 {

Poly::Poly(const Field& field, std::vector<std::uint32_t> coeffs) : field_(&field), coeffs_(std::move(coeffs)) {
  for (std::uint32_t c : coeffs_) {
    if (c >= field.size()) throw DomainError("coefficient out of range for GF(2^" + std::to_string(field.m()) + ")");
  }
  normalize();
}

Poly Poly::constant(const FieldElem& c) { return constant(c.field(), c.bits()); }

Poly Poly::constant(const Field& field, std::uint32_t bits) { return Poly(field, std::vector<std::uint32_t>{bits}); }

Poly Poly::monomial(const Field& field, std::uint32_t c, std::size_t k) {
  if (c == 0) return Poly(field);
  std::vector<std::uint32_t> v(k + 1, 0);
  v[k] = c;
  return Poly(field, std::move(v));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::check_same(const Poly& other) const {
  if (field_ != other.field_) throw FieldMismatch();
}

Poly& Poly::operator+=(const Poly& other) {
  check_same(other);
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] ^= other.coeffs_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return Poly(*a.field_);
  const Field& f = *a.field_;
  std::vector<std::uint32_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const std::uint32_t ai = a.coeffs_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] ^= f.mul(ai, b.coeffs_[j]);
  }
  Poly r(f);
  r.coeffs_ = std::move(out);
  r.normalize();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  a.check_same(b);
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const Field& f = *a.field_;
  Poly rem = a;
  if (a.degree() < b.degree()) return {Poly(f), rem};
  const std::size_t db = b.coeffs_.size() - 1;
  const std::uint32_t lead_inv = f.inv(b.coeffs_.back());
  std::vector<std::uint32_t> q(a.coeffs_.size() - db, 0);
  auto& r = rem.coeffs_;
  for (std::size_t i = r.size(); i-- > db;) {
    const std::uint32_t c = r[i];
    if (c == 0) continue;
    const std::uint32_t factor = f.mul(c, lead_inv);
    q[i - db] = factor;
    const std::size_t shift = i - db;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] ^= f.mul(factor, b.coeffs_[j]);
  }
  rem.normalize();
  Poly quot(f);
  quot.coeffs_ = std::move(q);
  quot.normalize();
  return {std::move(quot), std::move(rem)};
}

Poly Poly::scaled(std::uint32_t c) const {
  Poly r(*field_);
  if (c == 0) return r;
  r.coeffs_.reserve(coeffs_.size());
  for (std::uint32_t x : coeffs_) r.coeffs_.push_back(field_->mul(x, c));
  return r;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  Poly r(*field_);
  r.coeffs_.assign(k, 0);
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_->inv(coeffs_.back()));
}

Poly Poly::derivative() const {
  Poly r(*field_);
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.assign(coeffs_.size() - 1, 0);
  // d/dt t^i = i t^(i-1); only odd i survive in characteristic 2.
  for (std::size_t i = 1; i < coeffs_.size(); i += 2) r.coeffs_[i - 1] = coeffs_[i];
  r.normalize();
  return r;
}

Poly Poly::square() const { return frobenius(1); }

Poly Poly::frobenius(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  const std::size_t step = std::size_t{1} << k;
  Poly r(*field_);
  r.coeffs_.assign((coeffs_.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * step] = field_->frobenius(coeffs_[i], k);
  return r;
}

Poly Poly::pow(std::uint64_t k) const {
  Poly result = constant(*field_, 1);
  Poly base = *this;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1;
    if (k != 0) base = base.square();
  }
  return result;
}

bool Poly::is_square() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Poly Poly::sqrt() const {
  if (!is_square()) throw DomainError("polynomial is not a square");
  Poly r(*field_);
  if (is_zero()) return r;
  r.coeffs_.resize(coeffs_.size() / 2 + 1);
  for (std::size_t i = 0; i < coeffs_.size(); i += 2) r.coeffs_[i / 2] = field_->sqrt(coeffs_[i]);
  r.normalize();
  return r;
}

FieldElem Poly::eval(const FieldElem& x) const {
  if (&x.field() != field_) throw FieldMismatch();
  std::uint32_t acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->mul(acc, x.bits()) ^ coeffs_[i];
  return FieldElem(*field_, acc);
}

std::size_t Poly::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c != 0; }));
}

Poly Poly::gcd(Poly a, Poly b) {
  a.check_same(b);
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(), b.coeffs_.rend());
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const std::uint32_t c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    const FieldElem ce(*field_, c);
    if (i == 0) {
      os << ce.to_string();
      continue;
    }
    if (c != 1) os << ce.to_string() << "*";
    os << "t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace dioph2
