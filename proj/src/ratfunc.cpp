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

#include "dioph2/ratfunc.hpp"

#include <algorithm>

namespace dioph2 {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (&num_.field() != &den_.field()) throw FieldMismatch();
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field(), 1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  if (!den_.is_monic()) {
    const std::uint32_t inv = num_.field().inv(den_[static_cast<std::size_t>(den_.degree())]);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::monomial(const Field& field, std::uint32_t c, std::int64_t k) {
  if (k >= 0) return RatFunc(Poly::monomial(field, c, static_cast<std::size_t>(k)));
  return RatFunc(Poly::constant(field, c), Poly::monomial(field, 1, static_cast<std::size_t>(-k)));
}

FieldElem RatFunc::constant_value() const {
  if (!is_constant()) throw DomainError("element is not constant");
  return num_.coeff(0);
}

RatFunc& RatFunc::operator+=(const RatFunc& other) {
  if (&field() != &other.field()) throw FieldMismatch();
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    num_ += other.num_;
    reduce();
    return *this;
  }
  // Henrici: with g = gcd(d1, d2), n = n1 (d2/g) + n2 (d1/g), d = d1 (d2/g);
  // any common factor of n and d divides g.
  Poly g = Poly::gcd(den_, other.den_);
  if (g.is_one()) {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
    if (num_.is_zero()) den_ = Poly::constant(field(), 1);
    return *this;
  }
  Poly d1g = den_ / g;
  Poly d2g = other.den_ / g;
  Poly n = num_ * d2g + other.num_ * d1g;
  if (n.is_zero()) return *this = zero(field());
  Poly h = Poly::gcd(n, g);
  if (!h.is_one()) {
    n = n / h;
    g = g / h;
  }
  num_ = std::move(n);
  den_ = d1g * d2g * g;
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& other) {
  if (&field() != &other.field()) throw FieldMismatch();
  if (is_zero() || other.is_zero()) return *this = zero(field());
  // Cross-cancel so the product is already reduced.
  Poly g1 = Poly::gcd(num_, other.den_);
  Poly g2 = Poly::gcd(other.num_, den_);
  Poly n1 = g1.is_one() ? num_ : num_ / g1;
  Poly d2 = g1.is_one() ? other.den_ : other.den_ / g1;
  Poly n2 = g2.is_one() ? other.num_ : other.num_ / g2;
  Poly d1 = g2.is_one() ? den_ : den_ / g2;
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (!den_.is_monic()) {
    const std::uint32_t inv = field().inv(den_[static_cast<std::size_t>(den_.degree())]);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& other) { return *this *= other.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in K");
  RatFunc r(den_, num_, Unreduced{});
  if (!r.den_.is_monic()) {
    const std::uint32_t inv = field().inv(r.den_[static_cast<std::size_t>(r.den_.degree())]);
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

RatFunc RatFunc::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) return one(field());
  // Powers of a reduced fraction stay reduced.
  const auto e = static_cast<std::uint64_t>(k);
  return RatFunc(num_.pow(e), den_.pow(e), Unreduced{});
}

RatFunc RatFunc::frobenius(unsigned k) const {
  return RatFunc(num_.frobenius(k), den_.frobenius(k), Unreduced{});
}

RatFunc RatFunc::derivative() const {
  // (n/d)' = (n' d + n d') / d^2
  Poly top = num_.derivative() * den_ + num_ * den_.derivative();
  return RatFunc(std::move(top), den_.square());
}

RatFunc RatFunc::sqrt() const {
  if (!is_square()) throw DomainError("element is not a square in K");
  return RatFunc(num_.sqrt(), den_.sqrt(), Unreduced{});
}

bool lex_less(const RatFunc& a, const RatFunc& b) {
  auto cmp = [](const Poly& x, const Poly& y) {
    auto xs = x.coeffs();
    auto ys = y.coeffs();
    return std::lexicographical_compare_three_way(xs.begin(), xs.end(), ys.begin(), ys.end());
  };
  if (auto c = cmp(a.num(), b.num()); c != 0) return c < 0;
  return cmp(a.den(), b.den()) < 0;
}

namespace {

std::string wrap(const Poly& p) {
  std::string s = p.to_string();
  return p.term_count() > 1 ? "(" + s + ")" : s;
}

}  // namespace

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace dioph2
