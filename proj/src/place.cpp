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

#include "dioph2/place.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace dioph2 {

// ---------------------------------------------------------------- Place

Place Place::finite(Poly p) {
  if (!p.is_monic() || p.degree() < 1) throw DomainError("place polynomial must be monic of positive degree");
  if (!is_irreducible(p)) throw DomainError("place polynomial " + p.to_string() + " is not irreducible");
  return Place(std::move(p));
}

Place Place::from_irreducible(Poly p) { return Place(std::move(p)); }

const Poly& Place::poly() const {
  if (!poly_) throw DomainError("the infinite place has no defining polynomial");
  return *poly_;
}

bool operator<(const Place& a, const Place& b) {
  if (a.is_infinite() || b.is_infinite()) return !a.is_infinite() && b.is_infinite();
  return *a.poly_ < *b.poly_;
}

std::string Place::to_string() const { return is_infinite() ? "inf" : poly_->to_string(); }

// ---------------------------------------------------------------- Divisor

void Divisor::add(const Place& place, std::int64_t multiplicity) {
  if (multiplicity == 0) return;
  auto [it, inserted] = support_.emplace(place, multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) support_.erase(it);
  }
}

std::int64_t Divisor::at(const Place& place) const {
  auto it = support_.find(place);
  return it == support_.end() ? 0 : it->second;
}

std::int64_t Divisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [place, mult] : support_) d += mult * static_cast<std::int64_t>(place.degree());
  return d;
}

Divisor Divisor::zero_part() const {
  Divisor out;
  for (const auto& [place, mult] : support_) {
    if (mult > 0) out.add(place, mult);
  }
  return out;
}

Divisor Divisor::pole_part() const {
  Divisor out;
  for (const auto& [place, mult] : support_) {
    if (mult < 0) out.add(place, -mult);
  }
  return out;
}

std::string Divisor::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [place, mult] : support_) {
    if (!first) os << ", ";
    first = false;
    os << place.to_string() << ": " << mult;
  }
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------- factoring

namespace {

Poly mulmod(const Poly& a, const Poly& b, const Poly& f) { return (a * b) % f; }

// a^(2^k) mod f
Poly frobenius_mod(Poly a, std::uint64_t k, const Poly& f) {
  for (std::uint64_t i = 0; i < k; ++i) a = mulmod(a, a, f);
  return a;
}

using Parts = std::vector<std::pair<Poly, unsigned>>;

// Squarefree decomposition of a monic polynomial (Musser, characteristic 2).
Parts squarefree_parts(const Poly& f) {
  Parts out;
  if (f.degree() <= 0) return out;
  const Poly d = f.derivative();
  if (d.is_zero()) {
    for (auto& [g, e] : squarefree_parts(f.sqrt().monic())) out.emplace_back(std::move(g), 2 * e);
    return out;
  }
  Poly c = Poly::gcd(f, d);
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = Poly::gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i);
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (c.degree() > 0) {
    for (auto& [g, e] : squarefree_parts(c.sqrt().monic())) out.emplace_back(std::move(g), 2 * e);
  }
  return out;
}

// Splits a squarefree monic polynomial into products of irreducibles of equal
// degree: returns (degree, product) pairs.
std::vector<std::pair<unsigned, Poly>> distinct_degree(Poly f) {
  std::vector<std::pair<unsigned, Poly>> out;
  const Field& field = f.field();
  const Poly t = Poly::t(field);
  Poly h = t;
  for (unsigned i = 1; 2 * i <= static_cast<unsigned>(f.degree()); ++i) {
    h = frobenius_mod(h, field.m(), f);  // t^(q^i) mod f
    Poly g = Poly::gcd(f, h + t);
    if (g.degree() > 0) {
      out.emplace_back(i, g);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(static_cast<unsigned>(f.degree()), f.monic());
  return out;
}

// Equal-degree splitting in characteristic 2: the absolute trace
// a + a^2 + ... + a^(2^(m d - 1)) mod f takes values in GF(2) on each residue
// field, so its gcd with f separates factors where those values differ.
void equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (static_cast<unsigned>(f.degree()) == d) {
    out.push_back(f.monic());
    return;
  }
  const Field& field = f.field();
  const std::uint64_t steps = static_cast<std::uint64_t>(field.m()) * d;
  std::uniform_int_distribution<std::uint32_t> coeff(0, field.size() - 1);
  for (;;) {
    std::vector<std::uint32_t> cs(static_cast<std::size_t>(f.degree()));
    for (auto& c : cs) c = coeff(rng);
    Poly a(field, std::move(cs));
    if (a.degree() < 1) continue;
    Poly acc = a;
    Poly term = a;
    for (std::uint64_t j = 1; j < steps; ++j) {
      term = mulmod(term, term, f);
      acc += term;
    }
    Poly g = Poly::gcd(f, acc);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const Poly& p) {
  if (p.degree() < 1) return false;
  const Field& field = p.field();
  const Poly f = p.monic();
  const Poly t = Poly::t(field);
  Poly h = t;
  for (int i = 1; 2 * i <= f.degree(); ++i) {
    h = frobenius_mod(h, field.m(), f);
    if (!Poly::gcd(f, h + t).is_one()) return false;
  }
  return true;
}

Factorization factor(const Poly& p, std::uint64_t seed) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization result{p.leading(), {}};
  std::map<Poly, unsigned> merged;
  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : squarefree_parts(p.monic())) {
    for (const auto& [deg, prod] : distinct_degree(part)) {
      std::vector<Poly> irreducibles;
      equal_degree(prod, deg, rng, irreducibles);
      for (auto& q : irreducibles) merged[q] += mult;
    }
  }
  for (auto& [q, mult] : merged) result.factors.emplace_back(Place::from_irreducible(q), mult);
  return result;
}

// ---------------------------------------------------------------- valuations

namespace {

std::int64_t multiplicity(Poly a, const Poly& p) {
  std::int64_t n = 0;
  while (!a.is_zero()) {
    auto [q, r] = Poly::divmod(a, p);
    if (!r.is_zero()) break;
    a = std::move(q);
    ++n;
  }
  return n;
}

void require_nonzero(const RatFunc& f, const char* what) {
  if (f.is_zero()) throw DomainError(std::string(what) + " is undefined for 0");
}

}  // namespace

std::int64_t ord_at(const RatFunc& f, const Place& place) {
  require_nonzero(f, "ord");
  if (&f.field() != &place.field()) throw FieldMismatch();
  if (place.is_infinite()) return static_cast<std::int64_t>(f.den().degree()) - f.num().degree();
  return multiplicity(f.num(), place.poly()) - multiplicity(f.den(), place.poly());
}

Divisor divisor_of(const RatFunc& f) {
  require_nonzero(f, "divisor");
  Divisor d;
  for (const auto& [place, mult] : factor(f.num()).factors) d.add(place, mult);
  for (const auto& [place, mult] : factor(f.den()).factors) d.add(place, -static_cast<std::int64_t>(mult));
  d.add(Place::infinite(f.field()), static_cast<std::int64_t>(f.den().degree()) - f.num().degree());
  return d;
}

std::uint64_t height(const RatFunc& f) {
  require_nonzero(f, "height");
  return static_cast<std::uint64_t>(std::max(f.num().degree(), f.den().degree()));
}

bool poles_have_even_order(const RatFunc& f) {
  require_nonzero(f, "pole parity");
  if (!f.den().is_square()) return false;
  const int pole_at_infinity = f.num().degree() - f.den().degree();
  return pole_at_infinity <= 0 || pole_at_infinity % 2 == 0;
}

}  // namespace dioph2
