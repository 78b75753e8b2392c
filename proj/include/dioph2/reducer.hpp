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

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dioph2/ratfunc.hpp"

namespace dioph2 {

// ------------------------------------------------------------- source side

/// c = a + b (SumEq), a |2 b (Div2), a = k (ConstEq).
struct NAtom {
  enum class Kind { kSumEq, kDiv2, kConstEq };
  Kind kind = Kind::kSumEq;
  std::string a, b, c;
  std::uint64_t k = 0;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct NSystem {
  std::vector<std::string> variables;  // declaration order
  std::vector<NAtom> atoms;
};

using NAssignment = std::map<std::string, std::uint64_t>;

/// Statements separated by ';' or newlines:
///   x = y + z     x |2 y     x = 7     vars x, y, z
/// Without a `vars` statement variables are declared by first use; with one,
/// every referenced variable must be declared. '#' starts a comment.
/// Throws ParseError with line and column.
NSystem parse_nsystem(std::string_view text);

std::string to_string(const NAtom& atom);

/// n |2 m: m = 2^s n for some s >= 0 (so 0 |2 0).
bool divides2(std::uint64_t n, std::uint64_t m);

bool holds(const NAtom& atom, const NAssignment& na);

/// Lexicographically smallest assignment (in declaration order) with every
/// value <= bound, or nullopt.
std::optional<NAssignment> solve_nat(const NSystem& sys, std::uint64_t bound);

// ---------------------------------------------------------- compiled side

/// MulEq(x, y, z): z = x y.  PowerLink(x, y): y = x^(2^s) for some s.
/// OrdMatch(x, y): ord_t x = ord_t y.  IntMember(x): ord_t x >= 0.
/// OrdConst(x, k): ord_t x = k.
struct KAtom {
  enum class Kind { kMulEq, kPowerLink, kOrdMatch, kIntMember, kOrdConst };
  Kind kind = Kind::kIntMember;
  std::string x, y, z;
  std::uint64_t k = 0;
  std::optional<std::size_t> origin;  // index of the source atom
};

struct KSystem {
  std::vector<std::string> variables;
  std::vector<KAtom> atoms;
};

using KAssignment = std::map<std::string, RatFunc>;

std::string to_string(const KAtom& atom);

/// z_<n> per source variable with IntMember first, then one group per source
/// atom in order; Div2 introduces auxiliaries w_1, w_2, ...
KSystem compile(const NSystem& sys);

/// z_<n> = t^n. The auxiliary of Div2(a, b) is t^(n_b) when the atom holds and
/// t^(n_a) otherwise.
KAssignment embed(const KSystem& ks, const NAssignment& na, const Field& field);

struct KCheckResult {
  bool ok = true;
  std::vector<std::size_t> failing;  // atom indices, ascending
  std::optional<std::size_t> first_failure() const;
};

/// Throws DomainError if ka misses a variable of ks.
bool atom_holds(const KAtom& atom, const KAssignment& ka);
KCheckResult check_ksystem(const KSystem& ks, const KAssignment& ka);

// -------------------------------------------------------------- expansion

/// Expression over K with named variables.
class KExpr {
 public:
  static KExpr var(std::string name);
  static KExpr constant(RatFunc value);

  friend KExpr operator+(const KExpr& a, const KExpr& b);
  friend KExpr operator*(const KExpr& a, const KExpr& b);
  friend KExpr operator/(const KExpr& a, const KExpr& b);
  KExpr pow(unsigned k) const;

  /// Throws DivisionByZero, or DomainError for an unbound variable.
  RatFunc eval(const KAssignment& env) const;
  std::string to_string() const;

 private:
  struct Node;
  explicit KExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Equation {
  KExpr lhs, rhs;
  std::string role;
  std::optional<std::size_t> origin;  // index of the compiled atom
};

/// The compiled system with every PowerLink replaced by equation families.
/// IntMember, OrdMatch and OrdConst stay semantic atoms.
struct ExpandedSystem {
  std::vector<std::string> variables;
  std::vector<Equation> equations;
  std::vector<KAtom> atoms;
};

ExpandedSystem expand(const KSystem& ks, const std::vector<FieldElem>& V);

/// Extends a satisfying assignment of ks with certificate witnesses for every
/// expansion variable. Throws DomainError if some PowerLink does not hold.
KAssignment expansion_witnesses(const KSystem& ks, const KAssignment& ka, const std::vector<FieldElem>& V);

struct ExpandedCheckResult {
  bool ok = true;
  std::optional<std::size_t> failing_equation;
  std::optional<std::size_t> failing_atom;
};

ExpandedCheckResult check_expanded(const ExpandedSystem& es, const KAssignment& ka);

// ---------------------------------------------------------- serialization

nlohmann::json to_json(const NSystem& sys);
nlohmann::json to_json(const KSystem& ks);
nlohmann::json to_json(const ExpandedSystem& es);
nlohmann::json to_json(const NAssignment& na);
nlohmann::json to_json(const KAssignment& ka);
KSystem ksystem_from_json(const nlohmann::json& j);
NAssignment nassignment_from_json(const nlohmann::json& j);
KAssignment kassignment_from_json(const nlohmann::json& j, const Field& field);

}  // namespace dioph2
