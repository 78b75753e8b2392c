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

#include "dioph2/reducer.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

#include "dioph2/certificates.hpp"
#include "dioph2/error.hpp"
#include "dioph2/expr.hpp"
#include "dioph2/place.hpp"

namespace dioph2 {

// ================================================================= parsing

namespace {

struct Token {
  enum class Kind { kIdent, kNat, kEq, kPlus, kDiv2, kSep, kComma, kMinus, kEnd };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  const auto push = [&](Token::Kind k, std::string text, std::size_t c) { out.push_back({k, std::move(text), line, c}); };
  while (i < src.size()) {
    const char ch = src[i];
    const std::size_t start_col = col;
    if (ch == '\n') {
      push(Token::Kind::kSep, "\\n", start_col);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
      push(Token::Kind::kIdent, std::string(src.substr(i, j - i)), start_col);
      col += j - i;
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      push(Token::Kind::kNat, std::string(src.substr(i, j - i)), start_col);
      col += j - i;
      i = j;
      continue;
    }
    if (ch == '|') {
      if (i + 1 < src.size() && src[i + 1] == '2') {
        push(Token::Kind::kDiv2, "|2", start_col);
        i += 2;
        col += 2;
        continue;
      }
      throw ParseError("expected '|2'", line, start_col);
    }
    Token::Kind k;
    switch (ch) {
      case '=': k = Token::Kind::kEq; break;
      case '+': k = Token::Kind::kPlus; break;
      case ';': k = Token::Kind::kSep; break;
      case ',': k = Token::Kind::kComma; break;
      case '-': k = Token::Kind::kMinus; break;
      default: throw ParseError(std::string("unexpected character '") + ch + "'", line, start_col);
    }
    push(k, std::string(1, ch), start_col);
    ++i;
    ++col;
  }
  out.push_back({Token::Kind::kEnd, "end of input", line, col});
  return out;
}

class NParser {
 public:
  explicit NParser(std::string_view src) : toks_(lex(src)) {}

  NSystem parse() {
    while (true) {
      while (peek().kind == Token::Kind::kSep) ++pos_;
      if (peek().kind == Token::Kind::kEnd) break;
      statement();
      const Token& t = peek();
      if (t.kind != Token::Kind::kSep && t.kind != Token::Kind::kEnd) {
        throw ParseError("expected ';' or newline before '" + t.text + "'", t.line, t.column);
      }
    }
    if (declared_) {
      for (const auto& [name, tok] : first_use_) {
        if (!declared_names_.count(name)) {
          throw ParseError("undeclared variable '" + name + "'", tok.line, tok.column);
        }
      }
      sys_.variables = declared_order_;
      for (const auto& name : use_order_) {
        if (name.front() == '_') sys_.variables.push_back(name);
      }
    } else {
      sys_.variables = use_order_;
    }
    return std::move(sys_);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  void use(const std::string& name, const Token& tok) {
    if (first_use_.emplace(name, tok).second) use_order_.push_back(name);
  }

  std::uint64_t nat_value(const Token& tok) {
    if (tok.text.size() > 18) throw ParseError("literal too large", tok.line, tok.column);
    return std::stoull(tok.text);
  }

  // A literal operand of a sum becomes the hidden variable _<k> fixed by ConstEq.
  std::string operand(const Token& op) {
    const Token& t = take();
    if (t.kind == Token::Kind::kIdent) {
      use(t.text, t);
      return t.text;
    }
    if (t.kind == Token::Kind::kNat) {
      const std::uint64_t k = nat_value(t);
      const std::string name = "_" + std::to_string(k);
      if (!first_use_.count(name)) {
        use(name, t);
        sys_.atoms.push_back({NAtom::Kind::kConstEq, name, "", "", k, t.line, t.column});
      }
      return name;
    }
    if (t.kind == Token::Kind::kMinus) throw ParseError("negative literal", t.line, t.column);
    throw ParseError("expected a variable after '" + op.text + "'", op.line, op.column);
  }

  void statement() {
    const Token& head = take();
    if (head.kind != Token::Kind::kIdent) {
      throw ParseError("expected a variable, found '" + head.text + "'", head.line, head.column);
    }
    if (head.text == "vars" && peek().kind == Token::Kind::kIdent) {
      declarations();
      return;
    }
    const Token& op = take();
    if (op.kind == Token::Kind::kDiv2) {
      const Token& rhs = peek();
      if (rhs.kind != Token::Kind::kIdent) {
        throw ParseError("expected a variable after '|2'", op.line, op.column);
      }
      ++pos_;
      use(head.text, head);
      use(rhs.text, rhs);
      sys_.atoms.push_back({NAtom::Kind::kDiv2, head.text, rhs.text, "", 0, head.line, head.column});
      return;
    }
    if (op.kind != Token::Kind::kEq) {
      throw ParseError("expected '=' or '|2' after '" + head.text + "'", op.line, op.column);
    }
    use(head.text, head);
    const Token& first = peek();
    if (first.kind == Token::Kind::kMinus) throw ParseError("negative literal", first.line, first.column);
    if (first.kind == Token::Kind::kNat && toks_[pos_ + 1].kind != Token::Kind::kPlus) {
      ++pos_;
      sys_.atoms.push_back({NAtom::Kind::kConstEq, head.text, "", "", nat_value(first), head.line, head.column});
      return;
    }
    const std::string a = operand(op);
    const Token& plus = peek();
    if (plus.kind != Token::Kind::kPlus) {
      throw ParseError("expected '+' after '" + a + "'", plus.line, plus.column);
    }
    ++pos_;
    const std::string b = operand(plus);
    sys_.atoms.push_back({NAtom::Kind::kSumEq, a, b, head.text, 0, head.line, head.column});
  }

  void declarations() {
    declared_ = true;
    while (true) {
      const Token& t = take();
      if (t.kind != Token::Kind::kIdent) throw ParseError("expected a variable name", t.line, t.column);
      if (!declared_names_.insert(t.text).second) {
        throw ParseError("variable '" + t.text + "' declared twice", t.line, t.column);
      }
      declared_order_.push_back(t.text);
      if (peek().kind != Token::Kind::kComma) return;
      ++pos_;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  NSystem sys_;
  bool declared_ = false;
  std::set<std::string> declared_names_;
  std::vector<std::string> declared_order_;
  std::map<std::string, Token> first_use_;
  std::vector<std::string> use_order_;
};

}  // namespace

NSystem parse_nsystem(std::string_view text) { return NParser(text).parse(); }

std::string to_string(const NAtom& atom) {
  switch (atom.kind) {
    case NAtom::Kind::kSumEq: return atom.c + " = " + atom.a + " + " + atom.b;
    case NAtom::Kind::kDiv2: return atom.a + " |2 " + atom.b;
    case NAtom::Kind::kConstEq: return atom.a + " = " + std::to_string(atom.k);
  }
  return "?";
}

// ================================================================ N oracle

bool divides2(std::uint64_t n, std::uint64_t m) {
  if (n == 0) return m == 0;
  return m % n == 0 && std::has_single_bit(m / n);
}

bool holds(const NAtom& atom, const NAssignment& na) {
  const auto get = [&](const std::string& v) {
    const auto it = na.find(v);
    if (it == na.end()) throw DomainError("assignment has no value for '" + v + "'");
    return it->second;
  };
  switch (atom.kind) {
    case NAtom::Kind::kSumEq: return get(atom.c) == get(atom.a) + get(atom.b);
    case NAtom::Kind::kDiv2: return divides2(get(atom.a), get(atom.b));
    case NAtom::Kind::kConstEq: return get(atom.a) == atom.k;
  }
  return false;
}

std::optional<NAssignment> solve_nat(const NSystem& sys, std::uint64_t bound) {
  const std::size_t n = sys.variables.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[sys.variables[i]] = i;
  // Each atom is checked as soon as its last variable is assigned.
  std::vector<std::vector<const NAtom*>> ready(n);
  for (const auto& atom : sys.atoms) {
    std::size_t last = 0;
    for (const std::string* v : {&atom.a, &atom.b, &atom.c}) {
      if (!v->empty()) last = std::max(last, index.at(*v));
    }
    ready[last].push_back(&atom);
  }
  NAssignment na;
  if (n == 0) {
    return std::all_of(sys.atoms.begin(), sys.atoms.end(), [&](const NAtom& a) { return holds(a, na); })
               ? std::optional<NAssignment>(na)
               : std::nullopt;
  }
  std::vector<std::uint64_t> value(n, 0);
  std::size_t depth = 0;
  for (const auto& v : sys.variables) na[v] = 0;
  // Iterative depth-first search in lexicographic order.
  while (true) {
    na[sys.variables[depth]] = value[depth];
    const bool ok = std::all_of(ready[depth].begin(), ready[depth].end(), [&](const NAtom* a) { return holds(*a, na); });
    if (ok && depth + 1 == n) return na;
    if (ok) {
      ++depth;
      value[depth] = 0;
      continue;
    }
    while (value[depth] == bound) {
      if (depth == 0) return std::nullopt;
      --depth;
    }
    ++value[depth];
  }
}

// ================================================================= compile

std::string to_string(const KAtom& atom) {
  switch (atom.kind) {
    case KAtom::Kind::kMulEq: return "MulEq(" + atom.x + ", " + atom.y + ", " + atom.z + ")";
    case KAtom::Kind::kPowerLink: return "PowerLink(" + atom.x + ", " + atom.y + ")";
    case KAtom::Kind::kOrdMatch: return "OrdMatch(" + atom.x + ", " + atom.y + ")";
    case KAtom::Kind::kIntMember: return "IntMember(" + atom.x + ")";
    case KAtom::Kind::kOrdConst: return "OrdConst(" + atom.x + ", " + std::to_string(atom.k) + ")";
  }
  return "?";
}

KSystem compile(const NSystem& sys) {
  KSystem ks;
  const auto z = [](const std::string& v) { return "z_" + v; };
  for (const auto& v : sys.variables) {
    ks.variables.push_back(z(v));
    ks.atoms.push_back({KAtom::Kind::kIntMember, z(v), "", "", 0, std::nullopt});
  }
  std::size_t aux = 0;
  for (std::size_t i = 0; i < sys.atoms.size(); ++i) {
    const NAtom& a = sys.atoms[i];
    switch (a.kind) {
      case NAtom::Kind::kSumEq:
        ks.atoms.push_back({KAtom::Kind::kMulEq, z(a.a), z(a.b), z(a.c), 0, i});
        break;
      case NAtom::Kind::kDiv2: {
        const std::string w = "w_" + std::to_string(++aux);
        ks.variables.push_back(w);
        ks.atoms.push_back({KAtom::Kind::kPowerLink, z(a.a), w, "", 0, i});
        ks.atoms.push_back({KAtom::Kind::kOrdMatch, w, z(a.b), "", 0, i});
        break;
      }
      case NAtom::Kind::kConstEq:
        ks.atoms.push_back({KAtom::Kind::kOrdConst, z(a.a), "", "", a.k, i});
        break;
    }
  }
  return ks;
}

KAssignment embed(const KSystem& ks, const NAssignment& na, const Field& field) {
  const auto nat = [&](const std::string& kvar) {
    if (kvar.rfind("z_", 0) != 0) throw DomainError("'" + kvar + "' is not a source variable");
    const auto it = na.find(kvar.substr(2));
    if (it == na.end()) throw DomainError("assignment has no value for '" + kvar.substr(2) + "'");
    return it->second;
  };
  const auto t_pow = [&](std::uint64_t n) { return RatFunc::monomial(field, 1, static_cast<std::int64_t>(n)); };
  KAssignment ka;
  for (const auto& v : ks.variables) {
    if (v.rfind("z_", 0) == 0) ka.emplace(v, t_pow(nat(v)));
  }
  for (const auto& link : ks.atoms) {
    if (link.kind != KAtom::Kind::kPowerLink) continue;
    const auto match = std::find_if(ks.atoms.begin(), ks.atoms.end(), [&](const KAtom& a) {
      return a.kind == KAtom::Kind::kOrdMatch && a.x == link.y;
    });
    if (match == ks.atoms.end()) throw DomainError("auxiliary '" + link.y + "' has no OrdMatch partner");
    const std::uint64_t na_ = nat(link.x);
    const std::uint64_t nb = nat(match->y);
    ka.insert_or_assign(link.y, t_pow(divides2(na_, nb) ? nb : na_));
  }
  return ka;
}

// =================================================================== check

namespace {

const RatFunc& lookup(const KAssignment& ka, const std::string& v) {
  const auto it = ka.find(v);
  if (it == ka.end()) throw DomainError("assignment has no value for '" + v + "'");
  return it->second;
}

std::int64_t ord_t(const RatFunc& f) { return ord_at(f, Place::from_irreducible(Poly::t(f.field()))); }

}  // namespace

std::optional<std::size_t> KCheckResult::first_failure() const {
  if (failing.empty()) return std::nullopt;
  return failing.front();
}

bool atom_holds(const KAtom& atom, const KAssignment& ka) {
  const RatFunc& x = lookup(ka, atom.x);
  switch (atom.kind) {
    case KAtom::Kind::kIntMember: return !x.is_zero() && ord_t(x) >= 0;
    case KAtom::Kind::kOrdConst: return !x.is_zero() && ord_t(x) == static_cast<std::int64_t>(atom.k);
    case KAtom::Kind::kOrdMatch: {
      const RatFunc& y = lookup(ka, atom.y);
      return !x.is_zero() && !y.is_zero() && ord_t(x) == ord_t(y);
    }
    case KAtom::Kind::kMulEq: return lookup(ka, atom.z) == x * lookup(ka, atom.y);
    case KAtom::Kind::kPowerLink: {
      const RatFunc& y = lookup(ka, atom.y);
      if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
      return check_power_relation(x, y).has_value();
    }
  }
  return false;
}

KCheckResult check_ksystem(const KSystem& ks, const KAssignment& ka) {
  for (const auto& v : ks.variables) lookup(ka, v);
  KCheckResult r;
  for (std::size_t i = 0; i < ks.atoms.size(); ++i) {
    if (!atom_holds(ks.atoms[i], ka)) r.failing.push_back(i);
  }
  r.ok = r.failing.empty();
  return r;
}

// ============================================================= expressions

struct KExpr::Node {
  enum class Op { kVar, kConst, kAdd, kMul, kDiv, kPow };
  Op op;
  std::string name;
  std::optional<RatFunc> value;
  std::shared_ptr<const Node> a, b;
  unsigned k = 0;
};

KExpr KExpr::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->op = Node::Op::kVar;
  n->name = std::move(name);
  return KExpr(std::move(n));
}

KExpr KExpr::constant(RatFunc value) {
  auto n = std::make_shared<Node>();
  n->op = Node::Op::kConst;
  n->value = std::move(value);
  return KExpr(std::move(n));
}

namespace {

template <class Node>
std::shared_ptr<Node> binary(typename Node::Op op, std::shared_ptr<const Node> a, std::shared_ptr<const Node> b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

}  // namespace

KExpr operator+(const KExpr& a, const KExpr& b) { return KExpr(binary<KExpr::Node>(KExpr::Node::Op::kAdd, a.node_, b.node_)); }
KExpr operator*(const KExpr& a, const KExpr& b) { return KExpr(binary<KExpr::Node>(KExpr::Node::Op::kMul, a.node_, b.node_)); }
KExpr operator/(const KExpr& a, const KExpr& b) { return KExpr(binary<KExpr::Node>(KExpr::Node::Op::kDiv, a.node_, b.node_)); }

KExpr KExpr::pow(unsigned k) const {
  auto n = std::make_shared<Node>();
  n->op = Node::Op::kPow;
  n->a = node_;
  n->k = k;
  return KExpr(std::move(n));
}

RatFunc KExpr::eval(const KAssignment& env) const {
  struct Eval {
    const KAssignment& env;
    RatFunc operator()(const Node& n) const {
      switch (n.op) {
        case Node::Op::kVar: return lookup(env, n.name);
        case Node::Op::kConst: return *n.value;
        case Node::Op::kAdd: return (*this)(*n.a) + (*this)(*n.b);
        case Node::Op::kMul: return (*this)(*n.a) * (*this)(*n.b);
        case Node::Op::kDiv: {
          const RatFunc d = (*this)(*n.b);
          if (d.is_zero()) throw DivisionByZero();
          return (*this)(*n.a) / d;
        }
        case Node::Op::kPow: return n.k == 4 ? (*this)(*n.a).frobenius(2) : (*this)(*n.a).pow(n.k);
      }
      throw InvariantViolation("unknown expression node");
    }
  };
  return Eval{env}(*node_);
}

std::string KExpr::to_string() const {
  // Precedence: 0 sum, 1 product/quotient, 2 power, 3 atom.
  struct Print {
    static int prec(const Node& n) {
      switch (n.op) {
        case Node::Op::kAdd: return 0;
        case Node::Op::kMul:
        case Node::Op::kDiv: return 1;
        case Node::Op::kPow: return 2;
        case Node::Op::kConst: {
          const std::string s = n.value->to_string();
          if (s.find(" + ") != std::string::npos) return 0;
          if (s.find_first_of("*/") != std::string::npos) return 1;
          if (s.find('^') != std::string::npos) return 2;
          return 3;
        }
        case Node::Op::kVar: return 3;
      }
      return 3;
    }
    static std::string wrap(const Node& n, int min_prec) {
      std::string s = go(n);
      return prec(n) < min_prec ? "(" + s + ")" : s;
    }
    static std::string go(const Node& n) {
      switch (n.op) {
        case Node::Op::kVar: return n.name;
        case Node::Op::kConst: return n.value->to_string();
        case Node::Op::kAdd: return wrap(*n.a, 0) + " + " + wrap(*n.b, 1);
        case Node::Op::kMul: return wrap(*n.a, 1) + "*" + wrap(*n.b, 2);
        case Node::Op::kDiv: return wrap(*n.a, 1) + "/" + wrap(*n.b, 2);
        case Node::Op::kPow: return wrap(*n.a, 3) + "^" + std::to_string(n.k);
      }
      return "?";
    }
  };
  return Print::go(*node_);
}

// =============================================================== expansion

namespace {

std::string sign_tag(int x) { return x == 1 ? "p" : "m"; }
std::string idx(std::size_t i) { return std::to_string(i); }
std::string idx(std::size_t i, std::size_t j) { return std::to_string(i) + "_" + std::to_string(j); }

// Variable names shared by the emitter and the witness builder.
struct Names {
  static std::string s1_u(const std::string& p) { return p + "_u"; }
  static std::string s1_v(const std::string& p) { return p + "_v"; }
  static std::string delta(const std::string& p, std::size_t i) { return p + "_d" + idx(i); }
  static std::string delta_prime(const std::string& p, std::size_t i, std::size_t j) { return p + "_dp" + idx(i, j); }
  static std::string fam_u(const std::string& p, std::size_t i, std::size_t j) { return p + "_u" + idx(i, j); }
  static std::string fam_v(const std::string& p, std::size_t i, std::size_t j) { return p + "_v" + idx(i, j); }
  static std::string root(const std::string& p) { return p + "_root"; }
  static std::string power(const std::string& p) { return p + "_P"; }
  static std::string sigma(const std::string& p, std::size_t i, std::size_t j, int g, int e) {
    return p + "_sigma" + idx(i, j) + "_" + sign_tag(g) + sign_tag(e);
  }
  static std::string lambda(const std::string& p, std::size_t i, std::size_t j, int g, int e) {
    return p + "_lambda" + idx(i, j) + "_" + sign_tag(g) + sign_tag(e);
  }
  static std::string mu(const std::string& p, std::size_t i, int g, int e) {
    return p + "_mu" + idx(i) + "_" + sign_tag(g) + sign_tag(e);
  }
  static std::string link(std::size_t atom, const std::string& what) { return "pl" + idx(atom) + "_" + what; }
};

class Emitter {
 public:
  Emitter(ExpandedSystem& out, const Field& f) : out_(out), f_(f) {}

  std::size_t origin = 0;

  KExpr fresh(const std::string& name) {
    out_.variables.push_back(name);
    return KExpr::var(name);
  }
  KExpr constant(const RatFunc& r) const { return KExpr::constant(r); }
  KExpr constant(const FieldElem& c) const { return KExpr::constant(RatFunc::constant(c)); }

  void eq(const KExpr& lhs, const KExpr& rhs, std::string role) {
    out_.equations.push_back({lhs, rhs, std::move(role), origin});
  }

  // delta lies in the Frobenius orbit of c.
  void in_orbit(const KExpr& delta, const FieldElem& c, const std::string& role) {
    KExpr prod = constant(RatFunc::one(f_));
    for (const auto& d : f_.frobenius_orbit(c)) prod = prod * (delta + constant(d));
    eq(prod, constant(RatFunc::zero(f_)), role);
  }

  void artin_schreier(const KExpr& lhs, const KExpr& witness, const std::string& role) {
    eq(lhs, witness.pow(4) + witness, role);
  }

  // a = b or a = b^2.
  void root_choice(const KExpr& a, const KExpr& b, const std::string& role) {
    eq((a + b) * (a + b.pow(2)), constant(RatFunc::zero(f_)), role);
  }

  void s1(const std::string& p, const KExpr& Y, const Frame& fr) {
    const KExpr tau = constant(fr.tau);
    const KExpr one = constant(RatFunc::one(f_));
    artin_schreier(Y + tau, fresh(Names::s1_u(p)), "w + t = u^4 + u");
    artin_schreier(one / Y + one / tau, fresh(Names::s1_v(p)), "1/w + 1/t = v^4 + v");
    const auto& V = fr.constants;
    std::vector<KExpr> delta;
    for (std::size_t i = 0; i < V.size(); ++i) {
      delta.push_back(fresh(Names::delta(p, i)));
      in_orbit(delta.back(), V[i], "d in V_c");
    }
    for (std::size_t i = 0; i < V.size(); ++i) {
      for (std::size_t j = 0; j < V.size(); ++j) {
        const KExpr dp = fresh(Names::delta_prime(p, i, j));
        in_orbit(dp, V[j], "d' in V_c'");
        const RatFunc tcc = (fr.tau + RatFunc::constant(V[i])) / (fr.tau + RatFunc::constant(V[j]));
        const KExpr wdd = (Y + delta[i]) / (Y + dp);
        artin_schreier(wdd + constant(tcc), fresh(Names::fam_u(p, i, j)), "w_dd' + t_cc' = u_dd'^4 + u_dd'");
        artin_schreier((Y + dp) / (Y + delta[i]) + constant(tcc.inverse()), fresh(Names::fam_v(p, i, j)),
                       "1/w_dd' + 1/t_cc' = v_dd'^4 + v_dd'");
      }
    }
  }

  // T in {tau^(2^s)}: a root Y in S1 with T = Y or T = Y^2.
  void s(const std::string& p, const KExpr& T, const Frame& fr) {
    const KExpr Y = fresh(Names::root(p));
    root_choice(T, Y, "w = z or w = z^2");
    s1(Names::root(p), Y, fr);
  }

  void t1(const std::string& p, const KExpr& x, const KExpr& R, const Frame& fr) {
    const KExpr tau = constant(fr.tau);
    const KExpr one = constant(RatFunc::one(f_));
    const KExpr x2 = x.pow(2);
    const KExpr u = (x2 + tau.pow(2) + tau) / (x2 + tau);
    const KExpr P = fresh(Names::power(p));
    s1(Names::power(p), P, fr);
    const auto& V = fr.constants;
    std::vector<KExpr> delta;
    for (std::size_t i = 0; i < V.size(); ++i) {
      delta.push_back(fresh(Names::delta(p, i)));
      in_orbit(delta.back(), V[i], "d in V_c");
    }
    for (std::size_t i = 0; i < V.size(); ++i) {
      for (std::size_t j = 0; j < V.size(); ++j) {
        const KExpr dp = fresh(Names::delta_prime(p, i, j));
        in_orbit(dp, V[j], "d' in V_c'");
        for (int g : {-1, 1}) {
          const KExpr ug = g == 1 ? u : one / u;
          const KExpr vg = g == 1 ? R : one / R;
          const KExpr num_u = ug + constant(V[i]);
          const KExpr den_u = ug + constant(V[j]);
          const KExpr num_v = vg + delta[i];
          const KExpr den_v = vg + dp;
          for (int e : {-1, 1}) {
            const KExpr ue = e == 1 ? num_u / den_u : den_u / num_u;
            const KExpr ve = e == 1 ? num_v / den_v : den_v / num_v;
            artin_schreier(ve + ue, fresh(Names::sigma(p, i, j, g, e)), "v_dd'g^e + u_cc'g^e = sigma^4 + sigma");
            artin_schreier(ve.pow(2) * P + ue.pow(2) * tau, fresh(Names::lambda(p, i, j, g, e)),
                           "v_dd'g^2e t^(4^s) + u_cc'g^2e t = lambda^4 + lambda");
          }
        }
      }
    }
    for (std::size_t i = 0; i < V.size(); ++i) {
      for (int g : {-1, 1}) {
        const KExpr ugc = (g == 1 ? u : one / u) + constant(V[i]);
        const KExpr vgd = (g == 1 ? R : one / R) + delta[i];
        for (int e : {-1, 1}) {
          const KExpr lhs = e == 1 ? ugc + vgd : one / ugc + one / vgd;
          artin_schreier(lhs, fresh(Names::mu(p, i, g, e)), "(u^g + c)^e + (v^g + d)^e = mu^4 + mu");
        }
      }
    }
  }

  // (x, W) in {(x, u^(2^s))}: a root R with (x, R) in T1 and W = R or W = R^2.
  void t(const std::string& p, const KExpr& x, const KExpr& W, const Frame& fr) {
    const KExpr R = fresh(Names::root(p));
    root_choice(W, R, "w = z or w = z^2");
    t1(Names::root(p), x, R, fr);
  }

 private:
  ExpandedSystem& out_;
  const Field& f_;
};

class WitnessBuilder {
 public:
  explicit WitnessBuilder(KAssignment& env) : env_(env) {}

  void set(const std::string& name, const RatFunc& value) { env_.insert_or_assign(name, value); }

  void s1(const std::string& p, const SCertificate& cert) {
    set(Names::s1_u(p), cert.u);
    set(Names::s1_v(p), cert.v);
    const std::size_t n = cert.frame.constants.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& e = cert.family[i * n + j];
        set(Names::delta(p, i), RatFunc::constant(e.d));
        set(Names::delta_prime(p, i, j), RatFunc::constant(e.d_prime));
        set(Names::fam_u(p, i, j), e.u);
        set(Names::fam_v(p, i, j), e.v);
      }
    }
  }

  // T = tau^(2^s).
  void s(const std::string& p, const Frame& fr, unsigned s) {
    const SCertificate cert = build_S1_certificate(fr, s / 2);
    set(Names::root(p), cert.w);
    s1(Names::root(p), cert);
  }

  void t1(const std::string& p, const Frame& fr, const RatFunc& x, unsigned k) {
    const SCertificate power = build_S1_certificate(fr, k);
    set(Names::power(p), power.w);
    s1(Names::power(p), power);
    const TCertificate cert = build_T1_certificate(fr, x, k);
    for (const auto& e : cert.pairs) {
      const std::size_t i = position(fr, e.c);
      const std::size_t j = position(fr, e.c_prime);
      set(Names::delta(p, i), RatFunc::constant(e.d));
      set(Names::delta_prime(p, i, j), RatFunc::constant(e.d_prime));
      set(Names::sigma(p, i, j, e.g, e.e), e.sigma);
      set(Names::lambda(p, i, j, e.g, e.e), e.lambda);
    }
    for (const auto& e : cert.singles) set(Names::mu(p, position(fr, e.c), e.g, e.e), e.mu);
  }

  // W = u^(2^s).
  void t(const std::string& p, const Frame& fr, const RatFunc& x, unsigned s) {
    const unsigned k = s / 2;
    set(Names::root(p), compute_u(x, fr.inverted).frobenius(2 * k));
    t1(Names::root(p), fr, x, k);
  }

 private:
  static std::size_t position(const Frame& fr, const FieldElem& c) {
    const auto& V = fr.constants;
    return static_cast<std::size_t>(std::find(V.begin(), V.end(), c) - V.begin());
  }

  KAssignment& env_;
};

}  // namespace

ExpandedSystem expand(const KSystem& ks, const std::vector<FieldElem>& V) {
  if (auto defect = constant_set_defect(V); !defect.empty()) throw DomainError(defect);
  const Field& f = V.front().field();
  const Frame fr = Frame::standard(f, V);
  const Frame fi = Frame::inverted_from(f, V);
  ExpandedSystem es;
  es.variables = ks.variables;
  Emitter em(es, f);
  for (std::size_t a = 0; a < ks.atoms.size(); ++a) {
    const KAtom& atom = ks.atoms[a];
    em.origin = a;
    if (atom.kind == KAtom::Kind::kMulEq) {
      em.eq(KExpr::var(atom.z), KExpr::var(atom.x) * KExpr::var(atom.y), "z = x y");
      continue;
    }
    if (atom.kind != KAtom::Kind::kPowerLink) {
      es.atoms.push_back(atom);
      continue;
    }
    // y = x^(2^s) iff, with T = t^(2^s), both v = u^(2^r) and ṽ = ũ^(2^j).
    const KExpr x = KExpr::var(atom.x);
    const KExpr y2 = KExpr::var(atom.y).pow(2);
    const KExpr T = em.fresh(Names::link(a, "T"));
    const KExpr Ti = em.fresh(Names::link(a, "Ti"));
    const KExpr v = em.fresh(Names::link(a, "v"));
    const KExpr vi = em.fresh(Names::link(a, "vi"));
    em.eq(T * Ti, KExpr::constant(RatFunc::one(f)), "T T' = 1");
    em.eq(v * (y2 + T), y2 + T.pow(2) + T, "v (y^2 + T) = y^2 + T^2 + T");
    em.eq(vi * (y2 + Ti), y2 + Ti.pow(2) + Ti, "v' (y^2 + T') = y^2 + T'^2 + T'");
    em.s(Names::link(a, "S"), T, fr);
    em.s(Names::link(a, "Si"), Ti, fi);
    em.t(Names::link(a, "U"), x, v, fr);
    em.t(Names::link(a, "Ui"), x, vi, fi);
  }
  return es;
}

KAssignment expansion_witnesses(const KSystem& ks, const KAssignment& ka, const std::vector<FieldElem>& V) {
  if (auto defect = constant_set_defect(V); !defect.empty()) throw DomainError(defect);
  const Field& f = V.front().field();
  const Frame fr = Frame::standard(f, V);
  const Frame fi = Frame::inverted_from(f, V);
  KAssignment env = ka;
  WitnessBuilder wb(env);
  for (std::size_t a = 0; a < ks.atoms.size(); ++a) {
    const KAtom& atom = ks.atoms[a];
    if (atom.kind != KAtom::Kind::kPowerLink) continue;
    const RatFunc& x = lookup(ka, atom.x);
    const RatFunc& y = lookup(ka, atom.y);
    const auto s = check_power_relation(x, y);
    if (!s) throw DomainError("atom " + to_string(atom) + " does not hold; no witnesses exist");
    const RatFunc T = fr.tau.frobenius(*s);
    wb.set(Names::link(a, "T"), T);
    wb.set(Names::link(a, "Ti"), T.inverse());
    wb.set(Names::link(a, "v"), compute_v(y, *s, false));
    wb.set(Names::link(a, "vi"), compute_v(y, *s, true));
    wb.s(Names::link(a, "S"), fr, *s);
    wb.s(Names::link(a, "Si"), fi, *s);
    wb.t(Names::link(a, "U"), fr, x, *s);
    wb.t(Names::link(a, "Ui"), fi, x, *s);
  }
  return env;
}

ExpandedCheckResult check_expanded(const ExpandedSystem& es, const KAssignment& ka) {
  ExpandedCheckResult r;
  for (std::size_t i = 0; i < es.equations.size(); ++i) {
    bool ok = false;
    try {
      ok = es.equations[i].lhs.eval(ka) == es.equations[i].rhs.eval(ka);
    } catch (const DivisionByZero&) {
      ok = false;
    }
    if (!ok) {
      r.ok = false;
      r.failing_equation = i;
      return r;
    }
  }
  for (std::size_t i = 0; i < es.atoms.size(); ++i) {
    if (!atom_holds(es.atoms[i], ka)) {
      r.ok = false;
      r.failing_atom = i;
      return r;
    }
  }
  return r;
}

// =========================================================== serialization

namespace {

using nlohmann::json;

const char* kind_name(NAtom::Kind k) {
  switch (k) {
    case NAtom::Kind::kSumEq: return "SumEq";
    case NAtom::Kind::kDiv2: return "Div2";
    case NAtom::Kind::kConstEq: return "ConstEq";
  }
  return "?";
}

const char* kind_name(KAtom::Kind k) {
  switch (k) {
    case KAtom::Kind::kMulEq: return "MulEq";
    case KAtom::Kind::kPowerLink: return "PowerLink";
    case KAtom::Kind::kOrdMatch: return "OrdMatch";
    case KAtom::Kind::kIntMember: return "IntMember";
    case KAtom::Kind::kOrdConst: return "OrdConst";
  }
  return "?";
}

json katom_json(const KAtom& a) {
  json args = json::array({a.x});
  if (!a.y.empty()) args.push_back(a.y);
  if (!a.z.empty()) args.push_back(a.z);
  json j = {{"kind", kind_name(a.kind)}, {"args", args}};
  if (a.kind == KAtom::Kind::kOrdConst) j["k"] = a.k;
  j["origin"] = a.origin ? json(*a.origin) : json(nullptr);
  return j;
}

}  // namespace

json to_json(const NSystem& sys) {
  json atoms = json::array();
  for (const auto& a : sys.atoms) {
    json j = {{"kind", kind_name(a.kind)}, {"line", a.line}, {"column", a.column}};
    switch (a.kind) {
      case NAtom::Kind::kSumEq: j["args"] = {a.a, a.b, a.c}; break;
      case NAtom::Kind::kDiv2: j["args"] = {a.a, a.b}; break;
      case NAtom::Kind::kConstEq:
        j["args"] = {a.a};
        j["k"] = a.k;
        break;
    }
    atoms.push_back(j);
  }
  return {{"variables", sys.variables}, {"atoms", atoms}};
}

json to_json(const KSystem& ks) {
  json atoms = json::array();
  for (const auto& a : ks.atoms) atoms.push_back(katom_json(a));
  return {{"variables", ks.variables}, {"atoms", atoms}};
}

json to_json(const ExpandedSystem& es) {
  json eqs = json::array();
  for (const auto& e : es.equations) {
    eqs.push_back({{"lhs", e.lhs.to_string()},
                   {"rhs", e.rhs.to_string()},
                   {"role", e.role},
                   {"origin", e.origin ? json(*e.origin) : json(nullptr)}});
  }
  json atoms = json::array();
  for (const auto& a : es.atoms) atoms.push_back(katom_json(a));
  return {{"variables", es.variables}, {"equations", eqs}, {"atoms", atoms}};
}

json to_json(const NAssignment& na) {
  json j = json::object();
  for (const auto& [k, v] : na) j[k] = v;
  return j;
}

json to_json(const KAssignment& ka) {
  json j = json::object();
  for (const auto& [k, v] : ka) j[k] = v.to_string();
  return j;
}

KSystem ksystem_from_json(const json& j) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("atoms")) {
    throw DomainError("compiled system needs 'variables' and 'atoms'");
  }
  KSystem ks;
  for (const auto& v : j.at("variables")) {
    if (!v.is_string()) throw DomainError("variable names must be strings");
    ks.variables.push_back(v.get<std::string>());
  }
  const std::set<std::string> known(ks.variables.begin(), ks.variables.end());
  for (const auto& a : j.at("atoms")) {
    if (!a.is_object() || !a.contains("kind") || !a.contains("args")) throw DomainError("malformed atom");
    const std::string kind = a.at("kind").get<std::string>();
    std::vector<std::string> args;
    for (const auto& x : a.at("args")) {
      if (!x.is_string() || !known.count(x.get<std::string>())) {
        throw DomainError("atom references an undeclared variable");
      }
      args.push_back(x.get<std::string>());
    }
    KAtom atom;
    std::size_t arity = 0;
    if (kind == "MulEq") atom.kind = KAtom::Kind::kMulEq, arity = 3;
    else if (kind == "PowerLink") atom.kind = KAtom::Kind::kPowerLink, arity = 2;
    else if (kind == "OrdMatch") atom.kind = KAtom::Kind::kOrdMatch, arity = 2;
    else if (kind == "IntMember") atom.kind = KAtom::Kind::kIntMember, arity = 1;
    else if (kind == "OrdConst") atom.kind = KAtom::Kind::kOrdConst, arity = 1;
    else throw DomainError("unknown atom kind '" + kind + "'");
    if (args.size() != arity) throw DomainError("wrong number of arguments for " + kind);
    atom.x = args[0];
    if (arity > 1) atom.y = args[1];
    if (arity > 2) atom.z = args[2];
    if (atom.kind == KAtom::Kind::kOrdConst) {
      if (!a.contains("k") || !a.at("k").is_number_unsigned()) throw DomainError("OrdConst needs a natural 'k'");
      atom.k = a.at("k").get<std::uint64_t>();
    }
    if (a.contains("origin") && a.at("origin").is_number_unsigned()) atom.origin = a.at("origin").get<std::size_t>();
    ks.atoms.push_back(std::move(atom));
  }
  return ks;
}

NAssignment nassignment_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("assignment must be an object");
  NAssignment na;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_unsigned()) throw DomainError("value of '" + k + "' must be a natural number");
    na[k] = v.get<std::uint64_t>();
  }
  return na;
}

KAssignment kassignment_from_json(const json& j, const Field& field) {
  if (!j.is_object()) throw DomainError("assignment must be an object");
  KAssignment ka;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw DomainError("value of '" + k + "' must be an expression string");
    ka.emplace(k, parse_ratfunc(field, v.get<std::string>()));
  }
  return ka;
}

}  // namespace dioph2
