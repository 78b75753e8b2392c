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

#include "dioph2/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "dioph2/artin_schreier.hpp"
#include "dioph2/certificate_io.hpp"
#include "dioph2/certificates.hpp"
#include "dioph2/error.hpp"
#include "dioph2/expr.hpp"
#include "dioph2/place.hpp"
#include "dioph2/reducer.hpp"

namespace dioph2::cli {
namespace {

using nlohmann::json;

struct Options {
  unsigned m = kDefaultFieldSpec.m;
  std::string modulus;
  std::size_t vsize = 7;
  std::uint64_t seed = 0;
  std::string format = "text";

  std::string expr;
  std::string place;
  unsigned deg = 2;
  unsigned s = 0;
  std::string x, y;
  bool inverted = false;
  bool expanded = false;
  std::string file;
  std::string system_file, assign_file;
  std::uint64_t bound = 16;
  int height = 0;
  unsigned smax = 0;
};

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  bool json_mode() const { return o_.format == "json"; }

  const Field& field() const {
    FieldSpec spec{o_.m, default_modulus(o_.m)};
    if (!o_.modulus.empty()) {
      std::size_t used = 0;
      const unsigned long v = std::stoul(o_.modulus, &used, 16);
      if (used != o_.modulus.size()) throw DomainError("modulus must be hexadecimal");
      spec.modulus = static_cast<std::uint32_t>(v);
    }
    return Field::get(spec);
  }

  Frame frame() const {
    const Field& f = field();
    const auto V = make_constant_set(f, o_.vsize);
    return o_.inverted ? Frame::inverted_from(f, V) : Frame::standard(f, V);
  }

  RatFunc parse(const std::string& text) const { return parse_ratfunc(field(), text); }

  // One record: a JSON line in json mode, the text otherwise.
  void emit(const json& record, const std::string& text) const {
    if (json_mode()) {
      out_ << record.dump() << '\n';
    } else {
      out_ << text << '\n';
    }
  }

  static std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static json read_json(const std::string& path) {
    try {
      return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
      throw DomainError("'" + path + "' is not valid JSON: " + e.what());
    }
  }

  int eval() const {
    const std::string v = parse(o_.expr).to_string();
    emit({{"value", v}}, v);
    return kExitOk;
  }

  int ord() const {
    const RatFunc f = parse(o_.expr);
    Place p = Place::infinite(field());
    if (o_.place != "inf") {
      const RatFunc q = parse(o_.place);
      if (!q.den().is_one()) throw DomainError("a place is 'inf' or a monic irreducible polynomial");
      p = Place::finite(q.num());
    }
    const std::int64_t n = ord_at(f, p);
    emit({{"place", p.to_string()}, {"ord", n}}, std::to_string(n));
    return kExitOk;
  }

  int divisor() const {
    const Divisor d = divisor_of(parse(o_.expr));
    json j = json::object();
    for (const auto& [place, mult] : d.support()) j[place.to_string()] = mult;
    emit({{"divisor", j}, {"degree", d.degree()}}, d.to_string());
    return kExitOk;
  }

  int height_cmd() const {
    const std::uint64_t h = height(parse(o_.expr));
    emit({{"height", h}}, std::to_string(h));
    return kExitOk;
  }

  int as_solve() const {
    const RatFunc beta = parse(o_.expr);
    const auto sol = solve_artin_schreier(beta, o_.deg);
    if (!sol) {
      const std::string q = o_.deg == 2 ? "z^2 + z" : "z^4 + z";
      emit({{"solvable", false}}, "none: " + beta.to_string() + " is not of the form " + q);
      return kExitNone;
    }
    json kernel = json::array();
    for (const auto& c : sol->kernel) kernel.push_back(c.to_string());
    emit({{"solvable", true}, {"z", sol->z.to_string()}, {"kernel", kernel}}, sol->z.to_string());
    return kExitOk;
  }

  void print_certificate(const json& j) const {
    if (json_mode()) {
      out_ << j.dump() << '\n';
    } else {
      out_ << j.dump(2) << '\n';
    }
  }

  int certify_s() const {
    print_certificate(certificate_to_json(build_S1_certificate(frame(), o_.s)));
    return kExitOk;
  }

  int certify_t() const {
    const Frame fr = frame();
    print_certificate(certificate_to_json(build_T1_certificate(fr, parse(o_.x), o_.s)));
    return kExitOk;
  }

  int verify_cert() const {
    const Certificate cert = certificate_from_json(read_json(o_.file));
    const VerifyReport r = std::visit(
        [](const auto& c) {
          if constexpr (std::is_same_v<std::decay_t<decltype(c)>, SCertificate>) {
            return verify_S1_certificate(c);
          } else {
            return verify_T1_certificate(c);
          }
        },
        cert);
    json j = {{"ok", r.ok}};
    if (!r.ok) {
      j["check"] = to_string(r.check);
      j["entry"] = r.entry ? json(*r.entry) : json(nullptr);
      j["detail"] = r.detail;
    }
    emit(j, r.ok ? "ok" : "rejected: " + r.to_string());
    return r.ok ? kExitOk : kExitNone;
  }

  int power_rel() const {
    const RatFunc x = parse(o_.x);
    const RatFunc y = parse(o_.y);
    const auto s = check_power_relation(x, y);
    if (!s) {
      emit({{"s", nullptr}}, "none");
      return kExitNone;
    }
    emit({{"s", *s}}, std::to_string(*s));
    return kExitOk;
  }

  int compile_cmd() const {
    const NSystem sys = parse_nsystem(read_file(o_.file));
    const KSystem ks = compile(sys);
    if (o_.expanded) {
      const ExpandedSystem es = expand(ks, make_constant_set(field(), o_.vsize));
      if (json_mode()) {
        out_ << to_json(es).dump() << '\n';
        return kExitOk;
      }
      out_ << "variables: " << es.variables.size() << ", equations: " << es.equations.size()
           << ", atoms: " << es.atoms.size() << '\n';
      for (const auto& e : es.equations) out_ << e.lhs.to_string() << " = " << e.rhs.to_string() << '\n';
      for (const auto& a : es.atoms) out_ << to_string(a) << '\n';
      return kExitOk;
    }
    if (json_mode()) {
      out_ << to_json(ks).dump() << '\n';
      return kExitOk;
    }
    for (const auto& a : ks.atoms) {
      out_ << to_string(a);
      if (a.origin) out_ << "  <- " << to_string(sys.atoms[*a.origin]);
      out_ << '\n';
    }
    return kExitOk;
  }

  int solve_nat_cmd() const {
    const NSystem sys = parse_nsystem(read_file(o_.file));
    const auto na = solve_nat(sys, o_.bound);
    if (!na) {
      emit({{"solution", nullptr}}, "none within bound " + std::to_string(o_.bound));
      return kExitNone;
    }
    std::string text;
    for (const auto& v : sys.variables) {
      if (!text.empty()) text += ", ";
      text += v + " = " + std::to_string(na->at(v));
    }
    emit({{"solution", to_json(*na)}}, text);
    return kExitOk;
  }

  int check() const {
    const std::string src = read_file(o_.system_file);
    std::optional<NSystem> sys;
    KSystem ks;
    if (src.find_first_not_of(" \t\r\n") != std::string::npos && src[src.find_first_not_of(" \t\r\n")] == '{') {
      ks = ksystem_from_json(json::parse(src));
    } else {
      sys = parse_nsystem(src);
      ks = compile(*sys);
    }
    const json aj = read_json(o_.assign_file);
    const bool natural = aj.is_object() && std::all_of(aj.begin(), aj.end(), [](const json& v) { return v.is_number(); });
    const KAssignment ka = natural ? embed(ks, nassignment_from_json(aj), field()) : kassignment_from_json(aj, field());

    const KCheckResult r = check_ksystem(ks, ka);
    if (!r.ok) {
      json failing = json::array();
      std::string text;
      for (std::size_t i : r.failing) {
        const KAtom& a = ks.atoms[i];
        json f = {{"atom", i}, {"text", to_string(a)}, {"origin", a.origin ? json(*a.origin) : json(nullptr)}};
        text += "violated: atom " + std::to_string(i) + ": " + to_string(a);
        if (a.origin && sys) {
          const NAtom& n = sys->atoms[*a.origin];
          f["source"] = to_string(n);
          text += " (source " + to_string(n) + " at line " + std::to_string(n.line) + ", column " +
                  std::to_string(n.column) + ")";
        }
        failing.push_back(f);
        text += '\n';
      }
      text.pop_back();
      emit({{"ok", false}, {"failing", failing}}, text);
      return kExitNone;
    }
    if (!o_.expanded) {
      emit({{"ok", true}}, "ok");
      return kExitOk;
    }
    const auto V = make_constant_set(field(), o_.vsize);
    const ExpandedSystem es = expand(ks, V);
    const ExpandedCheckResult er = check_expanded(es, expansion_witnesses(ks, ka, V));
    if (!er.ok) {
      const std::string what = er.failing_equation ? "equation " + std::to_string(*er.failing_equation) + " (" +
                                                         es.equations[*er.failing_equation].role + ")"
                                                   : "atom " + to_string(es.atoms[*er.failing_atom]);
      emit({{"ok", false}, {"expanded_failure", what}}, "violated in expansion: " + what);
      return kExitNone;
    }
    emit({{"ok", true}, {"equations", es.equations.size()}},
         "ok (" + std::to_string(es.equations.size()) + " expanded equations hold)");
    return kExitOk;
  }

  int search_basecase() const {
    const auto y = search_basecase_counterexample(field(), o_.height, o_.smax);
    if (!y) {
      emit({{"counterexample", nullptr}}, "none");
      return kExitNone;
    }
    emit({{"counterexample", y->to_string()}}, "counterexample: " + y->to_string());
    return kExitOk;
  }

  int search_sigma() const {
    const auto pairs = lemma_sigma_search(field(), o_.height);
    json list = json::array();
    bool all_trivial = true;
    for (const auto& [sigma, mu] : pairs) {
      all_trivial = all_trivial && (sigma.frobenius(2) + sigma).is_zero();
      if (json_mode()) {
        list.push_back({{"sigma", sigma.to_string()}, {"mu", mu.to_string()}});
      } else {
        out_ << "sigma = " << sigma.to_string() << ", mu = " << mu.to_string() << '\n';
      }
    }
    emit({{"pairs", list}, {"all_sigma_trivial", all_trivial}},
         "pairs: " + std::to_string(pairs.size()) + ", all with sigma^4 + sigma = 0: " + (all_trivial ? "yes" : "no"));
    return kExitOk;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Tools for existential definability over GF(2^m)(t)", "dioph2"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", o.m, "extension degree m of GF(2^m)")->check(CLI::Range(1U, kMaxExtensionDegree));
  app.add_option("--modulus", o.modulus, "field modulus in hexadecimal");
  app.add_option("--vsize", o.vsize, "size of the constant set V")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "seed for randomized steps");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

  const auto expr_arg = [&](CLI::App* sub) { sub->add_option("EXPR", o.expr, "rational function")->required(); };
  auto* eval = app.add_subcommand("eval", "print an expression in canonical form");
  expr_arg(eval);
  auto* ord = app.add_subcommand("ord", "valuation at a place");
  ord->add_option("--place", o.place, "'inf' or a monic irreducible polynomial")->required();
  expr_arg(ord);
  auto* divisor = app.add_subcommand("divisor", "principal divisor");
  expr_arg(divisor);
  auto* height_sub = app.add_subcommand("height", "degree of the zero divisor");
  expr_arg(height_sub);
  auto* as = app.add_subcommand("as-solve", "solve z^q + z = EXPR for q = 2 or 4");
  as->add_option("--deg", o.deg, "2 or 4")->required()->check(CLI::IsMember({2U, 4U}));
  expr_arg(as);
  auto* cs = app.add_subcommand("certify-s", "certificate for t^(4^s) in S1");
  cs->add_option("--s", o.s)->required();
  cs->add_flag("--inverted", o.inverted, "use the frame tau = 1/t");
  auto* ct = app.add_subcommand("certify-t", "certificate for (x, u^(4^s)) in T1");
  ct->add_option("--s", o.s)->required();
  ct->add_option("--x", o.x)->required();
  ct->add_flag("--inverted", o.inverted, "use the frame tau = 1/t");
  auto* vc = app.add_subcommand("verify-cert", "verify a certificate file");
  vc->add_option("FILE", o.file)->required();
  auto* pr = app.add_subcommand("power-rel", "find s with y = x^(2^s)");
  pr->add_option("--x", o.x)->required();
  pr->add_option("--y", o.y)->required();
  auto* cp = app.add_subcommand("compile", "compile a source system");
  cp->add_option("FILE", o.file)->required();
  cp->add_flag("--expand", o.expanded, "print the equation expansion");
  auto* sn = app.add_subcommand("solve-nat", "bounded search for a natural-number solution");
  sn->add_option("--bound", o.bound)->required();
  sn->add_option("FILE", o.file)->required();
  auto* ck = app.add_subcommand("check", "check an assignment against a system");
  ck->add_option("--system", o.system_file)->required();
  ck->add_option("--assign", o.assign_file)->required();
  ck->add_flag("--expanded", o.expanded, "also check the expanded equations with certificate witnesses");
  auto* sb = app.add_subcommand("search-basecase", "search for a base-case counterexample");
  sb->add_option("--height", o.height)->required()->check(CLI::NonNegativeNumber);
  sb->add_option("--smax", o.smax)->required();
  auto* ss = app.add_subcommand("search-sigma", "enumerate t (sigma^4 + sigma) = mu^4 + mu");
  ss->add_option("--height", o.height)->required()->check(CLI::NonNegativeNumber);

  std::vector<std::string> storage{"dioph2"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitError;
  }

  const Session session(o, out);
  try {
    if (eval->parsed()) return session.eval();
    if (ord->parsed()) return session.ord();
    if (divisor->parsed()) return session.divisor();
    if (height_sub->parsed()) return session.height_cmd();
    if (as->parsed()) return session.as_solve();
    if (cs->parsed()) return session.certify_s();
    if (ct->parsed()) return session.certify_t();
    if (vc->parsed()) return session.verify_cert();
    if (pr->parsed()) return session.power_rel();
    if (cp->parsed()) return session.compile_cmd();
    if (sn->parsed()) return session.solve_nat_cmd();
    if (ck->parsed()) return session.check();
    if (sb->parsed()) return session.search_basecase();
    if (ss->parsed()) return session.search_sigma();
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.message() << '\n';
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  err << "error: no subcommand\n" << app.help();
  return kExitError;
}

}  // namespace dioph2::cli
