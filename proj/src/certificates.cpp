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

#include "dioph2/certificates.hpp"

#include <bit>
#include <functional>
#include <map>
#include <unordered_map>

#include "dioph2/artin_schreier.hpp"
#include "dioph2/error.hpp"
#include "dioph2/place.hpp"

namespace dioph2 {

namespace {

RatFunc fourth_plus_self(const RatFunc& a) { return a.frobenius(2) + a; }

RatFunc t_power(const Field& f, std::int64_t k) { return RatFunc::monomial(f, 1, k); }

std::int64_t pow2(unsigned k) { return std::int64_t{1} << k; }

VerifyReport fail(CertCheck check, std::optional<std::size_t> entry, std::string detail) {
  VerifyReport r;
  r.ok = false;
  r.check = check;
  r.entry = entry;
  r.detail = std::move(detail);
  return r;
}

std::optional<std::size_t> index_of(const std::vector<FieldElem>& V, const FieldElem& c) {
  for (std::size_t i = 0; i < V.size(); ++i) {
    if (V[i] == c) return i;
  }
  return std::nullopt;
}

// log_4(n) if n is a power of 4.
std::optional<unsigned> log4_exact(std::uint64_t n) {
  if (n == 0 || !std::has_single_bit(n)) return std::nullopt;
  const auto b = static_cast<unsigned>(std::countr_zero(n));
  if (b % 2 != 0) return std::nullopt;
  return b / 2;
}

RatFunc signed_pow(const RatFunc& a, int e) { return e == 1 ? a : a.inverse(); }

// Every nonzero reduced element of height <= max_height, ordered by
// denominator degree, denominator coefficients, then numerator coefficients.
void for_each_element(const Field& f, int max_height, const std::function<void(const RatFunc&)>& fn) {
  const auto step = [&](std::vector<std::uint32_t>& cs, std::size_t from) {
    std::size_t i = from;
    while (i < cs.size() && ++cs[i] == f.size()) cs[i++] = 0;
    return i < cs.size();
  };
  for (int dd = 0; dd <= max_height; ++dd) {
    std::vector<std::uint32_t> low(static_cast<std::size_t>(dd), 0);
    do {
      std::vector<std::uint32_t> den = low;
      den.push_back(1);
      const Poly d(f, std::move(den));
      std::vector<std::uint32_t> num(static_cast<std::size_t>(max_height) + 1, 0);
      while (step(num, 0)) {
        const Poly n(f, num);
        if (Poly::gcd(n, d).is_one()) fn(RatFunc(n, d));
      }
    } while (step(low, 0));
  }
}

}  // namespace

// ------------------------------------------------------------------- frames

Frame Frame::standard(const Field& field, std::vector<FieldElem> V) {
  return Frame{RatFunc::t(field), std::move(V), false};
}

Frame Frame::inverted_from(const Field& field, const std::vector<FieldElem>& V) {
  std::vector<FieldElem> W;
  W.reserve(V.size());
  for (const auto& c : V) W.push_back(c.is_zero() ? c : c.inverse());
  return Frame{RatFunc::t(field).inverse(), std::move(W), true};
}

std::string constant_set_defect(const std::vector<FieldElem>& V) {
  if (V.empty()) return "constant set is empty";
  bool has_zero = false;
  for (const auto& c : V) {
    if (c.is_zero()) has_zero = true;
    if (c.is_one()) return "constant set contains 1";
  }
  if (!has_zero) return "constant set does not contain 0";
  for (std::size_t i = 0; i < V.size(); ++i) {
    for (std::size_t j = i + 1; j < V.size(); ++j) {
      if (in_frobenius_orbit(V[i], V[j])) {
        return "constants " + V[i].to_string() + " and " + V[j].to_string() + " share a Frobenius orbit";
      }
    }
  }
  return {};
}

// ---------------------------------------------------------- power relation

RatFunc telescope(const RatFunc& a, unsigned s) {
  RatFunc acc = RatFunc::zero(a.field());
  RatFunc term = a;
  for (unsigned i = 0; i < s; ++i) {
    acc += term;
    if (i + 1 < s) term = term.frobenius(2);
  }
  return acc;
}

RatFunc compute_u(const RatFunc& x, bool inverted) { return compute_v(x, 0, inverted); }

RatFunc compute_v(const RatFunc& y, unsigned s, bool inverted) {
  const Field& f = y.field();
  const RatFunc tau = inverted ? RatFunc::t(f).inverse() : RatFunc::t(f);
  const RatFunc ts = tau.frobenius(s);
  const RatFunc y2 = y * y;
  RatFunc den = y2 + ts;
  if (den.is_zero()) {
    throw DomainError("denominator vanishes: " + y.to_string() + "^2 = " + ts.to_string());
  }
  return (y2 + ts * ts + ts) / den;
}

std::optional<unsigned> is_2power_of(const RatFunc& a, const RatFunc& b) {
  if (a.is_constant()) {
    if (!b.is_constant()) return std::nullopt;
    const FieldElem ca = a.constant_value();
    const FieldElem cb = b.constant_value();
    for (unsigned r = 0; r < a.field().m(); ++r) {
      if (ca.frobenius(r) == cb) return r;
    }
    return std::nullopt;
  }
  if (b.is_constant()) return std::nullopt;
  const std::uint64_t ha = height(a);
  const std::uint64_t hb = height(b);
  if (hb % ha != 0 || !std::has_single_bit(hb / ha)) return std::nullopt;
  const auto r = static_cast<unsigned>(std::countr_zero(hb / ha));
  if (a.frobenius(r) != b) return std::nullopt;
  return r;
}

unsigned power_relation_search_bound(const RatFunc& x, const RatFunc& y) {
  if (x.is_constant() || y.is_constant()) return x.field().m() - 1;
  const std::uint64_t hx = height(x);
  const std::uint64_t hy = height(y);
  if (hy < hx) return 0;
  return static_cast<unsigned>(std::bit_width(hy / hx) - 1);
}

std::optional<unsigned> check_power_relation(const RatFunc& x, const RatFunc& y) {
  const RatFunc u = compute_u(x, false);
  const RatFunc ut = compute_u(x, true);
  const unsigned bound = power_relation_search_bound(x, y);
  for (unsigned s = 0; s <= bound; ++s) {
    RatFunc v(x.field());
    RatFunc vt(x.field());
    try {
      v = compute_v(y, s, false);
      vt = compute_v(y, s, true);
    } catch (const DomainError&) {
      continue;
    }
    if (!is_2power_of(u, v) || !is_2power_of(ut, vt)) continue;
    if (y != x.frobenius(s)) {
      throw InvariantViolation("power relation accepted s = " + std::to_string(s) + " but " + y.to_string() +
                               " != (" + x.to_string() + ")^(2^s)");
    }
    return s;
  }
  return std::nullopt;
}

RatFunc y_from_forward_exponent(const RatFunc& x, unsigned r, unsigned s) {
  if (r < 1 || s < 1) throw DomainError("exponents must be at least 1");
  const Field& f = x.field();
  const RatFunc inner = x.frobenius(r) * t_power(f, pow2(s)) + t_power(f, pow2(r - 1) + pow2(s)) +
                        t_power(f, pow2(r) + pow2(s - 1));
  return inner * t_power(f, -pow2(r));
}

RatFunc y_from_inverted_exponent(const RatFunc& x, unsigned j, unsigned s) {
  if (j < 1 || s < 1) throw DomainError("exponents must be at least 1");
  const Field& f = x.field();
  const RatFunc inner = x.frobenius(j) * t_power(f, -pow2(s)) + t_power(f, -pow2(s) - pow2(j - 1)) +
                        t_power(f, -pow2(j) - pow2(s - 1));
  return inner * t_power(f, pow2(j));
}

std::pair<RatFunc, RatFunc> exponent_consistency(const RatFunc& x, unsigned r, unsigned j, unsigned s) {
  if (r < 1 || j < 1 || s < 1) throw DomainError("exponents must be at least 1");
  const Field& f = x.field();
  RatFunc lhs = t_power(f, pow2(s) - pow2(r)) * x.frobenius(r) + t_power(f, pow2(j) - pow2(s)) * x.frobenius(j);
  RatFunc rhs = t_power(f, pow2(s) - pow2(r - 1)) + t_power(f, pow2(s - 1)) + t_power(f, pow2(j - 1) - pow2(s)) +
                t_power(f, -pow2(s - 1));
  return {std::move(lhs), std::move(rhs)};
}

// ------------------------------------------------------------------ reports

std::string to_string(CertCheck check) {
  switch (check) {
    case CertCheck::kConstantSet: return "constant set";
    case CertCheck::kCoverage: return "family coverage";
    case CertCheck::kOrbit: return "orbit membership";
    case CertCheck::kWPlusTau: return "w + t = u^4 + u";
    case CertCheck::kInvWPlusTau: return "1/w + 1/t = v^4 + v";
    case CertCheck::kFamilyW: return "w_dd' + t_cc' = u_dd'^4 + u_dd'";
    case CertCheck::kFamilyInvW: return "1/w_dd' + 1/t_cc' = v_dd'^4 + v_dd'";
    case CertCheck::kSigma: return "v_dd'g^e + u_cc'g^e = sigma^4 + sigma";
    case CertCheck::kLambda: return "v_dd'g^2e t^(4^s) + u_cc'g^2e t = lambda^4 + lambda";
    case CertCheck::kMu: return "(u^g + c)^e + (v^g + d)^e = mu^4 + mu";
    case CertCheck::kClaim: return "power claim";
  }
  return "unknown";
}

std::string VerifyReport::to_string() const {
  if (ok) return "ok";
  std::string out = "fails: " + dioph2::to_string(check);
  if (entry) out += " at entry " + std::to_string(*entry);
  if (!detail.empty()) out += " (" + detail + ")";
  return out;
}

// --------------------------------------------------------------- S1 family

SCertificate build_S1_certificate(const Frame& frame, unsigned s) {
  const RatFunc& tau = frame.tau;
  const RatFunc tau_inv = tau.inverse();
  SCertificate cert{frame, s, tau.frobenius(2 * s), telescope(tau, s), telescope(tau_inv, s), {}};
  const auto& V = frame.constants;
  cert.family.reserve(V.size() * V.size());
  for (const auto& c : V) {
    for (const auto& cp : V) {
      const RatFunc tcc = (tau + RatFunc::constant(c)) / (tau + RatFunc::constant(cp));
      cert.family.push_back(
          {c, cp, c.frobenius(2 * s), cp.frobenius(2 * s), telescope(tcc, s), telescope(tcc.inverse(), s)});
    }
  }
  return cert;
}

VerifyReport verify_S1_certificate(const SCertificate& cert) {
  const auto& V = cert.frame.constants;
  const RatFunc& tau = cert.frame.tau;
  if (auto defect = constant_set_defect(V); !defect.empty()) return fail(CertCheck::kConstantSet, {}, defect);

  if (cert.w + tau != fourth_plus_self(cert.u)) return fail(CertCheck::kWPlusTau, {}, "");
  if (cert.w.is_zero()) return fail(CertCheck::kInvWPlusTau, {}, "w = 0");
  if (cert.w.inverse() + tau.inverse() != fourth_plus_self(cert.v)) return fail(CertCheck::kInvWPlusTau, {}, "");

  const std::size_t n = V.size();
  if (cert.family.size() != n * n) {
    return fail(CertCheck::kCoverage, {},
                "expected " + std::to_string(n * n) + " entries, found " + std::to_string(cert.family.size()));
  }
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  std::vector<std::optional<FieldElem>> d_of(n);
  for (std::size_t i = 0; i < cert.family.size(); ++i) {
    const auto& e = cert.family[i];
    const auto ci = index_of(V, e.c);
    const auto cpi = index_of(V, e.c_prime);
    if (!ci || !cpi) return fail(CertCheck::kCoverage, i, "constant outside V");
    if (seen[*ci][*cpi]) return fail(CertCheck::kCoverage, i, "duplicate pair");
    seen[*ci][*cpi] = true;
    if (d_of[*ci] && !(*d_of[*ci] == e.d)) return fail(CertCheck::kCoverage, i, "d differs for the same c");
    d_of[*ci] = e.d;
  }

  for (std::size_t i = 0; i < cert.family.size(); ++i) {
    const auto& e = cert.family[i];
    if (!in_frobenius_orbit(e.c, e.d)) return fail(CertCheck::kOrbit, i, "d = " + e.d.to_string());
    if (!in_frobenius_orbit(e.c_prime, e.d_prime)) return fail(CertCheck::kOrbit, i, "d' = " + e.d_prime.to_string());
    const RatFunc wden = cert.w + RatFunc::constant(e.d_prime);
    if (wden.is_zero()) return fail(CertCheck::kFamilyW, i, "w + d' = 0");
    const RatFunc wdd = (cert.w + RatFunc::constant(e.d)) / wden;
    const RatFunc tcc = (tau + RatFunc::constant(e.c)) / (tau + RatFunc::constant(e.c_prime));
    if (wdd + tcc != fourth_plus_self(e.u)) return fail(CertCheck::kFamilyW, i, "");
    if (wdd.is_zero()) return fail(CertCheck::kFamilyInvW, i, "w_dd' = 0");
    if (wdd.inverse() + tcc.inverse() != fourth_plus_self(e.v)) return fail(CertCheck::kFamilyInvW, i, "");
  }

  if (cert.w != tau.frobenius(2 * cert.s)) return fail(CertCheck::kClaim, {}, "w != t^(4^s)");
  return VerifyReport::pass();
}

// --------------------------------------------------------------- T1 family

TCertificate build_T1_certificate(const Frame& frame, const RatFunc& x, unsigned s) {
  const RatFunc u = compute_u(x, frame.inverted);
  const RatFunc& tau = frame.tau;
  TCertificate cert{frame, s, x, u.frobenius(2 * s), {}, {}};
  const auto& V = frame.constants;
  for (const auto& c : V) {
    const FieldElem d = c.frobenius(2 * s);
    for (const auto& cp : V) {
      const FieldElem dp = cp.frobenius(2 * s);
      for (int g : {-1, 1}) {
        const RatFunc ug = signed_pow(u, g);
        const RatFunc ucc = (ug + RatFunc::constant(c)) / (ug + RatFunc::constant(cp));
        for (int e : {-1, 1}) {
          const RatFunc a = signed_pow(ucc, e);
          cert.pairs.push_back({c, cp, d, dp, g, e, telescope(a, s), telescope(a * a * tau, s)});
        }
      }
    }
  }
  for (const auto& c : V) {
    const FieldElem d = c.frobenius(2 * s);
    for (int g : {-1, 1}) {
      const RatFunc ugc = signed_pow(u, g) + RatFunc::constant(c);
      for (int e : {-1, 1}) cert.singles.push_back({c, d, g, e, telescope(signed_pow(ugc, e), s)});
    }
  }
  return cert;
}

VerifyReport verify_T1_certificate(const TCertificate& cert) {
  const auto& V = cert.frame.constants;
  const RatFunc& tau = cert.frame.tau;
  if (auto defect = constant_set_defect(V); !defect.empty()) return fail(CertCheck::kConstantSet, {}, defect);

  const std::size_t n = V.size();
  const auto sign_index = [](int x) -> std::optional<std::size_t> {
    if (x == -1) return 0;
    if (x == 1) return 1;
    return std::nullopt;
  };
  if (cert.pairs.size() != 4 * n * n) return fail(CertCheck::kCoverage, {}, "wrong number of pair entries");
  if (cert.singles.size() != 4 * n) return fail(CertCheck::kCoverage, {}, "wrong number of single entries");
  std::vector<std::optional<FieldElem>> d_of(n);
  std::vector<std::vector<std::optional<FieldElem>>> dp_of(n, std::vector<std::optional<FieldElem>>(n));
  std::vector<bool> seen_pair(4 * n * n, false);
  for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
    const auto& e = cert.pairs[i];
    const auto ci = index_of(V, e.c);
    const auto cpi = index_of(V, e.c_prime);
    const auto gi = sign_index(e.g);
    const auto ei = sign_index(e.e);
    if (!ci || !cpi) return fail(CertCheck::kCoverage, i, "constant outside V");
    if (!gi || !ei) return fail(CertCheck::kCoverage, i, "g and e must be -1 or 1");
    const std::size_t key = ((*ci * n + *cpi) * 2 + *gi) * 2 + *ei;
    if (seen_pair[key]) return fail(CertCheck::kCoverage, i, "duplicate index");
    seen_pair[key] = true;
    if (d_of[*ci] && !(*d_of[*ci] == e.d)) return fail(CertCheck::kCoverage, i, "d differs for the same c");
    d_of[*ci] = e.d;
    auto& dp = dp_of[*ci][*cpi];
    if (dp && !(*dp == e.d_prime)) return fail(CertCheck::kCoverage, i, "d' differs for the same (c, c')");
    dp = e.d_prime;
  }
  std::vector<bool> seen_single(4 * n, false);
  for (std::size_t i = 0; i < cert.singles.size(); ++i) {
    const auto& e = cert.singles[i];
    const auto ci = index_of(V, e.c);
    const auto gi = sign_index(e.g);
    const auto ei = sign_index(e.e);
    if (!ci) return fail(CertCheck::kCoverage, i, "constant outside V");
    if (!gi || !ei) return fail(CertCheck::kCoverage, i, "g and e must be -1 or 1");
    const std::size_t key = (*ci * 2 + *gi) * 2 + *ei;
    if (seen_single[key]) return fail(CertCheck::kCoverage, i, "duplicate index");
    seen_single[key] = true;
    if (d_of[*ci] && !(*d_of[*ci] == e.d)) return fail(CertCheck::kCoverage, i, "d differs for the same c");
  }

  const RatFunc u = compute_u(cert.x, cert.frame.inverted);
  const RatFunc tau_s = tau.frobenius(2 * cert.s);
  for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
    const auto& e = cert.pairs[i];
    if (!in_frobenius_orbit(e.c, e.d)) return fail(CertCheck::kOrbit, i, "d = " + e.d.to_string());
    if (!in_frobenius_orbit(e.c_prime, e.d_prime)) return fail(CertCheck::kOrbit, i, "d' = " + e.d_prime.to_string());
    if (e.g == -1 && cert.v.is_zero()) return fail(CertCheck::kSigma, i, "v = 0");
    const RatFunc vg = signed_pow(cert.v, e.g);
    const RatFunc vden = vg + RatFunc::constant(e.d_prime);
    if (vden.is_zero()) return fail(CertCheck::kSigma, i, "v^g + d' = 0");
    const RatFunc vdd = (vg + RatFunc::constant(e.d)) / vden;
    const RatFunc ug = signed_pow(u, e.g);
    const RatFunc ucc = (ug + RatFunc::constant(e.c)) / (ug + RatFunc::constant(e.c_prime));
    if (e.e == -1 && vdd.is_zero()) return fail(CertCheck::kSigma, i, "v_dd'g = 0");
    const RatFunc ve = signed_pow(vdd, e.e);
    const RatFunc ue = signed_pow(ucc, e.e);
    if (ve + ue != fourth_plus_self(e.sigma)) return fail(CertCheck::kSigma, i, "");
    if (ve * ve * tau_s + ue * ue * tau != fourth_plus_self(e.lambda)) return fail(CertCheck::kLambda, i, "");
  }
  for (std::size_t i = 0; i < cert.singles.size(); ++i) {
    const auto& e = cert.singles[i];
    if (!in_frobenius_orbit(e.c, e.d)) return fail(CertCheck::kOrbit, i, "d = " + e.d.to_string());
    if (e.g == -1 && cert.v.is_zero()) return fail(CertCheck::kMu, i, "v = 0");
    const RatFunc vgd = signed_pow(cert.v, e.g) + RatFunc::constant(e.d);
    if (e.e == -1 && vgd.is_zero()) return fail(CertCheck::kMu, i, "v^g + d = 0");
    const RatFunc ugc = signed_pow(u, e.g) + RatFunc::constant(e.c);
    if (signed_pow(ugc, e.e) + signed_pow(vgd, e.e) != fourth_plus_self(e.mu)) return fail(CertCheck::kMu, i, "");
  }

  if (cert.v != u.frobenius(2 * cert.s)) return fail(CertCheck::kClaim, {}, "v != u^(4^s)");
  return VerifyReport::pass();
}

// -------------------------------------------------------------- membership

std::optional<unsigned> member_S1_by_certificate(const RatFunc& w, const Frame& frame) {
  if (w.is_constant()) return std::nullopt;
  const auto k = log4_exact(height(w));
  if (!k) return std::nullopt;
  const SCertificate cert = build_S1_certificate(frame, *k);
  if (cert.w != w) return std::nullopt;
  const VerifyReport report = verify_S1_certificate(cert);
  if (!report.ok) throw InvariantViolation("constructed S1 certificate does not verify: " + report.to_string());
  return k;
}

bool member_S1_by_solver(const RatFunc& w, const Frame& frame) {
  if (w.is_zero()) return false;
  const RatFunc& tau = frame.tau;
  if (!is_AS4_image(w + tau)) return false;
  if (!is_AS4_image(w.inverse() + tau.inverse())) return false;

  const Field& f = w.field();
  const auto& V = frame.constants;
  // For all c there is d in V_c such that for all c' there is d' in V_c'
  // making both family equations solvable.
  const auto family_ok = [&](const FieldElem& c, const FieldElem& d, const FieldElem& cp, const FieldElem& dp) {
    const RatFunc wden = w + RatFunc::constant(dp);
    if (wden.is_zero()) return false;
    const RatFunc wdd = (w + RatFunc::constant(d)) / wden;
    if (wdd.is_zero()) return false;
    const RatFunc tcc = (tau + RatFunc::constant(c)) / (tau + RatFunc::constant(cp));
    return is_AS4_image(wdd + tcc) && is_AS4_image(wdd.inverse() + tcc.inverse());
  };
  for (const auto& c : V) {
    bool some_d = false;
    for (const auto& d : f.frobenius_orbit(c)) {
      bool all_cp = true;
      for (const auto& cp : V) {
        bool some_dp = false;
        for (const auto& dp : f.frobenius_orbit(cp)) {
          if (family_ok(c, d, cp, dp)) {
            some_dp = true;
            break;
          }
        }
        if (!some_dp) {
          all_cp = false;
          break;
        }
      }
      if (all_cp) {
        some_d = true;
        break;
      }
    }
    if (!some_d) return false;
  }
  return true;
}

std::optional<unsigned> member_S(const RatFunc& w, const Frame& frame) {
  if (w.is_zero()) throw DomainError("member_S is undefined for 0");
  std::vector<std::pair<RatFunc, unsigned>> branches{{w, 0}};
  if (w.is_square()) branches.emplace_back(w.sqrt(), 1);
  for (const auto& [z, odd] : branches) {
    const auto by_cert = member_S1_by_certificate(z, frame);
    const bool by_solver = member_S1_by_solver(z, frame);
    if (by_cert.has_value() != by_solver) {
      throw InvariantViolation("S1 decision paths disagree on " + z.to_string() + ": certificate says " +
                               (by_cert ? "member" : "non-member") + ", solver says " +
                               (by_solver ? "member" : "non-member"));
    }
    if (by_cert) return 2 * *by_cert + odd;
  }
  return std::nullopt;
}

std::optional<unsigned> member_T(const RatFunc& x, const RatFunc& w, const Frame& frame) {
  if (w.is_zero()) return std::nullopt;
  const RatFunc u = compute_u(x, frame.inverted);
  const std::uint64_t hu = height(u);
  std::vector<std::pair<RatFunc, unsigned>> branches{{w, 0}};
  if (w.is_square()) branches.emplace_back(w.sqrt(), 1);
  for (const auto& [z, odd] : branches) {
    if (z.is_constant()) continue;
    const std::uint64_t hz = height(z);
    if (hz % hu != 0) continue;
    const auto k = log4_exact(hz / hu);
    if (!k) continue;
    const TCertificate cert = build_T1_certificate(frame, x, *k);
    if (cert.v != z) continue;
    const VerifyReport report = verify_T1_certificate(cert);
    if (!report.ok) throw InvariantViolation("constructed T1 certificate does not verify: " + report.to_string());
    return 2 * *k + odd;
  }
  return std::nullopt;
}

// ---------------------------------------------------- falsification searches

std::optional<RatFunc> search_basecase_counterexample(const Field& field, int height_bound, unsigned s_bound) {
  const RatFunc t = RatFunc::t(field);
  const RatFunc t_inv = t.inverse();
  std::optional<RatFunc> found;
  for_each_element(field, height_bound, [&](const RatFunc& y) {
    if (found) return;
    if (!is_AS4_image(y + t) || !is_AS4_image(y.inverse() + t_inv)) return;
    for (unsigned k = 0; k <= s_bound; ++k) {
      if (y == t.frobenius(2 * k)) return;
    }
    found = y;
  });
  return found;
}

std::vector<std::pair<RatFunc, RatFunc>> lemma_sigma_search(const Field& field, int height_bound) {
  std::vector<RatFunc> elems{RatFunc::zero(field)};
  for_each_element(field, height_bound, [&](const RatFunc& r) { elems.push_back(r); });
  std::unordered_map<std::string, std::vector<std::size_t>> by_image;
  for (std::size_t i = 0; i < elems.size(); ++i) by_image[fourth_plus_self(elems[i]).to_string()].push_back(i);
  const RatFunc t = RatFunc::t(field);
  std::vector<std::pair<RatFunc, RatFunc>> out;
  for (const auto& sigma : elems) {
    const auto it = by_image.find((t * fourth_plus_self(sigma)).to_string());
    if (it == by_image.end()) continue;
    for (std::size_t j : it->second) out.emplace_back(sigma, elems[j]);
  }
  return out;
}

}  // namespace dioph2
