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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dioph2/ratfunc.hpp"

namespace dioph2 {

/// The uniformizer tau (t, or 1/t when inverted) and the constant set used
/// with it. The inverted frame uses W = {1/c : c in V, c != 0} ∪ {0}.
struct Frame {
  RatFunc tau;
  std::vector<FieldElem> constants;
  bool inverted = false;

  static Frame standard(const Field& field, std::vector<FieldElem> V);
  static Frame inverted_from(const Field& field, const std::vector<FieldElem>& V);
  const Field& field() const { return tau.field(); }
};

/// Empty string if V contains 0, excludes 1, and its elements lie in pairwise
/// distinct Frobenius orbits; otherwise a description of the first defect.
std::string constant_set_defect(const std::vector<FieldElem>& V);

/// Sum of a^(4^i) for i < s; zero when s = 0. T^4 + T = a^(4^s) + a.
RatFunc telescope(const RatFunc& a, unsigned s);

/// (x^2 + tau^2 + tau)/(x^2 + tau) with tau = t, or 1/t when inverted.
/// Throws DomainError when x^2 = tau.
RatFunc compute_u(const RatFunc& x, bool inverted = false);

/// (y^2 + tau^(2^(s+1)) + tau^(2^s))/(y^2 + tau^(2^s)). Throws DomainError
/// when y^2 = tau^(2^s).
RatFunc compute_v(const RatFunc& y, unsigned s, bool inverted = false);

/// r with b = a^(2^r). A nonconstant a needs height(b)/height(a) = 2^r, so
/// the search is complete; a constant a searches its Frobenius orbit.
std::optional<unsigned> is_2power_of(const RatFunc& a, const RatFunc& b);

/// Largest s for which y = x^(2^s) is possible on height grounds.
unsigned power_relation_search_bound(const RatFunc& x, const RatFunc& y);

/// The s with v = u^(2^r) and ṽ = ũ^(2^j) for some r, j, searched up to
/// power_relation_search_bound. Values of s where v or ṽ is undefined are
/// skipped; y = x^(2^s) is impossible there. Throws InvariantViolation if the
/// result disagrees with direct Frobenius iteration.
std::optional<unsigned> check_power_relation(const RatFunc& x, const RatFunc& y);

/// y recovered from v = u^(2^r): (x^(2^r) t^(2^s) + t^(2^(r-1)+2^s) + t^(2^r+2^(s-1))) t^(-2^r).
/// Requires r, s >= 1.
RatFunc y_from_forward_exponent(const RatFunc& x, unsigned r, unsigned s);

/// y recovered from ṽ = ũ^(2^j): (x^(2^j) t^(-2^s) + t^(-2^s-2^(j-1)) + t^(-2^j-2^(s-1))) t^(2^j).
/// Requires j, s >= 1.
RatFunc y_from_inverted_exponent(const RatFunc& x, unsigned j, unsigned s);

/// Both sides of the exponent-consistency identity obtained by eliminating y:
/// t^(2^s-2^r) x^(2^r) + t^(2^j-2^s) x^(2^j)
///   = t^(2^s-2^(r-1)) + t^(2^(s-1)) + t^(2^(j-1)-2^s) + t^(-2^(s-1)).
/// Requires r, j, s >= 1.
std::pair<RatFunc, RatFunc> exponent_consistency(const RatFunc& x, unsigned r, unsigned j, unsigned s);

/// The equation a certificate check failed on.
enum class CertCheck {
  kConstantSet,   // V malformed
  kCoverage,      // missing, duplicate or inconsistent family entries
  kOrbit,         // d not in V_c (or d' not in V_c')
  kWPlusTau,      // w + tau = u^4 + u
  kInvWPlusTau,   // 1/w + 1/tau = v^4 + v
  kFamilyW,       // w_dd' + tau_cc' = u_dd'^4 + u_dd'
  kFamilyInvW,    // 1/w_dd' + 1/tau_cc' = v_dd'^4 + v_dd'
  kSigma,         // v_dd'g^e + u_cc'g^e = sigma^4 + sigma
  kLambda,        // v_dd'g^2e tau^(4^s) + u_cc'g^2e tau = lambda^4 + lambda
  kMu,            // (u^g + c)^e + (v^g + d)^e = mu^4 + mu
  kClaim,         // w = tau^(4^s), resp. v = u^(4^s)
};

std::string to_string(CertCheck check);

struct VerifyReport {
  bool ok = true;
  CertCheck check = CertCheck::kClaim;
  std::optional<std::size_t> entry;  // index into the relevant entry list
  std::string detail;

  static VerifyReport pass() { return {}; }
  std::string to_string() const;
};

struct SFamilyEntry {
  FieldElem c, c_prime, d, d_prime;
  RatFunc u, v;
};

struct SCertificate {
  Frame frame;
  unsigned s = 0;
  RatFunc w, u, v;
  std::vector<SFamilyEntry> family;  // ordered pairs (c, c') in V x V
};

struct TPairEntry {
  FieldElem c, c_prime, d, d_prime;
  int g = 1;
  int e = 1;
  RatFunc sigma, lambda;
};

struct TSingleEntry {
  FieldElem c, d;
  int g = 1;
  int e = 1;
  RatFunc mu;
};

struct TCertificate {
  Frame frame;
  unsigned s = 0;
  RatFunc x, v;
  std::vector<TPairEntry> pairs;      // (c, c', g, e)
  std::vector<TSingleEntry> singles;  // (c, g, e)
};

/// Witnesses for w = tau^(4^s): u, v telescope tau and 1/tau; family entries
/// use d = c^(4^s), d' = c'^(4^s).
SCertificate build_S1_certificate(const Frame& frame, unsigned s);
VerifyReport verify_S1_certificate(const SCertificate& cert);

/// Witnesses for v = u^(4^s), u = compute_u(x). A single s is shared by all
/// indices.
TCertificate build_T1_certificate(const Frame& frame, const RatFunc& x, unsigned s);
VerifyReport verify_T1_certificate(const TCertificate& cert);

/// k with w = tau^(4^k), decided by building and verifying a certificate.
std::optional<unsigned> member_S1_by_certificate(const RatFunc& w, const Frame& frame);

/// Whether w satisfies the S1 equations with some witnesses, decided by the
/// Artin-Schreier solver alone (no certificate construction).
bool member_S1_by_solver(const RatFunc& w, const Frame& frame);

/// s with w = tau^(2^s). Checks w and its square root against S1 along both
/// decision paths; throws InvariantViolation if they disagree.
std::optional<unsigned> member_S(const RatFunc& w, const Frame& frame);

/// s with w = u^(2^s), u = compute_u(x, frame.inverted), via T1 membership of
/// w or of its square root.
std::optional<unsigned> member_T(const RatFunc& x, const RatFunc& w, const Frame& frame);

/// First y of height <= height_bound (over field) for which y + t and
/// 1/y + 1/t are both images of z -> z^4 + z but y != t^(4^k) for every
/// k <= s_bound.
std::optional<RatFunc> search_basecase_counterexample(const Field& field, int height_bound, unsigned s_bound);

/// All (sigma, mu) with heights <= height_bound (zero included) such that
/// t (sigma^4 + sigma) = mu^4 + mu, ordered by sigma then mu.
std::vector<std::pair<RatFunc, RatFunc>> lemma_sigma_search(const Field& field, int height_bound);

}  // namespace dioph2
