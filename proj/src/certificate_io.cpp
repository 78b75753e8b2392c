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

#include "dioph2/certificate_io.hpp"

#include <cstdio>

#include "dioph2/error.hpp"
#include "dioph2/expr.hpp"

namespace dioph2 {

namespace {

using nlohmann::json;

std::string hex(std::uint32_t v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", v);
  return buf;
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("certificate is missing '") + key + "'");
  return j.at(key);
}

std::string need_string(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_string()) throw DomainError(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::int64_t need_int(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer()) throw DomainError(std::string("'") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

RatFunc need_expr(const Field& f, const json& j, const char* key) { return parse_ratfunc(f, need_string(j, key)); }

FieldElem need_const(const Field& f, const json& j, const char* key) {
  return parse_field_elem(f, need_string(j, key));
}

int need_sign(const json& j, const char* key) {
  const auto v = need_int(j, key);
  if (v != 1 && v != -1) throw DomainError(std::string("'") + key + "' must be -1 or 1");
  return static_cast<int>(v);
}

json frame_to_json(const Frame& frame) {
  json cs = json::array();
  for (const auto& c : frame.constants) cs.push_back(c.to_string());
  return {{"tau", frame.inverted ? "1/t" : "t"}, {"V", cs}};
}

Frame frame_from_json(const Field& f, const json& j) {
  const std::string tau = need_string(j, "tau");
  if (tau != "t" && tau != "1/t") throw DomainError("'tau' must be \"t\" or \"1/t\"");
  const json& cs = need(j, "V");
  if (!cs.is_array()) throw DomainError("'V' must be an array");
  std::vector<FieldElem> V;
  for (const auto& c : cs) {
    if (!c.is_string()) throw DomainError("constants must be strings");
    V.push_back(parse_field_elem(f, c.get<std::string>()));
  }
  const bool inverted = tau == "1/t";
  const RatFunc t = RatFunc::t(f);
  return Frame{inverted ? t.inverse() : t, std::move(V), inverted};
}

unsigned need_s(const json& j) {
  const auto s = need_int(j, "s");
  if (s < 0 || s > 16) throw DomainError("'s' must be in 0..16");
  return static_cast<unsigned>(s);
}

}  // namespace

json field_to_json(const Field& field) { return {{"m", field.m()}, {"modulus", hex(field.modulus())}}; }

const Field& field_from_json(const json& j) {
  const auto m = need_int(j, "m");
  const std::string mod = need_string(j, "modulus");
  if (m < 1 || m > static_cast<std::int64_t>(kMaxExtensionDegree)) throw DomainError("'m' out of range");
  std::size_t pos = 0;
  unsigned long bits = 0;
  try {
    bits = std::stoul(mod, &pos, 16);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != mod.size() || pos == 0) throw DomainError("'modulus' must be a hex string");
  return Field::get(FieldSpec{static_cast<unsigned>(m), static_cast<std::uint32_t>(bits)});
}

json certificate_to_json(const SCertificate& cert) {
  json family = json::array();
  for (const auto& e : cert.family) {
    family.push_back({{"c", e.c.to_string()},
                      {"c_prime", e.c_prime.to_string()},
                      {"d", e.d.to_string()},
                      {"d_prime", e.d_prime.to_string()},
                      {"u", e.u.to_string()},
                      {"v", e.v.to_string()}});
  }
  return {{"kind", "S1"},
          {"field", field_to_json(cert.w.field())},
          {"frame", frame_to_json(cert.frame)},
          {"s", cert.s},
          {"w", cert.w.to_string()},
          {"u", cert.u.to_string()},
          {"v", cert.v.to_string()},
          {"family", family}};
}

json certificate_to_json(const TCertificate& cert) {
  json pairs = json::array();
  for (const auto& e : cert.pairs) {
    pairs.push_back({{"c", e.c.to_string()},
                     {"c_prime", e.c_prime.to_string()},
                     {"d", e.d.to_string()},
                     {"d_prime", e.d_prime.to_string()},
                     {"g", e.g},
                     {"e", e.e},
                     {"sigma", e.sigma.to_string()},
                     {"lambda", e.lambda.to_string()}});
  }
  json singles = json::array();
  for (const auto& e : cert.singles) {
    singles.push_back({{"c", e.c.to_string()},
                       {"d", e.d.to_string()},
                       {"g", e.g},
                       {"e", e.e},
                       {"mu", e.mu.to_string()}});
  }
  return {{"kind", "T1"},
          {"field", field_to_json(cert.x.field())},
          {"frame", frame_to_json(cert.frame)},
          {"s", cert.s},
          {"x", cert.x.to_string()},
          {"v", cert.v.to_string()},
          {"pairs", pairs},
          {"singles", singles}};
}

Certificate certificate_from_json(const json& j) {
  const std::string kind = need_string(j, "kind");
  const Field& f = field_from_json(need(j, "field"));
  Frame frame = frame_from_json(f, need(j, "frame"));
  const unsigned s = need_s(j);
  if (kind == "S1") {
    SCertificate cert{std::move(frame), s, need_expr(f, j, "w"), need_expr(f, j, "u"), need_expr(f, j, "v"), {}};
    const json& family = need(j, "family");
    if (!family.is_array()) throw DomainError("'family' must be an array");
    for (const auto& e : family) {
      cert.family.push_back({need_const(f, e, "c"), need_const(f, e, "c_prime"), need_const(f, e, "d"),
                             need_const(f, e, "d_prime"), need_expr(f, e, "u"), need_expr(f, e, "v")});
    }
    return cert;
  }
  if (kind == "T1") {
    TCertificate cert{std::move(frame), s, need_expr(f, j, "x"), need_expr(f, j, "v"), {}, {}};
    const json& pairs = need(j, "pairs");
    const json& singles = need(j, "singles");
    if (!pairs.is_array() || !singles.is_array()) throw DomainError("'pairs' and 'singles' must be arrays");
    for (const auto& e : pairs) {
      cert.pairs.push_back({need_const(f, e, "c"), need_const(f, e, "c_prime"), need_const(f, e, "d"),
                            need_const(f, e, "d_prime"), need_sign(e, "g"), need_sign(e, "e"),
                            need_expr(f, e, "sigma"), need_expr(f, e, "lambda")});
    }
    for (const auto& e : singles) {
      cert.singles.push_back({need_const(f, e, "c"), need_const(f, e, "d"), need_sign(e, "g"), need_sign(e, "e"),
                              need_expr(f, e, "mu")});
    }
    return cert;
  }
  throw DomainError("unknown certificate kind '" + kind + "'");
}

}  // namespace dioph2
