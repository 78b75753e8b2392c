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

#include "dioph2/expr.hpp"

#include <cctype>
#include <limits>
#include <string>

namespace dioph2 {

namespace {

class ExprParser {
 public:
  ExprParser(const Field& field, std::string_view text) : field_(field), text_(text) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc acc = term();
    while (accept('+')) acc += term();
    return acc;
  }

  RatFunc term() {
    RatFunc acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RatFunc d = factor();
        if (d.is_zero()) throw ParseError("division by zero", 1, at + 1);
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFunc factor() {
    RatFunc base = primary();
    while (accept('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a natural-number exponent after '^'");
      }
      base = base.pow(static_cast<std::int64_t>(natural()));
    }
    return base;
  }

  std::uint64_t natural() {
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::uint64_t{1} << 40)) fail("exponent too large");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  RatFunc primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == 't') {
      ++pos_;
      return RatFunc::t(field_);
    }
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '#') {
      const std::size_t start = pos_;
      ++pos_;
      if (pos_ >= text_.size() || (text_[pos_] != 'x' && text_[pos_] != 'X')) fail("expected 'x' after '#'");
      ++pos_;
      const std::size_t digits = pos_;
      std::uint64_t v = 0;
      while (pos_ < text_.size() && std::isxdigit(static_cast<unsigned char>(text_[pos_]))) {
        const char h = static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_])));
        v = v * 16 + static_cast<std::uint64_t>(std::isdigit(static_cast<unsigned char>(h)) ? h - '0' : h - 'a' + 10);
        if (v >= field_.size()) {
          pos_ = start;
          fail("constant out of range for GF(2^" + std::to_string(field_.m()) + ")");
        }
        ++pos_;
      }
      if (pos_ == digits) fail("expected hex digits after '#x'");
      return RatFunc::constant(field_.elem(static_cast<std::uint32_t>(v)));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      const std::uint64_t v = natural();
      if (v > 1) {
        pos_ = start;
        fail("integer literal " + std::to_string(v) + " is not a field constant; write constants as #x<hex>");
      }
      return v == 0 ? RatFunc::zero(field_) : RatFunc::one(field_);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Field& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const Field& field, std::string_view text) { return ExprParser(field, text).parse(); }

}  // namespace dioph2
