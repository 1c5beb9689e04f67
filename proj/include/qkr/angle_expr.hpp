// Copyright 2026 The qkr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QKR_ANGLE_EXPR_HPP
#define QKR_ANGLE_EXPR_HPP

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qkr {

namespace detail {

/// Recursive-descent evaluator for the tiny angle grammar: numbers, pi,
/// + - * /, unary sign, acos, sqrt, parentheses, and the bare constants
/// sqrt2 / sqrt3 so Eq-style forms like acos(1/sqrt3) type cleanly.
class AngleParser {
 public:
  explicit AngleParser(const std::string& text) : text_(text) {}

  double parse() {
    const double v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  double expr() {
    double v = term();
    for (;;) {
      skip_ws();
      if (consume('+')) v += term();
      else if (consume('-')) v -= term();
      else return v;
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      skip_ws();
      if (consume('*')) v *= unary();
      else if (consume('/')) v /= unary();
      else return v;
    }
  }

  double unary() {
    skip_ws();
    if (consume('-')) return -unary();
    if (consume('+')) return unary();
    return primary();
  }

  double primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      const double v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return word();
    fail(std::string("unexpected character '") + c + "'");
  }

  double number() {
    double v = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{}) fail("bad number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  double word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string w = text_.substr(start, pos_ - start);
    if (w == "pi") return std::numbers::pi;
    if (w == "sqrt2") return std::numbers::sqrt2;
    if (w == "sqrt3") return std::numbers::sqrt3;
    if (w == "sqrt") {
      expect('(');
      const double v = expr();
      expect(')');
      return std::sqrt(v);
    }
    if (w == "acos") {
      expect('(');
      const double v = expr();
      expect(')');
      return std::acos(v);
    }
    fail("unknown name '" + w + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("angle expression \"" + text_ + "\" at position " +
                                std::to_string(pos_) + ": " + why);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Evaluates an angle expression such as "pi/4", "11*pi/6", "acos(1/sqrt3)"
/// or a plain radian literal. Throws std::invalid_argument on bad syntax.
inline double parse_angle(const std::string& text) { return detail::AngleParser(text).parse(); }

}  // namespace qkr

#endif  // QKR_ANGLE_EXPR_HPP
