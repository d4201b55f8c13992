// Copyright 2026 The qnca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qnca/polytext.hpp"

#include <cctype>

#include "qnca/error.hpp"

namespace qnca {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const GeneratorResolver& resolve)
      : text_(text), resolve_(resolve) {}

  ParsedSum parse() {
    ParsedSum sum = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return sum;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) +
                     "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static ParsedSum negate(ParsedSum s) {
    for (auto& t : s) t.coeff = -t.coeff;
    return s;
  }

  static ParsedSum product(const ParsedSum& a, const ParsedSum& b) {
    ParsedSum out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a) {
      for (const auto& y : b) {
        ParsedTerm t{x.coeff * y.coeff, x.word};
        t.word.insert(t.word.end(), y.word.begin(), y.word.end());
        if (!t.coeff.is_zero()) out.push_back(std::move(t));
      }
    }
    return out;
  }

  ParsedSum parse_sum() {
    ParsedSum sum;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    for (;;) {
      ParsedSum term = parse_product();
      if (negative) term = negate(std::move(term));
      sum.insert(sum.end(), term.begin(), term.end());
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        break;
      }
    }
    return sum;
  }

  ParsedSum parse_product() {
    ParsedSum acc = parse_power();
    while (accept('*')) acc = product(acc, parse_power());
    return acc;
  }

  long parse_int() {
    skip_space();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long value = std::stol(std::string(text_.substr(start, pos_ - start)));
    return neg ? -value : value;
  }

  ParsedSum parse_power() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ParsedSum inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) {
        long n = parse_int();
        if (n < 0) fail("negative power of a parenthesized expression");
        ParsedSum acc{ParsedTerm{LaurentScalar(1), {}}};
        for (long i = 0; i < n; ++i) acc = product(acc, inner);
        return acc;
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
      }
      Rational value(std::string(text_.substr(start, pos_ - start)));
      if (value.get_den() == 0) fail("zero denominator");
      value.canonicalize();
      if (accept('^')) fail("powers of numbers are not supported");
      return {ParsedTerm{LaurentScalar(value), {}}};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view ident = text_.substr(start, pos_ - start);
      long n = 1;
      if (accept('^')) n = parse_int();
      if (ident == "v" || ident == "q") {
        int per = ident == "q" ? 2 : 1;
        return {ParsedTerm{LaurentScalar(QPower{static_cast<int>(n) * per}), {}}};
      }
      std::optional<int> gen;
      if (resolve_) gen = resolve_(ident);
      if (!gen) fail("unknown identifier '" + std::string(ident) + "'");
      if (n < 0) fail("negative power of a generator");
      ParsedTerm t{LaurentScalar(1), std::vector<int>(static_cast<std::size_t>(n), *gen)};
      return {std::move(t)};
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const GeneratorResolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedSum parse_expression(std::string_view text, const GeneratorResolver& resolve) {
  return ExpressionParser(text, resolve).parse();
}

GeneratorResolver default_resolver(int n, const std::vector<std::string>& names) {
  return [n, names](std::string_view ident) -> std::optional<int> {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == ident) return static_cast<int>(i);
    }
    if (ident.size() >= 2 && ident[0] == 'x') {
      int value = 0;
      for (char ch : ident.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
        value = value * 10 + (ch - '0');
        if (value > n) return std::nullopt;
      }
      if (ident[1] == '0' || value < 1) return std::nullopt;
      return value - 1;
    }
    return std::nullopt;
  };
}

}  // namespace qnca
