// Copyright 2026 The qecv Authors
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

#ifndef QECV_SRC_TEXT_CURSOR_HPP
#define QECV_SRC_TEXT_CURSOR_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "qecv/error.hpp"
#include "qecv/pauli.hpp"

namespace qecv::detail {

/// Character cursor shared by the program, expression and assertion parsers.
class Cursor {
 public:
  explicit Cursor(std::string_view text, int line = 1, int col = 1)
      : text_(text), line_(line), col_(col) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  std::size_t pos() const { return pos_; }
  int line() const { return line_; }
  int col() const { return col_; }
  std::string_view rest() const { return text_.substr(pos_); }

  char get() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  /// Skips blanks and `//` comments. Newlines are skipped only when
  /// `newlines` is set.
  void skip_ws(bool newlines = true) {
    while (!at_end()) {
      const char c = peek();
      if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') get();
      } else if (c == ' ' || c == '\t' || c == '\r' ||
                 (newlines && c == '\n')) {
        get();
      } else {
        break;
      }
    }
  }

  bool starts_with(std::string_view s) const {
    return rest().substr(0, s.size()) == s;
  }

  /// Matches `word` as a whole identifier.
  bool starts_with_word(std::string_view word) const {
    if (!starts_with(word)) return false;
    const char next = peek(word.size());
    return !(std::isalnum(static_cast<unsigned char>(next)) || next == '_');
  }

  bool eat(std::string_view s) {
    if (!starts_with(s)) return false;
    for (std::size_t i = 0; i < s.size(); ++i) get();
    return true;
  }

  bool eat_word(std::string_view word) {
    if (!starts_with_word(word)) return false;
    return eat(word);
  }

  void expect(std::string_view s) {
    skip_ws();
    if (!eat(s)) fail("expected '" + std::string(s) + "'");
  }

  std::string ident() {
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_')) {
      out += get();
    }
    if (out.empty()) fail("expected identifier");
    return out;
  }

  std::uint64_t integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected integer");
    }
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(get() - '0');
    }
    return v;
  }

  double number();

  [[noreturn]] void fail(const std::string &msg) const {
    std::string near(rest().substr(0, 16));
    for (char &c : near) {
      if (c == '\n') c = ' ';
    }
    throw SyntaxError(msg + (near.empty() ? "" : " near '" + near + "'"),
                      line_, col_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int col_;
};

// Expression-level parsers operating on a shared cursor (pauli_text.cpp).
SignedPauli parse_pauli_at(Cursor &c);
StabilizerExpr parse_expr_at(Cursor &c, bool newlines = true);
/// True when the cursor sits on something that can start an expression.
bool expr_start(const Cursor &c);

}  // namespace qecv::detail

#endif  // QECV_SRC_TEXT_CURSOR_HPP
