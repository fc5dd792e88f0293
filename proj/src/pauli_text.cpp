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

#include <cstdio>
#include <cstdlib>

#include "qecv/pauli.hpp"
#include "text_cursor.hpp"

namespace qecv {

namespace detail {

double Cursor::number() {
  const std::string buf(rest().substr(0, 64));
  char *end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  const std::size_t used = static_cast<std::size_t>(end - buf.c_str());
  if (used == 0) fail("expected number");
  for (std::size_t i = 0; i < used; ++i) get();
  return v;
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_letter(char c) { return c == 'X' || c == 'Y' || c == 'Z'; }

bool coeff_start(const Cursor &c) {
  if (c.peek() != '(') return false;
  std::size_t k = 1;
  while (c.peek(k) == ' ') ++k;
  if (c.peek(k) == '+' || c.peek(k) == '-') ++k;
  while (c.peek(k) == ' ') ++k;
  return is_digit(c.peek(k)) || c.peek(k) == '.' ||
         (c.peek(k) == 'i' && !std::isalnum(static_cast<unsigned char>(c.peek(k + 1))));
}

// (re), (im i), (re+im i), (re-im i)
Complex parse_coeff(Cursor &c) {
  c.get();  // '('
  auto signed_part = [&](double &v, bool &imag) {
    c.skip_ws();
    double sign = 1.0;
    if (c.eat("-")) sign = -1.0;
    else c.eat("+");
    c.skip_ws();
    if (c.peek() == 'i') {
      c.get();
      v = sign;
      imag = true;
      return;
    }
    v = sign * c.number();
    c.skip_ws();
    imag = c.eat("i");
  };
  double a = 0.0;
  bool a_imag = false;
  signed_part(a, a_imag);
  Complex out = a_imag ? Complex(0.0, a) : Complex(a, 0.0);
  c.skip_ws();
  if (c.peek() == '+' || c.peek() == '-') {
    double b = 0.0;
    bool b_imag = false;
    signed_part(b, b_imag);
    if (a_imag || !b_imag) c.fail("malformed complex coefficient");
    out += Complex(0.0, b);
  }
  c.expect(")");
  return out;
}

// Letter atoms such as X3 or I.
SignedPauli parse_atom(Cursor &c) {
  const char l = c.peek();
  if (l == 'I') {
    c.get();
    while (is_digit(c.peek())) c.get();
    return SignedPauli::identity();
  }
  if (!is_letter(l) || !is_digit(c.peek(1))) c.fail("expected Pauli letter");
  c.get();
  const auto q = c.integer();
  const Letter letter = l == 'X' ? Letter::X : l == 'Y' ? Letter::Y : Letter::Z;
  return SignedPauli::single(letter, static_cast<Qubit>(q));
}

StabilizerExpr parse_factor(Cursor &c, bool newlines) {
  c.skip_ws(newlines);
  if (coeff_start(c)) {
    return StabilizerExpr::identity().scaled(parse_coeff(c));
  }
  if (c.peek() == '(') {
    c.get();
    auto e = parse_expr_at(c, true);
    c.expect(")");
    return e;
  }
  if (is_digit(c.peek()) || c.peek() == '.') {
    return StabilizerExpr::identity().scaled(c.number());
  }
  if (c.peek() == 'i' && !std::isalnum(static_cast<unsigned char>(c.peek(1))) &&
      c.peek(1) != '*') {
    c.fail("dangling phase prefix");
  }
  if (c.peek() == 'i' && (c.peek(1) == '*' || c.peek(1) == 'I' ||
                          is_letter(c.peek(1)))) {
    c.get();
    c.eat("*");
    c.skip_ws(newlines);
    return parse_factor(c, newlines).scaled(Complex(0.0, 1.0));
  }
  return StabilizerExpr::from_pauli(parse_atom(c));
}

StabilizerExpr parse_term(Cursor &c, bool newlines) {
  auto acc = parse_factor(c, newlines);
  for (;;) {
    c.skip_ws(newlines);
    if (c.peek() != '*') break;
    c.get();
    acc = expr_mul(acc, parse_factor(c, newlines));
  }
  return acc;
}

std::string fmt_double(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  if (std::strtod(buf, nullptr) != v) std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string letters_text(const SignedPauli &p) {
  if (p.has_identity_letters()) return "I";
  std::string out;
  for (const auto &[q, l] : p.letters()) {
    if (!out.empty()) out += '*';
    out += letter_char(l);
    out += std::to_string(q);
  }
  return out;
}

}  // namespace

bool expr_start(const Cursor &c) {
  const char p = c.peek();
  if (p == '-' || p == '+' || p == '(' || p == '.' || is_digit(p)) return true;
  if (p == 'I') return !std::isalnum(static_cast<unsigned char>(c.peek(1))) ||
                       is_digit(c.peek(1));
  if (is_letter(p)) return is_digit(c.peek(1));
  if (p == 'i') {
    const char n = c.peek(1);
    return n == '*' || n == 'I' || (is_letter(n) && is_digit(c.peek(2)));
  }
  return false;
}

StabilizerExpr parse_expr_at(Cursor &c, bool newlines) {
  c.skip_ws(newlines);
  double sign = 1.0;
  if (c.eat("-")) sign = -1.0;
  else c.eat("+");
  StabilizerExpr acc = parse_term(c, newlines).scaled(sign);
  for (;;) {
    c.skip_ws(newlines);
    const char p = c.peek();
    if (p != '+' && p != '-') break;
    c.get();
    auto t = parse_term(c, newlines);
    acc = expr_add(acc, p == '-' ? t.scaled(-1.0) : t);
  }
  return acc;
}

SignedPauli parse_pauli_at(Cursor &c) {
  const int line = c.line(), col = c.col();
  const auto e = parse_expr_at(c, false);
  auto p = e.as_pauli(1e-12);
  if (!p) throw SyntaxError("expected a signed Pauli string", line, col);
  return *p;
}

}  // namespace detail

using detail::fmt_double;
using detail::letters_text;

std::string format_complex(Complex c) {
  const double re = c.real(), im = c.imag();
  if (im == 0.0) return fmt_double(re);
  if (re == 0.0) return fmt_double(im) + "i";
  return fmt_double(re) + (im < 0 ? "-" : "+") + fmt_double(std::abs(im)) + "i";
}

std::string to_string(const SignedPauli &p) {
  static const char *const kPrefix[] = {"", "i", "-", "-i"};
  return kPrefix[p.phase_exp()] + letters_text(p);
}

std::string to_string(const StabilizerExpr &e) {
  if (e.is_zero()) return "0";
  if (auto p = e.as_pauli(0.0)) return to_string(*p);
  std::string out;
  for (const auto &t : e.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + format_complex(t.coeff) + ")*" + letters_text(t.pauli);
  }
  return out;
}

std::string to_string(const GateApp &g) {
  if (g.kind == GateKind::Expr) return to_string(*g.expr);
  std::string out = gate_name(g.kind);
  for (Qubit q : g.operands) out += " q" + std::to_string(q);
  return out;
}

SignedPauli parse_pauli(std::string_view text) {
  detail::Cursor c(text);
  auto p = detail::parse_pauli_at(c);
  c.skip_ws();
  if (!c.at_end()) c.fail("trailing input");
  return p;
}

StabilizerExpr parse_expr(std::string_view text) {
  detail::Cursor c(text);
  auto e = detail::parse_expr_at(c, true);
  c.skip_ws();
  if (!c.at_end()) c.fail("trailing input");
  return e;
}

}  // namespace qecv
