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

#include "qecv/lang.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qecv/error.hpp"
#include "text_cursor.hpp"

namespace qecv {

UnaryStabExpr UnaryStabExpr::lit(SignedPauli p) {
  if (p.is_identity()) return off();
  return {Kind::Literal, std::move(p), {}};
}

StmtPtr make_stmt(decltype(Stmt::node) node, int line) {
  return std::make_shared<const Stmt>(Stmt{std::move(node), line});
}

StmtPtr make_skip() { return make_stmt(Skip{}); }

StmtPtr make_seq(std::vector<StmtPtr> items) {
  std::vector<StmtPtr> flat;
  for (auto &s : items) {
    if (!s) continue;
    if (const auto *seq = s->as<Seq>()) {
      flat.insert(flat.end(), seq->items.begin(), seq->items.end());
    } else {
      flat.push_back(std::move(s));
    }
  }
  if (flat.empty()) return make_skip();
  if (flat.size() == 1) return flat.front();
  const int line = flat.front()->line;
  return make_stmt(Seq{std::move(flat)}, line);
}

namespace {

bool ptr_equal(const StmtPtr &a, const StmtPtr &b) {
  if (!a || !b) return !a && !b;
  return stmt_equal(*a, *b);
}

}  // namespace

bool stmt_equal(const Stmt &a, const Stmt &b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto &x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T &y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Skip>) {
          return true;
        } else if constexpr (std::is_same_v<T, Init>) {
          return x.qubits == y.qubits;
        } else if constexpr (std::is_same_v<T, Unitary>) {
          return x.gate == y.gate;
        } else if constexpr (std::is_same_v<T, SAssign>) {
          return x.var == y.var && x.rhs == y.rhs;
        } else if constexpr (std::is_same_v<T, Seq>) {
          if (x.items.size() != y.items.size()) return false;
          for (std::size_t i = 0; i < x.items.size(); ++i) {
            if (!ptr_equal(x.items[i], y.items[i])) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, IfM>) {
          return x.var == y.var && x.qubits == y.qubits &&
                 ptr_equal(x.then_branch, y.then_branch) &&
                 ptr_equal(x.else_branch, y.else_branch);
        } else if constexpr (std::is_same_v<T, WhileM>) {
          return x.var == y.var && x.qubits == y.qubits &&
                 x.label == y.label && ptr_equal(x.body, y.body);
        } else {
          return x.vars == y.vars && x.site == y.site;
        }
      },
      a.node);
}

bool ProgramUnit::declares(const std::string &svar) const {
  return std::find(svars.begin(), svars.end(), svar) != svars.end();
}

bool program_equal(const ProgramUnit &a, const ProgramUnit &b) {
  return a.name == b.name && a.n_qubits == b.n_qubits && a.svars == b.svars &&
         a.decoder_bindings == b.decoder_bindings && ptr_equal(a.body, b.body);
}

void visit_stmts(const Stmt &s, const std::function<void(const Stmt &)> &f) {
  f(s);
  if (const auto *seq = s.as<Seq>()) {
    for (const auto &c : seq->items) visit_stmts(*c, f);
  } else if (const auto *ifm = s.as<IfM>()) {
    visit_stmts(*ifm->then_branch, f);
    if (ifm->else_branch) visit_stmts(*ifm->else_branch, f);
  } else if (const auto *w = s.as<WhileM>()) {
    visit_stmts(*w->body, f);
  }
}

// ---------------------------------------------------------------------------
// Parser

namespace {

using detail::Cursor;

bool is_qubit_token(const Cursor &c) {
  if (c.peek() != 'q') return false;
  std::size_t k = 1;
  if (!std::isdigit(static_cast<unsigned char>(c.peek(k)))) return false;
  while (std::isdigit(static_cast<unsigned char>(c.peek(k)))) ++k;
  const char n = c.peek(k);
  return !(std::isalnum(static_cast<unsigned char>(n)) || n == '_');
}

class BodyParser {
 public:
  BodyParser(Cursor &c, int n_qubits, const std::vector<std::string> &svars)
      : c_(c), n_qubits_(n_qubits), svars_(svars.begin(), svars.end()) {}

  StmtPtr parse_list() {
    std::vector<StmtPtr> items;
    for (;;) {
      skip_separators();
      if (c_.at_end() || at_terminator()) break;
      items.push_back(parse_stmt());
      c_.skip_ws(false);
      if (!(c_.at_end() || c_.peek() == ';' || c_.peek() == '\n' ||
            at_terminator())) {
        c_.fail("expected ';' or newline after statement");
      }
    }
    if (items.empty()) return nullptr;
    return make_seq(std::move(items));
  }

  bool at_terminator() const {
    return c_.starts_with_word("end") || c_.starts_with_word("else") ||
           c_.starts_with_word("done");
  }

 private:
  void skip_separators() {
    for (;;) {
      c_.skip_ws(true);
      if (c_.peek() != ';') break;
      c_.get();
    }
  }

  Qubit parse_qubit() {
    if (!is_qubit_token(c_)) c_.fail("expected qubit name");
    c_.get();
    const auto q = c_.integer();
    if (q >= static_cast<std::uint64_t>(n_qubits_)) {
      throw UndeclaredVariable("q" + std::to_string(q) + " at line " +
                               std::to_string(c_.line()) + " (program has " +
                               std::to_string(n_qubits_) + " qubits)");
    }
    return static_cast<Qubit>(q);
  }

  std::vector<Qubit> parse_qubit_list() {
    std::vector<Qubit> out;
    for (;;) {
      c_.skip_ws(false);
      if (!is_qubit_token(c_)) break;
      out.push_back(parse_qubit());
    }
    return out;
  }

  std::string parse_svar() {
    c_.skip_ws(false);
    const int line = c_.line();
    const auto name = c_.ident();
    if (!svars_.count(name)) {
      throw UndeclaredVariable("stabilizer variable '" + name + "' at line " +
                               std::to_string(line));
    }
    return name;
  }

  // M[s; q...]
  std::pair<std::string, std::vector<Qubit>> parse_measure() {
    c_.skip_ws(false);
    if (!c_.eat("M")) c_.fail("expected M[...]");
    c_.skip_ws(false);
    if (!c_.eat("[")) c_.fail("expected '['");
    auto var = parse_svar();
    std::vector<Qubit> qs;
    c_.skip_ws(false);
    if (c_.eat(";") || c_.eat(",")) qs = parse_qubit_list();
    c_.expect("]");
    return {var, qs};
  }

  StmtPtr parse_stmt() {
    const int line = c_.line();
    if (c_.eat_word("skip")) return make_stmt(Skip{}, line);
    if (c_.eat_word("correct")) {
      c_.expect("(");
      Correct corr;
      for (;;) {
        corr.vars.push_back(parse_svar());
        c_.skip_ws(false);
        if (!c_.eat(",")) break;
      }
      c_.expect(")");
      return make_stmt(std::move(corr), line);
    }
    if (c_.eat_word("if")) {
      auto [var, qs] = parse_measure();
      c_.skip_ws();
      if (!c_.eat_word("then")) c_.fail("expected 'then'");
      auto then_b = parse_list();
      StmtPtr else_b;
      if (c_.eat_word("else")) else_b = parse_list();
      c_.skip_ws();
      if (!c_.eat_word("end")) c_.fail("expected 'end'");
      if (!then_b) then_b = make_stmt(Skip{}, line);
      return make_stmt(IfM{var, qs, then_b, else_b}, line);
    }
    if (c_.eat_word("while")) {
      auto [var, qs] = parse_measure();
      c_.skip_ws();
      std::optional<std::string> label;
      if (c_.eat_word("label")) {
        c_.skip_ws(false);
        label = c_.ident();
        if (!labels_.insert(*label).second) {
          c_.fail("duplicate loop label '" + *label + "'");
        }
        c_.skip_ws();
      }
      if (!c_.eat_word("do")) c_.fail("expected 'do'");
      auto body = parse_list();
      c_.skip_ws();
      if (!c_.eat_word("done")) c_.fail("expected 'done'");
      if (!body) body = make_stmt(Skip{}, line);
      return make_stmt(WhileM{var, qs, body, label}, line);
    }
    if (is_qubit_token(c_)) return parse_quantum_assign(line);
    return parse_sassign(line);
  }

  StmtPtr parse_quantum_assign(int line) {
    auto lhs = parse_qubit_list();
    c_.skip_ws(false);
    if (!c_.eat(":=")) c_.fail("expected ':='");
    c_.skip_ws(false);
    if (c_.eat("|")) {
      std::size_t zeros = 0;
      while (c_.peek() == '0') {
        c_.get();
        ++zeros;
      }
      if (!c_.eat(">")) c_.fail("expected |0> literal");
      if (zeros != 1 && zeros != lhs.size()) {
        throw ArityMismatch("basis literal width " + std::to_string(zeros) +
                            " does not match " + std::to_string(lhs.size()) +
                            " targets at line " + std::to_string(line));
      }
      return make_stmt(Init{lhs}, line);
    }
    // Named gate: a gate name followed by qubit operands.
    const auto rest = c_.rest();
    std::size_t k = 0;
    while (k < rest.size() && std::isalnum(static_cast<unsigned char>(rest[k]))) ++k;
    const auto word = rest.substr(0, k);
    std::size_t j = k;
    while (j < rest.size() && (rest[j] == ' ' || rest[j] == '\t')) ++j;
    if (auto kind = gate_from_name(word);
        kind && j > k && j < rest.size() && rest[j] == 'q') {
      c_.eat(word);
      auto ops = parse_qubit_list();
      if (ops != lhs) {
        throw ArityMismatch("gate operands must repeat the assignment targets "
                            "at line " + std::to_string(line));
      }
      return make_stmt(Unitary{GateApp::named(*kind, ops)}, line);
    }
    auto e = detail::parse_expr_at(c_, false);
    for (Qubit q : e.support()) {
      if (q >= static_cast<Qubit>(n_qubits_)) {
        throw UndeclaredVariable("q" + std::to_string(q) + " in inline unitary");
      }
    }
    return make_stmt(Unitary{GateApp::inline_expr(std::move(e), lhs)}, line);
  }

  StmtPtr parse_sassign(int line) {
    auto var = parse_svar();
    c_.skip_ws(false);
    if (!c_.eat(":=")) c_.fail("expected ':='");
    c_.skip_ws(false);
    // +s / -s / s for a declared variable.
    {
      std::size_t k = 0;
      int sign = 1;
      if (c_.peek() == '-' || c_.peek() == '+') {
        sign = c_.peek() == '-' ? -1 : 1;
        ++k;
      }
      while (c_.peek(k) == ' ') ++k;
      std::size_t e = k;
      while (std::isalnum(static_cast<unsigned char>(c_.peek(e))) ||
             c_.peek(e) == '_') {
        ++e;
      }
      const std::string word(c_.rest().substr(k, e - k));
      if (svars_.count(word)) {
        for (std::size_t i = 0; i < e; ++i) c_.get();
        return make_stmt(SAssign{var, sign < 0 ? UnaryStabExpr::neg(word)
                                               : UnaryStabExpr::pos(word)},
                         line);
      }
    }
    if (!detail::expr_start(c_)) c_.fail("expected stabilizer expression");
    auto p = detail::parse_pauli_at(c_);
    for (Qubit q : p.support()) {
      if (q >= static_cast<Qubit>(n_qubits_)) {
        throw UndeclaredVariable("q" + std::to_string(q) + " in assignment to " + var);
      }
    }
    return make_stmt(SAssign{var, UnaryStabExpr::lit(p)}, line);
  }

  Cursor &c_;
  int n_qubits_;
  std::set<std::string> svars_;
  std::set<std::string> labels_;
};

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ' ' || ch == ',' || ch == '\t' || ch == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

StmtPtr parse_body_at(Cursor &c, int n_qubits,
                      const std::vector<std::string> &svars) {
  BodyParser bp(c, n_qubits, svars);
  auto body = bp.parse_list();
  c.skip_ws();
  if (!c.at_end()) c.fail("unexpected input");
  return body ? body : make_skip();
}

}  // namespace

StmtPtr parse_body(std::string_view text, int n_qubits,
                   const std::vector<std::string> &svars) {
  Cursor c(text);
  return parse_body_at(c, n_qubits, svars);
}

ProgramUnit parse_program(std::string_view text) {
  ProgramUnit p;
  bool have_qubits = false;
  std::size_t pos = 0;
  int line = 1;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos
                                          ? std::string_view::npos
                                          : nl - pos);
    std::string_view content = raw;
    if (auto cm = content.find("//"); cm != std::string_view::npos) {
      content = content.substr(0, cm);
    }
    const std::string t = trim(content);
    const auto colon = t.find(':');
    const bool header = colon != std::string::npos &&
                        (colon + 1 >= t.size() || t[colon + 1] != '=');
    if (!t.empty() && !header) break;
    if (!t.empty()) {
      const std::string key = trim(t.substr(0, colon));
      const std::string val = trim(t.substr(colon + 1));
      if (key == "name") {
        p.name = val;
      } else if (key == "qubits") {
        try {
          p.n_qubits = std::stoi(val);
        } catch (const std::exception &) {
          throw SyntaxError("bad qubit count '" + val + "'", line, 1);
        }
        have_qubits = true;
      } else if (key == "svars") {
        p.svars = split_words(val);
      } else if (key.rfind("decoder", 0) == 0) {
        const std::string site = trim(key.substr(7));
        try {
          p.decoder_bindings[std::stoi(site)] = val;
        } catch (const std::exception &) {
          throw SyntaxError("bad decoder site '" + site + "'", line, 1);
        }
      } else {
        throw SyntaxError("unknown header key '" + key + "'", line, 1);
      }
    }
    if (nl == std::string_view::npos) {
      pos = text.size();
      break;
    }
    pos = nl + 1;
    ++line;
  }
  if (!have_qubits) throw SyntaxError("missing 'qubits:' header", line, 1);
  Cursor c(text.substr(pos), line, 1);
  p.body = parse_body_at(c, p.n_qubits, p.svars);
  number_correct_sites(p);
  return p;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

std::string qubit_list(const std::vector<Qubit> &qs) {
  std::string out;
  for (Qubit q : qs) {
    if (!out.empty()) out += ' ';
    out += "q" + std::to_string(q);
  }
  return out;
}

std::string measure_text(const std::string &var, const std::vector<Qubit> &qs) {
  return "M[" + var + (qs.empty() ? "" : "; " + qubit_list(qs)) + "]";
}

void print_into(std::ostringstream &os, const Stmt &s, int indent) {
  const std::string pad(indent, ' ');
  std::visit(
      [&](const auto &x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Skip>) {
          os << pad << "skip\n";
        } else if constexpr (std::is_same_v<T, Init>) {
          os << pad << qubit_list(x.qubits) << " := |0>\n";
        } else if constexpr (std::is_same_v<T, Unitary>) {
          os << pad << qubit_list(x.gate.operands) << " := " << to_string(x.gate)
             << "\n";
        } else if constexpr (std::is_same_v<T, SAssign>) {
          os << pad << x.var << " := ";
          switch (x.rhs.kind) {
            case UnaryStabExpr::Kind::Literal: os << to_string(x.rhs.literal); break;
            case UnaryStabExpr::Kind::PosVar: os << x.rhs.var; break;
            case UnaryStabExpr::Kind::NegVar: os << "-" << x.rhs.var; break;
            case UnaryStabExpr::Kind::IdentityOff: os << "I"; break;
          }
          os << "\n";
        } else if constexpr (std::is_same_v<T, Seq>) {
          for (const auto &c : x.items) print_into(os, *c, indent);
        } else if constexpr (std::is_same_v<T, IfM>) {
          os << pad << "if " << measure_text(x.var, x.qubits) << " then\n";
          print_into(os, *x.then_branch, indent + 2);
          if (x.else_branch) {
            os << pad << "else\n";
            print_into(os, *x.else_branch, indent + 2);
          }
          os << pad << "end\n";
        } else if constexpr (std::is_same_v<T, WhileM>) {
          os << pad << "while " << measure_text(x.var, x.qubits);
          if (x.label) os << " label " << *x.label;
          os << " do\n";
          print_into(os, *x.body, indent + 2);
          os << pad << "done\n";
        } else {
          os << pad << "correct(";
          for (std::size_t i = 0; i < x.vars.size(); ++i) {
            os << (i ? ", " : "") << x.vars[i];
          }
          os << ")\n";
        }
      },
      s.node);
}

}  // namespace

std::string print_stmt(const Stmt &s, int indent) {
  std::ostringstream os;
  print_into(os, s, indent);
  return os.str();
}

std::string print_program(const ProgramUnit &p) {
  std::ostringstream os;
  if (!p.name.empty()) os << "name: " << p.name << "\n";
  os << "qubits: " << p.n_qubits << "\n";
  os << "svars:";
  for (const auto &v : p.svars) os << " " << v;
  os << "\n";
  for (const auto &[site, name] : p.decoder_bindings) {
    os << "decoder " << site << ": " << name << "\n";
  }
  os << "\n";
  if (p.body) print_into(os, *p.body, 0);
  return os.str();
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

/// Rebuilds `s` bottom-up, letting `leaf` replace Correct statements.
StmtPtr rewrite(const StmtPtr &s,
                const std::function<StmtPtr(const StmtPtr &)> &on_correct) {
  if (!s) return s;
  if (s->is<Correct>()) return on_correct(s);
  if (const auto *seq = s->as<Seq>()) {
    std::vector<StmtPtr> items;
    items.reserve(seq->items.size());
    for (const auto &c : seq->items) items.push_back(rewrite(c, on_correct));
    return make_seq(std::move(items));
  }
  if (const auto *ifm = s->as<IfM>()) {
    return make_stmt(IfM{ifm->var, ifm->qubits, rewrite(ifm->then_branch, on_correct),
                         rewrite(ifm->else_branch, on_correct)},
                     s->line);
  }
  if (const auto *w = s->as<WhileM>()) {
    return make_stmt(WhileM{w->var, w->qubits, rewrite(w->body, on_correct), w->label},
                     s->line);
  }
  return s;
}

StmtPtr rename_svars(const StmtPtr &s,
                     const std::map<std::string, std::string> &ren) {
  if (!s) return s;
  auto r = [&](const std::string &v) {
    auto it = ren.find(v);
    return it == ren.end() ? v : it->second;
  };
  return std::visit(
      [&](const auto &x) -> StmtPtr {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SAssign>) {
          UnaryStabExpr rhs = x.rhs;
          if (!rhs.var.empty()) rhs.var = r(rhs.var);
          return make_stmt(SAssign{r(x.var), rhs}, s->line);
        } else if constexpr (std::is_same_v<T, Seq>) {
          std::vector<StmtPtr> items;
          for (const auto &c : x.items) items.push_back(rename_svars(c, ren));
          return make_seq(std::move(items));
        } else if constexpr (std::is_same_v<T, IfM>) {
          return make_stmt(IfM{r(x.var), x.qubits, rename_svars(x.then_branch, ren),
                               rename_svars(x.else_branch, ren)},
                           s->line);
        } else if constexpr (std::is_same_v<T, WhileM>) {
          return make_stmt(WhileM{r(x.var), x.qubits, rename_svars(x.body, ren), x.label},
                           s->line);
        } else if constexpr (std::is_same_v<T, Correct>) {
          Correct c = x;
          for (auto &v : c.vars) v = r(v);
          return make_stmt(std::move(c), s->line);
        } else {
          return s;
        }
      },
      s->node);
}

}  // namespace

int number_correct_sites(ProgramUnit &p) {
  int next = 0;
  std::map<int, std::string> bindings;
  p.body = rewrite(p.body, [&](const StmtPtr &s) {
    Correct c = *s->as<Correct>();
    const int old = c.site;
    c.site = next++;
    // Fresh parses carry site -1 and already use pre-order keys.
    const int key = old < 0 ? c.site : old;
    if (auto it = p.decoder_bindings.find(key); it != p.decoder_bindings.end()) {
      bindings[c.site] = it->second;
    }
    return make_stmt(std::move(c), s->line);
  });
  p.decoder_bindings = std::move(bindings);
  return next;
}

ProgramUnit expand_correct(const ProgramUnit &p,
                           const std::map<std::string, ProgramUnit> &registry,
                           bool allow_unbound) {
  ProgramUnit out = p;
  std::map<int, std::string> kept;
  out.body = rewrite(p.body, [&](const StmtPtr &s) -> StmtPtr {
    const auto &c = *s->as<Correct>();
    auto it = p.decoder_bindings.find(c.site);
    if (it == p.decoder_bindings.end()) {
      if (!allow_unbound) {
        throw MissingDecoder("correct site " + std::to_string(c.site) +
                             " has no decoder binding");
      }
      kept[c.site] = kAxiomatic;
      return s;
    }
    if (it->second == kAxiomatic || it->second == kLookup) {
      kept[c.site] = it->second;
      return s;
    }
    auto dec = registry.find(it->second);
    if (dec == registry.end()) {
      throw MissingDecoder("decoder '" + it->second + "' is not registered");
    }
    if (dec->second.svars.size() != c.vars.size()) {
      throw ArityMismatch("decoder '" + it->second + "' expects " +
                          std::to_string(dec->second.svars.size()) +
                          " stabilizer variables");
    }
    std::map<std::string, std::string> ren;
    for (std::size_t i = 0; i < c.vars.size(); ++i) {
      ren[dec->second.svars[i]] = c.vars[i];
    }
    return rename_svars(dec->second.body, ren);
  });
  out.decoder_bindings = std::move(kept);
  number_correct_sites(out);
  return out;
}

ProgramStats program_stats(const ProgramUnit &p) {
  ProgramStats st;
  st.svar_count = static_cast<int>(p.svars.size());
  st.qubit_count = p.n_qubits;
  std::function<void(const Stmt &, int)> walk = [&](const Stmt &s, int depth) {
    if (const auto *seq = s.as<Seq>()) {
      for (const auto &c : seq->items) walk(*c, depth);
      return;
    }
    ++st.statement_count;
    if (const auto *ifm = s.as<IfM>()) {
      st.max_if_depth = std::max(st.max_if_depth, depth + 1);
      walk(*ifm->then_branch, depth + 1);
      if (ifm->else_branch) walk(*ifm->else_branch, depth + 1);
    } else if (const auto *w = s.as<WhileM>()) {
      st.max_if_depth = std::max(st.max_if_depth, depth + 1);
      walk(*w->body, depth + 1);
    } else if (s.is<Correct>()) {
      ++st.correct_count;
    }
  };
  if (p.body) walk(*p.body, 0);
  return st;
}

}  // namespace qecv
