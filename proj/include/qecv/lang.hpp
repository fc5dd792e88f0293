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

#ifndef QECV_LANG_HPP
#define QECV_LANG_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qecv/pauli.hpp"

namespace qecv {

/// Right-hand side of a stabilizer assignment: a signed Pauli literal, +s or
/// -s for a variable s, or I (which turns the variable off).
struct UnaryStabExpr {
  enum class Kind { Literal, PosVar, NegVar, IdentityOff };
  Kind kind = Kind::IdentityOff;
  SignedPauli literal;
  std::string var;

  static UnaryStabExpr lit(SignedPauli p);
  static UnaryStabExpr pos(std::string v) { return {Kind::PosVar, {}, std::move(v)}; }
  static UnaryStabExpr neg(std::string v) { return {Kind::NegVar, {}, std::move(v)}; }
  static UnaryStabExpr off() { return {}; }

  bool operator==(const UnaryStabExpr &o) const {
    return kind == o.kind && literal == o.literal && var == o.var;
  }
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Skip {};
struct Init {
  std::vector<Qubit> qubits;
};
struct Unitary {
  GateApp gate;
};
struct SAssign {
  std::string var;
  UnaryStabExpr rhs;
};
struct Seq {
  std::vector<StmtPtr> items;
};
struct IfM {
  std::string var;
  std::vector<Qubit> qubits;
  StmtPtr then_branch;
  StmtPtr else_branch;  // null when the source has no else part
};
struct WhileM {
  std::string var;
  std::vector<Qubit> qubits;
  StmtPtr body;
  std::optional<std::string> label;
};
struct Correct {
  std::vector<std::string> vars;
  int site = -1;  // pre-order index among Correct statements
};

struct Stmt {
  std::variant<Skip, Init, Unitary, SAssign, Seq, IfM, WhileM, Correct> node;
  int line = 0;

  template <class T>
  const T *as() const { return std::get_if<T>(&node); }
  template <class T>
  bool is() const { return std::holds_alternative<T>(node); }
};

StmtPtr make_stmt(decltype(Stmt::node) node, int line = 0);
StmtPtr make_skip();
StmtPtr make_seq(std::vector<StmtPtr> items);

/// Deep structural equality; source lines are ignored.
bool stmt_equal(const Stmt &a, const Stmt &b);

/// Decoder binding for a Correct site.
inline constexpr const char *kAxiomatic = "axiomatic";
inline constexpr const char *kLookup = "lookup";

struct ProgramUnit {
  std::string name;
  int n_qubits = 0;
  std::vector<std::string> svars;
  StmtPtr body;
  /// Site index -> "axiomatic", "lookup" or a registry decoder name.
  std::map<int, std::string> decoder_bindings;

  bool declares(const std::string &svar) const;
};

bool program_equal(const ProgramUnit &a, const ProgramUnit &b);

/// Parses a `.qecv` unit: `name:`, `qubits:`, `svars:` and optional
/// `decoder <site>: <name>` header lines, followed by the body.
ProgramUnit parse_program(std::string_view text);
/// Parses a bare statement list against the given declarations.
StmtPtr parse_body(std::string_view text, int n_qubits,
                   const std::vector<std::string> &svars);

std::string print_program(const ProgramUnit &p);
std::string print_stmt(const Stmt &s, int indent = 0);

/// Renumbers Correct sites in pre-order. Returns the number of sites.
int number_correct_sites(ProgramUnit &p);

/// Replaces every Correct bound to a registry decoder by the decoder body
/// with its formal stabilizer variables renamed to the site's arguments.
/// Sites bound to "axiomatic" or "lookup" are left in place; an unbound
/// site throws MissingDecoder unless `allow_unbound` is set, in which case
/// it is tagged axiomatic.
ProgramUnit expand_correct(const ProgramUnit &p,
                           const std::map<std::string, ProgramUnit> &registry,
                           bool allow_unbound = true);

struct ProgramStats {
  int statement_count = 0;
  int svar_count = 0;
  int qubit_count = 0;
  int max_if_depth = 0;
  int correct_count = 0;
};

ProgramStats program_stats(const ProgramUnit &p);

/// Calls `f` on every statement in pre-order.
void visit_stmts(const Stmt &s, const std::function<void(const Stmt &)> &f);

}  // namespace qecv

#endif  // QECV_LANG_HPP
