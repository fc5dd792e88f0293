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

#ifndef QECV_ASSERTION_HPP
#define QECV_ASSERTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "qecv/pauli.hpp"

namespace qecv {

/// Independent generators of a stabilizer group with exact signs, plus a
/// fully reduced row-echelon copy used for membership and coset reduction.
class SignedTableau {
 public:
  /// Returns nullopt when the generators anticommute pairwise or generate
  /// -I. Throws ImaginaryPhaseConjunct on a +-i phase.
  static std::optional<SignedTableau> build(const std::vector<SignedPauli> &gens);

  /// Independent subset of the input generators, in input order.
  const std::vector<SignedPauli> &rows() const { return rows_; }
  std::size_t rank() const { return rows_.size(); }
  bool reduced() const { return true; }

  /// Coset normal form: p right-multiplied by group elements until no pivot
  /// letter remains. On any state fixed by the group, p and reduce(p) act
  /// identically.
  SignedPauli reduce(const SignedPauli &p) const;
  /// +1 when p is in the group, -1 when -p is, 0 otherwise.
  int membership(const SignedPauli &p) const;
  /// Reduces every term of `e` and recanonicalizes.
  StabilizerExpr reduce(const StabilizerExpr &e,
                        std::size_t max_terms = kDefaultMaxTerms) const;

  /// True when both tableaux generate the same signed group.
  bool same_group(const SignedTableau &o) const;
  /// Pivot rows of the reduced echelon form, for printing and hashing.
  std::vector<SignedPauli> echelon() const;

 private:
  std::vector<SignedPauli> rows_;
  std::vector<PackedPauli> rref_;
  std::vector<std::size_t> pivots_;  // bit index: 2q for x, 2q+1 for z
};

std::optional<SignedTableau> conj_tableau(const std::vector<SignedPauli> &gens);

/// QECV-Assn assertion tree.
struct Assertion {
  enum class Kind { Expr, And, Or, Implies, True, False };
  Kind kind = Kind::True;
  StabilizerExpr expr;
  std::vector<Assertion> children;

  static Assertion truth() { return {}; }
  static Assertion falsity() { return {Kind::False, {}, {}}; }
  static Assertion leaf(StabilizerExpr e) { return {Kind::Expr, std::move(e), {}}; }
  static Assertion leaf(const SignedPauli &p) {
    return leaf(StabilizerExpr::from_pauli(p));
  }
  static Assertion conj(std::vector<Assertion> cs);
  static Assertion disj(std::vector<Assertion> cs);
  static Assertion implies(Assertion lhs, Assertion rhs);

  bool is_true() const { return kind == Kind::True; }
  bool is_false() const { return kind == Kind::False; }
  /// Hermitian single-term leaf (+-P).
  std::optional<SignedPauli> as_literal() const;
  /// Every Expr leaf, in order.
  std::vector<StabilizerExpr> leaves() const;
  Qubit width() const;
};

std::string to_string(const Assertion &a);
Assertion parse_assertion(std::string_view text);

/// Flattens nesting, folds contradictions to False, keeps an independent
/// subset of the Pauli literals of each conjunction and dedups the rest.
Assertion assertion_simplify(const Assertion &a,
                             std::size_t max_terms = kDefaultMaxTerms);

/// Equality modulo simplification: same signed group per conjunction and
/// the same sum leaves after coset reduction.
bool assertion_equivalent(const Assertion &a, const Assertion &b,
                          double tol = 1e-9);

struct ProofStatus {
  enum class Kind { Proved, Disproved, Unknown };
  Kind kind = Kind::Unknown;
  /// Rule trace for Proved, witness for Disproved, reason tag for Unknown
  /// (TermExplosion, OracleCapExceeded or NoApplicableRule).
  std::string detail;

  static ProofStatus proved(std::string by) { return {Kind::Proved, std::move(by)}; }
  static ProofStatus disproved(std::string w) { return {Kind::Disproved, std::move(w)}; }
  static ProofStatus unknown(std::string r) { return {Kind::Unknown, std::move(r)}; }
  bool ok() const { return kind == Kind::Proved; }
};

std::string to_string(ProofStatus::Kind k);

struct ImplyConfig {
  int oracle_cap = kDefaultOracleCap;
  std::size_t max_terms = kDefaultMaxTerms;
  double tol = 1e-9;
};

/// Sound three-valued decision of a => b on the A rho = rho half of
/// satisfaction.
ProofStatus implies(const Assertion &a, const Assertion &b,
                    const ImplyConfig &cfg = {});

/// Weakest-loss weakening of `a` to an assertion that commutes with `v`:
/// literal generators anticommuting with v are replaced by products with
/// the first of them, and anticommuting terms of sum leaves are multiplied
/// by that generator. Leaves with no such generator are dropped. The result
/// is always implied by `a`.
Assertion commutant_weaken(const Assertion &a, const SignedPauli &v,
                           std::size_t max_terms = kDefaultMaxTerms);

/// True when every term of every leaf commutes with v.
bool assertion_commutes(const Assertion &a, const SignedPauli &v);

/// Orthonormal basis of the common +1 space of the leaves of a conjunction,
/// restricted to the listed qubits (qubit k of the basis is support[k]).
Eigen::MatrixXcd fixed_space(const std::vector<StabilizerExpr> &leaves,
                             const std::vector<Qubit> &support, double tol);

}  // namespace qecv

#endif  // QECV_ASSERTION_HPP
