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

#ifndef QECV_PAULI_HPP
#define QECV_PAULI_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qecv {

using Qubit = std::uint32_t;
using Complex = std::complex<double>;

/// Coefficients below this magnitude are dropped during canonicalization.
inline constexpr double kDedupTol = 1e-12;
inline constexpr std::size_t kDefaultMaxTerms = 4096;
inline constexpr int kDefaultOracleCap = 12;

/// Single-qubit Pauli letter. The value doubles as the (x, z) bit pair:
/// bit 0 is the x bit, bit 1 is the z bit.
enum class Letter : std::uint8_t { X = 1, Z = 2, Y = 3 };

char letter_char(Letter l);

/// i^k for k taken mod 4.
Complex phase_value(int k);

/// Phase i^k times a tensor product of X/Y/Z letters. Qubits absent from
/// `letters` carry the identity. Y is the ordinary Pauli Y, so that
/// X*Y = iZ, Y*Z = iX and Z*X = iY.
class SignedPauli {
 public:
  SignedPauli() = default;
  SignedPauli(int phase_exp, std::map<Qubit, Letter> letters);

  static SignedPauli identity() { return {}; }
  static SignedPauli single(Letter l, Qubit q, int phase_exp = 0);
  /// Product of the same letter on every listed qubit, e.g. Z0 Z1 Z2.
  static SignedPauli uniform(Letter l, const std::vector<Qubit> &qubits,
                             int phase_exp = 0);

  int phase_exp() const { return phase_; }
  const std::map<Qubit, Letter> &letters() const { return letters_; }
  std::optional<Letter> letter(Qubit q) const;
  bool has_identity_letters() const { return letters_.empty(); }
  bool is_identity() const { return letters_.empty() && phase_ == 0; }
  /// True when the phase is +1 or -1.
  bool is_hermitian() const { return phase_ % 2 == 0; }
  std::size_t weight() const { return letters_.size(); }
  std::vector<Qubit> support() const;
  /// One past the largest qubit id, 0 for identity letters.
  Qubit width() const;

  SignedPauli with_phase(int phase_exp) const;
  SignedPauli negated() const { return with_phase(phase_ + 2); }
  /// Same letters with phase 0.
  SignedPauli unsigned_part() const { return with_phase(0); }

  bool operator==(const SignedPauli &o) const {
    return phase_ == o.phase_ && letters_ == o.letters_;
  }
  bool operator!=(const SignedPauli &o) const { return !(*this == o); }
  /// Orders by letters first, then by phase.
  bool operator<(const SignedPauli &o) const;

 private:
  std::uint8_t phase_ = 0;
  std::map<Qubit, Letter> letters_;
};

SignedPauli mul_pauli(const SignedPauli &a, const SignedPauli &b);
bool commutes(const SignedPauli &a, const SignedPauli &b);

/// Bit-packed (x|z) form of a SignedPauli over a fixed width.
struct PackedPauli {
  int phase_exp = 0;
  std::vector<std::uint64_t> x;
  std::vector<std::uint64_t> z;

  explicit PackedPauli(std::size_t n_qubits = 0);
  std::size_t words() const { return x.size(); }
  bool xbit(std::size_t q) const { return (x[q >> 6] >> (q & 63)) & 1u; }
  bool zbit(std::size_t q) const { return (z[q >> 6] >> (q & 63)) & 1u; }
  void set(std::size_t q, bool xb, bool zb);
  bool is_identity_letters() const;
  bool operator==(const PackedPauli &o) const {
    return (phase_exp & 3) == (o.phase_exp & 3) && x == o.x && z == o.z;
  }
};

PackedPauli pack(const SignedPauli &p, std::size_t n_qubits);
SignedPauli unpack(const PackedPauli &p);
/// Right-multiplies `acc` by `b` in place: acc <- acc * b. `acc` grows to
/// the width of `b` when narrower.
void mul_packed_inplace(PackedPauli &acc, const PackedPauli &b);
bool commutes_packed(const PackedPauli &a, const PackedPauli &b);

/// One term of a StabilizerExpr. The Pauli part always has phase 0; the
/// phase lives in the coefficient.
struct Term {
  Complex coeff;
  SignedPauli pauli;
};

/// Canonical complex-weighted sum of Pauli strings.
class StabilizerExpr {
 public:
  /// The zero expression.
  StabilizerExpr() = default;
  static StabilizerExpr identity();
  static StabilizerExpr from_pauli(const SignedPauli &p, Complex coeff = 1.0);
  static StabilizerExpr from_terms(std::vector<Term> terms,
                                   std::size_t max_terms = kDefaultMaxTerms);

  const std::vector<Term> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_identity(double tol = kDedupTol) const;
  /// If the expression is c * P with c in {1, i, -1, -i}, returns that
  /// product as a SignedPauli.
  std::optional<SignedPauli> as_pauli(double tol = kDedupTol) const;
  std::vector<Qubit> support() const;
  Qubit width() const;

  StabilizerExpr dagger() const;
  StabilizerExpr scaled(Complex c) const;

  /// Coefficient-wise comparison after canonical ordering.
  bool approx_equal(const StabilizerExpr &o, double tol) const;
  bool operator==(const StabilizerExpr &o) const {
    return approx_equal(o, 0.0);
  }

 private:
  std::vector<Term> terms_;
};

StabilizerExpr expr_add(const StabilizerExpr &a, const StabilizerExpr &b,
                        std::size_t max_terms = kDefaultMaxTerms);
StabilizerExpr expr_mul(const StabilizerExpr &a, const StabilizerExpr &b,
                        std::size_t max_terms = kDefaultMaxTerms);

enum class GateKind { X, Y, Z, H, S, T, CNOT, CZ, Expr };

std::string gate_name(GateKind k);
std::optional<GateKind> gate_from_name(std::string_view name);
int gate_arity(GateKind k);

/// A unitary applied to an ordered operand list. For `GateKind::Expr` the
/// unitary is the inline expression, whose support must lie in `operands`.
struct GateApp {
  GateKind kind = GateKind::X;
  std::vector<Qubit> operands;
  std::shared_ptr<const StabilizerExpr> expr;

  static GateApp named(GateKind k, std::vector<Qubit> operands);
  static GateApp inline_expr(StabilizerExpr e, std::vector<Qubit> operands);

  bool operator==(const GateApp &o) const;
};

/// Throws ArityMismatch when the operand count does not fit the gate.
void check_gate(const GateApp &g);
bool is_clifford(const GateApp &g);

/// g p g^dagger for Clifford gates. Inline Pauli-string unitaries are
/// accepted; anything else throws NonCliffordGate.
SignedPauli conjugate_by_gate(const GateApp &g, const SignedPauli &p);

/// Sum-of-Paulis form of the gate's unitary.
StabilizerExpr gate_expr(const GateApp &g);

/// u a u^dagger computed with expr_mul.
StabilizerExpr expr_conjugate(const StabilizerExpr &u, const StabilizerExpr &a,
                              std::size_t max_terms = kDefaultMaxTerms);
/// Applies the gates in order: the last gate ends up outermost. Clifford
/// gates map term by term; other gates go through the expression form.
StabilizerExpr expr_conjugate(const std::vector<GateApp> &gates,
                              const StabilizerExpr &a,
                              std::size_t max_terms = kDefaultMaxTerms);

/// Dense Kronecker realization. Qubit q is bit q of the basis index.
Eigen::MatrixXcd pauli_to_matrix(const SignedPauli &p, int n_qubits,
                                 int cap = kDefaultOracleCap);
Eigen::MatrixXcd expr_to_matrix(const StabilizerExpr &a, int n_qubits,
                                int cap = kDefaultOracleCap);

/// Weights w_P = tr(P M) / 2^n of every Pauli string P on n qubits.
StabilizerExpr pauli_expand(const Eigen::MatrixXcd &m, int n_qubits,
                            int cap = kDefaultOracleCap);

// Text forms (pauli_text.cpp).
std::string to_string(const SignedPauli &p);
std::string to_string(const StabilizerExpr &e);
std::string to_string(const GateApp &g);
std::string format_complex(Complex c);
SignedPauli parse_pauli(std::string_view text);
StabilizerExpr parse_expr(std::string_view text);

}  // namespace qecv

#endif  // QECV_PAULI_HPP
