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

#include "qecv/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qecv/error.hpp"

namespace qecv {

namespace {

// Letter product a*b. Returns the letter (nullopt for identity) and adds the
// exponent of i to `exp`.
std::optional<Letter> letter_product(Letter a, Letter b, int &exp) {
  if (a == b) return std::nullopt;
  const bool plus = (a == Letter::X && b == Letter::Y) ||
                    (a == Letter::Y && b == Letter::Z) ||
                    (a == Letter::Z && b == Letter::X);
  exp += plus ? 1 : 3;
  return static_cast<Letter>(static_cast<int>(a) ^ static_cast<int>(b));
}

void check_width(Qubit width, int n_qubits, int cap) {
  if (n_qubits > cap) {
    throw OracleCapExceeded(std::to_string(n_qubits) + " qubits exceeds cap " +
                            std::to_string(cap));
  }
  if (static_cast<int>(width) > n_qubits) {
    throw OracleCapExceeded("expression touches qubit " +
                            std::to_string(width - 1) + " outside " +
                            std::to_string(n_qubits) + " qubits");
  }
}

}  // namespace

char letter_char(Letter l) {
  switch (l) {
    case Letter::X: return 'X';
    case Letter::Y: return 'Y';
    case Letter::Z: return 'Z';
  }
  return '?';
}

Complex phase_value(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// ---------------------------------------------------------------------------
// SignedPauli

SignedPauli::SignedPauli(int phase_exp, std::map<Qubit, Letter> letters)
    : phase_(static_cast<std::uint8_t>(((phase_exp % 4) + 4) % 4)),
      letters_(std::move(letters)) {}

SignedPauli SignedPauli::single(Letter l, Qubit q, int phase_exp) {
  return SignedPauli(phase_exp, {{q, l}});
}

SignedPauli SignedPauli::uniform(Letter l, const std::vector<Qubit> &qubits,
                                 int phase_exp) {
  std::map<Qubit, Letter> m;
  for (Qubit q : qubits) m[q] = l;
  return SignedPauli(phase_exp, std::move(m));
}

std::optional<Letter> SignedPauli::letter(Qubit q) const {
  auto it = letters_.find(q);
  if (it == letters_.end()) return std::nullopt;
  return it->second;
}

std::vector<Qubit> SignedPauli::support() const {
  std::vector<Qubit> out;
  out.reserve(letters_.size());
  for (const auto &[q, l] : letters_) out.push_back(q);
  return out;
}

Qubit SignedPauli::width() const {
  return letters_.empty() ? 0 : letters_.rbegin()->first + 1;
}

SignedPauli SignedPauli::with_phase(int phase_exp) const {
  SignedPauli r = *this;
  r.phase_ = static_cast<std::uint8_t>(((phase_exp % 4) + 4) % 4);
  return r;
}

bool SignedPauli::operator<(const SignedPauli &o) const {
  if (letters_ != o.letters_) return letters_ < o.letters_;
  return phase_ < o.phase_;
}

SignedPauli mul_pauli(const SignedPauli &a, const SignedPauli &b) {
  int exp = a.phase_exp() + b.phase_exp();
  std::map<Qubit, Letter> out;
  auto ia = a.letters().begin();
  auto ib = b.letters().begin();
  while (ia != a.letters().end() || ib != b.letters().end()) {
    if (ib == b.letters().end() ||
        (ia != a.letters().end() && ia->first < ib->first)) {
      out.emplace_hint(out.end(), *ia++);
    } else if (ia == a.letters().end() || ib->first < ia->first) {
      out.emplace_hint(out.end(), *ib++);
    } else {
      if (auto l = letter_product(ia->second, ib->second, exp)) {
        out.emplace_hint(out.end(), ia->first, *l);
      }
      ++ia;
      ++ib;
    }
  }
  return SignedPauli(exp, std::move(out));
}

bool commutes(const SignedPauli &a, const SignedPauli &b) {
  const auto &small = a.weight() <= b.weight() ? a : b;
  const auto &large = a.weight() <= b.weight() ? b : a;
  int anti = 0;
  for (const auto &[q, l] : small.letters()) {
    auto other = large.letter(q);
    if (other && *other != l) ++anti;
  }
  return anti % 2 == 0;
}

// ---------------------------------------------------------------------------
// PackedPauli

PackedPauli::PackedPauli(std::size_t n_qubits)
    : x((n_qubits + 63) / 64, 0), z((n_qubits + 63) / 64, 0) {}

void PackedPauli::set(std::size_t q, bool xb, bool zb) {
  const std::uint64_t bit = std::uint64_t{1} << (q & 63);
  x[q >> 6] = xb ? (x[q >> 6] | bit) : (x[q >> 6] & ~bit);
  z[q >> 6] = zb ? (z[q >> 6] | bit) : (z[q >> 6] & ~bit);
}

bool PackedPauli::is_identity_letters() const {
  for (std::size_t w = 0; w < x.size(); ++w) {
    if (x[w] | z[w]) return false;
  }
  return true;
}

PackedPauli pack(const SignedPauli &p, std::size_t n_qubits) {
  if (p.width() > n_qubits) {
    throw std::out_of_range("pack: Pauli wider than packed width");
  }
  PackedPauli out(n_qubits);
  out.phase_exp = p.phase_exp();
  for (const auto &[q, l] : p.letters()) {
    const int bits = static_cast<int>(l);
    out.set(q, bits & 1, bits & 2);
  }
  return out;
}

SignedPauli unpack(const PackedPauli &p) {
  std::map<Qubit, Letter> letters;
  for (std::size_t w = 0; w < p.words(); ++w) {
    std::uint64_t any = p.x[w] | p.z[w];
    while (any) {
      const int b = std::countr_zero(any);
      any &= any - 1;
      const std::size_t q = w * 64 + b;
      const int bits = static_cast<int>(p.xbit(q)) | (p.zbit(q) << 1);
      letters.emplace_hint(letters.end(), static_cast<Qubit>(q),
                           static_cast<Letter>(bits));
    }
  }
  return SignedPauli(p.phase_exp, std::move(letters));
}

void mul_packed_inplace(PackedPauli &acc, const PackedPauli &b) {
  if (acc.words() < b.words()) {
    acc.x.resize(b.words(), 0);
    acc.z.resize(b.words(), 0);
  }
  int exp = acc.phase_exp + b.phase_exp;
  for (std::size_t w = 0; w < b.words(); ++w) {
    const std::uint64_t x1 = acc.x[w], z1 = acc.z[w];
    const std::uint64_t x2 = b.x[w], z2 = b.z[w];
    const std::uint64_t ax = x1 & ~z1, ay = x1 & z1, az = ~x1 & z1;
    const std::uint64_t bx = x2 & ~z2, by = x2 & z2, bz = ~x2 & z2;
    const std::uint64_t plus = (ax & by) | (ay & bz) | (az & bx);
    const std::uint64_t minus = (ay & bx) | (az & by) | (ax & bz);
    exp += std::popcount(plus) + 3 * std::popcount(minus);
    acc.x[w] = x1 ^ x2;
    acc.z[w] = z1 ^ z2;
  }
  acc.phase_exp = exp & 3;
}

bool commutes_packed(const PackedPauli &a, const PackedPauli &b) {
  int parity = 0;
  for (std::size_t w = 0; w < std::min(a.words(), b.words()); ++w) {
    parity ^= std::popcount((a.x[w] & b.z[w]) ^ (a.z[w] & b.x[w])) & 1;
  }
  return parity == 0;
}

// ---------------------------------------------------------------------------
// StabilizerExpr

StabilizerExpr StabilizerExpr::identity() {
  return from_pauli(SignedPauli::identity());
}

StabilizerExpr StabilizerExpr::from_pauli(const SignedPauli &p, Complex coeff) {
  return from_terms({Term{coeff, p}});
}

StabilizerExpr StabilizerExpr::from_terms(std::vector<Term> terms,
                                          std::size_t max_terms) {
  for (auto &t : terms) {
    t.coeff *= phase_value(t.pauli.phase_exp());
    t.pauli = t.pauli.unsigned_part();
  }
  std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) {
    return a.pauli.letters() < b.pauli.letters();
  });
  StabilizerExpr out;
  for (auto &t : terms) {
    if (!out.terms_.empty() &&
        out.terms_.back().pauli.letters() == t.pauli.letters()) {
      out.terms_.back().coeff += t.coeff;
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(out.terms_,
                [](const Term &t) { return std::abs(t.coeff) < kDedupTol; });
  if (out.terms_.size() > max_terms) {
    throw TermExplosion(std::to_string(out.terms_.size()) +
                        " terms exceeds max_terms " +
                        std::to_string(max_terms));
  }
  return out;
}

bool StabilizerExpr::is_identity(double tol) const {
  return terms_.size() == 1 && terms_[0].pauli.has_identity_letters() &&
         std::abs(terms_[0].coeff - 1.0) <= tol;
}

std::optional<SignedPauli> StabilizerExpr::as_pauli(double tol) const {
  if (terms_.size() != 1) return std::nullopt;
  for (int k = 0; k < 4; ++k) {
    if (std::abs(terms_[0].coeff - phase_value(k)) <= tol) {
      return terms_[0].pauli.with_phase(k);
    }
  }
  return std::nullopt;
}

std::vector<Qubit> StabilizerExpr::support() const {
  std::vector<Qubit> out;
  for (const auto &t : terms_) {
    for (const auto &[q, l] : t.pauli.letters()) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Qubit StabilizerExpr::width() const {
  Qubit w = 0;
  for (const auto &t : terms_) w = std::max(w, t.pauli.width());
  return w;
}

StabilizerExpr StabilizerExpr::dagger() const {
  StabilizerExpr out = *this;
  for (auto &t : out.terms_) t.coeff = std::conj(t.coeff);
  return out;
}

StabilizerExpr StabilizerExpr::scaled(Complex c) const {
  std::vector<Term> terms = terms_;
  for (auto &t : terms) t.coeff *= c;
  const std::size_t n = std::max(terms.size(), kDefaultMaxTerms);
  return from_terms(std::move(terms), n);
}

bool StabilizerExpr::approx_equal(const StabilizerExpr &o, double tol) const {
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() &&
         terms_[i].pauli.letters() < o.terms_[j].pauli.letters())) {
      if (std::abs(terms_[i].coeff) > tol) return false;
      ++i;
    } else if (i == terms_.size() ||
               o.terms_[j].pauli.letters() < terms_[i].pauli.letters()) {
      if (std::abs(o.terms_[j].coeff) > tol) return false;
      ++j;
    } else {
      if (std::abs(terms_[i].coeff - o.terms_[j].coeff) > tol) return false;
      ++i;
      ++j;
    }
  }
  return true;
}

StabilizerExpr expr_add(const StabilizerExpr &a, const StabilizerExpr &b,
                        std::size_t max_terms) {
  std::vector<Term> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return StabilizerExpr::from_terms(std::move(terms), max_terms);
}

StabilizerExpr expr_mul(const StabilizerExpr &a, const StabilizerExpr &b,
                        std::size_t max_terms) {
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto &ta : a.terms()) {
    for (const auto &tb : b.terms()) {
      terms.push_back({ta.coeff * tb.coeff, mul_pauli(ta.pauli, tb.pauli)});
    }
  }
  return StabilizerExpr::from_terms(std::move(terms), max_terms);
}

// ---------------------------------------------------------------------------
// Gates

std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::T: return "T";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::Expr: return "Expr";
  }
  return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
  static const std::pair<std::string_view, GateKind> kNames[] = {
      {"X", GateKind::X},       {"Y", GateKind::Y},   {"Z", GateKind::Z},
      {"H", GateKind::H},       {"S", GateKind::S},   {"T", GateKind::T},
      {"CNOT", GateKind::CNOT}, {"CX", GateKind::CNOT}, {"CZ", GateKind::CZ}};
  for (const auto &[n, k] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::CNOT:
    case GateKind::CZ: return 2;
    case GateKind::Expr: return -1;
    default: return 1;
  }
}

GateApp GateApp::named(GateKind k, std::vector<Qubit> operands) {
  GateApp g;
  g.kind = k;
  g.operands = std::move(operands);
  check_gate(g);
  return g;
}

GateApp GateApp::inline_expr(StabilizerExpr e, std::vector<Qubit> operands) {
  GateApp g;
  g.kind = GateKind::Expr;
  g.operands = std::move(operands);
  g.expr = std::make_shared<const StabilizerExpr>(std::move(e));
  check_gate(g);
  return g;
}

bool GateApp::operator==(const GateApp &o) const {
  if (kind != o.kind || operands != o.operands) return false;
  if (kind != GateKind::Expr) return true;
  return expr && o.expr && *expr == *o.expr;
}

void check_gate(const GateApp &g) {
  const int arity = gate_arity(g.kind);
  if (arity >= 0 && static_cast<int>(g.operands.size()) != arity) {
    throw ArityMismatch(gate_name(g.kind) + " takes " + std::to_string(arity) +
                        " operands, got " +
                        std::to_string(g.operands.size()));
  }
  auto sorted = g.operands;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArityMismatch(gate_name(g.kind) + " has repeated operands");
  }
  if (g.kind == GateKind::Expr) {
    if (!g.expr || g.expr->is_zero()) {
      throw ArityMismatch("inline unitary is empty");
    }
    for (Qubit q : g.expr->support()) {
      if (!std::binary_search(sorted.begin(), sorted.end(), q)) {
        throw ArityMismatch("inline unitary acts on q" + std::to_string(q) +
                            " which is not an operand");
      }
    }
  }
}

namespace {

// Image of X_q (want_x) or Z_q under a named Clifford gate.
SignedPauli named_image(const GateApp &g, Qubit q, bool want_x) {
  const Letter l = want_x ? Letter::X : Letter::Z;
  const SignedPauli same = SignedPauli::single(l, q);
  switch (g.kind) {
    case GateKind::X: return want_x ? same : same.negated();
    case GateKind::Y: return same.negated();
    case GateKind::Z: return want_x ? same.negated() : same;
    case GateKind::H:
      return SignedPauli::single(want_x ? Letter::Z : Letter::X, q);
    case GateKind::S:
      return want_x ? SignedPauli::single(Letter::Y, q) : same;
    case GateKind::CNOT: {
      const Qubit c = g.operands[0], t = g.operands[1];
      if (want_x && q == c) return SignedPauli(0, {{c, Letter::X}, {t, Letter::X}});
      if (!want_x && q == t) return SignedPauli(0, {{c, Letter::Z}, {t, Letter::Z}});
      return same;
    }
    case GateKind::CZ: {
      const Qubit a = g.operands[0], b = g.operands[1];
      if (!want_x) return same;
      const Qubit other = q == a ? b : a;
      return SignedPauli(0, {{q, Letter::X}, {other, Letter::Z}});
    }
    default: break;
  }
  throw NonCliffordGate(gate_name(g.kind) + " is not Clifford");
}

// Image of X_q or Z_q under an inline expression unitary; nullopt when the
// image is not a single Pauli string.
std::optional<SignedPauli> expr_image(const GateApp &g, Qubit q, bool want_x) {
  const auto p = SignedPauli::single(want_x ? Letter::X : Letter::Z, q);
  const auto img = expr_conjugate(*g.expr, StabilizerExpr::from_pauli(p));
  return img.as_pauli(1e-9);
}

SignedPauli image(const GateApp &g, Qubit q, bool want_x) {
  if (g.kind == GateKind::Expr) {
    auto img = expr_image(g, q, want_x);
    if (!img) throw NonCliffordGate("inline unitary is not Clifford");
    return *img;
  }
  return named_image(g, q, want_x);
}

}  // namespace

bool is_clifford(const GateApp &g) {
  if (g.kind == GateKind::T) return false;
  if (g.kind != GateKind::Expr) return true;
  for (Qubit q : g.operands) {
    if (!expr_image(g, q, true) || !expr_image(g, q, false)) return false;
  }
  return true;
}

SignedPauli conjugate_by_gate(const GateApp &g, const SignedPauli &p) {
  if (g.kind == GateKind::T) {
    throw NonCliffordGate("T must be conjugated with expr_conjugate");
  }
  SignedPauli out = SignedPauli::identity().with_phase(p.phase_exp());
  for (const auto &[q, l] : p.letters()) {
    if (std::find(g.operands.begin(), g.operands.end(), q) ==
        g.operands.end()) {
      out = mul_pauli(out, SignedPauli::single(l, q));
      continue;
    }
    switch (l) {
      case Letter::X: out = mul_pauli(out, image(g, q, true)); break;
      case Letter::Z: out = mul_pauli(out, image(g, q, false)); break;
      case Letter::Y: {
        // Y = i X Z, so its image is i img(X) img(Z).
        auto y = mul_pauli(image(g, q, true), image(g, q, false));
        out = mul_pauli(out, y.with_phase(y.phase_exp() + 1));
        break;
      }
    }
  }
  return out;
}

StabilizerExpr gate_expr(const GateApp &g) {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex I1(1.0, 0.0), Ii(0.0, 1.0);
  auto P = [](Letter l, Qubit q) { return SignedPauli::single(l, q); };
  const auto id = SignedPauli::identity();
  switch (g.kind) {
    case GateKind::X: return StabilizerExpr::from_pauli(P(Letter::X, g.operands[0]));
    case GateKind::Y: return StabilizerExpr::from_pauli(P(Letter::Y, g.operands[0]));
    case GateKind::Z: return StabilizerExpr::from_pauli(P(Letter::Z, g.operands[0]));
    case GateKind::H:
      return StabilizerExpr::from_terms(
          {{r, P(Letter::X, g.operands[0])}, {r, P(Letter::Z, g.operands[0])}});
    case GateKind::S:
      return StabilizerExpr::from_terms(
          {{(I1 + Ii) / 2.0, id}, {(I1 - Ii) / 2.0, P(Letter::Z, g.operands[0])}});
    case GateKind::T: {
      const Complex w = std::polar(1.0, M_PI / 4.0);
      return StabilizerExpr::from_terms(
          {{(I1 + w) / 2.0, id}, {(I1 - w) / 2.0, P(Letter::Z, g.operands[0])}});
    }
    case GateKind::CNOT: {
      const Qubit c = g.operands[0], t = g.operands[1];
      return StabilizerExpr::from_terms(
          {{0.5, id},
           {0.5, P(Letter::X, t)},
           {0.5, P(Letter::Z, c)},
           {-0.5, SignedPauli(0, {{c, Letter::Z}, {t, Letter::X}})}});
    }
    case GateKind::CZ: {
      const Qubit a = g.operands[0], b = g.operands[1];
      return StabilizerExpr::from_terms(
          {{0.5, id},
           {0.5, P(Letter::Z, a)},
           {0.5, P(Letter::Z, b)},
           {-0.5, SignedPauli(0, {{a, Letter::Z}, {b, Letter::Z}})}});
    }
    case GateKind::Expr: return *g.expr;
  }
  return {};
}

StabilizerExpr expr_conjugate(const StabilizerExpr &u, const StabilizerExpr &a,
                              std::size_t max_terms) {
  return expr_mul(expr_mul(u, a, max_terms), u.dagger(), max_terms);
}

StabilizerExpr expr_conjugate(const std::vector<GateApp> &gates,
                              const StabilizerExpr &a, std::size_t max_terms) {
  StabilizerExpr cur = a;
  for (const auto &g : gates) {
    const bool clifford =
        g.kind != GateKind::T && g.kind != GateKind::Expr;
    if (clifford || (g.kind == GateKind::Expr && g.expr->as_pauli())) {
      std::vector<Term> terms;
      terms.reserve(cur.size());
      for (const auto &t : cur.terms()) {
        terms.push_back({t.coeff, conjugate_by_gate(g, t.pauli)});
      }
      cur = StabilizerExpr::from_terms(std::move(terms), max_terms);
    } else {
      cur = expr_conjugate(gate_expr(g), cur, max_terms);
    }
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Dense realization

Eigen::MatrixXcd pauli_to_matrix(const SignedPauli &p, int n_qubits, int cap) {
  check_width(p.width(), n_qubits, cap);
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::size_t xmask = 0, zmask = 0;
  int n_y = 0;
  for (const auto &[q, l] : p.letters()) {
    if (static_cast<int>(l) & 1) xmask |= std::size_t{1} << q;
    if (static_cast<int>(l) & 2) zmask |= std::size_t{1} << q;
    if (l == Letter::Y) ++n_y;
  }
  const Complex base = phase_value(p.phase_exp() + n_y);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const bool odd = std::popcount(x & zmask) & 1;
    m(x ^ xmask, x) = odd ? -base : base;
  }
  return m;
}

Eigen::MatrixXcd expr_to_matrix(const StabilizerExpr &a, int n_qubits,
                                int cap) {
  check_width(a.width(), n_qubits, cap);
  const std::size_t dim = std::size_t{1} << n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto &t : a.terms()) {
    m += t.coeff * pauli_to_matrix(t.pauli, n_qubits, cap);
  }
  return m;
}

StabilizerExpr pauli_expand(const Eigen::MatrixXcd &m, int n_qubits, int cap) {
  check_width(0, n_qubits, cap);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (static_cast<std::size_t>(m.rows()) != dim ||
      static_cast<std::size_t>(m.cols()) != dim) {
    throw std::invalid_argument("pauli_expand: matrix size mismatch");
  }
  std::vector<Term> terms;
  const std::size_t count = std::size_t{1} << (2 * n_qubits);
  for (std::size_t code = 0; code < count; ++code) {
    std::map<Qubit, Letter> letters;
    for (int q = 0; q < n_qubits; ++q) {
      const int bits = (code >> (2 * q)) & 3;
      if (bits) letters[q] = static_cast<Letter>(bits);
    }
    const SignedPauli p(0, std::move(letters));
    // tr(P M) touches one entry per column of M.
    std::size_t xmask = 0, zmask = 0;
    int n_y = 0;
    for (const auto &[q, l] : p.letters()) {
      if (static_cast<int>(l) & 1) xmask |= std::size_t{1} << q;
      if (static_cast<int>(l) & 2) zmask |= std::size_t{1} << q;
      if (l == Letter::Y) ++n_y;
    }
    const Complex base = phase_value(n_y);
    Complex tr = 0.0;
    for (std::size_t x = 0; x < dim; ++x) {
      const bool odd = std::popcount(x & zmask) & 1;
      // P(x ^ xmask, x) = +-base, so tr(P M) = sum_x P(x^m, x) M(x, x^m).
      tr += (odd ? -base : base) * m(x, x ^ xmask);
    }
    terms.push_back({tr / static_cast<double>(dim), p});
  }
  return StabilizerExpr::from_terms(std::move(terms), count);
}

}  // namespace qecv
