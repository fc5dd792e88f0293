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

#include "qecv/assertion.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "qecv/error.hpp"
#include "text_cursor.hpp"

namespace qecv {

Assertion Assertion::conj(std::vector<Assertion> cs) {
  if (cs.empty()) return truth();
  return {Kind::And, {}, std::move(cs)};
}

Assertion Assertion::disj(std::vector<Assertion> cs) {
  if (cs.empty()) return falsity();
  return {Kind::Or, {}, std::move(cs)};
}

Assertion Assertion::implies(Assertion lhs, Assertion rhs) {
  return {Kind::Implies, {}, {std::move(lhs), std::move(rhs)}};
}

std::optional<SignedPauli> Assertion::as_literal() const {
  if (kind != Kind::Expr) return std::nullopt;
  auto p = expr.as_pauli(1e-12);
  if (!p || !p->is_hermitian() || p->has_identity_letters()) return std::nullopt;
  return p;
}

std::vector<StabilizerExpr> Assertion::leaves() const {
  std::vector<StabilizerExpr> out;
  if (kind == Kind::Expr) out.push_back(expr);
  for (const auto &c : children) {
    auto sub = c.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

Qubit Assertion::width() const {
  Qubit w = 0;
  for (const auto &l : leaves()) w = std::max(w, l.width());
  return w;
}

std::string to_string(ProofStatus::Kind k) {
  switch (k) {
    case ProofStatus::Kind::Proved: return "Proved";
    case ProofStatus::Kind::Disproved: return "Disproved";
    case ProofStatus::Kind::Unknown: return "Unknown";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Text

namespace {

int precedence(const Assertion &a) {
  switch (a.kind) {
    case Assertion::Kind::Implies: return 1;
    case Assertion::Kind::Or: return 2;
    case Assertion::Kind::And: return 3;
    default: return 4;
  }
}

std::string wrap(const Assertion &child, int parent_prec) {
  const std::string s = to_string(child);
  return precedence(child) <= parent_prec && precedence(child) < 4 ? "(" + s + ")"
                                                                   : s;
}

using detail::Cursor;

class AssertionParser {
 public:
  explicit AssertionParser(Cursor &c) : c_(c) {}

  Assertion parse_implies() {
    auto lhs = parse_or();
    c_.skip_ws();
    if (c_.eat("=>")) return Assertion::implies(std::move(lhs), parse_implies());
    return lhs;
  }

 private:
  Assertion parse_or() {
    std::vector<Assertion> cs{parse_and()};
    for (;;) {
      c_.skip_ws();
      if (!c_.eat("\\/")) break;
      cs.push_back(parse_and());
    }
    return cs.size() == 1 ? std::move(cs.front()) : Assertion::disj(std::move(cs));
  }

  Assertion parse_and() {
    std::vector<Assertion> cs{parse_atom()};
    for (;;) {
      c_.skip_ws();
      if (!c_.eat("/\\")) break;
      cs.push_back(parse_atom());
    }
    return cs.size() == 1 ? std::move(cs.front()) : Assertion::conj(std::move(cs));
  }

  bool at_boundary() {
    c_.skip_ws();
    return c_.at_end() || c_.peek() == ')' || c_.starts_with("/\\") ||
           c_.starts_with("\\/") || c_.starts_with("=>");
  }

  Assertion parse_atom() {
    c_.skip_ws();
    if (c_.eat_word("TRUE")) return Assertion::truth();
    if (c_.eat_word("FALSE")) return Assertion::falsity();
    if (c_.peek() == '(') {
      // Either an expression such as (X0 + Z0)*Y1 or a grouped assertion.
      Cursor saved = c_;
      try {
        auto e = detail::parse_expr_at(c_, true);
        if (at_boundary()) return Assertion::leaf(std::move(e));
      } catch (const SyntaxError &) {
      }
      c_ = saved;
      c_.get();
      auto inner = parse_implies();
      c_.expect(")");
      return inner;
    }
    if (!detail::expr_start(c_)) c_.fail("expected assertion");
    return Assertion::leaf(detail::parse_expr_at(c_, true));
  }

  Cursor &c_;
};

}  // namespace

std::string to_string(const Assertion &a) {
  switch (a.kind) {
    case Assertion::Kind::True: return "TRUE";
    case Assertion::Kind::False: return "FALSE";
    case Assertion::Kind::Expr: return to_string(a.expr);
    case Assertion::Kind::Implies:
      return wrap(a.children[0], 1) + " => " + wrap(a.children[1], 1);
    case Assertion::Kind::And:
    case Assertion::Kind::Or: {
      const char *op = a.kind == Assertion::Kind::And ? " /\\ " : " \\/ ";
      const int prec = precedence(a);
      std::string out;
      for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (i) out += op;
        out += wrap(a.children[i], prec - 1);
      }
      return out;
    }
  }
  return "?";
}

Assertion parse_assertion(std::string_view text) {
  Cursor c(text);
  AssertionParser p(c);
  auto a = p.parse_implies();
  c.skip_ws();
  if (!c.at_end()) c.fail("trailing input");
  return a;
}

// ---------------------------------------------------------------------------
// Simplification

namespace {

// A flattened conjunction: Pauli literals, other leaves, and compound
// children (Or / Implies).
struct Block {
  std::vector<SignedPauli> literals;
  std::vector<StabilizerExpr> sums;
  std::vector<Assertion> compound;
  bool contradiction = false;
};

void collect(const Assertion &a, Block &b) {
  switch (a.kind) {
    case Assertion::Kind::True: return;
    case Assertion::Kind::False: b.contradiction = true; return;
    case Assertion::Kind::Expr:
      if (auto p = a.as_literal()) b.literals.push_back(*p);
      else b.sums.push_back(a.expr);
      return;
    case Assertion::Kind::And:
      for (const auto &c : a.children) collect(c, b);
      return;
    default: b.compound.push_back(a); return;
  }
}

bool is_scalar(const StabilizerExpr &e, Complex &alpha) {
  if (e.is_zero()) {
    alpha = 0.0;
    return true;
  }
  if (e.size() == 1 && e.terms()[0].pauli.has_identity_letters()) {
    alpha = e.terms()[0].coeff;
    return true;
  }
  return false;
}

// Splits NF(e) into alpha * I + rest.
std::pair<Complex, StabilizerExpr> split_identity(const StabilizerExpr &e) {
  Complex alpha = 0.0;
  std::vector<Term> rest;
  for (const auto &t : e.terms()) {
    if (t.pauli.has_identity_letters()) alpha += t.coeff;
    else rest.push_back(t);
  }
  const std::size_t n = std::max<std::size_t>(rest.size(), 1);
  return {alpha, StabilizerExpr::from_terms(std::move(rest), n)};
}

}  // namespace

Assertion assertion_simplify(const Assertion &a, std::size_t max_terms) {
  switch (a.kind) {
    case Assertion::Kind::True:
    case Assertion::Kind::False: return a;
    case Assertion::Kind::Expr: {
      Complex alpha;
      if (is_scalar(a.expr, alpha)) {
        if (std::abs(alpha - 1.0) <= 1e-12) return Assertion::truth();
        return Assertion::falsity();
      }
      return a;
    }
    case Assertion::Kind::Implies: {
      auto l = assertion_simplify(a.children[0], max_terms);
      auto r = assertion_simplify(a.children[1], max_terms);
      if (l.is_false() || r.is_true()) return Assertion::truth();
      if (l.is_true()) return r;
      return Assertion::implies(std::move(l), std::move(r));
    }
    case Assertion::Kind::Or: {
      std::vector<Assertion> kept;
      for (const auto &c : a.children) {
        auto s = assertion_simplify(c, max_terms);
        if (s.is_true()) return s;
        if (s.is_false()) continue;
        const bool dup = std::any_of(kept.begin(), kept.end(), [&](const Assertion &k) {
          return assertion_equivalent(k, s, 1e-12);
        });
        if (!dup) {
          if (s.kind == Assertion::Kind::Or) {
            kept.insert(kept.end(), s.children.begin(), s.children.end());
          } else {
            kept.push_back(std::move(s));
          }
        }
      }
      if (kept.empty()) return Assertion::falsity();
      if (kept.size() == 1) return std::move(kept.front());
      return Assertion::disj(std::move(kept));
    }
    case Assertion::Kind::And: break;
  }
  Block b;
  for (const auto &c : a.children) collect(assertion_simplify(c, max_terms), b);
  if (b.contradiction) return Assertion::falsity();
  auto tab = SignedTableau::build(b.literals);
  if (!tab) return Assertion::falsity();
  std::vector<Assertion> out;
  for (const auto &g : tab->rows()) out.push_back(Assertion::leaf(g));
  std::vector<StabilizerExpr> seen;
  for (const auto &s : b.sums) {
    const auto nf = tab->reduce(s, max_terms);
    Complex alpha;
    if (is_scalar(nf, alpha)) {
      if (std::abs(alpha - 1.0) <= 1e-12) continue;
      return Assertion::falsity();
    }
    const bool dup = std::any_of(seen.begin(), seen.end(), [&](const StabilizerExpr &k) {
      return k.approx_equal(nf, 1e-12);
    });
    if (dup) continue;
    seen.push_back(nf);
    out.push_back(Assertion::leaf(s));
  }
  for (auto &c : b.compound) out.push_back(std::move(c));
  if (out.empty()) return Assertion::truth();
  if (out.size() == 1) return std::move(out.front());
  return Assertion::conj(std::move(out));
}

bool assertion_equivalent(const Assertion &x, const Assertion &y, double tol) {
  const auto a = assertion_simplify(x);
  const auto b = assertion_simplify(y);
  const bool a_block = a.kind == Assertion::Kind::Expr || a.kind == Assertion::Kind::And;
  const bool b_block = b.kind == Assertion::Kind::Expr || b.kind == Assertion::Kind::And;
  if (a_block && b_block) {
    Block ba, bb;
    collect(a, ba);
    collect(b, bb);
    auto ta = SignedTableau::build(ba.literals);
    auto tb = SignedTableau::build(bb.literals);
    if (!ta || !tb || !ta->same_group(*tb)) return false;
    if (ba.sums.size() != bb.sums.size() || ba.compound.size() != bb.compound.size()) {
      return false;
    }
    std::vector<bool> used(bb.sums.size(), false);
    for (const auto &s : ba.sums) {
      const auto nf = ta->reduce(s);
      bool found = false;
      for (std::size_t j = 0; j < bb.sums.size() && !found; ++j) {
        if (!used[j] && tb->reduce(bb.sums[j]).approx_equal(nf, tol)) {
          used[j] = found = true;
        }
      }
      if (!found) return false;
    }
    for (std::size_t i = 0; i < ba.compound.size(); ++i) {
      if (!assertion_equivalent(ba.compound[i], bb.compound[i], tol)) return false;
    }
    return true;
  }
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  if (a.kind == Assertion::Kind::Implies) {
    return assertion_equivalent(a.children[0], b.children[0], tol) &&
           assertion_equivalent(a.children[1], b.children[1], tol);
  }
  if (a.kind == Assertion::Kind::Or) {
    std::vector<bool> used(b.children.size(), false);
    for (const auto &c : a.children) {
      bool found = false;
      for (std::size_t j = 0; j < b.children.size() && !found; ++j) {
        if (!used[j] && assertion_equivalent(c, b.children[j], tol)) used[j] = found = true;
      }
      if (!found) return false;
    }
    return true;
  }
  return true;  // True / False
}

// ---------------------------------------------------------------------------
// Dense fallback

namespace {

StabilizerExpr remap(const StabilizerExpr &e, const std::map<Qubit, Qubit> &index) {
  std::vector<Term> terms;
  for (const auto &t : e.terms()) {
    std::map<Qubit, Letter> letters;
    for (const auto &[q, l] : t.pauli.letters()) letters[index.at(q)] = l;
    terms.push_back({t.coeff, SignedPauli(0, std::move(letters))});
  }
  const std::size_t n = std::max<std::size_t>(terms.size(), 1);
  return StabilizerExpr::from_terms(std::move(terms), n);
}

std::map<Qubit, Qubit> index_of(const std::vector<Qubit> &support) {
  std::map<Qubit, Qubit> idx;
  for (std::size_t k = 0; k < support.size(); ++k) idx[support[k]] = static_cast<Qubit>(k);
  return idx;
}

std::string describe_vector(const Eigen::VectorXcd &v, const std::vector<Qubit> &support) {
  std::string out;
  const int m = static_cast<int>(support.size());
  char buf[96];
  int shown = 0;
  for (Eigen::Index i = 0; i < v.size() && shown < 8; ++i) {
    if (std::abs(v[i]) < 1e-6) continue;
    std::string ket;
    for (int k = m - 1; k >= 0; --k) ket += ((i >> k) & 1) ? '1' : '0';
    std::snprintf(buf, sizeof buf, "%s(%.4g%+.4gi)|%s>", out.empty() ? "" : " + ",
                  v[i].real(), v[i].imag(), ket.c_str());
    out += buf;
    ++shown;
  }
  std::string qs;
  for (int k = m - 1; k >= 0; --k) qs += (qs.empty() ? "q" : " q") + std::to_string(support[k]);
  return out + " on [" + qs + "]";
}

}  // namespace

Eigen::MatrixXcd fixed_space(const std::vector<StabilizerExpr> &leaves,
                             const std::vector<Qubit> &support, double tol) {
  const int m = static_cast<int>(support.size());
  const auto idx = index_of(support);
  const Eigen::Index dim = Eigen::Index{1} << m;
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Identity(dim, dim);
  // Literals first: each halves the space.
  std::vector<StabilizerExpr> ordered;
  for (const auto &l : leaves) if (l.size() == 1) ordered.push_back(l);
  for (const auto &l : leaves) if (l.size() != 1) ordered.push_back(l);
  for (const auto &l : ordered) {
    if (q.cols() == 0) break;
    const Eigen::MatrixXcd a = expr_to_matrix(remap(l, idx), m, m);
    const Eigen::MatrixXcd k = (a - Eigen::MatrixXcd::Identity(dim, dim)) * q;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(k, Eigen::ComputeFullV);
    const auto &s = svd.singularValues();
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) if (s[i] > tol) ++rank;
    const Eigen::MatrixXcd null = svd.matrixV().rightCols(q.cols() - rank);
    q = q * null;
  }
  return q;
}

// ---------------------------------------------------------------------------
// Implication

namespace {

ProofStatus combine_all(const std::vector<ProofStatus> &parts, const std::string &rule) {
  for (const auto &p : parts) if (p.kind == ProofStatus::Kind::Disproved) return p;
  for (const auto &p : parts) if (p.kind == ProofStatus::Kind::Unknown) return p;
  std::string by = rule;
  for (const auto &p : parts) {
    if (by.size() < 200) by += (by == rule ? "[" : ", ") + p.detail;
  }
  if (!parts.empty()) by += "]";
  return ProofStatus::proved(by);
}

bool has_kind(const Assertion &a, Assertion::Kind k) {
  return std::any_of(a.children.begin(), a.children.end(),
                     [&](const Assertion &c) { return c.kind == k; });
}

// alpha * I + R for a leaf known to be fixed by rho.
struct Known {
  Complex alpha;
  StabilizerExpr rest;
};

// Lemma-style sum rules over the coset normal form.
std::optional<std::string> sum_rules(const SignedTableau &tab,
                                     const std::vector<StabilizerExpr> &sums,
                                     const StabilizerExpr &h, const ImplyConfig &cfg) {
  std::vector<Known> known;
  auto add_known = [&](const StabilizerExpr &e) {
    auto [alpha, rest] = split_identity(tab.reduce(e, cfg.max_terms));
    known.push_back({alpha, std::move(rest)});
  };
  for (const auto &s : sums) add_known(s);
  if (sums.size() <= 6) {
    for (std::size_t i = 0; i < sums.size(); ++i) {
      for (std::size_t j = 0; j < sums.size(); ++j) {
        if (i != j) add_known(expr_mul(sums[i], sums[j], cfg.max_terms));
      }
    }
  }
  for (const auto &k : known) {
    if (k.rest.is_zero() && std::abs(k.alpha - 1.0) > cfg.tol) {
      return std::string("vacuous (a leaf reduces to a scalar other than 1)");
    }
  }
  std::vector<std::pair<StabilizerExpr, std::string>> candidates{{h, "coset"}};
  for (const auto &u : sums) {
    candidates.push_back({expr_mul(h, u, cfg.max_terms), "right-absorb"});
  }
  for (const auto &[cand, how] : candidates) {
    auto [alpha_h, rest_h] = split_identity(tab.reduce(cand, cfg.max_terms));
    if (rest_h.is_zero()) {
      if (std::abs(alpha_h - 1.0) <= cfg.tol) return how + "-identity";
      continue;
    }
    if (known.empty()) continue;
    std::map<std::map<Qubit, Letter>, Eigen::Index> keys;
    auto key_of = [&](const SignedPauli &p) {
      auto it = keys.find(p.letters());
      if (it != keys.end()) return it->second;
      const auto k = static_cast<Eigen::Index>(keys.size());
      keys.emplace(p.letters(), k);
      return k;
    };
    for (const auto &t : rest_h.terms()) key_of(t.pauli);
    for (const auto &k : known) for (const auto &t : k.rest.terms()) key_of(t.pauli);
    const Eigen::Index rows = static_cast<Eigen::Index>(keys.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(known.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, cols);
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(rows);
    for (const auto &t : rest_h.terms()) rhs[key_of(t.pauli)] = t.coeff;
    for (Eigen::Index j = 0; j < cols; ++j) {
      for (const auto &t : known[j].rest.terms()) m(key_of(t.pauli), j) = t.coeff;
    }
    const Eigen::VectorXcd beta = m.completeOrthogonalDecomposition().solve(rhs);
    if ((m * beta - rhs).norm() > cfg.tol) continue;
    Complex value = alpha_h;
    for (Eigen::Index j = 0; j < cols; ++j) value += beta[j] * (1.0 - known[j].alpha);
    if (std::abs(value - 1.0) <= cfg.tol) return how + "-linear";
  }
  return std::nullopt;
}

ProofStatus dense_check(const std::vector<StabilizerExpr> &pre,
                        const StabilizerExpr &h, const ImplyConfig &cfg) {
  std::set<Qubit> sup;
  for (const auto &l : pre) for (Qubit q : l.support()) sup.insert(q);
  for (Qubit q : h.support()) sup.insert(q);
  const std::vector<Qubit> support(sup.begin(), sup.end());
  if (static_cast<int>(support.size()) > cfg.oracle_cap) {
    return ProofStatus::unknown("OracleCapExceeded");
  }
  const Eigen::MatrixXcd q = fixed_space(pre, support, cfg.tol);
  if (q.cols() == 0) return ProofStatus::proved("dense (precondition space is empty)");
  const int m = static_cast<int>(support.size());
  const Eigen::MatrixXcd hm = expr_to_matrix(remap(h, index_of(support)), m, m);
  const Eigen::MatrixXcd resid = hm * q - q;
  Eigen::Index worst = 0;
  const double norm = resid.colwise().norm().maxCoeff(&worst);
  if (norm <= cfg.tol * std::max(1.0, static_cast<double>(q.cols()))) {
    return ProofStatus::proved("dense subspace inclusion");
  }
  return ProofStatus::disproved("state " + describe_vector(q.col(worst), support) +
                                " satisfies the premise but not " + to_string(h));
}

ProofStatus implies_rec(const Assertion &a, const Assertion &b, const ImplyConfig &cfg,
                        int depth);

ProofStatus implies_leaf(const Assertion &a, const StabilizerExpr &h,
                         const ImplyConfig &cfg) {
  Block blk;
  collect(a, blk);
  auto tab = SignedTableau::build(blk.literals);
  if (!tab || blk.contradiction) return ProofStatus::proved("false-elim");
  const auto hp = h.as_pauli(1e-12);
  if (hp && hp->is_hermitian()) {
    const int m = tab->membership(*hp);
    if (m == 1) return ProofStatus::proved("tableau");
    if (blk.sums.empty()) {
      if (m == -1) {
        return ProofStatus::disproved("-(" + to_string(*hp) +
                                      ") lies in the stabilizer group of the premise");
      }
      return ProofStatus::disproved("coset residue " + to_string(tab->reduce(*hp)) +
                                    " is not a scalar on the premise space");
    }
  }
  if (auto by = sum_rules(*tab, blk.sums, h, cfg)) return ProofStatus::proved(*by);
  std::vector<StabilizerExpr> pre;
  for (const auto &g : tab->rows()) pre.push_back(StabilizerExpr::from_pauli(g));
  pre.insert(pre.end(), blk.sums.begin(), blk.sums.end());
  return dense_check(pre, h, cfg);
}

ProofStatus implies_rec(const Assertion &a, const Assertion &b, const ImplyConfig &cfg,
                        int depth) {
  using K = Assertion::Kind;
  if (depth > 32) return ProofStatus::unknown("NoApplicableRule");
  if (a.is_false()) return ProofStatus::proved("false-elim");
  if (b.is_true()) return ProofStatus::proved("true-intro");
  if (a.kind == K::Or) {
    std::vector<ProofStatus> parts;
    for (const auto &c : a.children) parts.push_back(implies_rec(c, b, cfg, depth + 1));
    return combine_all(parts, "or-elim");
  }
  if (a.kind == K::And && has_kind(a, K::Or)) {
    std::vector<Assertion> rest;
    const Assertion *split = nullptr;
    for (const auto &c : a.children) {
      if (!split && c.kind == K::Or) split = &c;
      else rest.push_back(c);
    }
    std::vector<ProofStatus> parts;
    for (const auto &d : split->children) {
      auto branch = rest;
      branch.push_back(d);
      parts.push_back(implies_rec(assertion_simplify(Assertion::conj(branch), cfg.max_terms),
                                  b, cfg, depth + 1));
    }
    return combine_all(parts, "or-elim");
  }
  if (b.kind == K::And) {
    std::vector<ProofStatus> parts;
    for (const auto &c : b.children) {
      parts.push_back(implies_rec(a, c, cfg, depth + 1));
      if (parts.back().kind == ProofStatus::Kind::Disproved) return parts.back();
    }
    return combine_all(parts, "and-intro");
  }
  if (b.kind == K::Implies) {
    auto lhs = assertion_simplify(Assertion::conj({a, b.children[0]}), cfg.max_terms);
    return implies_rec(lhs, b.children[1], cfg, depth + 1);
  }
  if (a.kind == K::Implies || (a.kind == K::And && has_kind(a, K::Implies))) {
    if (a.kind == K::Implies) return ProofStatus::unknown("NoApplicableRule");
    std::vector<Assertion> rest;
    for (const auto &c : a.children) if (c.kind != K::Implies) rest.push_back(c);
    auto weaker = implies_rec(assertion_simplify(Assertion::conj(rest), cfg.max_terms), b,
                              cfg, depth + 1);
    if (weaker.ok()) return weaker;
    return ProofStatus::unknown("NoApplicableRule");
  }
  if (b.kind == K::Or) {
    std::vector<ProofStatus> parts;
    for (const auto &d : b.children) {
      auto p = implies_rec(a, d, cfg, depth + 1);
      if (p.ok()) return ProofStatus::proved("or-intro[" + p.detail + "]");
      parts.push_back(p);
    }
    // A subspace inside a finite union of subspaces lies inside one of them.
    const bool all_disproved = std::all_of(parts.begin(), parts.end(), [](const ProofStatus &p) {
      return p.kind == ProofStatus::Kind::Disproved;
    });
    if (all_disproved) {
      return ProofStatus::disproved("the premise space lies in no disjunct: " +
                                    parts.front().detail);
    }
    for (const auto &p : parts) if (p.kind == ProofStatus::Kind::Unknown) return p;
    return ProofStatus::unknown("NoApplicableRule");
  }
  if (b.is_false()) {
    // a => FALSE holds only when a is unsatisfiable.
    return implies_leaf(a, StabilizerExpr(), cfg);
  }
  return implies_leaf(a, b.expr, cfg);
}

}  // namespace

ProofStatus implies(const Assertion &a, const Assertion &b, const ImplyConfig &cfg) {
  try {
    return implies_rec(assertion_simplify(a, cfg.max_terms),
                       assertion_simplify(b, cfg.max_terms), cfg, 0);
  } catch (const TermExplosion &) {
    return ProofStatus::unknown("TermExplosion");
  } catch (const OracleCapExceeded &) {
    return ProofStatus::unknown("OracleCapExceeded");
  }
}

// ---------------------------------------------------------------------------
// Commutation

namespace {

bool expr_commutes(const StabilizerExpr &e, const SignedPauli &v) {
  return std::all_of(e.terms().begin(), e.terms().end(),
                     [&](const Term &t) { return commutes(t.pauli, v); });
}

}  // namespace

bool assertion_commutes(const Assertion &a, const SignedPauli &v) {
  if (a.kind == Assertion::Kind::Expr) return expr_commutes(a.expr, v);
  return std::all_of(a.children.begin(), a.children.end(),
                     [&](const Assertion &c) { return assertion_commutes(c, v); });
}

Assertion commutant_weaken(const Assertion &a, const SignedPauli &v, std::size_t max_terms) {
  using K = Assertion::Kind;
  switch (a.kind) {
    case K::True:
    case K::False: return a;
    case K::Implies: return Assertion::truth();
    case K::Or: {
      std::vector<Assertion> cs;
      for (const auto &c : a.children) cs.push_back(commutant_weaken(c, v, max_terms));
      return assertion_simplify(Assertion::disj(std::move(cs)), max_terms);
    }
    default: break;
  }
  Block blk;
  collect(a, blk);
  if (blk.contradiction) return Assertion::falsity();
  std::optional<SignedPauli> n1;
  std::vector<Assertion> out;
  for (const auto &g : blk.literals) {
    if (commutes(g, v)) {
      out.push_back(Assertion::leaf(g));
    } else if (!n1) {
      n1 = g;
    } else {
      out.push_back(Assertion::leaf(mul_pauli(*n1, g)));
    }
  }
  for (const auto &s : blk.sums) {
    if (expr_commutes(s, v)) {
      out.push_back(Assertion::leaf(s));
      continue;
    }
    if (!n1) continue;
    std::vector<Term> terms;
    for (const auto &t : s.terms()) {
      if (commutes(t.pauli, v)) {
        terms.push_back(t);
      } else {
        terms.push_back({t.coeff, mul_pauli(t.pauli, *n1)});
      }
    }
    out.push_back(Assertion::leaf(StabilizerExpr::from_terms(std::move(terms), max_terms)));
  }
  for (const auto &c : blk.compound) out.push_back(commutant_weaken(c, v, max_terms));
  return assertion_simplify(Assertion::conj(std::move(out)), max_terms);
}

}  // namespace qecv
