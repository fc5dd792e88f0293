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

#include "qecv/hoare.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qecv/decoder.hpp"
#include "qecv/error.hpp"

namespace qecv {

using K = Assertion::Kind;

SigmaEntry SigmaEntry::known(SignedPauli v) {
  if (v.has_identity_letters()) return off();
  return {State::Known, std::move(v)};
}

SymbolicSigma symbolic_sigma(const std::vector<std::string> &svars, const Sigma &concrete) {
  SymbolicSigma out;
  for (const auto &v : svars) out[v] = SigmaEntry::off();
  for (const auto &[name, value] : concrete) {
    if (!out.count(name)) throw UndeclaredSVar("'" + name + "' is not declared");
    out[name] = SigmaEntry::known(value);
  }
  return out;
}

std::string to_string(const SymbolicSigma &s) {
  std::string out = "{";
  bool first = true;
  for (const auto &[name, e] : s) {
    if (e.state == SigmaEntry::State::Off) continue;
    if (!first) out += ", ";
    first = false;
    out += name + "=";
    switch (e.state) {
      case SigmaEntry::State::Known: out += to_string(e.value); break;
      case SigmaEntry::State::SignUnknown: out += "+-" + to_string(e.value.unsigned_part()); break;
      default: out += "?"; break;
    }
  }
  return out + "}";
}

SymbolicSigma join_sigma(const SymbolicSigma &a, const SymbolicSigma &b) {
  SymbolicSigma out = a;
  for (const auto &[name, eb] : b) {
    auto it = out.find(name);
    if (it == out.end()) {
      out[name] = {SigmaEntry::State::Unknown, {}};
      continue;
    }
    auto &ea = it->second;
    if (ea == eb) continue;
    const bool signed_a = ea.state == SigmaEntry::State::Known ||
                          ea.state == SigmaEntry::State::SignUnknown;
    const bool signed_b = eb.state == SigmaEntry::State::Known ||
                          eb.state == SigmaEntry::State::SignUnknown;
    if (signed_a && signed_b && ea.value.unsigned_part() == eb.value.unsigned_part()) {
      ea = {SigmaEntry::State::SignUnknown, ea.value.unsigned_part()};
    } else {
      ea = {SigmaEntry::State::Unknown, {}};
    }
  }
  return out;
}

std::vector<std::string> ProofTrace::rule_names() const {
  std::vector<std::string> out;
  out.reserve(steps.size());
  for (const auto &s : steps) out.push_back(s.rule);
  return out;
}

std::string to_string(VerificationOutcome::Status s) {
  switch (s) {
    case VerificationOutcome::Status::Verified: return "Verified";
    case VerificationOutcome::Status::Refuted: return "Refuted";
    case VerificationOutcome::Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

std::string describe(const Stmt &s) {
  if (const auto *i = s.as<IfM>()) return "if M[" + i->var + "] ...";
  if (const auto *w = s.as<WhileM>()) return "while M[" + w->var + "] ...";
  if (const auto *q = s.as<Seq>()) return "seq of " + std::to_string(q->items.size());
  std::string text = print_stmt(s);
  while (!text.empty() && (text.back() == '\n' || text.back() == ';')) text.pop_back();
  return text;
}

Assertion map_leaves(const Assertion &a, const std::function<StabilizerExpr(const StabilizerExpr &)> &f) {
  if (a.kind == K::Expr) return Assertion::leaf(f(a.expr));
  Assertion out = a;
  for (auto &c : out.children) c = map_leaves(c, f);
  return out;
}

// a /\ extra, pushed into every disjunct of a top-level Or.
Assertion conj_with(const Assertion &a, const Assertion &extra, std::size_t max_terms) {
  if (a.kind == K::Or) {
    std::vector<Assertion> cs;
    for (const auto &c : a.children) cs.push_back(conj_with(c, extra, max_terms));
    return assertion_simplify(Assertion::disj(std::move(cs)), max_terms);
  }
  return assertion_simplify(Assertion::conj({a, extra}), max_terms);
}

// ---------------------------------------------------------------------------
// Initialization

struct Restriction {
  std::map<Qubit, std::size_t> index;

  std::vector<bool> bits(const SignedPauli &p) const {
    std::vector<bool> b(2 * index.size(), false);
    for (const auto &[q, l] : p.letters()) {
      auto it = index.find(q);
      if (it == index.end()) continue;
      b[2 * it->second] = static_cast<int>(l) & 1;
      b[2 * it->second + 1] = static_cast<int>(l) & 2;
    }
    return b;
  }
};

struct Row {
  std::vector<bool> bits;
  SignedPauli p;
};

struct Eliminator {
  Restriction r;
  std::vector<std::pair<std::size_t, Row>> pivots;

  Row reduce(const SignedPauli &p) const {
    Row row{r.bits(p), p};
    for (const auto &[lead, piv] : pivots) {
      if (!row.bits[lead]) continue;
      for (std::size_t i = 0; i < row.bits.size(); ++i) row.bits[i] = row.bits[i] != piv.bits[i];
      row.p = mul_pauli(row.p, piv.p);
    }
    return row;
  }

  static std::optional<std::size_t> lead(const Row &row) {
    for (std::size_t i = 0; i < row.bits.size(); ++i) {
      if (row.bits[i]) return i;
    }
    return std::nullopt;
  }
};

Assertion init_rule(const Assertion &a, const std::vector<Qubit> &qubits,
                    std::size_t max_terms, int &dropped) {
  if (a.kind == K::False) return a;
  if (a.kind == K::Or) {
    std::vector<Assertion> cs;
    for (const auto &c : a.children) cs.push_back(init_rule(c, qubits, max_terms, dropped));
    return assertion_simplify(Assertion::disj(std::move(cs)), max_terms);
  }
  if (a.kind == K::Implies) {
    ++dropped;
    return Assertion::truth();
  }
  std::vector<Assertion> parts = a.kind == K::And ? a.children : std::vector<Assertion>{a};
  Eliminator elim;
  for (Qubit q : qubits) elim.r.index.emplace(q, elim.r.index.size());

  std::vector<Assertion> out;
  std::vector<const Assertion *> sums;
  for (const auto &c : parts) {
    if (c.kind == K::True) continue;
    if (c.kind == K::Or || c.kind == K::Implies || c.kind == K::And) {
      out.push_back(init_rule(c, qubits, max_terms, dropped));
      continue;
    }
    if (c.kind == K::False) return c;
    if (auto lit = c.as_literal()) {
      Row row = elim.reduce(*lit);
      if (auto lead = Eliminator::lead(row)) {
        elim.pivots.emplace_back(*lead, std::move(row));
      } else {
        out.push_back(Assertion::leaf(row.p));
      }
    } else {
      sums.push_back(&c);
    }
  }
  for (const Assertion *s : sums) {
    std::vector<Term> terms;
    bool cleared = true;
    for (const auto &t : s->expr.terms()) {
      Row row = elim.reduce(t.pauli);
      if (Eliminator::lead(row)) {
        cleared = false;
        break;
      }
      terms.push_back({t.coeff * phase_value(row.p.phase_exp()), row.p.unsigned_part()});
    }
    if (!cleared) {
      ++dropped;
      continue;
    }
    out.push_back(Assertion::leaf(StabilizerExpr::from_terms(std::move(terms), max_terms)));
  }
  for (Qubit q : qubits) out.push_back(Assertion::leaf(SignedPauli::single(Letter::Z, q)));
  return assertion_simplify(Assertion::conj(std::move(out)), max_terms);
}

// ---------------------------------------------------------------------------
// Forward pass

class Engine {
 public:
  Engine(ProofTrace *trace, const VerifyConfig &cfg,
         const std::map<std::string, Assertion> &invariants,
         const std::map<int, std::string> &bindings)
      : trace_(trace), cfg_(cfg), invariants_(invariants), bindings_(bindings) {}

  SpResult run(const Assertion &a, const SymbolicSigma &sig, const Stmt &s) {
    return std::visit([&](const auto &node) { return on(node, a, sig, s); }, s.node);
  }

 private:
  std::size_t max_terms() const { return cfg_.imply.max_terms; }

  void record(std::string rule, const Stmt *s, const Assertion &pre, const Assertion &post,
              std::vector<Obligation> obligations = {}, std::string note = {}) {
    if (!trace_) return;
    trace_->steps.push_back({std::move(rule), s ? describe(*s) : std::string{}, pre, post,
                             std::move(obligations), std::move(note)});
  }

  SigmaEntry &entry(SymbolicSigma &sig, const std::string &var) {
    auto it = sig.find(var);
    if (it == sig.end()) throw UndeclaredSVar("'" + var + "' is not declared");
    return it->second;
  }

  // Consequence step a => commutant_weaken(a, v) when a does not commute.
  Assertion weaken_for(const Assertion &a, const SignedPauli &v, const Stmt &s) {
    if (assertion_commutes(a, v)) return a;
    auto w = commutant_weaken(a, v, max_terms());
    record("Consequence", &s, a, w,
           {{"Consequence", a, w, ProofStatus::proved("commutant weakening")}},
           "weakened to commute with " + to_string(v));
    return w;
  }

  SpResult on(const Skip &, const Assertion &a, const SymbolicSigma &sig, const Stmt &s) {
    record("Skip", &s, a, a);
    return {a, sig};
  }

  SpResult on(const Init &init, const Assertion &a, const SymbolicSigma &sig, const Stmt &s) {
    int dropped = 0;
    auto post = init_rule(a, init.qubits, max_terms(), dropped);
    record("Initialization", &s, a, post, {},
           dropped ? std::to_string(dropped) + " leaves dropped" : std::string{});
    return {post, sig};
  }

  SpResult on(const Unitary &u, const Assertion &a, const SymbolicSigma &sig, const Stmt &s) {
    const std::vector<GateApp> gates{u.gate};
    auto post = map_leaves(a, [&](const StabilizerExpr &e) {
      return expr_conjugate(gates, e, max_terms());
    });
    post = assertion_simplify(post, max_terms());
    record("Unitary", &s, a, post);
    return {post, sig};
  }

  SpResult on(const SAssign &as, const Assertion &a, const SymbolicSigma &sig, const Stmt &s) {
    SymbolicSigma out = sig;
    auto &target = entry(out, as.var);
    Assertion pre = a;
    Assertion post = a;
    switch (as.rhs.kind) {
      case UnaryStabExpr::Kind::IdentityOff: target = SigmaEntry::off(); break;
      case UnaryStabExpr::Kind::PosVar:
      case UnaryStabExpr::Kind::NegVar: {
        SigmaEntry src = entry(out, as.rhs.var);
        if (as.rhs.kind == UnaryStabExpr::Kind::NegVar && src.state != SigmaEntry::State::Off &&
            src.state != SigmaEntry::State::Unknown) {
          src.value = src.value.negated();
        }
        entry(out, as.var) = src;
        break;
      }
      case UnaryStabExpr::Kind::Literal: {
        const auto &v = as.rhs.literal;
        if (!assertion_commutes(a, v)) {
          if (cfg_.weaken_assignments) {
            pre = weaken_for(a, v, s);
            post = pre;
          } else {
            post = Assertion::truth();
          }
        }
        target = SigmaEntry::known(v);
        break;
      }
    }
    record("Assignment", &s, pre, post);
    return {post, out};
  }

  SpResult on(const Seq &seq, const Assertion &a, const SymbolicSigma &sig, const Stmt &s) {
    SpResult cur{a, sig};
    for (const auto &item : seq.items) cur = run(cur.post, cur.sigma, *item);
    if (seq.items.size() > 1) record("Sequencing", &s, a, cur.post);
    return cur;
  }

  SpResult on(const IfM &ifm, const Assertion &a, const SymbolicSigma &sig, const Stmt &s) {
    SymbolicSigma base = sig;
    const SigmaEntry e = entry(base, ifm.var);
    if (e.state == SigmaEntry::State::SignUnknown || e.state == SigmaEntry::State::Unknown) {
      throw UnresolvedSigma("value of '" + ifm.var + "' is not known at this measurement");
    }
    std::vector<SpResult> live;
    Assertion pre = a;
    if (e.state == SigmaEntry::State::Off) {
      live.push_back(branch(pre, base, ifm.then_branch));
    } else {
      const auto &v = e.value;
      pre = weaken_for(a, v, s);
      auto at = conj_with(pre, Assertion::leaf(v), max_terms());
      if (!at.is_false()) live.push_back(branch(at, base, ifm.then_branch));
      auto ae = conj_with(pre, Assertion::leaf(v.negated()), max_terms());
      if (!ae.is_false()) {
        SymbolicSigma flipped = base;
        flipped[ifm.var] = SigmaEntry::known(v.negated());
        live.push_back(branch(ae, flipped, ifm.else_branch));
      }
    }
    SpResult out{Assertion::falsity(), base};
    if (live.size() == 1) {
      out = {live[0].post, live[0].sigma};
    } else if (live.size() == 2) {
      if (assertion_equivalent(live[0].post, live[1].post)) {
        out.post = live[0].post;
      } else {
        out.post = assertion_simplify(Assertion::disj({live[0].post, live[1].post}), max_terms());
      }
      out.sigma = join_sigma(live[0].sigma, live[1].sigma);
    }
    record("Condition", &s, pre, out.post);
    return out;
  }

  SpResult branch(const Assertion &a, const SymbolicSigma &sig, const StmtPtr &body) {
    if (!body) return {a, sig};
    return run(a, sig, *body);
  }

  SpResult on(const WhileM &w, const Assertion &a, const SymbolicSigma &sig, const Stmt &s) {
    if (!w.label) throw MissingInvariant("loop on '" + w.var + "' has no label");
    auto inv_it = invariants_.find(*w.label);
    if (inv_it == invariants_.end()) {
      throw MissingInvariant("no invariant for loop '" + *w.label + "'");
    }
    const Assertion inv = assertion_simplify(inv_it->second, max_terms());
    SymbolicSigma base = sig;
    const SigmaEntry e = entry(base, w.var);
    if (e.state == SigmaEntry::State::SignUnknown || e.state == SigmaEntry::State::Unknown) {
      throw UnresolvedSigma("value of '" + w.var + "' is not known at this loop");
    }
    const SignedPauli v = e.state == SigmaEntry::State::Off ? SignedPauli::identity() : e.value;
    std::vector<Obligation> obs;
    obs.push_back({"While", a, inv, implies(a, inv, cfg_.imply)});
    if (!assertion_commutes(inv, v)) {
      obs.push_back({"While", inv, Assertion::leaf(v),
                     ProofStatus::unknown("NoApplicableRule")});
    }
    auto entry_state = conj_with(inv, Assertion::leaf(v), max_terms());
    auto body = run(entry_state, base, *w.body);
    obs.push_back({"While", body.post, inv, implies(body.post, inv, cfg_.imply)});
    if (body.sigma != base) {
      obs.push_back({"While", body.post, inv, ProofStatus::unknown("LoopChangesSigma")});
    }
    SpResult out{Assertion::falsity(), base};
    if (e.state != SigmaEntry::State::Off) {
      out.post = conj_with(inv, Assertion::leaf(v.negated()), max_terms());
      out.sigma[w.var] = SigmaEntry::known(v.negated());
    }
    record("While", &s, a, out.post, std::move(obs));
    return out;
  }

  SpResult on(const Correct &c, const Assertion &a, const SymbolicSigma &sig, const Stmt &s) {
    auto it = bindings_.find(c.site);
    const bool lookup = it != bindings_.end() && it->second == kLookup;
    if (!lookup) {
      auto post = apply_decode_axiom(a, sig, c.vars, cfg_.imply);
      record("Correct", &s, a, post, {}, "decode axiom");
      return {post, sig};
    }
    std::vector<SignedPauli> stabs;
    SymbolicSigma base = sig;
    for (const auto &v : c.vars) {
      const auto &e = entry(base, v);
      if (e.state == SigmaEntry::State::SignUnknown || e.state == SigmaEntry::State::Unknown) {
        throw UnresolvedSigma("value of '" + v + "' is not known at this correction");
      }
      stabs.push_back(e.state == SigmaEntry::State::Off ? SignedPauli::identity() : e.value);
    }
    auto body = lookup_decoder_body(c.vars, stabs, single_error_table(stabs));
    auto r = run(a, sig, *body);
    record("Correct", &s, a, r.post, {}, "lookup decoder");
    return r;
  }

  ProofTrace *trace_;
  const VerifyConfig &cfg_;
  const std::map<std::string, Assertion> &invariants_;
  const std::map<int, std::string> &bindings_;
};

}  // namespace

SpResult sp(const Assertion &a, const SymbolicSigma &sig, const Stmt &stmt, ProofTrace *trace,
            const VerifyConfig &cfg, const std::map<std::string, Assertion> &invariants,
            const std::map<int, std::string> &bindings) {
  Engine e(trace, cfg, invariants, bindings);
  return e.run(a, sig, stmt);
}

Assertion apply_decode_axiom(const Assertion &a, const SymbolicSigma &sig,
                             const std::vector<std::string> &vars, const ImplyConfig &cfg) {
  std::vector<Assertion> gens;
  for (const auto &v : vars) {
    auto it = sig.find(v);
    if (it == sig.end()) throw UndeclaredSVar("'" + v + "' is not declared");
    switch (it->second.state) {
      case SigmaEntry::State::Off: break;
      case SigmaEntry::State::Known: gens.push_back(Assertion::leaf(it->second.value)); break;
      default: throw UnresolvedSigma("value of '" + v + "' is not known at this correction");
    }
  }
  auto as = assertion_simplify(Assertion::conj(std::move(gens)), cfg.max_terms);
  if (implies(a, as, cfg).ok()) return a;
  return as;
}

namespace {

struct FirstFailure {
  const Obligation *disproved = nullptr;
  const Obligation *unknown = nullptr;
};

FirstFailure scan(const ProofTrace &t) {
  FirstFailure f;
  for (const auto &step : t.steps) {
    for (const auto &o : step.obligations) {
      if (o.status.kind == ProofStatus::Kind::Disproved && !f.disproved) f.disproved = &o;
      if (o.status.kind == ProofStatus::Kind::Unknown && !f.unknown) f.unknown = &o;
    }
  }
  return f;
}

}  // namespace

VerificationOutcome verify_triple(const Triple &t, const VerifyConfig &cfg) {
  const auto start = std::chrono::steady_clock::now();
  VerificationOutcome out;
  try {
    const auto prog = expand_correct(t.program, cfg.registry, true);
    if (!prog.body) throw InputError("program has no body");
    const auto sig = symbolic_sigma(prog.svars, t.sigma);
    const auto pre = assertion_simplify(t.pre, cfg.imply.max_terms);
    auto r = sp(pre, sig, *prog.body, &out.trace, cfg, t.invariants, prog.decoder_bindings);
    out.final_assertion = r.post;

    std::vector<Obligation> obs;
    obs.push_back({"Consequence", r.post, t.post, implies(r.post, t.post, cfg.imply)});
    if (!r.post.is_false()) {
      for (const auto &[name, e] : r.sigma) {
        if (e.state == SigmaEntry::State::Off) continue;
        const Assertion val = e.state == SigmaEntry::State::Unknown
                                  ? Assertion::truth()
                                  : Assertion::leaf(e.value.unsigned_part());
        if (e.state == SigmaEntry::State::Unknown) {
          obs.push_back({"Sigma", t.post, val, ProofStatus::unknown("UnresolvedSigma")});
        } else if (!assertion_commutes(t.post, e.value)) {
          obs.push_back({"Sigma", t.post, val,
                         ProofStatus::disproved("postcondition does not commute with " + name +
                                                "=" + to_string(e.value))});
        }
      }
    }
    out.trace.steps.push_back({"Consequence", "", r.post, t.post, std::move(obs), {}});

    const auto f = scan(out.trace);
    if (f.disproved) {
      out.status = VerificationOutcome::Status::Refuted;
      out.detail = f.disproved->rule + ": " + f.disproved->status.detail;
    } else if (f.unknown) {
      out.status = VerificationOutcome::Status::Inconclusive;
      out.detail = f.unknown->status.detail;
    } else {
      out.status = VerificationOutcome::Status::Verified;
    }
  } catch (const Error &e) {
    out.status = VerificationOutcome::Status::Inconclusive;
    out.detail = e.kind();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

OracleReport oracle_check(const Triple &t, const OracleCheckConfig &cfg) {
  const auto prog = expand_correct(t.program, cfg.registry, true);
  if (prog.n_qubits > cfg.oracle_cap) {
    throw OracleCapExceeded(std::to_string(prog.n_qubits) + " qubits exceed the cap of " +
                            std::to_string(cfg.oracle_cap));
  }
  OracleConfig ocfg;
  ocfg.oracle_cap = cfg.oracle_cap;
  ocfg.unroll_cap = cfg.unroll_cap;
  ocfg.tol = cfg.tol;
  const auto states =
      sample_pre_states(t.pre, prog.n_qubits, cfg.samples, cfg.seed, t.sigma, cfg.oracle_cap);
  OracleReport rep;
  for (std::size_t i = 0; i < states.size(); ++i) {
    ++rep.samples;
    const auto r = run_program(prog, states[i], ocfg);
    std::string reason;
    if (r.inconclusive(cfg.tol)) reason = "residual mass " + std::to_string(r.residual_mass());
    for (const auto &b : r.branches) {
      if (!reason.empty()) break;
      if (!satisfies(b, t.post, cfg.tol, cfg.oracle_cap)) {
        reason = "branch with sigma " + to_string(b.sigma) + " violates the postcondition";
      }
    }
    if (reason.empty()) {
      ++rep.passed;
    } else {
      rep.failures.push_back({static_cast<int>(i), std::move(reason)});
    }
  }
  return rep;
}

std::string report_json(const Triple &t, const VerificationOutcome &o) {
  nlohmann::json j;
  j["name"] = t.name;
  j["status"] = to_string(o.status);
  if (!o.detail.empty()) j["detail"] = o.detail;
  auto obs = nlohmann::json::array();
  for (const auto &s : o.trace.steps) {
    for (const auto &ob : s.obligations) {
      obs.push_back({{"rule", ob.rule},
                     {"lhs", to_string(ob.lhs)},
                     {"rhs", to_string(ob.rhs)},
                     {"status", to_string(ob.status.kind)}});
    }
  }
  j["obligations"] = std::move(obs);
  j["timings"] = {{"verify_seconds", o.seconds}};
  return j.dump(2);
}

std::string report_text(const Triple &t, const VerificationOutcome &o) {
  std::ostringstream os;
  os << t.name << ": " << to_string(o.status);
  if (!o.detail.empty()) os << " (" << o.detail << ")";
  os << "\n";
  for (const auto &s : o.trace.steps) {
    os << "  " << s.rule;
    if (!s.stmt.empty()) os << "  " << s.stmt;
    os << "\n    => " << to_string(s.post) << "\n";
    for (const auto &ob : s.obligations) {
      os << "    [" << to_string(ob.status.kind) << "] " << to_string(ob.lhs) << " => "
         << to_string(ob.rhs);
      if (!ob.status.detail.empty()) os << "  (" << ob.status.detail << ")";
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace qecv
