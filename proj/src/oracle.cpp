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

#include "qecv/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "qecv/decoder.hpp"
#include "qecv/error.hpp"

namespace qecv {

using Eigen::MatrixXcd;
namespace kn = kernels;

std::string to_string(const Sigma &s) {
  std::string out = "{";
  for (const auto &[name, v] : s) {
    if (v.is_identity()) continue;
    if (out.size() > 1) out += ", ";
    out += name + "=" + to_string(v);
  }
  return out + "}";
}

MachineState basis_state(const std::string &bits, Sigma sigma) {
  const int n = static_cast<int>(bits.size());
  if (n == 0 || n > 30) throw InputError("basis state needs 1 to 30 bits");
  std::uint64_t index = 0;
  for (int q = 0; q < n; ++q) {
    const char b = bits[static_cast<std::size_t>(n - 1 - q)];
    if (b != '0' && b != '1') throw InputError("basis state bits must be 0 or 1");
    if (b == '1') index |= std::uint64_t{1} << q;
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  MatrixXcd rho = MatrixXcd::Zero(dim, dim);
  rho(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
  return {std::move(rho), std::move(sigma)};
}

double ExecutionResult::branch_mass() const {
  double m = 0.0;
  for (const auto &b : branches) m += kn::trace(b.rho, kn::Exec::Serial);
  return m;
}

double ExecutionResult::residual_mass() const {
  double m = 0.0;
  for (const auto &b : residual) m += kn::trace(b.rho, kn::Exec::Serial);
  return m;
}

namespace {

const Complex kI{0.0, 1.0};

MatrixXcd named_matrix(GateKind k) {
  const double r = 1.0 / std::sqrt(2.0);
  MatrixXcd m;
  switch (k) {
    case GateKind::X: m.resize(2, 2); m << 0, 1, 1, 0; break;
    case GateKind::Y: m.resize(2, 2); m << 0, -kI, kI, 0; break;
    case GateKind::Z: m.resize(2, 2); m << 1, 0, 0, -1; break;
    case GateKind::H: m.resize(2, 2); m << r, r, r, -r; break;
    case GateKind::S: m.resize(2, 2); m << 1, 0, 0, kI; break;
    case GateKind::T: m.resize(2, 2); m << 1, 0, 0, std::polar(1.0, M_PI / 4.0); break;
    case GateKind::CNOT:
      // local bit 0 = control, bit 1 = target
      m = MatrixXcd::Zero(4, 4);
      m(0, 0) = m(3, 1) = m(2, 2) = m(1, 3) = 1.0;
      break;
    case GateKind::CZ:
      m = MatrixXcd::Identity(4, 4);
      m(3, 3) = -1.0;
      break;
    case GateKind::Expr: break;
  }
  return m;
}

MatrixXcd local_unitary(const GateApp &g) {
  if (g.kind != GateKind::Expr) return named_matrix(g.kind);
  std::map<Qubit, Qubit> local;
  for (std::size_t j = 0; j < g.operands.size(); ++j) local[g.operands[j]] = static_cast<Qubit>(j);
  std::vector<Term> terms;
  for (const auto &t : g.expr->terms()) {
    std::map<Qubit, Letter> letters;
    for (const auto &[q, l] : t.pauli.letters()) {
      auto it = local.find(q);
      if (it == local.end()) {
        throw InputError("inline unitary acts on q" + std::to_string(q) +
                         " outside its operand list");
      }
      letters[it->second] = l;
    }
    terms.push_back({t.coeff, SignedPauli(0, std::move(letters))});
  }
  const int k = static_cast<int>(g.operands.size());
  const std::size_t n = terms.size();
  return expr_to_matrix(StabilizerExpr::from_terms(std::move(terms), n), k, k);
}

SignedPauli sigma_value(const Sigma &s, const std::string &var, const ProgramUnit &p) {
  if (!p.declares(var)) throw UndeclaredSVar("'" + var + "' is not declared");
  auto it = s.find(var);
  return it == s.end() ? SignedPauli::identity() : it->second;
}

void check_measurable(const SignedPauli &v, const std::string &var) {
  if (!v.is_hermitian()) {
    throw InputError("stabilizer variable '" + var + "' holds " + to_string(v) +
                     ", which cannot be measured");
  }
}

double mass(const MatrixXcd &rho) { return kn::trace(rho, kn::Exec::Serial); }

MatrixXcd measure(const MatrixXcd &rho, const SignedPauli &v, int sign, kn::Exec exec) {
  return kn::project(rho, kn::make_mask(v), sign, exec);
}

void apply_assign(Sigma &sigma, const SAssign &a, const ProgramUnit &p) {
  sigma_value(sigma, a.var, p);
  switch (a.rhs.kind) {
    case UnaryStabExpr::Kind::Literal: sigma[a.var] = a.rhs.literal; break;
    case UnaryStabExpr::Kind::PosVar: sigma[a.var] = sigma_value(sigma, a.rhs.var, p); break;
    case UnaryStabExpr::Kind::NegVar:
      sigma[a.var] = sigma_value(sigma, a.rhs.var, p).negated();
      break;
    case UnaryStabExpr::Kind::IdentityOff: sigma.erase(a.var); break;
  }
}

MatrixXcd apply_init(MatrixXcd rho, const Init &init, kn::Exec exec) {
  for (Qubit q : init.qubits) rho = kn::reset(rho, q, exec);
  return rho;
}

StmtPtr resolve_correct(const Correct &c, const Sigma &sigma, const ProgramUnit &p) {
  std::vector<SignedPauli> stabs;
  for (const auto &v : c.vars) {
    stabs.push_back(sigma_value(sigma, v, p));
    check_measurable(stabs.back(), v);
  }
  return lookup_decoder_body(c.vars, stabs, single_error_table(stabs));
}

std::string one_line(const Stmt &s) {
  std::string text = print_stmt(s);
  std::string out;
  bool space = false;
  for (char ch : text) {
    if (ch == '\n' || ch == ' ') {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += ch;
  }
  if (out.size() > 160) out = out.substr(0, 157) + "...";
  return out;
}

void check_width(const ProgramUnit &p, const MachineState &s, const OracleConfig &cfg) {
  if (p.n_qubits > cfg.oracle_cap) {
    throw OracleCapExceeded(std::to_string(p.n_qubits) + " qubits exceed the cap of " +
                            std::to_string(cfg.oracle_cap));
  }
  if (kn::qubits_of(s.rho) != p.n_qubits) {
    throw InputError("initial state has " + std::to_string(kn::qubits_of(s.rho)) +
                     " qubits, program declares " + std::to_string(p.n_qubits));
  }
  for (const auto &[name, v] : s.sigma) sigma_value(s.sigma, name, p);
}

// Expands leading sequences so the front is a primitive statement.
void settle(Configuration &c) {
  while (!c.rest.empty()) {
    const auto *seq = c.rest.front()->as<Seq>();
    if (!seq) return;
    auto items = seq->items;
    c.rest.erase(c.rest.begin());
    c.rest.insert(c.rest.begin(), items.begin(), items.end());
  }
}

}  // namespace

std::vector<Configuration> step(const Configuration &c, const ProgramUnit &p,
                                const OracleConfig &cfg, std::string *rule) {
  Configuration base = c;
  settle(base);
  if (base.rest.empty()) return {};
  const StmtPtr s = base.rest.front();
  base.rest.erase(base.rest.begin());
  auto named = [&](const char *r) {
    if (rule) *rule = r;
  };
  std::vector<Configuration> out;
  auto keep = [&](Configuration next) {
    if (mass(next.state.rho) >= cfg.mass_floor) out.push_back(std::move(next));
  };

  if (s->is<Skip>()) {
    named("Skip");
    out.push_back(std::move(base));
  } else if (const auto *init = s->as<Init>()) {
    named("Init");
    base.state.rho = apply_init(std::move(base.state.rho), *init, cfg.exec);
    out.push_back(std::move(base));
  } else if (const auto *u = s->as<Unitary>()) {
    named("Unitary");
    base.state.rho = kn::apply_local(base.state.rho, local_unitary(u->gate), u->gate.operands,
                                     cfg.exec);
    out.push_back(std::move(base));
  } else if (const auto *a = s->as<SAssign>()) {
    named("Assign");
    apply_assign(base.state.sigma, *a, p);
    out.push_back(std::move(base));
  } else if (const auto *ifm = s->as<IfM>()) {
    named("If");
    const auto v = sigma_value(base.state.sigma, ifm->var, p);
    check_measurable(v, ifm->var);
    Configuration one = base;
    one.state.rho = measure(base.state.rho, v, 1, cfg.exec);
    one.rest.insert(one.rest.begin(), ifm->then_branch);
    keep(std::move(one));
    Configuration zero = std::move(base);
    zero.state.rho = measure(zero.state.rho, v, -1, cfg.exec);
    zero.state.sigma[ifm->var] = v.negated();
    if (ifm->else_branch) zero.rest.insert(zero.rest.begin(), ifm->else_branch);
    keep(std::move(zero));
  } else if (const auto *w = s->as<WhileM>()) {
    named("While");
    const auto v = sigma_value(base.state.sigma, w->var, p);
    check_measurable(v, w->var);
    Configuration one = base;
    one.state.rho = measure(base.state.rho, v, 1, cfg.exec);
    one.rest.insert(one.rest.begin(), {w->body, s});
    ++one.unrolled;
    keep(std::move(one));
    Configuration zero = std::move(base);
    zero.state.rho = measure(zero.state.rho, v, -1, cfg.exec);
    zero.state.sigma[w->var] = v.negated();
    keep(std::move(zero));
  } else if (const auto *corr = s->as<Correct>()) {
    named("Correct");
    base.rest.insert(base.rest.begin(), resolve_correct(*corr, base.state.sigma, p));
    out.push_back(std::move(base));
  }
  return out;
}

ExecutionResult run_program(const ProgramUnit &p, const MachineState &init,
                            const OracleConfig &cfg) {
  check_width(p, init, cfg);
  ExecutionResult result;
  std::deque<Configuration> work;
  work.push_back({{p.body ? p.body : make_skip()}, init, 0});
  int steps = 0;
  while (!work.empty()) {
    Configuration c = std::move(work.front());
    work.pop_front();
    settle(c);
    if (c.rest.empty()) {
      result.branches.push_back(std::move(c.state));
      continue;
    }
    if (c.rest.front()->is<WhileM>() && c.unrolled >= cfg.unroll_cap) {
      result.residual.push_back(std::move(c.state));
      continue;
    }
    const std::string text = cfg.record_trace ? one_line(*c.rest.front()) : std::string();
    std::string rule;
    auto next = step(c, p, cfg, &rule);
    ++steps;
    for (auto &n : next) {
      if (cfg.record_trace) {
        result.trace.push_back({steps, rule, text, n.state.sigma, mass(n.state.rho),
                                rho_digest(n.state.rho)});
      }
      work.push_back(std::move(n));
    }
  }
  return result;
}

namespace {

struct Denoter {
  const ProgramUnit &p;
  const OracleConfig &cfg;
  std::vector<MachineState> &residual;

  static constexpr kn::Exec kExec = kn::Exec::Serial;

  void emit(std::vector<MachineState> &out, MachineState s) const {
    if (mass(s.rho) >= cfg.mass_floor) out.push_back(std::move(s));
  }

  std::vector<MachineState> run(const StmtPtr &s, MachineState in) const {
    std::vector<MachineState> out;
    if (!s || s->is<Skip>()) {
      out.push_back(std::move(in));
    } else if (const auto *init = s->as<Init>()) {
      in.rho = apply_init(std::move(in.rho), *init, kExec);
      out.push_back(std::move(in));
    } else if (const auto *u = s->as<Unitary>()) {
      in.rho = kn::apply_local(in.rho, local_unitary(u->gate), u->gate.operands, kExec);
      out.push_back(std::move(in));
    } else if (const auto *a = s->as<SAssign>()) {
      apply_assign(in.sigma, *a, p);
      out.push_back(std::move(in));
    } else if (const auto *seq = s->as<Seq>()) {
      std::vector<MachineState> cur{std::move(in)};
      for (const auto &item : seq->items) {
        std::vector<MachineState> next;
        for (auto &st : cur) {
          for (auto &r : run(item, std::move(st))) next.push_back(std::move(r));
        }
        cur = std::move(next);
      }
      return cur;
    } else if (const auto *ifm = s->as<IfM>()) {
      const auto v = sigma_value(in.sigma, ifm->var, p);
      check_measurable(v, ifm->var);
      MachineState one{measure(in.rho, v, 1, kExec), in.sigma};
      MachineState zero{measure(in.rho, v, -1, kExec), in.sigma};
      zero.sigma[ifm->var] = v.negated();
      if (mass(one.rho) >= cfg.mass_floor) {
        for (auto &r : run(ifm->then_branch, std::move(one))) out.push_back(std::move(r));
      }
      if (mass(zero.rho) >= cfg.mass_floor) {
        for (auto &r : run(ifm->else_branch, std::move(zero))) out.push_back(std::move(r));
      }
    } else if (const auto *w = s->as<WhileM>()) {
      std::vector<MachineState> cur{std::move(in)};
      for (int k = 0; !cur.empty(); ++k) {
        if (k == cfg.unroll_cap) {
          for (auto &st : cur) residual.push_back(std::move(st));
          break;
        }
        std::vector<MachineState> next;
        for (auto &st : cur) {
          const auto v = sigma_value(st.sigma, w->var, p);
          check_measurable(v, w->var);
          MachineState zero{measure(st.rho, v, -1, kExec), st.sigma};
          zero.sigma[w->var] = v.negated();
          emit(out, std::move(zero));
          MachineState one{measure(st.rho, v, 1, kExec), st.sigma};
          if (mass(one.rho) < cfg.mass_floor) continue;
          for (auto &r : run(w->body, std::move(one))) next.push_back(std::move(r));
        }
        cur = std::move(next);
      }
    } else if (const auto *c = s->as<Correct>()) {
      const auto body = resolve_correct(*c, in.sigma, p);
      return run(body, std::move(in));
    }
    return out;
  }
};

}  // namespace

ExecutionResult run_denotational(const ProgramUnit &p, const MachineState &init,
                                 const OracleConfig &cfg) {
  check_width(p, init, cfg);
  ExecutionResult result;
  Denoter d{p, cfg, result.residual};
  result.branches = d.run(p.body, init);
  return result;
}

std::map<std::string, MatrixXcd> aggregate(const std::vector<MachineState> &branches) {
  std::map<std::string, MatrixXcd> out;
  for (const auto &b : branches) {
    auto [it, fresh] = out.try_emplace(to_string(b.sigma), b.rho);
    if (!fresh) it->second += b.rho;
  }
  return out;
}

double aggregate_distance(const std::vector<MachineState> &a,
                          const std::vector<MachineState> &b) {
  const auto sa = aggregate(a), sb = aggregate(b);
  double worst = 0.0;
  for (const auto &[k, m] : sa) {
    auto it = sb.find(k);
    worst = std::max(worst, it == sb.end() ? m.norm() : (m - it->second).norm());
  }
  for (const auto &[k, m] : sb) {
    if (!sa.count(k)) worst = std::max(worst, m.norm());
  }
  return worst;
}

namespace {

class Checker {
 public:
  Checker(int n, double tol, int cap) : n_(n), tol_(tol), cap_(cap) {}

  bool holds(const MachineState &s, const Assertion &a) {
    using K = Assertion::Kind;
    switch (a.kind) {
      case K::True: return true;
      case K::False: return false;
      case K::And:
        return std::all_of(a.children.begin(), a.children.end(),
                           [&](const Assertion &c) { return holds(s, c); });
      case K::Or:
        return std::any_of(a.children.begin(), a.children.end(),
                           [&](const Assertion &c) { return holds(s, c); });
      case K::Implies: return !holds(s, a.children[0]) || holds(s, a.children[1]);
      case K::Expr: break;
    }
    if (static_cast<int>(a.expr.width()) > n_) {
      throw InputError(to_string(a.expr) + " acts outside the " + std::to_string(n_) +
                       "-qubit register");
    }
    if ((kn::expr_left(s.rho, a.expr) - s.rho).norm() > tol_) return false;
    for (const auto &[name, v] : s.sigma) {
      if (!v.has_identity_letters() && !commutes_with(a.expr, v)) return false;
    }
    return true;
  }

 private:
  bool commutes_with(const StabilizerExpr &e, const SignedPauli &v) {
    const std::string key = to_string(e) + "|" + to_string(v);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const MatrixXcd vm = pauli_to_matrix(v, n_, cap_);
    const MatrixXcd ev = kn::expr_left(vm, e);
    const MatrixXcd ve = kn::expr_left(vm.adjoint(), e.dagger()).adjoint();
    const bool ok = (ev - ve).norm() <= tol_;
    cache_.emplace(key, ok);
    return ok;
  }

  int n_;
  double tol_;
  int cap_;
  std::map<std::string, bool> cache_;
};

}  // namespace

bool satisfies(const MachineState &s, const Assertion &a, double tol, int oracle_cap) {
  const int n = kn::qubits_of(s.rho);
  if (n > oracle_cap) {
    throw OracleCapExceeded(std::to_string(n) + " qubits exceed the cap of " +
                            std::to_string(oracle_cap));
  }
  Checker c(n, tol, oracle_cap);
  return c.holds(s, a);
}

namespace {

// Sampler for one conjunction: literals are applied as projectors, sum
// leaves go through an explicit basis of the common fixed space.
struct Component {
  std::vector<SignedPauli> literals;
  MatrixXcd basis;  // empty unless sum leaves are present
  bool use_basis = false;
};

std::optional<Component> make_component(const Assertion &a, int n) {
  using K = Assertion::Kind;
  std::vector<StabilizerExpr> leaves;
  if (a.kind == K::Expr) {
    leaves.push_back(a.expr);
  } else if (a.kind == K::And) {
    for (const auto &c : a.children) {
      if (c.kind != K::Expr) {
        throw InputError("cannot sample from nested assertion " + to_string(a));
      }
      leaves.push_back(c.expr);
    }
  } else if (a.kind != K::True) {
    throw InputError("cannot sample from " + to_string(a));
  }
  Component comp;
  bool sums = false;
  for (const auto &l : leaves) {
    auto lit = l.as_pauli(1e-12);
    if (lit && lit->is_hermitian()) comp.literals.push_back(*lit);
    else sums = true;
  }
  if (!SignedTableau::build(comp.literals)) return std::nullopt;
  if (sums) {
    std::vector<Qubit> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), Qubit{0});
    comp.basis = fixed_space(leaves, all, 1e-9);
    comp.use_basis = true;
    if (comp.basis.cols() == 0) return std::nullopt;
  }
  return comp;
}

}  // namespace

std::vector<MachineState> sample_pre_states(const Assertion &a, int n_qubits, int count,
                                            std::uint64_t seed, const Sigma &sigma,
                                            int oracle_cap) {
  if (n_qubits > oracle_cap) {
    throw OracleCapExceeded(std::to_string(n_qubits) + " qubits exceed the cap of " +
                            std::to_string(oracle_cap));
  }
  const Assertion s = assertion_simplify(a);
  if (static_cast<int>(s.width()) > n_qubits) {
    throw InputError(to_string(a) + " acts outside the " + std::to_string(n_qubits) +
                     "-qubit register");
  }
  for (const auto &[name, v] : sigma) {
    if (!v.has_identity_letters() && !assertion_commutes(s, v)) {
      throw UnsatisfiableAssertion(to_string(a) + " does not commute with " + name + "=" +
                                   to_string(v));
    }
  }
  std::vector<Component> comps;
  if (s.kind == Assertion::Kind::Or) {
    for (const auto &c : s.children) {
      if (auto comp = make_component(c, n_qubits)) comps.push_back(std::move(*comp));
    }
  } else if (!s.is_false()) {
    if (auto comp = make_component(s, n_qubits)) comps.push_back(std::move(*comp));
  }
  if (comps.empty()) throw UnsatisfiableAssertion(to_string(a) + " has no satisfying state");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_int_distribution<std::size_t> pick(0, comps.size() - 1);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  std::vector<MachineState> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    const Component &c = comps[pick(rng)];
    MatrixXcd v;
    if (c.use_basis) {
      Eigen::VectorXcd g(c.basis.cols());
      for (Eigen::Index i = 0; i < g.size(); ++i) g[i] = Complex(gauss(rng), gauss(rng));
      v = c.basis * g;
    } else {
      v.resize(dim, 1);
      for (Eigen::Index i = 0; i < dim; ++i) v(i, 0) = Complex(gauss(rng), gauss(rng));
      for (const auto &lit : c.literals) {
        v = 0.5 * (v + kn::pauli_left(v, kn::make_mask(lit), kn::Exec::Serial));
      }
    }
    const double norm = v.norm();
    if (norm < 1e-8) continue;
    v /= norm;
    out.push_back({v * v.adjoint(), sigma});
  }
  return out;
}

std::string rho_digest(const MatrixXcd &rho) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](long long x) {
    auto u = static_cast<std::uint64_t>(x);
    for (int i = 0; i < 8; ++i) {
      h ^= (u >> (8 * i)) & 0xffu;
      h *= 1099511628211ULL;
    }
  };
  mix(rho.rows());
  for (Eigen::Index c = 0; c < rho.cols(); ++c) {
    for (Eigen::Index r = 0; r < rho.rows(); ++r) {
      mix(std::llround(rho(r, c).real() * 1e9));
      mix(std::llround(rho(r, c).imag() * 1e9));
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string trace_jsonl(const ExecutionResult &r) {
  std::ostringstream os;
  for (const auto &e : r.trace) {
    nlohmann::json sigma = nlohmann::json::object();
    for (const auto &[k, v] : e.sigma) {
      if (!v.is_identity()) sigma[k] = to_string(v);
    }
    nlohmann::json j = {{"step", e.step},     {"rule", e.rule},     {"stmt", e.stmt},
                        {"sigma", sigma},     {"weight", e.weight}, {"rho_digest", e.rho_digest}};
    os << j.dump() << '\n';
  }
  return os.str();
}

}  // namespace qecv
