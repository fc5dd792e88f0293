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

#include <algorithm>

#include "corpus_internal.hpp"
#include "qecv/decoder.hpp"
#include "qecv/error.hpp"

namespace qecv {

using namespace corpus_detail;

std::vector<SignedPauli> repetition_stabilizers(int d, Qubit offset) {
  std::vector<SignedPauli> out;
  for (int i = 0; i + 1 < d; ++i) {
    out.push_back(SignedPauli::uniform(Letter::Z, {offset + i, offset + i + 1}));
  }
  return out;
}

ProgramUnit repetition_decoder(int d) {
  const auto stabs = repetition_stabilizers(d);
  return make_lookup_decoder("rep" + std::to_string(d) + "_lookup", d, svar_names(0, d - 1),
                             stabs, single_error_table(stabs));
}

namespace {

void check_distance(int d) {
  if (d < 3 || d % 2 == 0) {
    throw InvalidDistance("repetition distance must be odd and >= 3, got " + std::to_string(d));
  }
}

// Data qubits listed high to low, as in q2 q1 q0.
std::vector<Qubit> descending(Qubit from, Qubit to) {
  auto qs = range_qubits(from, to);
  std::reverse(qs.begin(), qs.end());
  return qs;
}

struct RepCode {
  int d;
  std::vector<std::string> vars;
  std::vector<SignedPauli> stabs;
  SignedPauli zl, xl;

  explicit RepCode(int dist)
      : d(dist),
        vars(svar_names(0, dist - 1)),
        stabs(repetition_stabilizers(dist)),
        zl(SignedPauli::uniform(Letter::Z, range_qubits(0, dist))),
        xl(SignedPauli::uniform(Letter::X, range_qubits(0, dist))) {}

  std::string prefix() const { return "rep" + std::to_string(d); }
  Sigma sigma() const { return sigma_of(vars, stabs); }

  void all_off(ProgramText &pt) const {
    for (const auto &v : vars) pt.off(v);
  }
  void all_on(ProgramText &pt) const {
    for (std::size_t i = 0; i < vars.size(); ++i) pt.assign(vars[i], stabs[i]);
  }
};

std::string neg(const SignedPauli &p) { return to_string(p.negated()); }

CaseStudy rep_init(const RepCode &c) {
  ProgramText pt(c.prefix() + "_init", c.d, c.vars);
  pt.init(descending(0, c.d));
  c.all_on(pt);
  pt.correct(c.vars, kAxiomatic);
  auto cs = new_case(c.prefix() + ".init", "repetition", pt.build(), c.d <= kDefaultOracleCap);
  cs.triples.push_back(make_triple(c.prefix() + ".init", "repetition/init", "TRUE", cs.program,
                                   with(to_string(c.zl), c.stabs)));
  return cs;
}

CaseStudy rep_logical(const RepCode &c, Letter l) {
  const bool is_x = l == Letter::X;
  const std::string tag = is_x ? "logical_x" : "logical_z";
  ProgramText pt(c.prefix() + "_" + tag, c.d, c.vars);
  c.all_off(pt);
  pt.apply(is_x ? c.xl : c.zl);
  c.all_on(pt);
  auto cs = new_case(c.prefix() + "." + tag, "repetition", pt.build(), c.d <= kDefaultOracleCap);
  // X_L flips Z_L and Z_L flips X_L.
  const auto &obs = is_x ? c.zl : c.xl;
  cs.triples.push_back(make_triple(cs.name + ".plus", "repetition/" + tag, with(to_string(obs), c.stabs),
                                   cs.program, with(neg(obs), c.stabs), c.sigma()));
  cs.triples.push_back(make_triple(cs.name + ".minus", "repetition/" + tag, with(neg(obs), c.stabs),
                                   cs.program, with(to_string(obs), c.stabs), c.sigma()));
  return cs;
}

CaseStudy rep_cnot(const RepCode &c) {
  const int d = c.d;
  auto vars = svar_names(0, 2 * (d - 1));
  auto stabs = repetition_stabilizers(d);
  const auto second = repetition_stabilizers(d, d);
  stabs.insert(stabs.end(), second.begin(), second.end());
  ProgramText pt(c.prefix() + "_cnot", 2 * d, vars);
  for (const auto &v : vars) pt.off(v);
  for (int i = 0; i < d; ++i) pt.gate("CX", {Qubit(i), Qubit(d + i)});
  for (std::size_t i = 0; i < vars.size(); ++i) pt.assign(vars[i], stabs[i]);
  auto cs = new_case(c.prefix() + ".cnot", "repetition", pt.build(), 2 * d <= kDefaultOracleCap);

  const auto z0 = c.zl, x0 = c.xl;
  const auto z1 = SignedPauli::uniform(Letter::Z, range_qubits(d, 2 * d));
  const auto x1 = SignedPauli::uniform(Letter::X, range_qubits(d, 2 * d));
  const auto sig = sigma_of(vars, stabs);
  auto add = [&](const std::string &suffix, const SignedPauli &pre, const SignedPauli &post) {
    cs.triples.push_back(make_triple(cs.name + "." + suffix, "repetition/cnot",
                                     with(to_string(pre), stabs), cs.program,
                                     with(to_string(post), stabs), sig));
  };
  add("zi", z0, z0);
  add("xi", x0, mul_pauli(x0, x1));
  add("ix", x1, x1);
  add("iz", z1, mul_pauli(z0, z1));
  return cs;
}

// Logical X followed by a single Pauli error on q1 and one decoding round.
CaseStudy rep_noisy(const RepCode &c, Letter err) {
  const bool x_err = err == Letter::X;
  const std::string tag = x_err ? "noisy_x" : "noisy_z";
  const auto decoder = repetition_decoder(c.d);
  ProgramText pt(c.prefix() + "_" + tag, c.d, c.vars);
  c.all_off(pt);
  pt.apply(c.xl);
  pt.comment(std::string("an ") + (x_err ? "X" : "Z") + " error on q1");
  pt.gate(x_err ? "X" : "Z", {1});
  c.all_on(pt);
  pt.correct(c.vars, decoder.name);
  auto cs = new_case(c.prefix() + "." + tag, "repetition", pt.build(), c.d <= kDefaultOracleCap);
  cs.registry[decoder.name] = decoder;
  // The X error is corrected; the Z error passes through as a logical flip.
  const auto &obs = x_err ? c.zl : c.xl;
  const std::string family_tag = x_err ? "repetition/noisy_x" : "repetition/noisyfail";
  cs.triples.push_back(make_triple(cs.name + ".plus", family_tag, with(to_string(obs), c.stabs),
                                   cs.program, with(neg(obs), c.stabs), c.sigma()));
  cs.triples.push_back(make_triple(cs.name + ".minus", family_tag, with(neg(obs), c.stabs),
                                   cs.program, with(to_string(obs), c.stabs), c.sigma()));
  return cs;
}

}  // namespace

std::vector<CaseStudy> gen_repetition_suite(int d) {
  check_distance(d);
  const RepCode c(d);
  return {rep_init(c),        rep_logical(c, Letter::X), rep_logical(c, Letter::Z),
          rep_cnot(c),        rep_noisy(c, Letter::X),   rep_noisy(c, Letter::Z)};
}

ProgramUnit qecv_syndrome_round(int d) {
  check_distance(d);
  const RepCode c(d);
  ProgramText pt(c.prefix() + "_round", d, c.vars);
  c.all_on(pt);
  return pt.build();
}

ProgramUnit gate_level_syndrome_round(int d) {
  check_distance(d);
  // One ancilla (qubit d) reused for every stabilizer: reset, H, a CZ per
  // data qubit, H, then a Z measurement whose -1 outcome resets the ancilla.
  const auto stabs = repetition_stabilizers(d);
  std::vector<std::string> vars;
  for (int i = 0; i + 1 < d; ++i) vars.push_back("m" + std::to_string(i));
  ProgramText pt("rep" + std::to_string(d) + "_round_gates", d + 1, vars);
  const Qubit a = d;
  for (std::size_t i = 0; i < stabs.size(); ++i) {
    pt.init({a});
    pt.gate("H", {a});
    for (Qubit q : stabs[i].support()) pt.gate("CZ", {a, q});
    pt.gate("H", {a});
    pt.assign(vars[i], SignedPauli::single(Letter::Z, a));
    pt.line("if M[" + vars[i] + "; q" + std::to_string(a) + "] then skip else q" +
            std::to_string(a) + " := X q" + std::to_string(a) + "; " + vars[i] + " := -" +
            vars[i] + " end");
  }
  return pt.build();
}

}  // namespace qecv
