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

#include <gtest/gtest.h>

#include "brute.hpp"
#include "qecv/corpus.hpp"
#include "qecv/error.hpp"
#include "qecv/oracle.hpp"

namespace qecv {
namespace {

ProgramUnit prog(const std::string &s) { return parse_program(s); }

TEST(Operational, ErrorCorrectionExample) {
  const auto p = prog(R"(qubits: 4
svars: s0

s0 := Z0*Z1*Z2*Z3
if M[s0; q3 q2 q1 q0] then
  skip
else
  q0 := X q0
  s0 := -s0
end
)");
  const auto r = run_program(p, basis_state("0001"));
  ASSERT_EQ(r.branches.size(), 1u);
  brute::Mat want = brute::Mat::Zero(16, 16);
  want(0, 0) = 1.0;
  EXPECT_LT((r.branches[0].rho - want).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(r.branches[0].sigma.at("s0"), parse_pauli("Z0*Z1*Z2*Z3"));
}

TEST(Operational, SkipIsOneStep) {
  OracleConfig cfg;
  cfg.record_trace = true;
  const auto r = run_program(prog("qubits: 1\nsvars:\n\nskip\n"), basis_state("0"), cfg);
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0].rule, "Skip");
  ASSERT_EQ(r.branches.size(), 1u);
}

TEST(Operational, UnitariesMatchReference) {
  brute::Gen g(301);
  for (int i = 0; i < 20; ++i) {
    const int n = 3;
    std::string body;
    brute::Mat u = brute::Mat::Identity(8, 8);
    for (int k = 0; k < 4; ++k) {
      const auto gate = k == 2 ? GateApp::named(GateKind::T, {1}) : g.clifford(n);
      std::string qs;
      for (Qubit q : gate.operands) qs += (qs.empty() ? "q" : " q") + std::to_string(q);
      body += qs + " := " + gate_name(gate.kind) + " " + qs + "\n";
      u = (brute::gate(gate, n) * u).eval();
    }
    const auto r = run_program(prog("qubits: 3\nsvars:\n\n" + body), basis_state("000"));
    ASSERT_EQ(r.branches.size(), 1u);
    const brute::Mat rho0 = brute::proj(0, 0, 3) * brute::proj(1, 0, 3) * brute::proj(2, 0, 3);
    EXPECT_LT((r.branches[0].rho - u * rho0 * u.adjoint()).norm(), 1e-12) << body;
  }
}

TEST(Operational, RepFiveDecoderFixesEverySingleFlip) {
  const int d = 5;
  const auto stabs = repetition_stabilizers(d);
  Sigma sigma;
  for (int i = 0; i + 1 < d; ++i) sigma["s" + std::to_string(i)] = stabs[static_cast<std::size_t>(i)];
  const auto dec = repetition_decoder(d);
  for (int i = 0; i < d; ++i) {
    std::string bits(d, '0');
    bits[static_cast<std::size_t>(d - 1 - i)] = '1';
    const auto r = run_program(dec, basis_state(bits, sigma));
    ASSERT_EQ(r.branches.size(), 1u) << i;
    EXPECT_NEAR(std::abs(r.branches[0].rho(0, 0)), 1.0, 1e-12) << i;
    for (const auto &[k, v] : r.branches[0].sigma) EXPECT_EQ(v, sigma.at(k)) << i;
  }
}

TEST(Operational, CapAndSamples) {
  std::string wide = "qubits: 13\nsvars:\n\nskip\n";
  EXPECT_THROW(run_program(prog(wide), basis_state(std::string(13, '0'))), OracleCapExceeded);
  EXPECT_THROW(sample_pre_states(parse_assertion("Z0 /\\ X0"), 1, 3, 0), UnsatisfiableAssertion);
  const auto pre = parse_assertion("Z0*Z1 /\\ X0*X1");
  for (const auto &s : sample_pre_states(pre, 2, 10, 4)) {
    EXPECT_TRUE(satisfies(s, pre));
    EXPECT_FALSE(satisfies(s, parse_assertion("-Z0*Z1")));
  }
  EXPECT_TRUE(satisfies(basis_state("00"), parse_assertion("Z0 /\\ Z1")));
  EXPECT_FALSE(satisfies(basis_state("00"), parse_assertion("X0")));
}

TEST(Operational, SamplingIsSeeded) {
  const auto pre = parse_assertion("Z0*Z1");
  const auto a = sample_pre_states(pre, 2, 5, 9), b = sample_pre_states(pre, 2, 5, 9);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(rho_digest(a[i].rho), rho_digest(b[i].rho));
}

TEST(Denotational, MatchesOperationalOnCorpus) {
  int checked = 0;
  for (const auto &c : golden_suite()) {
    if (!c.oracle_eligible) continue;
    const auto p = expand_correct(c.program, c.registry, true);
    for (const auto &t : c.triples) {
      std::vector<MachineState> inits;
      try {
        inits = sample_pre_states(t.pre, p.n_qubits, 3, 11, t.sigma);
      } catch (const UnsatisfiableAssertion &) {
        continue;
      }
      for (const auto &s : inits) {
        const auto op = run_program(p, s), den = run_denotational(p, s);
        EXPECT_LT(aggregate_distance(op.branches, den.branches), 1e-9) << t.name;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Denotational, LoopTerminatesWithinCap) {
  const auto p = prog(R"(qubits: 1
svars: s

s := Z0
while M[s; q0] label L do
  q0 := H q0
done
)");
  const auto op = run_program(p, basis_state("0")), den = run_denotational(p, basis_state("0"));
  EXPECT_LT(op.residual_mass(), 1e-9);
  EXPECT_LT(aggregate_distance(op.branches, den.branches), 1e-9);
  double mass = 0.0;
  for (const auto &b : op.branches) {
    mass += b.rho.trace().real();
    EXPECT_NEAR(b.rho(1, 1).real(), b.rho.trace().real(), 1e-12);
  }
  EXPECT_NEAR(mass, 1.0, 1e-9);
}

}  // namespace
}  // namespace qecv
