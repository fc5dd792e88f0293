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

#include "qecv/corpus.hpp"
#include "qecv/error.hpp"
#include "qecv/hoare.hpp"

namespace qecv {
namespace {

using Status = VerificationOutcome::Status;

Triple triple(const std::string &pre, const std::string &program, const std::string &post,
              const Sigma &sigma = {}) {
  Triple t;
  t.pre = parse_assertion(pre);
  t.program = parse_program(program);
  t.post = parse_assertion(post);
  t.sigma = sigma;
  return t;
}

constexpr const char *kWorked = R"(qubits: 2
svars: s

s := Z1
if M[s; q1] then
  skip
else
  q1 := X q1
  q0 := X q0
end
)";

TEST(Verify, WorkedExampleRuleSequence) {
  const auto o = verify_triple(triple("Z0*Z1", kWorked, "Z0"));
  EXPECT_EQ(o.status, Status::Verified);
  const std::vector<std::string> want = {"Assignment", "Skip",       "Unitary",   "Unitary",
                                         "Sequencing", "Condition",  "Sequencing", "Consequence"};
  EXPECT_EQ(o.trace.rule_names(), want);
}

TEST(Verify, WorkedExampleIntermediateAssertions) {
  const auto o = verify_triple(triple("Z0*Z1", kWorked, "Z0"));
  const auto &steps = o.trace.steps;
  ASSERT_GE(steps.size(), 6u);
  EXPECT_TRUE(assertion_equivalent(steps[0].post, parse_assertion("Z0*Z1")));
  EXPECT_TRUE(assertion_equivalent(steps[2].post, parse_assertion("-Z0*Z1 /\\ Z1")));
  EXPECT_TRUE(assertion_equivalent(steps[3].post, parse_assertion("Z0*Z1 /\\ Z1")));
  EXPECT_TRUE(assertion_equivalent(steps[5].post, parse_assertion("Z0*Z1 /\\ Z1")));
}

TEST(Verify, WrongPostIsRefuted) {
  const auto o = verify_triple(triple("Z0*Z1", kWorked, "-Z0"));
  EXPECT_EQ(o.status, Status::Refuted);
  EXPECT_FALSE(o.detail.empty());
}

TEST(Verify, UnprovablePostIsNotVerified) {
  EXPECT_NE(verify_triple(triple("Z0*Z1", kWorked, "X0")).status, Status::Verified);
}

TEST(Verify, MissingInvariant) {
  const std::string loop = "qubits: 1\nsvars: s\n\ns := Z0\nwhile M[s; q0] label L do\n  q0 := H q0\ndone\n";
  const auto o = verify_triple(triple("TRUE", loop, "-Z0"));
  EXPECT_EQ(o.status, Status::Inconclusive);
  EXPECT_EQ(o.detail, "MissingInvariant");

  auto t = triple("TRUE", loop, "-Z0");
  t.invariants["L"] = Assertion::truth();
  EXPECT_EQ(verify_triple(t).status, Status::Verified);
}

TEST(Verify, SingleTGateStaysSmall) {
  const auto o = verify_triple(
      triple("X0", "qubits: 1\nsvars:\n\nq0 := T q0\n",
             "0.7071067811865476*X0 + 0.7071067811865476*Y0"));
  EXPECT_EQ(o.status, Status::Verified);
  for (const auto &leaf : o.final_assertion.leaves()) EXPECT_LE(leaf.size(), 2u);
}

TEST(Verify, TermCapIsReported) {
  std::string body;
  for (int k = 0; k < 8; ++k) {
    const int q = k % 3;
    body += "q" + std::to_string(q) + " := T q" + std::to_string(q) + "\n";
    body += "q" + std::to_string(q) + " q" + std::to_string((q + 1) % 3) + " := CX q" +
            std::to_string(q) + " q" + std::to_string((q + 1) % 3) + "\n";
    body += "q" + std::to_string(q) + " := H q" + std::to_string(q) + "\n";
  }
  VerifyConfig cfg;
  cfg.imply.max_terms = 4;
  const auto o = verify_triple(triple("X0*X1*X2", "qubits: 3\nsvars:\n\n" + body, "TRUE"), cfg);
  EXPECT_EQ(o.status, Status::Inconclusive);
  EXPECT_EQ(o.detail, "TermExplosion");
}

TEST(Verify, AssignmentKeepsCommutingFacts) {
  const auto o = verify_triple(
      triple("Z0 /\\ Z1", "qubits: 2\nsvars: s\n\ns := Z0*Z1\n", "Z0 /\\ Z1"));
  EXPECT_EQ(o.status, Status::Verified);
  // Both literals anticommute with Z0; their product survives.
  const auto w = verify_triple(
      triple("X0*X2 /\\ X0*X1", "qubits: 3\nsvars: s\n\ns := Z0\n", "X1*X2"));
  EXPECT_EQ(w.status, Status::Verified);
}

TEST(Verify, DecodeAxiom) {
  const auto stabs = repetition_stabilizers(3);
  const SymbolicSigma sig = symbolic_sigma({"s0", "s1"}, {{"s0", stabs[0]}, {"s1", stabs[1]}});
  const auto strong = parse_assertion("Z0 /\\ Z1 /\\ Z2");
  EXPECT_TRUE(assertion_equivalent(apply_decode_axiom(strong, sig, {"s0", "s1"}), strong));
  const auto weak = apply_decode_axiom(parse_assertion("X0*X1*X2"), sig, {"s0", "s1"});
  EXPECT_TRUE(assertion_equivalent(weak, parse_assertion("Z0*Z1 /\\ Z1*Z2")));
  SymbolicSigma unknown = sig;
  unknown["s0"].state = SigmaEntry::State::Unknown;
  EXPECT_THROW(apply_decode_axiom(strong, unknown, {"s0", "s1"}), UnresolvedSigma);
}

TEST(Verify, ConditionOnSignUnknownVariable) {
  // After the first measurement s may be +-Z0; the second one cannot be
  // resolved unless the branches agree.
  const auto o = verify_triple(triple("TRUE", R"(qubits: 1
svars: s

s := Z0
if M[s; q0] then
  skip
else
  q0 := X q0
  s := -s
end
)", "Z0"));
  EXPECT_EQ(o.status, Status::Verified);
}

TEST(TripleFile, RoundTrip) {
  const auto lem = gen_lemma_suite();
  const auto &t = lem[0].triples[0];
  const auto back = parse_triple(print_triple(t));
  EXPECT_TRUE(program_equal(back.program, t.program));
  EXPECT_TRUE(assertion_equivalent(back.pre, t.pre));
  EXPECT_EQ(verify_triple(back).status, Status::Verified);
  EXPECT_THROW(parse_triple("pre: Z0\npost: Z0\n"), SyntaxError);
  EXPECT_THROW(parse_triple("pre: Z0\nbogus: 1\n"), SyntaxError);
}

TEST(Report, JsonHasSchemaKeys) {
  const auto t = triple("Z0*Z1", kWorked, "Z0");
  const auto j = report_json(t, verify_triple(t));
  for (const char *k : {"\"name\"", "\"status\"", "\"obligations\"", "\"timings\""}) {
    EXPECT_NE(j.find(k), std::string::npos) << k;
  }
}

}  // namespace
}  // namespace qecv
